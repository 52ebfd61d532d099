#include "crosscheck.hpp"

#include <json.hpp>

#include <sstream>

namespace kmss {

namespace {

LaurentMatrix diag2(long a, long b) {
  LaurentMatrix m(2);
  m.at(0, 0) = LaurentScalar(GaussianRational(a));
  m.at(1, 1) = LaurentScalar(GaussianRational(b));
  return m;
}

LaurentMatrix diag3(long a, long b, long c) {
  LaurentMatrix m(3);
  m.at(0, 0) = LaurentScalar(GaussianRational(a));
  m.at(1, 1) = LaurentScalar(GaussianRational(b));
  m.at(2, 2) = LaurentScalar(GaussianRational(c));
  return m;
}

LaurentMatrix case3_u() {
  // U = (0 1; -t 0)
  LaurentMatrix m(2);
  m.at(0, 1) = LaurentScalar(GaussianRational(1));
  m.at(1, 0) = LaurentScalar::monomial(1, GaussianRational(-1));
  return m;
}

LaurentMatrix antidiag3() {
  LaurentMatrix m(3);
  for (int i = 0; i < 3; ++i) m.at(i, 2 - i) = LaurentScalar(GaussianRational(1));
  return m;
}

DiagramAutomorphism fetch_aut(const AffineDiagram& d, const std::string& name) {
  if (name == "id") return identity_automorphism(d.nodes());
  for (const auto& g : diagram_automorphisms(d))
    if (g.name == name) return g;
  throw Error("no automorphism " + name);
}

VoganDiagram vd_of(Series s, int rank, std::set<int> painted, const std::string& aut) {
  AffineDiagram d = build_affine_diagram(s, rank);
  return make_vogan(d, painted, fetch_aut(d, aut));
}

std::vector<WorkedCase> build_cases() {
  std::vector<WorkedCase> cases;
  const std::string phi_note =
      "Case III erratum: the transcribed U(t)^-1 = (0 -t; 1 0) does not invert U; the verified "
      "inverse (0 -t^-1; 1 0) gives Phi(U) = diag(1/2, -1/2) instead of the transcribed "
      "diag(t^2/2, -t^2/2)";
  const std::string xi_note =
      "sigma(d) keeps the xi*c term of the general rule although the transcribed sigma(d) omits it";

  WorkedCase a1_1;
  a1_1.name = "case-I";
  a1_1.series = Series::A;
  a1_1.rank = 1;
  a1_1.spec = [] {
    return AutomorphismSpec("A1 case-I", diag2(1, -1), 1, Rational(0), AutKind::K1a);
  };
  a1_1.vogan = [] { return vd_of(Series::A, 1, {0, 1}, "id"); };
  a1_1.expected_row = "A1.2";
  a1_1.expected_label = "su₁⁽¹⁾(1,1)";
  a1_1.deg0_slice = 3;
  a1_1.deg0_loop = 1;
  a1_1.deg0_center = 1;
  a1_1.dim_k_profile = {3, 5, 7, 9};
  a1_1.dim_p_profile = {2, 6, 10, 14};
  cases.push_back(a1_1);

  WorkedCase a1_2 = a1_1;
  a1_2.name = "case-II";
  a1_2.spec = [] {
    return AutomorphismSpec("A1 case-II", diag2(1, -1), -1, Rational(0), AutKind::K1a);
  };
  a1_2.vogan = [] { return vd_of(Series::A, 1, {1}, "id"); };
  a1_2.expected_row = "A1.3";
  a1_2.expected_label = "su₋₁⁽¹⁾(1,1)";
  a1_2.dim_k_profile = {3, 7, 9, 13};
  a1_2.dim_p_profile = {2, 4, 8, 10};
  cases.push_back(a1_2);

  WorkedCase a1_3;
  a1_3.name = "case-III";
  a1_3.series = Series::A;
  a1_3.rank = 1;
  a1_3.spec = [] {
    return AutomorphismSpec("A1 case-III", case3_u(), 1, Rational(-1), AutKind::K1a);
  };
  a1_3.vogan = [] { return vd_of(Series::A, 1, {}, "r"); };
  a1_3.expected_row = "A1.4";
  a1_3.expected_label = "sl⁽¹⁾(2,ℝ)";
  a1_3.deg0_slice = 1;
  a1_3.deg0_loop = 0;
  a1_3.deg0_center = 0;
  a1_3.dim_k_profile = {1, 3, 5};
  a1_3.dim_p_profile = {1, 5, 9};
  a1_3.notes = {phi_note, xi_note};
  cases.push_back(a1_3);

  WorkedCase a2_1;
  a2_1.name = "case-I";
  a2_1.series = Series::A;
  a2_1.rank = 2;
  a2_1.spec = [] {
    return AutomorphismSpec("A2 case-I", diag3(1, 1, -1), 1, Rational(0), AutKind::K1a);
  };
  a2_1.vogan = [] { return vd_of(Series::A, 2, {0, 1}, "id"); };
  a2_1.expected_row = "A2.3";
  a2_1.expected_label = "su₁⁽¹⁾(2,1)";
  a2_1.deg0_slice = 6;
  a2_1.deg0_loop = 4;
  a2_1.deg0_types = {{Series::A, 1}};
  a2_1.deg0_center = 1;
  a2_1.dim_k_profile = {6, 14, 22, 30};
  a2_1.dim_p_profile = {4, 12, 20, 28};
  cases.push_back(a2_1);

  WorkedCase a2_2 = a2_1;
  a2_2.name = "case-II";
  a2_2.spec = [] {
    return AutomorphismSpec("A2 case-II", diag3(1, 1, -1), -1, Rational(0), AutKind::K1a);
  };
  a2_2.vogan = [] { return vd_of(Series::A, 2, {0}, "id"); };
  a2_2.expected_row = "A2.2";
  a2_2.expected_label = "su₋₁⁽¹⁾(2,1)";
  cases.push_back(a2_2);

  WorkedCase a2_3;
  a2_3.name = "case-III";
  a2_3.series = Series::A;
  a2_3.rank = 2;
  a2_3.spec = [] {
    return AutomorphismSpec("A2 case-III", antidiag3(), 1, Rational(0), AutKind::K1b);
  };
  a2_3.vogan = [] { return vd_of(Series::A, 2, {0}, "s"); };
  a2_3.expected_row = "A2.4";
  a2_3.expected_label = "sl₁⁽¹⁾(3,ℝ)";
  a2_3.deg0_slice = 5;
  a2_3.deg0_loop = 3;
  a2_3.deg0_types = {{Series::A, 1}};
  a2_3.deg0_center = 0;
  a2_3.dim_k_profile = {5, 11, 17, 23};
  a2_3.dim_p_profile = {5, 15, 25, 35};
  a2_3.notes = {
      "the fixed subalgebra is cut out by X^T J + J X = 0 (the antidiagonal orthogonal "
      "condition); the transcribed entry pairing A_(i,j)+A_(4-i,4-j) describes the composition "
      "without the transpose and is kept as an erratum fixture"};
  cases.push_back(a2_3);

  WorkedCase a2_4 = a2_3;
  a2_4.name = "case-IV";
  a2_4.spec = [] {
    return AutomorphismSpec("A2 case-IV", antidiag3(), -1, Rational(0), AutKind::K1b);
  };
  a2_4.vogan = [] { return vd_of(Series::A, 2, {}, "s"); };
  a2_4.expected_row = "A2.5";
  a2_4.expected_label = "sl₋₁⁽¹⁾(3,ℝ)";
  a2_4.dim_k_profile = {5, 15, 21, 31};
  a2_4.dim_p_profile = {5, 11, 21, 27};
  cases.push_back(a2_4);

  return cases;
}

}  // namespace

const std::vector<WorkedCase>& worked_cases() {
  static const std::vector<WorkedCase> cases = build_cases();
  return cases;
}

const WorkedCase& find_case(Series s, int rank, const std::string& name) {
  for (const auto& c : worked_cases())
    if (c.series == s && c.rank == rank && c.name == name) return c;
  throw Error("no registered case '" + name + "' for this algebra");
}

std::vector<std::string> case_names(Series s, int rank) {
  std::vector<std::string> out;
  for (const auto& c : worked_cases())
    if (c.series == s && c.rank == rank) out.push_back(c.name);
  return out;
}

CartanDecomposition decompose_case(const WorkedCase& wc, int window) {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(wc.series, wc.rank);
  RealSubspace compact = compact_form(alg, window);
  return split_eigenspaces(wc.spec(), compact);
}

CrosscheckReport crosscheck(Series s, int rank, const std::string& case_name, int window) {
  const WorkedCase& wc = find_case(s, rank, case_name);
  CrosscheckReport rep;
  rep.case_name = wc.name;
  rep.window = window;
  rep.notes = wc.notes;

  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(s, rank);
  RealSubspace compact = compact_form(alg, window);
  AutomorphismSpec spec = wc.spec();
  rep.core = window - spec.shift();
  {
    nlohmann::json e;
    e["name"] = spec.name();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < spec.U().dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < spec.U().dim(); ++j) row.push_back(spec.U().at(i, j).str());
      rows.push_back(row);
    }
    e["U"] = rows;
    e["u"] = spec.u();
    e["xi"] = to_string(spec.xi());
    e["kind"] = aut_kind_name(spec.kind());
    e["gamma"] = to_string(spec.gamma());
    rep.spec_echo = e.dump();
  }

  InvolutionCheck ic = check_involution(spec, compact);
  rep.involution_holds = ic.holds_on_core;
  CartanDecomposition dec = split_eigenspaces(spec, compact);
  for (const auto& n : dec.notes) rep.notes.push_back(n);

  for (int m = 0; m <= rep.core; ++m) {
    rep.dim_k_per_degree.push_back(dim_within_degree(dec.K, m));
    rep.dim_p_per_degree.push_back(dim_within_degree(dec.P, m));
  }
  rep.degree0 = identify_degree0_type(dec.K);
  rep.signature_k = killing_signature(dec.K);
  RealSubspace ip;
  ip.alg = dec.P.alg;
  ip.window = dec.P.window;
  ip.core = dec.P.core;
  for (const auto& p : dec.P.basis) ip.basis.push_back(p.scaled(GaussianRational::i()));
  rep.signature_ip = killing_signature(ip);

  ClassifyResult cls = classify(wc.vogan());
  rep.classified_row = cls.classified ? cls.row_id : "(unclassified)";
  rep.classified_label = cls.classified ? cls.row.real_form : "";

  auto disagree = [&](const std::string& what) {
    rep.agree = false;
    rep.disagreements.push_back(what);
  };
  if (!cls.classified || cls.row_id != wc.expected_row)
    disagree("catalog row: expected " + wc.expected_row + ", got " + rep.classified_row);
  if (cls.classified && cls.row.real_form != wc.expected_label)
    disagree("label: expected " + wc.expected_label + ", got " + cls.row.real_form);
  if (rep.degree0.slice_dim != wc.deg0_slice)
    disagree("degree-0 slice dim: expected " + std::to_string(wc.deg0_slice) + ", got " +
             std::to_string(rep.degree0.slice_dim));
  if (rep.degree0.loop_dim != wc.deg0_loop)
    disagree("degree-0 loop dim: expected " + std::to_string(wc.deg0_loop) + ", got " +
             std::to_string(rep.degree0.loop_dim));
  if (rep.degree0.types != wc.deg0_types) disagree("degree-0 semisimple types differ");
  if (rep.degree0.center_dim != wc.deg0_center)
    disagree("degree-0 center: expected " + std::to_string(wc.deg0_center) + ", got " +
             std::to_string(rep.degree0.center_dim));
  // K/P dimension profiles, compared on the overlap of the expected data
  // and the computed core.
  auto check_profile = [&](const std::vector<int>& want, const std::vector<int>& got,
                           const std::string& which) {
    for (size_t m = 0; m < want.size() && m < got.size(); ++m)
      if (want[m] != got[m]) {
        disagree(which + " dimension within degree " + std::to_string(m) + ": expected " +
                 std::to_string(want[m]) + ", got " + std::to_string(got[m]));
        return;
      }
  };
  check_profile(wc.dim_k_profile, rep.dim_k_per_degree, "K");
  check_profile(wc.dim_p_profile, rep.dim_p_per_degree, "P");
  return rep;
}

std::string CrosscheckReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "kmss/1";
  j["case"] = case_name;
  j["spec"] = nlohmann::json::parse(spec_echo.empty() ? "null" : spec_echo);
  j["agree"] = agree;
  j["disagreements"] = disagreements;
  j["notes"] = notes;
  j["window"] = window;
  j["core"] = core;
  j["dim_K_within_degree"] = dim_k_per_degree;
  j["dim_P_within_degree"] = dim_p_per_degree;
  nlohmann::json d0;
  d0["slice_dim"] = degree0.slice_dim;
  d0["loop_dim"] = degree0.loop_dim;
  d0["central_extra"] = degree0.central_extra;
  d0["center_dim"] = degree0.center_dim;
  std::vector<std::string> ts;
  for (const auto& [ser, rk] : degree0.types)
    ts.push_back(std::string(1, series_letter(ser)) + std::to_string(rk));
  d0["types"] = ts;
  j["degree0"] = d0;
  j["signature_K"] = signature_k;
  j["signature_iP"] = signature_ip;
  j["involution_holds"] = involution_holds;
  j["row"] = classified_row;
  j["label"] = classified_label;
  return j.dump(2);
}

}  // namespace kmss

#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kmss {

namespace {

// ---------------------------------------------------------------------------
// Label rendering

std::string sub_script(const std::string& s) {
  static const std::map<std::string, std::string> table = {
      {"", ""},           {"1", "₁"},
      {"-1", "₋₁"}, {"s", "ₛ"},
      {"rs", "ᵣₛ"}, {"r^n", "ᵣⁿ"},
      {"sigma_v", "_σᵥ"}, {"sigma_s", "_σₛ"},
      {"gamma", "_γ"}};
  auto it = table.find(s);
  if (it == table.end()) throw Error("no subscript rendering for " + s);
  return it->second;
}

std::string sup_twist(int twist) {
  if (twist == 0) return "";
  if (twist == 1) return "⁽¹⁾";
  if (twist == 2) return "⁽²⁾";
  throw Error("bad twist");
}

std::string form(const std::string& family, const std::string& sub, int twist,
                 const std::string& args) {
  return family + sub_script(sub) + sup_twist(twist) + "(" + args + ")";
}

std::string num(long v) { return std::to_string(v); }

const char* kReal = "ℝ";    // R
const char* kQuat = "ℍ";    // H
const char* kOPlus = "⊕";   // (+)
const char* kTimes = "×";   // x

// ---------------------------------------------------------------------------
// Fixture helpers

DiagramAutomorphism named_automorphism(const AffineDiagram& d, const std::string& name) {
  if (name == "id") return identity_automorphism(d.nodes());
  for (const auto& g : diagram_automorphisms(d))
    if (g.name == name) return g;
  if (d.series == Series::A) {
    // Compositions of the dihedral generators used by the tables.
    std::vector<DiagramAutomorphism> gens = diagram_automorphisms(d);
    const DiagramAutomorphism* rot = nullptr;
    const DiagramAutomorphism* refl = nullptr;
    for (const auto& g : gens) {
      if (g.name == "r") rot = &g;
      if (g.name == "s") refl = &g;
    }
    if (name == "r^n" && rot != nullptr) {
      DiagramAutomorphism a = identity_automorphism(d.nodes());
      for (int k = 0; k < (d.nodes() / 2); ++k) a = a.compose(*rot);
      a.name = "r^n";
      a.order = permutation_order(a.perm);
      return a;
    }
    if (name == "rs" && rot != nullptr && refl != nullptr) {
      DiagramAutomorphism a = refl->compose(*rot);  // i -> 1 - i
      a.name = "rs";
      a.order = permutation_order(a.perm);
      return a;
    }
  }
  throw Error("unknown automorphism name " + name);
}

VoganDiagram fx(Series s, int rank, std::set<int> painted, const std::string& aut) {
  AffineDiagram d = build_affine_diagram(s, rank);
  return make_vogan(d, painted, named_automorphism(d, aut));
}

// ---------------------------------------------------------------------------
// Root-recipe helpers (rational tuples in the e-basis)

using RootList = std::vector<std::vector<Rational>>;

std::vector<Rational> zvec(int dim) { return std::vector<Rational>(dim, Rational(0)); }

// 1-based index e_i with rational weight.
std::vector<Rational> comb(int dim, std::initializer_list<std::pair<int, Rational>> terms) {
  auto v = zvec(dim);
  for (const auto& [idx, w] : terms) {
    if (idx < 1 || idx > dim) throw Error("root coordinate out of range");
    v[idx - 1] += w;
  }
  return v;
}

Rational half() { return Rational(1) / 2; }

RootList no_roots(int, int) { return {}; }

// ---------------------------------------------------------------------------
// Row construction helpers

std::function<bool(int)> always() {
  return [](int) { return true; };
}
std::function<bool(int)> at_least(int n0) {
  return [n0](int n) { return n >= n0; };
}

using FixtureFn = std::function<std::vector<RowFixture>(int)>;
using InstFn = std::function<InstantiatedRow(int, int)>;

FixtureFn no_fixtures() {
  return [](int) { return std::vector<RowFixture>{}; };
}

FixtureFn one_fixture(Series s, std::function<int(int)> rank_of, std::set<int> painted,
                      std::string aut) {
  return [=](int n) {
    std::vector<RowFixture> out;
    out.push_back({fx(s, rank_of(n), painted, aut), -1});
    return out;
  };
}

}  // namespace

std::string table_name(TableId t) {
  switch (t) {
    case TableId::AOne: return "A1(1)";
    case TableId::ATwo: return "A2(1)";
    case TableId::AOdd: return "A(2n-1)(1)";
    case TableId::AEven: return "A(2n)(1)";
    case TableId::Bn: return "B(n)(1)";
    case TableId::COdd: return "C(2n-1)(1)";
    case TableId::CEven: return "C(2n)(1)";
    case TableId::DEven: return "D(n)(1) n even";
    case TableId::DOdd: return "D(n)(1) n odd";
  }
  throw Error("bad table id");
}

std::pair<TableId, int> table_for(Series s, int rank) {
  switch (s) {
    case Series::A:
      if (rank == 1) return {TableId::AOne, 1};
      if (rank == 2) return {TableId::ATwo, 1};
      if (rank % 2 == 1) return {TableId::AOdd, (rank + 1) / 2};
      return {TableId::AEven, rank / 2};
    case Series::B:
      return {TableId::Bn, rank};
    case Series::C:
      if (rank % 2 == 1) return {TableId::COdd, (rank + 1) / 2};
      return {TableId::CEven, rank / 2};
    case Series::D:
      return {rank % 2 == 0 ? TableId::DEven : TableId::DOdd, rank};
  }
  throw Error("bad series");
}

int table_rank(TableId t, int n) {
  switch (t) {
    case TableId::AOne: return 1;
    case TableId::ATwo: return 2;
    case TableId::AOdd: return 2 * n - 1;
    case TableId::AEven: return 2 * n;
    case TableId::Bn: return n;
    case TableId::COdd: return 2 * n - 1;
    case TableId::CEven: return 2 * n;
    case TableId::DEven:
    case TableId::DOdd: return n;
  }
  throw Error("bad table id");
}

namespace {

std::vector<CatalogRow> build_a_one() {
  std::vector<CatalogRow> rows;
  auto rk = [](int) { return 1; };
  rows.push_back(
      {TableId::AOne, "A1.1", always(),
       [](int, int) {
         InstantiatedRow r;
         r.id = "A1.1";
         r.real_form = form("su", "", 1, "2");
         r.fixed_algebra = form("su", "", 1, "2");
         return r;
       },
       one_fixture(Series::A, rk, {}, "id"), no_roots, no_roots});
  rows.push_back(
      {TableId::AOne, "A1.2", always(),
       [](int, int) {
         InstantiatedRow r;
         r.id = "A1.2";
         r.real_form = form("su", "1", 1, "1,1");
         r.fixed_algebra = "s(u₁" + std::string(kTimes) + "u₁)";
         r.compact_space = "SU⁽¹⁾(1+1)/S₁⁽¹⁾(U₁" +
                           std::string(kTimes) + "U₁)";
         r.noncompact_space = form("SU", "1", 1, "1,1") + "/S₁⁽¹⁾(U₁" +
                              std::string(kTimes) + "U₁)";
         return r;
       },
       one_fixture(Series::A, rk, {0, 1}, "id"), no_roots, no_roots});
  rows.push_back(
      {TableId::AOne, "A1.3", always(),
       [](int, int) {
         InstantiatedRow r;
         r.id = "A1.3";
         r.real_form = form("su", "-1", 1, "1,1");
         r.fixed_algebra = "s(u₁" + std::string(kTimes) + "u₁)";
         r.compact_space = "SU⁽¹⁾(1+1)/S₋₁⁽¹⁾(U₁" +
                           std::string(kTimes) + "U₁)";
         r.noncompact_space = form("SU", "-1", 1, "1,1") +
                              "/S₋₁⁽¹⁾(U₁" + std::string(kTimes) +
                              "U₁)";
         return r;
       },
       one_fixture(Series::A, rk, {0}, "id"), no_roots, no_roots});
  rows.push_back(
      {TableId::AOne, "A1.4", always(),
       [](int, int) {
         InstantiatedRow r;
         r.id = "A1.4";
         r.real_form = form("sl", "", 1, std::string("2,") + kReal);
         r.fixed_algebra = form("so", "", 1, "2");
         r.compact_space = form("SU", "", 1, "2") + "/" + form("SO", "", 1, "2");
         r.noncompact_space =
             form("SL", "", 1, std::string("2,") + kReal) + "/" + form("SO", "", 1, "2");
         r.note = "so(2) is abelian; no simple roots";
         return r;
       },
       one_fixture(Series::A, rk, {}, "r"), no_roots, no_roots});
  return rows;
}

std::vector<CatalogRow> build_a_two() {
  std::vector<CatalogRow> rows;
  auto rk = [](int) { return 2; };
  auto s_u2u1 = [](const std::string& sub) {
    return "S" + sub_script(sub) + sup_twist(1) + "(U₂" + std::string(kTimes) + "U₁)";
  };
  rows.push_back({TableId::ATwo, "A2.1", always(),
                  [](int, int) {
                    InstantiatedRow r;
                    r.id = "A2.1";
                    r.real_form = form("su", "", 1, "3");
                    r.fixed_algebra = form("su", "", 1, "3");
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "id"), no_roots, no_roots});
  rows.push_back({TableId::ATwo, "A2.2", always(),
                  [&, s_u2u1](int, int) {
                    InstantiatedRow r;
                    r.id = "A2.2";
                    r.real_form = form("su", "-1", 1, "2,1");
                    r.fixed_algebra = "s(u₂" + std::string(kTimes) + "u₁)";
                    r.compact_space = "SU⁽¹⁾(2+1)/" + s_u2u1("-1");
                    r.noncompact_space = form("SU", "-1", 1, "2,1") + "/" + s_u2u1("-1");
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "id"), no_roots, no_roots});
  rows.push_back({TableId::ATwo, "A2.3", always(),
                  [s_u2u1](int, int) {
                    InstantiatedRow r;
                    r.id = "A2.3";
                    r.real_form = form("su", "1", 1, "2,1");
                    r.fixed_algebra = "s(u₂" + std::string(kTimes) + "u₁)";
                    r.compact_space = "SU⁽¹⁾(2+1)/" + s_u2u1("1");
                    r.noncompact_space = form("SU", "1", 1, "2,1") + "/" + s_u2u1("1");
                    return r;
                  },
                  one_fixture(Series::A, rk, {0, 1}, "id"), no_roots, no_roots});
  rows.push_back({TableId::ATwo, "A2.4", always(),
                  [](int, int) {
                    InstantiatedRow r;
                    r.id = "A2.4";
                    r.real_form = form("sl", "1", 1, std::string("3,") + kReal);
                    r.fixed_algebra = form("so", "1", 1, "3");
                    r.compact_space = form("SU", "", 1, "3") + "/" + form("SO", "1", 1, "3");
                    r.noncompact_space = form("SL", "1", 1, std::string("3,") + kReal) + "/" +
                                         form("SO", "1", 1, "3");
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "s"), no_roots, no_roots});
  rows.push_back({TableId::ATwo, "A2.5", always(),
                  [](int, int) {
                    InstantiatedRow r;
                    r.id = "A2.5";
                    r.real_form = form("sl", "-1", 1, std::string("3,") + kReal);
                    r.fixed_algebra = form("so", "-1", 1, "3");
                    r.compact_space = form("SU", "", 1, "3") + "/" + form("SO", "-1", 1, "3");
                    r.noncompact_space = form("SL", "-1", 1, std::string("3,") + kReal) + "/" +
                                         form("SO", "-1", 1, "3");
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "s"), no_roots, no_roots});
  return rows;
}

std::vector<CatalogRow> build_a_odd() {
  std::vector<CatalogRow> rows;
  auto rk = [](int n) { return 2 * n - 1; };
  rows.push_back({TableId::AOdd, "I.1", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.1";
                    r.real_form = form("su", "", 1, num(2 * n));
                    r.fixed_algebra = form("su", "", 1, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "id"), no_roots, no_roots});
  rows.push_back({TableId::AOdd, "I.2", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.2";
                    r.real_form = form("su", "-1", 1, "p,q");
                    r.constraint = "p+q=" + num(2 * n);
                    r.fixed_algebra = "su(" + num(2 * n) + ")";
                    r.compact_space = "SU" + sup_twist(1) + "(p+q)/SU(" + num(2 * n) + ")";
                    r.noncompact_space = form("SU", "-1", 1, "p,q") + "/SU(" + num(2 * n) + ")";
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "id"), no_roots, no_roots});
  rows.push_back(
      {TableId::AOdd, "I.3", always(),
       [](int n, int p) {
         InstantiatedRow r;
         r.id = "I.3";
         std::string P = p > 0 ? num(2 * n - p) : "p";
         std::string Q = p > 0 ? num(p) : "q";
         r.real_form = form("su", "1", 1, P + "," + Q);
         if (p <= 0) r.constraint = "p+q=" + num(2 * n);
         r.fixed_algebra = "su(" + P + ")" + kOPlus + "su(" + Q + ")";
         r.compact_space = "SU" + sup_twist(1) + "(" + (p > 0 ? num(2 * n) : "p+q") + ")/SU(" + P +
                           ")" + kOPlus + "SU(" + Q + ")";
         r.noncompact_space =
             form("SU", "1", 1, P + "," + Q) + "/SU(" + P + ")" + kOPlus + "SU(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 1; p <= n; ++p) out.push_back({fx(Series::A, rk(n), {0, p}, "id"), p});
         return out;
       },
       no_roots, no_roots});
  rows.push_back({TableId::AOdd, "I.4", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.4";
                    r.real_form = form("sl", "s", 1, num(n) + "," + kQuat);
                    r.fixed_algebra = form("sp", "", 1, num(2 * n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n)) + "/" + form("SP", "", 1, num(2 * n));
                    r.noncompact_space = form("SL", "s", 1, num(n) + "," + kQuat) + "/" +
                                         form("SP", "", 1, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "s"), no_roots,
                  [](int n, int) {
                    // e_2n - e_1, e_n - e_{n+1}, all (e_i - e_{i+1} + e_{2n-i} - e_{2n+1-i})/2
                    const int d = 2 * n;
                    RootList out;
                    out.push_back(comb(d, {{2 * n, Rational(1)}, {1, Rational(-1)}}));
                    out.push_back(comb(d, {{n, Rational(1)}, {n + 1, Rational(-1)}}));
                    for (int i = 1; i <= n - 1; ++i)
                      out.push_back(comb(d, {{i, half()},
                                             {i + 1, -half()},
                                             {2 * n - i, half()},
                                             {2 * n + 1 - i, -half()}}));
                    return out;
                  }});
  rows.push_back({TableId::AOdd, "I.5", at_least(3),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.5";
                    r.real_form = form("sl", "-1", 1, num(2 * n) + "," + kReal);
                    r.constraint = "n>=3";
                    r.fixed_algebra = form("su", "", 2, num(2 * n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n)) + "/" + form("SU", "", 2, num(2 * n));
                    r.noncompact_space = form("SL", "-1", 1, num(2 * n) + "," + kReal) + "/" +
                                         form("SU", "", 2, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "s"),
                  [](int n, int) {
                    // Painted affine node: averaged minimal complex root.
                    const int d = 2 * n;
                    RootList out;
                    out.push_back(comb(d, {{2 * n - 1, half()},
                                           {2 * n, half()},
                                           {1, -half()},
                                           {2, -half()}}));
                    return out;
                  },
                  [](int n, int) {
                    // The transcribed list (its extra root differs from the
                    // procedural one; kept for the cross-check).
                    const int d = 2 * n;
                    RootList out;
                    out.push_back(comb(d, {{n - 1, half()},
                                           {n, half()},
                                           {n + 1, -half()},
                                           {n + 2, -half()}}));
                    for (int i = 1; i <= n - 1; ++i)
                      out.push_back(comb(d, {{i, half()},
                                             {i + 1, -half()},
                                             {2 * n - i, half()},
                                             {2 * n + 1 - i, -half()}}));
                    return out;
                  }});
  rows.push_back({TableId::AOdd, "I.6", at_least(4),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.6";
                    r.real_form = form("sl", "1", 1, num(2 * n) + "," + kReal);
                    r.constraint = "n>=4";
                    r.fixed_algebra = form("so", "", 1, num(2 * n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n)) + "/" + form("SO", "", 1, num(2 * n));
                    r.noncompact_space = form("SL", "1", 1, num(2 * n) + "," + kReal) + "/" +
                                         form("SO", "", 1, num(2 * n));
                    return r;
                  },
                  [rk](int n) {
                    std::vector<RowFixture> out;
                    out.push_back({fx(Series::A, rk(n), {0, n}, "s"), n});
                    return out;
                  },
                  [](int n, int) {
                    const int d = 2 * n;
                    RootList out;
                    out.push_back(comb(d, {{n - 1, half()},
                                           {n, half()},
                                           {n + 1, -half()},
                                           {n + 2, -half()}}));
                    out.push_back(comb(d, {{2 * n - 1, half()},
                                           {2 * n, half()},
                                           {1, -half()},
                                           {2, -half()}}));
                    return out;
                  },
                  no_roots});
  rows.push_back({TableId::AOdd, "I.7", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.7";
                    r.real_form = form("sl", "r^n", 1, num(n) + "," + kQuat);
                    r.fixed_algebra = form("su", "", 1, num(n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n)) + "/" + form("SU", "", 1, num(n));
                    r.noncompact_space = form("SL", "r^n", 1, num(n) + "," + kQuat) + "/" +
                                         form("SU", "", 1, num(n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "r^n"), no_roots, no_roots});
  rows.push_back({TableId::AOdd, "I.8", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "I.8";
                    r.real_form = form("sl", "rs", 1, num(n) + "," + kQuat);
                    r.fixed_algebra = form("so", "", 2, num(2 * n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n)) + "/" + form("SO", "", 2, num(2 * n));
                    r.noncompact_space = form("SL", "rs", 1, num(n) + "," + kQuat) + "/" +
                                         form("SO", "", 2, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "rs"), no_roots, no_roots});
  return rows;
}

std::vector<CatalogRow> build_a_even() {
  std::vector<CatalogRow> rows;
  auto rk = [](int n) { return 2 * n; };
  const int tw = 1;
  rows.push_back({TableId::AEven, "II.1", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "II.1";
                    r.real_form = form("su", "", 1, num(2 * n + 1));
                    r.fixed_algebra = form("su", "", 1, num(2 * n + 1));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "id"), no_roots, no_roots});
  rows.push_back({TableId::AEven, "II.2", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "II.2";
                    r.real_form = form("su", "-1", tw, "p,q");
                    r.constraint = "p+q=" + num(2 * n + 1);
                    r.fixed_algebra = "su(" + num(2 * n + 1) + ")";
                    r.compact_space = "SU" + sup_twist(1) + "(p+q)/SU(" + num(2 * n + 1) + ")";
                    r.noncompact_space =
                        form("SU", "-1", 1, "p,q") + "/SU(" + num(2 * n + 1) + ")";
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "id"), no_roots, no_roots});
  rows.push_back(
      {TableId::AEven, "II.3", always(),
       [](int n, int p) {
         InstantiatedRow r;
         r.id = "II.3";
         std::string P = p > 0 ? num(2 * n + 1 - p) : "p";
         std::string Q = p > 0 ? num(p) : "q";
         r.real_form = form("su", "1", 1, P + "," + Q);
         if (p <= 0) r.constraint = "p+q=" + num(2 * n + 1);
         r.fixed_algebra = "su(" + P + ")" + kOPlus + "su(" + Q + ")";
         r.compact_space = "SU" + sup_twist(1) + "(" + (p > 0 ? num(2 * n + 1) : "p+q") +
                           ")/SU(" + P + ")" + kOPlus + "SU(" + Q + ")";
         r.noncompact_space =
             form("SU", "1", 1, P + "," + Q) + "/SU(" + P + ")" + kOPlus + "SU(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 1; p <= n; ++p) out.push_back({fx(Series::A, rk(n), {0, p}, "id"), p});
         return out;
       },
       no_roots, no_roots});
  rows.push_back({TableId::AEven, "II.4", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "II.4";
                    r.real_form = form("sl", "-1", 1, num(2 * n + 1) + "," + kReal);
                    r.fixed_algebra = form("su", "", 2, num(2 * n + 1));
                    r.compact_space = form("SU", "", 1, num(2 * n + 1)) + "/" +
                                      form("SU", "", 2, num(2 * n + 1));
                    r.noncompact_space = form("SL", "-1", 1, num(2 * n + 1) + "," + kReal) + "/" +
                                         form("SU", "", 2, num(2 * n + 1));
                    return r;
                  },
                  one_fixture(Series::A, rk, {}, "s"), no_roots,
                  [](int n, int) {
                    const int d = 2 * n + 1;
                    RootList out;
                    out.push_back(comb(d, {{2 * n + 1, Rational(1)}, {1, Rational(-1)}}));
                    out.push_back(comb(d, {{n, half()}, {n + 2, -half()}}));
                    for (int i = 1; i <= n - 1; ++i)
                      out.push_back(comb(d, {{i, half()},
                                             {i + 1, -half()},
                                             {2 * n + 1 - i, half()},
                                             {2 * n + 2 - i, -half()}}));
                    return out;
                  }});
  rows.push_back({TableId::AEven, "II.5", at_least(3),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "II.5";
                    r.real_form = form("sl", "1", 1, num(2 * n + 1) + "," + kReal);
                    r.constraint = "n>=3";
                    r.fixed_algebra = form("so", "", 1, num(2 * n));
                    r.compact_space =
                        form("SU", "", 1, num(2 * n + 1)) + "/" + form("SO", "", 1, num(2 * n));
                    r.noncompact_space = form("SL", "1", 1, num(2 * n + 1) + "," + kReal) + "/" +
                                         form("SO", "", 1, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::A, rk, {0}, "s"),
                  [](int n, int) {
                    const int d = 2 * n + 1;
                    RootList out;
                    out.push_back(comb(d, {{2 * n, half()},
                                           {2 * n + 1, half()},
                                           {1, -half()},
                                           {2, -half()}}));
                    return out;
                  },
                  no_roots});
  return rows;
}

std::vector<CatalogRow> build_b() {
  std::vector<CatalogRow> rows;
  auto rk = [](int n) { return n; };
  auto so1_2np1 = [](int n) { return form("SO", "", 1, num(2 * n + 1)); };
  rows.push_back({TableId::Bn, "III.1", always(),
                  [](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.1";
                    r.real_form = form("so", "", 1, num(2 * n + 1));
                    r.fixed_algebra = form("so", "", 1, num(2 * n + 1));
                    return r;
                  },
                  one_fixture(Series::B, rk, {}, "id"), no_roots, no_roots});
  rows.push_back({TableId::Bn, "III.2", always(),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.2";
                    r.real_form = form("so", "-1", 1, "2," + num(2 * n - 1));
                    r.fixed_algebra = "so(" + num(2 * n + 1) + ")";
                    r.compact_space = so1_2np1(n) + "/SO(" + num(2 * n + 1) + ")";
                    r.noncompact_space =
                        form("SO", "-1", 1, "2," + num(2 * n - 1)) + "/SO(" + num(2 * n + 1) + ")";
                    return r;
                  },
                  one_fixture(Series::B, rk, {1}, "id"), no_roots, no_roots});
  rows.push_back({TableId::Bn, "III.3", at_least(2),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.3";
                    r.real_form = form("so", "", 1, "4," + num(2 * n - 3));
                    r.fixed_algebra = "so(4)" + std::string(kOPlus) + "so(" + num(2 * n - 3) + ")";
                    r.compact_space =
                        so1_2np1(n) + "/SO(4)" + kOPlus + "SO(" + num(2 * n - 3) + ")";
                    r.noncompact_space = form("SO", "", 1, "4," + num(2 * n - 3)) + "/SO(4)" +
                                         kOPlus + "SO(" + num(2 * n - 3) + ")";
                    return r;
                  },
                  one_fixture(Series::B, rk, {2}, "id"), no_roots, no_roots});
  rows.push_back({TableId::Bn, "III.4", at_least(3),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.4";
                    r.real_form = form("so", "", 1, "6," + num(2 * n - 5));
                    r.fixed_algebra =
                        form("su", "", 1, "4") + kOPlus + "so(" + num(2 * n - 5) + ")";
                    r.compact_space = so1_2np1(n) + "/" + form("SU", "", 1, "4") + kOPlus + "SO(" +
                                      num(2 * n - 5) + ")";
                    r.noncompact_space = form("SO", "", 1, "6," + num(2 * n - 5)) + "/" +
                                         form("SU", "", 1, "4") + kOPlus + "SO(" +
                                         num(2 * n - 5) + ")";
                    return r;
                  },
                  one_fixture(Series::B, rk, {3}, "id"),
                  [](int n, int) {
                    // painted at p = 3: the extra root e_{p-1} + e_p
                    return RootList{comb(n, {{2, Rational(1)}, {3, Rational(1)}})};
                  },
                  no_roots});
  rows.push_back(
      {TableId::Bn, "III.5", at_least(5),
       [so1_2np1](int n, int p) {
         InstantiatedRow r;
         r.id = "III.5";
         std::string P = p > 0 ? num(2 * p) : "2p";
         std::string Q = p > 0 ? num(2 * (n - p) + 1) : "2q+1";
         r.real_form = form("so", "", 1, P + "," + Q);
         r.constraint = "p+q=" + num(n);
         r.fixed_algebra = form("so", "", 1, P) + kOPlus + "so(" + Q + ")";
         r.compact_space = so1_2np1(n) + "/" + form("SO", "", 1, P) + kOPlus + "SO(" + Q + ")";
         r.noncompact_space =
             form("SO", "", 1, P + "," + Q) + "/" + form("SO", "", 1, P) + kOPlus + "SO(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 4; p <= n - 1; ++p) out.push_back({fx(Series::B, rk(n), {p}, "id"), p});
         return out;
       },
       [](int n, int p) {
         return RootList{comb(n, {{p - 1, Rational(1)}, {p, Rational(1)}})};
       },
       no_roots});
  rows.push_back({TableId::Bn, "III.6", at_least(4),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.6";
                    r.real_form = form("so", "", 1, num(2 * n) + ",1");
                    r.fixed_algebra = form("so", "", 1, num(2 * n));
                    r.compact_space = so1_2np1(n) + "/" + form("SO", "", 1, num(2 * n));
                    r.noncompact_space =
                        form("SO", "", 1, num(2 * n) + ",1") + "/" + form("SO", "", 1, num(2 * n));
                    return r;
                  },
                  [rk](int n) {
                    // rank 3 has so(2n,1) = so(6,1), already row III.4
                    std::vector<RowFixture> out;
                    if (n >= 4) out.push_back({fx(Series::B, rk(n), {n}, "id"), n});
                    return out;
                  },
                  [](int n, int p) {
                    return RootList{comb(n, {{p - 1, Rational(1)}, {p, Rational(1)}})};
                  },
                  no_roots});
  rows.push_back({TableId::Bn, "III.7", always(),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.7";
                    r.real_form = form("so", "1", 1, "2," + num(2 * n - 1));
                    r.fixed_algebra = "so(" + num(2 * n - 1) + ")";
                    r.compact_space = so1_2np1(n) + "/SO(" + num(2 * n - 1) + ")";
                    r.noncompact_space =
                        form("SO", "1", 1, "2," + num(2 * n - 1)) + "/SO(" + num(2 * n - 1) + ")";
                    return r;
                  },
                  one_fixture(Series::B, rk, {0, 1}, "id"), no_roots, no_roots});
  rows.push_back({TableId::Bn, "III.8", always(),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.8";
                    r.real_form = form("so", "", 1, "1," + num(2 * n));
                    r.fixed_algebra = form("so", "", 2, num(2 * n));
                    r.compact_space = so1_2np1(n) + "/" + form("SO", "", 2, num(2 * n));
                    r.noncompact_space =
                        form("SO", "", 1, "1," + num(2 * n)) + "/" + form("SO", "", 2, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::B, rk, {}, "gamma"), no_roots, no_roots});
  rows.push_back({TableId::Bn, "III.9", at_least(3),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.9";
                    r.real_form = form("so", "", 1, "5," + num(2 * n - 4));
                    r.fixed_algebra = "su(3)" + std::string(kOPlus) + "so(" + num(2 * n - 3) + ")";
                    r.compact_space =
                        so1_2np1(n) + "/SU(3)" + kOPlus + "SO(" + num(2 * n - 3) + ")";
                    r.noncompact_space = form("SO", "", 1, "3," + num(2 * n - 2)) + "/SU(3)" +
                                         kOPlus + "SO(" + num(2 * n - 3) + ")";
                    r.note = "label (5,2n-4) and space (3,2n-2) as transcribed disagree";
                    return r;
                  },
                  one_fixture(Series::B, rk, {2}, "gamma"),
                  [](int n, int) {
                    return RootList{comb(n, {{2, Rational(1)}})};
                  },
                  no_roots});
  rows.push_back(
      {TableId::Bn, "III.10", at_least(5),
       [so1_2np1](int n, int p) {
         InstantiatedRow r;
         r.id = "III.10";
         std::string P = p > 0 ? num(2 * p + 1) : "2p+1";
         std::string Q = p > 0 ? num(2 * (n - p)) : "2q";
         std::string FP = p > 0 ? num(2 * p) : "2p";
         std::string FQ = p > 0 ? num(2 * (n - p) + 1) : "2q+1";
         r.real_form = form("so", "", 1, P + "," + Q);
         r.constraint = "p+q=" + num(n);
         r.fixed_algebra = form("so", "", 2, FP) + kOPlus + "so(" + FQ + ")";
         r.compact_space = so1_2np1(n) + "/" + form("SO", "", 2, FP) + kOPlus + "SO(" + FQ + ")";
         r.noncompact_space =
             form("SO", "", 1, P + "," + Q) + "/" + form("SO", "", 2, FP) + kOPlus + "SO(" + FQ + ")";
         return r;
       },
       [rk](int n) {
         // p = 2 is III.9 and p = n-2 is III.11; q = 0 is absent from the
         // table altogether.
         std::vector<RowFixture> out;
         for (int p = 3; p <= n - 1; ++p) {
           if (p == n - 2) continue;
           out.push_back({fx(Series::B, rk(n), {p}, "gamma"), p});
         }
         return out;
       },
       [](int n, int p) {
         return RootList{comb(n, {{p, Rational(1)}})};
       },
       no_roots});
  rows.push_back({TableId::Bn, "III.11", at_least(5),
                  [so1_2np1](int n, int) {
                    InstantiatedRow r;
                    r.id = "III.11";
                    r.real_form = form("so", "", 1, num(2 * n - 3) + ",4");
                    r.fixed_algebra = form("so", "", 2, num(2 * n));
                    r.compact_space = so1_2np1(n) + "/" + form("SO", "", 2, num(2 * n));
                    r.noncompact_space = form("SO", "", 1, num(2 * n - 3) + ",4") + "/" +
                                         form("SO", "", 2, num(2 * n));
                    return r;
                  },
                  [rk](int n) {
                    std::vector<RowFixture> out;
                    if (n >= 5) out.push_back({fx(Series::B, rk(n), {n - 2}, "gamma"), n - 2});
                    return out;
                  },
                  [](int n, int p) {
                    return RootList{comb(n, {{p, Rational(1)}})};
                  },
                  no_roots});
  return rows;
}

std::vector<CatalogRow> build_c(TableId table) {
  std::vector<CatalogRow> rows;
  const bool even = (table == TableId::CEven);
  auto rk = [even](int n) { return even ? 2 * n : 2 * n - 1; };
  auto N = [even](int n) { return even ? 2 * n : 2 * n - 1; };  // matrix size parameter
  std::string pre = even ? "V" : "IV";
  rows.push_back({table, pre + ".1", always(),
                  [N, pre](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".1";
                    r.real_form = form("sp", "", 1, num(N(n)));
                    r.fixed_algebra = form("sp", "", 1, num(N(n)));
                    return r;
                  },
                  one_fixture(Series::C, rk, {}, "id"), no_roots, no_roots});
  rows.push_back(
      {table, pre + ".2", always(),
       [N, pre, even](int n, int p) {
         InstantiatedRow r;
         r.id = pre + ".2";
         std::string P = p > 0 ? num(p) : "p";
         std::string Q = p > 0 ? num(N(n) - p) : "q";
         r.real_form = form("sp", "", 1, P + "," + Q);
         r.constraint = "p+q=" + num(N(n)) + (even ? ", p>1" : "");
         r.fixed_algebra = form("sp", "", 1, P) + kOPlus + "sp(" + Q + ")";
         r.compact_space = "SP" + sup_twist(1) + "(" + (p > 0 ? num(N(n)) : "p+q") + ")/" +
                           form("SP", "", 1, P) + kOPlus + "SP(" + Q + ")";
         r.noncompact_space =
             form("SP", "", 1, P + "," + Q) + "/" + form("SP", "", 1, P) + kOPlus + "SP(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         const int r = rk(n);
         for (int p = 1; p <= r / 2; ++p) out.push_back({fx(Series::C, rk(n), {p}, "id"), p});
         return out;
       },
       [rk](int n, int p) {
         return RootList{comb(rk(n), {{p, Rational(2)}})};
       },
       no_roots});
  rows.push_back({table, pre + ".3", always(),
                  [N, pre](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".3";
                    r.real_form = form("sp", "-1", 1, num(N(n)) + "," + kReal);
                    r.fixed_algebra = "sp(" + num(N(n)) + ")";
                    r.compact_space =
                        form("SP", "", 1, num(N(n))) + "/SP(" + num(N(n)) + ")";
                    r.noncompact_space =
                        form("SP", "-1", 1, num(N(n)) + "," + kReal) + "/SP(" + num(N(n)) + ")";
                    return r;
                  },
                  [rk](int n) {
                    std::vector<RowFixture> out;
                    out.push_back({fx(Series::C, rk(n), {rk(n)}, "id"), rk(n)});
                    return out;
                  },
                  no_roots, no_roots});
  rows.push_back({table, pre + ".4", always(),
                  [N, pre](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".4";
                    r.real_form = form("sp", "1", 1, num(N(n)) + "," + kReal);
                    r.fixed_algebra = "su(" + num(N(n)) + ")";
                    r.compact_space = form("SP", "", 1, num(N(n))) + "/SU(" + num(N(n)) + ")";
                    r.noncompact_space =
                        form("SP", "1", 1, num(N(n)) + "," + kReal) + "/SU(" + num(N(n)) + ")";
                    return r;
                  },
                  [rk](int n) {
                    std::vector<RowFixture> out;
                    out.push_back({fx(Series::C, rk(n), {0, rk(n)}, "id"), -1});
                    return out;
                  },
                  no_roots, no_roots});
  if (!even) {
    rows.push_back({table, "IV.5", always(),
                    [N](int n, int) {
                      InstantiatedRow r;
                      r.id = "IV.5";
                      r.real_form = form("sp", "", 1, num(N(n)) + "," + kReal);
                      r.fixed_algebra = form("su", "", 2, num(N(n)));
                      r.compact_space =
                          form("SP", "", 1, num(N(n))) + "/" + form("SU", "", 2, num(N(n)));
                      r.noncompact_space = form("SP", "", 1, num(N(n)) + "," + kReal) + "/" +
                                           form("SU", "", 2, num(N(n)));
                      return r;
                    },
                    one_fixture(Series::C, rk, {}, "gamma"), no_roots,
                    [rk](int n, int) {
                      const int d = rk(n);  // 2n-1 coordinates
                      RootList out;
                      out.push_back(comb(d, {{2 * n - 1, Rational(1)}, {1, Rational(-1)}}));
                      for (int i = 1; i <= n - 1; ++i)
                        out.push_back(comb(d, {{i, half()},
                                               {i + 1, -half()},
                                               {2 * n - 1 - i, half()},
                                               {2 * n - i, -half()}}));
                      return out;
                    }});
  } else {
    rows.push_back({table, "V.5", always(),
                    [N](int n, int) {
                      InstantiatedRow r;
                      r.id = "V.5";
                      r.real_form = form("sp", "", 1, num(n) + "," + kQuat);
                      r.fixed_algebra = form("sp", "", 1, num(n));
                      r.compact_space =
                          form("SP", "", 1, num(2 * n)) + "/" + form("SP", "", 1, num(n));
                      r.noncompact_space =
                          form("SP", "", 1, num(n) + "," + kQuat) + "/" + form("SP", "", 1, num(n));
                      return r;
                    },
                    one_fixture(Series::C, rk, {}, "gamma"), no_roots,
                    [](int n, int) {
                      const int d = 2 * n;
                      RootList out;
                      out.push_back(comb(d, {{n, Rational(1)}, {n + 1, Rational(-1)}}));
                      out.push_back(comb(d, {{2 * n, Rational(1)}, {1, Rational(-1)}}));
                      for (int i = 1; i <= n - 1; ++i)
                        out.push_back(comb(d, {{i, half()},
                                               {i + 1, -half()},
                                               {2 * n - i, half()},
                                               {2 * n + 1 - i, -half()}}));
                      return out;
                    }});
    rows.push_back({table, "V.6", at_least(3),
                    [N](int n, int) {
                      InstantiatedRow r;
                      r.id = "V.6";
                      r.real_form = form("sp", "", 1, num(2 * n) + "," + kReal);
                      r.constraint = "n>=3";
                      r.fixed_algebra = form("su", "", 2, num(2 * n));
                      r.compact_space =
                          form("SP", "", 1, num(2 * n)) + "/" + form("SU", "", 2, num(2 * n));
                      r.noncompact_space = form("SP", "", 1, num(2 * n) + "," + kReal) + "/" +
                                           form("SU", "", 2, num(2 * n));
                      return r;
                    },
                    [rk](int n) {
                      std::vector<RowFixture> out;
                      out.push_back({fx(Series::C, rk(n), {n}, "gamma"), n});
                      return out;
                    },
                    [](int n, int) {
                      const int d = 2 * n;
                      return RootList{comb(d, {{n - 1, half()},
                                               {n, half()},
                                               {n + 1, -half()},
                                               {n + 2, -half()}})};
                    },
                    no_roots});
  }
  return rows;
}

std::vector<CatalogRow> build_d(TableId table) {
  std::vector<CatalogRow> rows;
  const bool even = (table == TableId::DEven);
  std::string pre = even ? "VI" : "VII";
  auto rk = [](int n) { return n; };
  auto so1_2n = [](int n) { return form("SO", "", 1, num(2 * n)); };
  rows.push_back({table, pre + ".1", always(),
                  [pre](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".1";
                    r.real_form = form("so", "", 1, num(2 * n));
                    r.fixed_algebra = form("so", "", 1, num(2 * n));
                    return r;
                  },
                  one_fixture(Series::D, rk, {}, "id"), no_roots, no_roots});
  rows.push_back(
      {table, pre + ".2", always(),
       [pre, so1_2n](int n, int p) {
         InstantiatedRow r;
         r.id = pre + ".2";
         std::string P = p > 0 ? num(2 * p) : "2p";
         std::string Q = p > 0 ? num(2 * (n - p)) : "2q";
         r.real_form = form("so", "", 1, P + "," + Q);
         r.constraint = "p+q=" + num(n);
         r.fixed_algebra = form("so", "", 1, P) + kOPlus + "so(" + Q + ")";
         r.compact_space = "SO" + sup_twist(1) + "(" + (p > 0 ? num(2 * n) : "2p+2q") + ")/" +
                           form("SO", "", 1, P) + kOPlus + "SO(" + Q + ")";
         r.noncompact_space =
             form("SO", "", 1, P + "," + Q) + "/" + form("SO", "", 1, P) + kOPlus + "SO(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 1; p <= n / 2; ++p)
           out.push_back({fx(Series::D, rk(n), {p}, "id"), p});
         return out;
       },
       [rk](int n, int p) {
         if (p < 2) return RootList{};
         return RootList{comb(n, {{p - 1, Rational(1)}, {p, Rational(1)}})};
       },
       no_roots});
  rows.push_back({table, pre + ".3", always(),
                  [pre, so1_2n](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".3";
                    r.real_form = "so*" + sup_twist(1) + "(" + num(2 * n) + ")";
                    r.fixed_algebra = "su(" + num(n) + ")";
                    r.compact_space = so1_2n(n) + "/SU(" + num(n) + ")";
                    r.noncompact_space =
                        "SO*" + sup_twist(1) + "(" + num(n) + ")/SU(" + num(n) + ")";
                    r.note = "noncompact space argument (n) as transcribed";
                    return r;
                  },
                  [rk](int n) {
                    std::vector<RowFixture> out;
                    out.push_back({fx(Series::D, rk(n), {0, n}, "id"), -1});
                    return out;
                  },
                  no_roots, no_roots});
  rows.push_back({table, pre + ".4", always(),
                  [pre, so1_2n](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".4";
                    r.real_form = form("so", "-1", 1, "2," + num(2 * n - 2));
                    r.fixed_algebra = "so(" + num(2 * n - 2) + ")";
                    r.compact_space = so1_2n(n) + "/SO(" + num(2 * n - 2) + ")";
                    r.noncompact_space =
                        form("SO", "-1", 1, "2," + num(2 * n - 2)) + "/SO(" + num(2 * n - 2) + ")";
                    return r;
                  },
                  one_fixture(Series::D, rk, {0, 1}, "id"), no_roots, no_roots});
  rows.push_back({table, pre + ".5", always(),
                  [pre, so1_2n](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".5";
                    r.real_form = form("so", "sigma_v", 1, "1," + num(2 * n - 1));
                    r.fixed_algebra = form("sp", "", 2, num(2 * n - 2));
                    r.compact_space = so1_2n(n) + "/" + form("SP", "", 2, num(2 * n - 2));
                    r.noncompact_space = form("SO", "sigma_v", 1, "1," + num(2 * n - 1)) + "/" +
                                         form("SP", "", 2, num(2 * n - 2));
                    return r;
                  },
                  one_fixture(Series::D, rk, {}, "sigma_v"), no_roots, no_roots});
  rows.push_back(
      {table, pre + ".6", always(),
       [pre, so1_2n](int n, int p) {
         InstantiatedRow r;
         r.id = pre + ".6";
         std::string P = p > 0 ? num(2 * p) : "2p";
         std::string Q = p > 0 ? num(2 * (n - p) + 1) : "2q+1";
         r.real_form = form("so", "sigma_v", 1, P + "," + Q);
         r.constraint = "p+q=" + num(n);
         r.fixed_algebra = form("so", "", 2, P) + kOPlus + "so(" + Q + ")";
         r.compact_space = so1_2n(n) + "/" + form("SO", "", 2, P) + kOPlus + "SO(" + Q + ")";
         r.noncompact_space = form("SO", "sigma_v", 1, P + "," + Q) + "/" + form("SO", "", 2, P) +
                              kOPlus + "SO(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 2; p <= n / 2; ++p)
           out.push_back({fx(Series::D, rk(n), {p}, "sigma_v"), p});
         return out;
       },
       [rk](int n, int p) {
         return RootList{comb(n, {{p, Rational(1)}})};
       },
       no_roots});
  rows.push_back({table, pre + ".7", always(),
                  [pre, so1_2n](int n, int) {
                    InstantiatedRow r;
                    r.id = pre + ".7";
                    r.real_form = form("so", "gamma", 1, "1," + num(2 * n - 1));
                    r.fixed_algebra = form("so", "", 1, num(2 * n - 1));
                    r.compact_space = so1_2n(n) + "/" + form("SO", "", 1, num(2 * n - 1));
                    r.noncompact_space = form("SO", "gamma", 1, "1," + num(2 * n - 1)) + "/" +
                                         form("SO", "", 1, num(2 * n - 1));
                    return r;
                  },
                  one_fixture(Series::D, rk, {}, "gamma"), no_roots, no_roots});
  rows.push_back(
      {table, pre + ".8", always(),
       [pre, so1_2n](int n, int p) {
         InstantiatedRow r;
         r.id = pre + ".8";
         std::string P = p > 0 ? num(2 * p + 1) : "2p+1";
         std::string Q = p > 0 ? num(2 * (n - 1 - p) + 1) : "2q+1";
         r.real_form = form("so", "gamma", 1, P + "," + Q);
         r.constraint = "p+q=" + num(n - 1);
         r.fixed_algebra = form("so", "", 1, P) + kOPlus + "so(" + Q + ")";
         r.compact_space = so1_2n(n) + "/" + form("SO", "", 1, P) + kOPlus + "SO(" + Q + ")";
         r.noncompact_space = form("SO", "gamma", 1, P + "," + Q) + "/" + form("SO", "", 1, P) +
                              kOPlus + "SO(" + Q + ")";
         return r;
       },
       [rk](int n) {
         std::vector<RowFixture> out;
         for (int p = 1; p <= n - 2; ++p)
           out.push_back({fx(Series::D, rk(n), {p}, "gamma"), p});
         return out;
       },
       [rk](int n, int p) {
         return RootList{comb(n, {{p, Rational(1)}})};
       },
       no_roots});
  if (even) {
    rows.push_back({table, "VI.9", always(),
                    [so1_2n](int n, int) {
                      InstantiatedRow r;
                      r.id = "VI.9";
                      r.real_form = form("so", "sigma_s", 1, "1," + num(2 * n - 1));
                      r.fixed_algebra = form("su", "", 2, num(n));
                      r.compact_space = so1_2n(n) + "/" + form("SU", "", 2, num(n));
                      r.noncompact_space = form("SO", "sigma_s", 1, "1," + num(2 * n - 1)) + "/" +
                                           form("SU", "", 2, num(n));
                      return r;
                    },
                    one_fixture(Series::D, rk, {}, "sigma_s"), no_roots, no_roots});
    rows.push_back({table, "VI.10", always(),
                    [so1_2n](int n, int) {
                      InstantiatedRow r;
                      r.id = "VI.10";
                      r.real_form = form("so", "sigma_s", 1, num(n + 1) + "," + num(n - 1));
                      r.fixed_algebra = form("so", "", 1, num(n));
                      r.compact_space = so1_2n(n) + "/" + form("SO", "", 1, num(n));
                      r.noncompact_space = form("SO", "sigma_s", 1, num(n + 1) + "," + num(n - 1)) +
                                           "/" + form("SO", "", 1, num(n));
                      return r;
                    },
                    [rk](int n) {
                      std::vector<RowFixture> out;
                      out.push_back({fx(Series::D, rk(n), {n / 2}, "sigma_s"), n / 2});
                      return out;
                    },
                    [](int n, int) {
                      const int h = n / 2;
                      return RootList{comb(n, {{h - 1, half()},
                                               {h, half()},
                                               {h + 1, -half()},
                                               {h + 2, -half()}})};
                    },
                    no_roots});
  } else {
    rows.push_back({table, "VII.9", always(),
                    [so1_2n](int n, int) {
                      InstantiatedRow r;
                      r.id = "VII.9";
                      r.real_form = form("so", "sigma_s", 1, "1," + num(2 * n - 1));
                      r.fixed_algebra = form("so", "", 2, num(n - 1));
                      r.compact_space = form("SO", "sigma_s", 1, "1," + num(2 * n - 1)) + "/" +
                                        form("SO", "", 2, num(n - 1));
                      r.noncompact_space = form("SO", "sigma_s", 1, "1," + num(2 * n - 1)) + "/" +
                                           form("SO", "", 2, num(n - 1));
                      r.disputed = true;
                      r.note = "sigma_s has order 4 for odd rank; fixed algebra " +
                               form("so", "", 2, num(n - 1)) + " as transcribed vs " +
                               form("so", "", 1, num(n)) + " per the fixed-root catalog";
                      return r;
                    },
                    no_fixtures(), no_roots, no_roots});
  }
  return rows;
}

const std::map<TableId, std::vector<CatalogRow>>& all_tables() {
  static const std::map<TableId, std::vector<CatalogRow>> tables = [] {
    std::map<TableId, std::vector<CatalogRow>> t;
    t[TableId::AOne] = build_a_one();
    t[TableId::ATwo] = build_a_two();
    t[TableId::AOdd] = build_a_odd();
    t[TableId::AEven] = build_a_even();
    t[TableId::Bn] = build_b();
    t[TableId::COdd] = build_c(TableId::COdd);
    t[TableId::CEven] = build_c(TableId::CEven);
    t[TableId::DEven] = build_d(TableId::DEven);
    t[TableId::DOdd] = build_d(TableId::DOdd);
    return t;
  }();
  return tables;
}

}  // namespace

const std::vector<CatalogRow>& catalog_rows(TableId t) {
  auto it = all_tables().find(t);
  if (it == all_tables().end()) throw Error("no such table");
  return it->second;
}

ClassifyResult classify(const VoganDiagram& vd) {
  auto [table, n] = table_for(vd.diagram.series, vd.diagram.rank);
  ClassifyResult res;
  res.reduced = reduce_borel_siebenthal(vd);
  for (const CatalogRow& row : catalog_rows(table)) {
    for (const RowFixture& f : row.fixtures(n)) {
      VoganDiagram canon = reduce_borel_siebenthal(f.vd);
      if (canon == res.reduced) {
        res.classified = true;
        res.row_id = row.id;
        res.p = f.p;
        res.row = row.instantiate(n, f.p);
        return res;
      }
    }
  }
  return res;
}

std::string emit_table(TableId t, int n, const std::string& format) {
  const auto& rows = catalog_rows(t);
  struct Cell {
    InstantiatedRow row;
  };
  std::vector<InstantiatedRow> inst;
  for (const auto& row : rows) {
    if (!row.listed(n)) continue;
    inst.push_back(row.instantiate(n, -1));
  }
  std::ostringstream os;
  auto csv_escape = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      out += c;
    }
    out += "\"";
    return out;
  };
  if (format == "md" || format == "markdown") {
    os << "# " << table_name(t) << " at n=" << n << "\n\n";
    os << "| Row | Real form | Fixed algebra | Compact space | Non-compact space | Constraint | "
          "Notes |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : inst) {
      os << "| " << r.id << " | " << r.real_form << " | " << r.fixed_algebra << " | "
         << r.compact_space << " | " << r.noncompact_space << " | " << r.constraint << " | "
         << (r.disputed ? "DISPUTED: " : "") << r.note << " |\n";
    }
  } else if (format == "csv") {
    os << "row,real_form,fixed_algebra,compact_space,noncompact_space,constraint,disputed,note\n";
    for (const auto& r : inst) {
      os << csv_escape(r.id) << "," << csv_escape(r.real_form) << ","
         << csv_escape(r.fixed_algebra) << "," << csv_escape(r.compact_space) << ","
         << csv_escape(r.noncompact_space) << "," << csv_escape(r.constraint) << ","
         << (r.disputed ? "true" : "false") << "," << csv_escape(r.note) << "\n";
    }
  } else {
    throw Error("unknown table format " + format);
  }
  return os.str();
}

std::vector<std::vector<Rational>> base_fixed_roots(const VoganDiagram& vd) {
  RootSystemData rs = root_system(vd.diagram.series, vd.diagram.rank);
  const int dim = rs.ambient_dim;
  auto node_root = [&](int i) {
    std::vector<Rational> v(dim);
    if (i == 0) {
      for (int k = 0; k < dim; ++k) v[k] = Rational(-rs.largest_root[k]);
    } else {
      for (int k = 0; k < dim; ++k) v[k] = Rational(rs.simple_roots[i - 1][k]);
    }
    return v;
  };
  std::vector<std::vector<Rational>> out;
  std::vector<bool> done(vd.diagram.nodes(), false);
  for (int i = 0; i < vd.diagram.nodes(); ++i) {
    if (done[i]) continue;
    int j = vd.automorphism.perm[i];
    if (j == i) {
      done[i] = true;
      if (vd.painted.count(i) == 0) out.push_back(node_root(i));
    } else {
      done[i] = done[j] = true;
      auto a = node_root(i), b = node_root(j);
      std::vector<Rational> avg(dim);
      bool zero = true;
      for (int k = 0; k < dim; ++k) {
        avg[k] = (a[k] + b[k]) / 2;
        zero = zero && avg[k] == 0;
      }
      // The rank-1 orbit averages to zero; a zero vector is no root.
      if (!zero) out.push_back(std::move(avg));
    }
  }
  // Deduplicate (distinct orbits can average to the same vector).
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FixedAlgebraRoots fixed_algebra_roots(const VoganDiagram& vd) {
  if (vd.painted.size() > 2)
    throw Error("fixed_algebra_roots expects a reduced diagram (at most two painted)");
  ClassifyResult c = classify(vd);
  if (!c.classified) throw Error("uncataloged diagram: " + vd.diagram.name());
  FixedAlgebraRoots out;
  out.label = c.row.fixed_algebra;
  out.simple_roots = base_fixed_roots(vd);
  auto [table, n] = table_for(vd.diagram.series, vd.diagram.rank);
  for (const CatalogRow& row : catalog_rows(table)) {
    if (row.id != c.row_id) continue;
    for (auto& r : row.extra_roots(n, c.p)) out.simple_roots.push_back(std::move(r));
    auto transcribed = row.transcribed_roots(n, c.p);
    if (!transcribed.empty()) {
      auto mine = out.simple_roots;
      std::sort(mine.begin(), mine.end());
      std::sort(transcribed.begin(), transcribed.end());
      out.matches_catalog = (mine == transcribed);
      if (!out.matches_catalog)
        out.note = "procedural list differs from the transcribed catalog entry";
    }
    break;
  }
  if (!c.row.note.empty())
    out.note += (out.note.empty() ? "" : "; ") + c.row.note;
  return out;
}

}  // namespace kmss

#include <doctest.h>

#include <set>
#include <sstream>

#include "catalog.hpp"
#include "crosscheck.hpp"

using namespace kmss;

namespace {

VoganDiagram vd(Series s, int rank, std::set<int> painted, const std::string& aut = "id") {
  AffineDiagram d = build_affine_diagram(s, rank);
  DiagramAutomorphism a = identity_automorphism(d.nodes());
  if (aut != "id") {
    bool found = false;
    for (const auto& g : diagram_automorphisms(d))
      if (g.name == aut) {
        a = g;
        found = true;
        break;
      }
    REQUIRE(found);
  }
  return make_vogan(d, painted, a);
}

}  // namespace

TEST_CASE("classify: worked labels") {
  // A3 = A_{2n-1} at n=2: painted {0} -> su_-1(p,q) with fixed su(4).
  ClassifyResult r = classify(vd(Series::A, 3, {0}));
  REQUIRE(r.classified);
  CHECK(r.row_id == "I.2");
  CHECK(r.row.real_form == "su₋₁⁽¹⁾(p,q)");
  CHECK(r.row.constraint == "p+q=4");
  CHECK(r.row.fixed_algebra == "su(4)");

  // Unpainted trivial: the compact form.
  ClassifyResult r0 = classify(vd(Series::A, 3, {}));
  REQUIRE(r0.classified);
  CHECK(r0.row_id == "I.1");
  CHECK(r0.row.real_form == "su⁽¹⁾(4)");

  // C3 painted {1}: sp(1,2) with fixed sp(1)+sp(2).
  ClassifyResult rc = classify(vd(Series::C, 3, {1}));
  REQUIRE(rc.classified);
  CHECK(rc.row_id == "IV.2");
  CHECK(rc.row.real_form == "sp⁽¹⁾(1,2)");
  CHECK(rc.row.fixed_algebra ==
        "sp⁽¹⁾(1)⊕sp(2)");

  // Classification is constant on equivalence classes (rank <= 3).
  VoganDiagram x = vd(Series::A, 3, {0, 1});
  ClassifyResult rx = classify(x);
  REQUIRE(rx.classified);
  for (const auto& member : equivalence_class(x))
    CHECK(classify(member).row_id == rx.row_id);
}

TEST_CASE("classify is constant on classes, exhaustively at small rank") {
  for (auto [s, rank] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::A, 4}, {Series::C, 3}}) {
    AffineDiagram d = build_affine_diagram(s, rank);
    std::vector<DiagramAutomorphism> auts;
    for (const auto& g : automorphism_group(d))
      if (permutation_order(g.perm) <= 2) auts.push_back(g);
    for (const auto& aut : auts) {
      std::vector<int> fixed;
      for (int i = 0; i < d.nodes(); ++i)
        if (aut.perm[i] == i) fixed.push_back(i);
      for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
        std::set<int> painted;
        for (size_t k = 0; k < fixed.size(); ++k)
          if (mask & (1u << k)) painted.insert(fixed[k]);
        VoganDiagram v = make_vogan(d, painted, aut);
        ClassifyResult base = classify(v);
        auto cls = equivalence_class(v);
        // Check a spread of members, not just the canonical one.
        for (size_t k = 0; k < cls.size(); k += std::max<size_t>(1, cls.size() / 5)) {
          ClassifyResult other = classify(cls[k]);
          CHECK(other.classified == base.classified);
          if (base.classified) CHECK(other.row_id == base.row_id);
        }
      }
    }
  }
}

TEST_CASE("classify: unclassified result carries the reduced form") {
  // gamma with the short end node painted (q = 0) has no table row.
  ClassifyResult r = classify(vd(Series::B, 5, {5}, "gamma"));
  CHECK_FALSE(r.classified);
  CHECK(r.reduced.diagram.rank == 5);
  CHECK(r.reduced.painted == std::set<int>{5});

  // The low-rank overlap B2 = C2 is exposed on both sides, uncanonicalized.
  ClassifyResult b2 = classify(vd(Series::B, 2, {2}));
  REQUIRE(b2.classified);
  CHECK(b2.row_id == "III.3");
  ClassifyResult c2 = classify(vd(Series::C, 2, {1}));
  REQUIRE(c2.classified);
  CHECK(c2.row_id == "V.2");
}

TEST_CASE("every listed row roundtrips through classify") {
  struct Probe {
    TableId table;
    int n;
  };
  for (Probe pr : std::vector<Probe>{{TableId::AOne, 1},
                                     {TableId::ATwo, 1},
                                     {TableId::AOdd, 2},
                                     {TableId::AOdd, 3},
                                     {TableId::AEven, 2},
                                     {TableId::AEven, 3},
                                     {TableId::Bn, 3},
                                     {TableId::Bn, 4},
                                     {TableId::Bn, 5},
                                     {TableId::COdd, 2},
                                     {TableId::COdd, 3},
                                     {TableId::CEven, 2},
                                     {TableId::CEven, 3},
                                     {TableId::DEven, 4},
                                     {TableId::DEven, 6},
                                     {TableId::DOdd, 5},
                                     {TableId::DOdd, 7}}) {
    for (const CatalogRow& row : catalog_rows(pr.table)) {
      for (const RowFixture& f : row.fixtures(pr.n)) {
        ClassifyResult r = classify(f.vd);
        REQUIRE(r.classified);
        CHECK(r.row_id == row.id);
      }
    }
  }
}

TEST_CASE("fixtures of distinct rows land in distinct classes") {
  for (auto [table, n] : std::vector<std::pair<TableId, int>>{
           {TableId::AOdd, 3}, {TableId::AEven, 2}, {TableId::Bn, 4}, {TableId::COdd, 2},
           {TableId::DEven, 6}}) {
    std::map<std::string, std::string> canon_to_row;
    for (const CatalogRow& row : catalog_rows(table)) {
      for (const RowFixture& f : row.fixtures(n)) {
        std::ostringstream key;
        VoganDiagram c = reduce_borel_siebenthal(f.vd);
        for (int p : c.painted) key << p << ",";
        key << "|";
        for (int v : c.automorphism.perm) key << v << ",";
        auto [it, inserted] = canon_to_row.emplace(key.str(), row.id);
        if (!inserted) CHECK(it->second == row.id);
      }
    }
  }
}

TEST_CASE("emit_table formats") {
  std::string md = emit_table(TableId::Bn, 3, "md");
  CHECK(md.find("| III.1 |") != std::string::npos);
  CHECK(md.find("so⁽¹⁾(7)") != std::string::npos);

  std::string csv = emit_table(TableId::Bn, 3, "csv");
  CHECK(csv.find("\"III.2\"") != std::string::npos);
  CHECK_THROWS_AS(emit_table(TableId::Bn, 3, "pdf"), Error);

  // Disputed D-odd sigma_s row carries the annotation.
  std::string dodd = emit_table(TableId::DOdd, 5, "md");
  CHECK(dodd.find("DISPUTED") != std::string::npos);

  // The sl_1(2n,R) row needs n >= 4 and drops out at n = 3.
  std::string aodd3 = emit_table(TableId::AOdd, 3, "md");
  CHECK(aodd3.find("I.6") == std::string::npos);
  std::string aodd4 = emit_table(TableId::AOdd, 4, "md");
  CHECK(aodd4.find("I.6") != std::string::npos);
}

TEST_CASE("fixed algebra roots: worked entries") {
  // Trivial automorphism, nothing painted: all simple roots (affine node
  // contributes minus the largest root).
  FixedAlgebraRoots all = fixed_algebra_roots(vd(Series::A, 3, {}));
  CHECK(all.simple_roots.size() == 4);

  // su_1(p,q): compact simple roots only.
  FixedAlgebraRoots su1 = fixed_algebra_roots(vd(Series::A, 3, {0, 1}));
  CHECK(su1.simple_roots.size() == 2);  // alpha_2, alpha_3
  CHECK(su1.label == "su(3)⊕su(1)");

  // sl_s(n,H): e_2n - e_1, e_n - e_{n+1}, and the half-sum family.
  FixedAlgebraRoots sls = fixed_algebra_roots(vd(Series::A, 3, {}, "s"));
  CHECK(sls.matches_catalog);
  const int d = 4;  // 2n coordinates at n=2
  std::vector<Rational> e2n_e1(d, Rational(0));
  e2n_e1[3] = 1;
  e2n_e1[0] = -1;
  std::vector<Rational> en_en1(d, Rational(0));
  en_en1[1] = 1;
  en_en1[2] = -1;
  std::vector<Rational> half_family(d, Rational(0));
  half_family[0] = Rational(1) / 2;
  half_family[1] = Rational(-1) / 2;
  half_family[2] = Rational(1) / 2;   // e_{2n-i} at i=1 -> e_3
  half_family[3] = Rational(-1) / 2;  // e_{2n+1-i} -> e_4
  auto has = [&](const std::vector<Rational>& want) {
    for (const auto& r : sls.simple_roots)
      if (r == want) return true;
    return false;
  };
  CHECK(has(e2n_e1));
  CHECK(has(en_en1));
  CHECK(has(half_family));
  CHECK(sls.simple_roots.size() == 3);

  // sp(p,q): compact simple roots plus 2e_p.
  FixedAlgebraRoots spq = fixed_algebra_roots(vd(Series::C, 3, {1}));
  std::vector<Rational> twoe1 = {Rational(2), Rational(0), Rational(0)};
  bool found = false;
  for (const auto& r : spq.simple_roots) found = found || (r == twoe1);
  CHECK(found);
  CHECK(spq.simple_roots.size() == 4);  // alpha_0, alpha_2, alpha_3 + 2e_1

  // The rank-1 arrowed diagram: the abelian fixed algebra has no roots.
  FixedAlgebraRoots so2 = fixed_algebra_roots(vd(Series::A, 1, {}, "r"));
  CHECK(so2.simple_roots.empty());
  CHECK(so2.note.find("abelian") != std::string::npos);

  // Uncataloged reduced diagram reports an error.
  CHECK_THROWS_AS(fixed_algebra_roots(vd(Series::B, 5, {5}, "gamma")), Error);
}

TEST_CASE("fixed roots: orbit averages for the gamma rows") {
  // so(1,2n) on B3: compact roots alpha_2, alpha_3 plus the orbit average -e_2.
  FixedAlgebraRoots r = fixed_algebra_roots(vd(Series::B, 3, {}, "gamma"));
  std::vector<Rational> minus_e2 = {Rational(0), Rational(-1), Rational(0)};
  bool found = false;
  for (const auto& root : r.simple_roots) found = found || (root == minus_e2);
  CHECK(found);
  CHECK(r.simple_roots.size() == 3);
}

TEST_CASE("crosscheck: the seven worked cases agree") {
  for (const WorkedCase& wc : worked_cases()) {
    CrosscheckReport rep = crosscheck(wc.series, wc.rank, wc.name, 3);
    for (const auto& d : rep.disagreements) MESSAGE(wc.name << ": " << d);
    CHECK(rep.agree);
    CHECK(rep.classified_row == wc.expected_row);
  }
  CHECK_THROWS_AS(crosscheck(Series::B, 3, "case-I", 3), Error);
  CHECK(case_names(Series::A, 2).size() == 4);
}

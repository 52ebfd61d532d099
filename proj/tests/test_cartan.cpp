#include <doctest.h>

#include <numeric>
#include <set>

#include "cartan.hpp"

using namespace kmss;

TEST_CASE("validate_gcm classifies the worked examples") {
  CHECK(validate_gcm({{2, -1}, {-1, 2}}).cls == GcmClass::Finite);
  GcmReport aff = validate_gcm({{2, -2}, {-2, 2}});
  CHECK(aff.cls == GcmClass::Affine);
  CHECK(*aff.null_vector == std::vector<long>{1, 1});
  CHECK(validate_gcm({{2, 0}, {-1, 2}}).cls == GcmClass::Invalid);
  CHECK(validate_gcm({{2, -1}, {-3, 2}}).cls == GcmClass::Finite);  // G2
  CHECK(validate_gcm({{2, -3}, {-3, 2}}).cls == GcmClass::Other);   // indefinite
  CHECK(validate_gcm({{3}}).cls == GcmClass::Invalid);
  CHECK_THROWS_AS(validate_gcm({{2, -1}}), Error);
  // Decomposable positive definite stays finite; decomposable null fails affine.
  CHECK(validate_gcm({{2, 0}, {0, 2}}).cls == GcmClass::Finite);
}

TEST_CASE("affine diagrams match the drawn shapes") {
  AffineDiagram a2 = build_affine_diagram(Series::A, 2);
  CHECK(a2.nodes() == 3);
  CHECK(a2.bonds.size() == 3);  // triangle
  for (const Bond& b : a2.bonds) CHECK(b.mult == 1);

  AffineDiagram a1 = build_affine_diagram(Series::A, 1);
  REQUIRE(a1.bonds.size() == 1);
  CHECK(a1.bonds[0].mult == 4);
  CHECK(a1.cartan_matrix() == IntMat{{2, -2}, {-2, 2}});

  AffineDiagram d4 = build_affine_diagram(Series::D, 4);
  CHECK(d4.nodes() == 5);
  CHECK(d4.neighbors(2) == std::vector<int>{0, 1, 3, 4});

  CHECK_THROWS_AS(build_affine_diagram(Series::D, 3), Error);
  CHECK_THROWS_AS(build_affine_diagram(Series::A, 0), Error);
}

TEST_CASE("every generated diagram is of affine type with minimal marks") {
  std::vector<std::pair<Series, int>> cases = {{Series::A, 1}, {Series::A, 4}, {Series::B, 2},
                                               {Series::B, 3}, {Series::C, 2}, {Series::C, 3},
                                               {Series::D, 4}, {Series::D, 5}};
  for (auto [s, n] : cases) {
    AffineDiagram d = build_affine_diagram(s, n);
    GcmReport rep = validate_gcm(d.cartan_matrix());
    REQUIRE(rep.cls == GcmClass::Affine);
    CHECK(d.marks == *rep.null_vector);
    long g = 0;
    for (long m : d.marks) g = std::gcd(g, m);
    CHECK(g == 1);
  }
  CHECK(build_affine_diagram(Series::B, 3).marks == std::vector<long>{1, 1, 2, 2});
  CHECK(build_affine_diagram(Series::C, 3).marks == std::vector<long>{1, 2, 2, 1});
  CHECK(build_affine_diagram(Series::D, 4).marks == std::vector<long>{1, 1, 2, 1, 1});
}

TEST_CASE("root systems per the classical tables") {
  RootSystemData a2 = root_system(Series::A, 2);
  CHECK(a2.all_roots.size() == 6);
  CHECK(a2.largest_root == std::vector<long>{1, 0, -1});

  RootSystemData b2 = root_system(Series::B, 2);
  CHECK(b2.all_roots.size() == 8);
  CHECK(b2.largest_root == std::vector<long>{1, 1});

  RootSystemData d4 = root_system(Series::D, 4);
  CHECK(d4.all_roots.size() == 24);

  // Count formulas across the supported ranks.
  for (int n = 1; n <= 4; ++n)
    CHECK(root_system(Series::A, n).all_roots.size() == static_cast<size_t>(n * (n + 1)));
  for (int n = 2; n <= 4; ++n)
    CHECK(root_system(Series::B, n).all_roots.size() == static_cast<size_t>(2 * n * n));
  for (int n = 2; n <= 4; ++n)
    CHECK(root_system(Series::C, n).all_roots.size() == static_cast<size_t>(2 * n * n));
  for (int n = 4; n <= 5; ++n)
    CHECK(root_system(Series::D, n).all_roots.size() == static_cast<size_t>(2 * n * (n - 1)));

  // Simple/positive/all containment and closure under negation.
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4}}) {
    RootSystemData rs = root_system(s, n);
    std::set<std::vector<long>> all(rs.all_roots.begin(), rs.all_roots.end());
    CHECK(all.size() == rs.all_roots.size());
    for (const auto& r : rs.positive_roots) CHECK(all.count(r) == 1);
    for (const auto& r : rs.simple_roots)
      CHECK(std::find(rs.positive_roots.begin(), rs.positive_roots.end(), r) !=
            rs.positive_roots.end());
    for (auto r : rs.all_roots) {
      for (auto& x : r) x = -x;
      CHECK(all.count(r) == 1);
    }
  }
}

TEST_CASE("diagram automorphism catalog") {
  AffineDiagram a2 = build_affine_diagram(Series::A, 2);
  auto group = automorphism_group(a2);
  CHECK(group.size() == 6);  // dihedral of order 6

  AffineDiagram a1 = build_affine_diagram(Series::A, 1);
  auto gens1 = diagram_automorphisms(a1);
  REQUIRE(gens1.size() == 1);
  CHECK(gens1[0].perm == std::vector<int>{1, 0});

  AffineDiagram b3 = build_affine_diagram(Series::B, 3);
  auto gens_b = diagram_automorphisms(b3);
  REQUIRE(gens_b.size() == 1);
  CHECK(gens_b[0].name == "gamma");
  CHECK(gens_b[0].perm == std::vector<int>{1, 0, 2, 3});

  AffineDiagram d5 = build_affine_diagram(Series::D, 5);
  auto gens_d = diagram_automorphisms(d5);
  REQUIRE(gens_d.size() == 3);
  for (const auto& g : gens_d) {
    CHECK(is_diagram_automorphism(d5, g.perm));
    if (g.name == "sigma_v") {
      CHECK(g.perm[0] == 1);
      CHECK(g.perm[5] == 4);
      CHECK(g.order == 2);
    }
    if (g.name == "sigma_s") CHECK(g.order == 4);  // odd rank
    if (g.name == "gamma") CHECK(g.order == 2);
  }
  AffineDiagram d4 = build_affine_diagram(Series::D, 4);
  for (const auto& g : diagram_automorphisms(d4))
    if (g.name == "sigma_s") CHECK(g.order == 2);  // even rank
}

TEST_CASE("automorphisms preserve structure; order matches") {
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::B, 3}, {Series::C, 4}, {Series::D, 4}, {Series::D, 5}}) {
    AffineDiagram d = build_affine_diagram(s, n);
    for (const auto& g : diagram_automorphisms(d)) {
      CHECK(is_diagram_automorphism(d, g.perm));
      CHECK(permutation_order(g.perm) == g.order);
    }
  }
}

TEST_CASE("finite type recognition") {
  CHECK(recognize_finite_type({{2}}) == std::pair{Series::A, 1});
  CHECK(recognize_finite_type({{2, -1}, {-1, 2}}) == std::pair{Series::A, 2});
  CHECK(recognize_finite_type({{2, -1}, {-2, 2}}) == std::pair{Series::B, 2});
  // B3: short root at the chain end.
  CHECK(recognize_finite_type({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}) == std::pair{Series::B, 3});
  // C3: long root at the chain end.
  CHECK(recognize_finite_type({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}) == std::pair{Series::C, 3});
  IntMat d4 = {{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}};
  CHECK(recognize_finite_type(d4) == std::pair{Series::D, 4});
  CHECK_THROWS_AS(recognize_finite_type({{2, -2}, {-2, 2}}), Error);
}

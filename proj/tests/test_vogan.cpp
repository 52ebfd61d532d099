#include <doctest.h>

#include "json_io.hpp"
#include "vogan.hpp"

using namespace kmss;

namespace {

DiagramAutomorphism aut_named(const AffineDiagram& d, const std::string& name) {
  if (name == "id") return identity_automorphism(d.nodes());
  for (const auto& g : diagram_automorphisms(d))
    if (g.name == name) return g;
  throw Error("no automorphism " + name);
}

VoganDiagram vd(Series s, int rank, std::set<int> painted, const std::string& aut = "id") {
  AffineDiagram d = build_affine_diagram(s, rank);
  return make_vogan(d, painted, aut_named(d, aut));
}

}  // namespace

TEST_CASE("make_vogan validation") {
  CHECK_NOTHROW(vd(Series::A, 3, {0}));
  // Painted node on a 2-element orbit is rejected.
  AffineDiagram a3 = build_affine_diagram(Series::A, 3);
  DiagramAutomorphism s = aut_named(a3, "s");  // fixes 0 and 2
  CHECK_NOTHROW(make_vogan(a3, {0, 2}, s));
  CHECK_THROWS_AS(make_vogan(a3, {1}, s), Error);
  // Order-3 rotation of A2 is rejected.
  AffineDiagram a2 = build_affine_diagram(Series::A, 2);
  DiagramAutomorphism r = aut_named(a2, "r");
  CHECK_THROWS_AS(make_vogan(a2, {}, r), Error);
  // Non-symmetry permutation rejected.
  AffineDiagram b3 = build_affine_diagram(Series::B, 3);
  DiagramAutomorphism bogus = identity_automorphism(b3.nodes());
  std::swap(bogus.perm[0], bogus.perm[3]);
  CHECK_THROWS_AS(make_vogan(b3, {}, bogus), Error);
}

TEST_CASE("reflection rules") {
  // Single line: neighbour flips.
  VoganDiagram v = vd(Series::A, 2, {0});
  VoganDiagram r = reflect_at(v, 0);
  CHECK(r.painted == std::set<int>{0, 1, 2});
  CHECK_THROWS_AS(reflect_at(v, 1), Error);  // unpainted

  // Double line: flips only from the long side.  C2(1): 0 => 1 <= 2,
  // node 1 short.  Reflection at 1 (short) leaves neighbours; reflection
  // at 0 (long) flips node 1.
  VoganDiagram c2 = vd(Series::C, 2, {1});
  CHECK(reflect_at(c2, 1).painted == std::set<int>{1});
  VoganDiagram c2b = vd(Series::C, 2, {0});
  CHECK(reflect_at(c2b, 0).painted == std::set<int>{0, 1});

  // Rank-1 quadruple bond: no flip.
  VoganDiagram a1 = vd(Series::A, 1, {0, 1});
  CHECK(reflect_at(a1, 0).painted == std::set<int>{0, 1});
  CHECK(reflect_at(vd(Series::A, 1, {0}), 0).painted == std::set<int>{0});

  // Reflection at the same node across single lines is an involution:
  // exhaustive over paintings at rank <= 4 (cycles are all single lines).
  for (int rank = 2; rank <= 4; ++rank) {
    AffineDiagram d = build_affine_diagram(Series::A, rank);
    for (unsigned mask = 0; mask < (1u << d.nodes()); ++mask) {
      std::set<int> painted;
      for (int k = 0; k < d.nodes(); ++k)
        if (mask & (1u << k)) painted.insert(k);
      VoganDiagram x = make_vogan(d, painted, identity_automorphism(d.nodes()));
      for (int p : painted) {
        VoganDiagram twice = reflect_at(reflect_at(x, p), p);
        CHECK(twice.painted == x.painted);
      }
    }
  }
}

TEST_CASE("apply_diagram_automorphism relabels painting and conjugates") {
  VoganDiagram v = vd(Series::A, 2, {1});
  AffineDiagram a2 = build_affine_diagram(Series::A, 2);
  DiagramAutomorphism r = aut_named(a2, "r");
  VoganDiagram w = apply_diagram_automorphism(v, r);
  CHECK(w.painted == std::set<int>{2});
  VoganDiagram w_id = apply_diagram_automorphism(v, identity_automorphism(3));
  CHECK(w_id == v);

  // D-series sigma_v sends painting {0} to {1}.
  VoganDiagram dv = vd(Series::D, 4, {0});
  AffineDiagram d4 = build_affine_diagram(Series::D, 4);
  VoganDiagram dw = apply_diagram_automorphism(dv, aut_named(d4, "sigma_v"));
  CHECK(dw.painted == std::set<int>{1});

  // Conjugation keeps the stored automorphism's class: relabel an s-diagram.
  AffineDiagram a3 = build_affine_diagram(Series::A, 3);
  VoganDiagram vs = make_vogan(a3, {}, aut_named(a3, "s"));
  VoganDiagram vs2 = apply_diagram_automorphism(vs, aut_named(a3, "r"));
  CHECK(permutation_order(vs2.automorphism.perm) == 2);
  CHECK(is_diagram_automorphism(a3, vs2.automorphism.perm));
}

TEST_CASE("equivalence classes: worked examples") {
  // Unpainted diagram with trivial automorphism: singleton painting set.
  VoganDiagram empty = vd(Series::A, 2, {});
  auto cls = equivalence_class(empty);
  for (const auto& m : cls) CHECK(m.painted.empty());

  // A2 fully painted contains a member with at most 2 painted.
  auto cls2 = equivalence_class(vd(Series::A, 2, {0, 1, 2}));
  bool small = false;
  for (const auto& m : cls2) small = small || m.painted.size() <= 2;
  CHECK(small);

  // Class size is invariant under relabeling.
  AffineDiagram a3 = build_affine_diagram(Series::A, 3);
  VoganDiagram x = vd(Series::A, 3, {0, 1});
  auto cx = equivalence_class(x);
  VoganDiagram y = apply_diagram_automorphism(x, aut_named(a3, "r"));
  CHECK(equivalence_class(y).size() == cx.size());

  // All members reduce to the same representative.
  VoganDiagram rep = reduce_borel_siebenthal(x);
  for (const auto& m : cx) CHECK(reduce_borel_siebenthal(m) == rep);

  CHECK_THROWS_AS(equivalence_class(vd(Series::A, 3, {0}), 2), Error);
}

TEST_CASE("A1 classes separate the four real forms") {
  // {}, {0}~{1}, {0,1}, arrowed: four distinct classes.
  VoganDiagram unpainted = vd(Series::A, 1, {});
  VoganDiagram one = vd(Series::A, 1, {1});
  VoganDiagram both = vd(Series::A, 1, {0, 1});
  AffineDiagram a1 = build_affine_diagram(Series::A, 1);
  VoganDiagram arrowed = make_vogan(a1, {}, diagram_automorphisms(a1)[0]);

  CHECK(reduce_borel_siebenthal(one).painted == std::set<int>{0});
  CHECK(reduce_borel_siebenthal(both).painted == std::set<int>{0, 1});
  CHECK(reduce_borel_siebenthal(unpainted).painted.empty());
  std::set<VoganDiagram> reps;
  for (const auto& v : {unpainted, one, both, arrowed})
    reps.insert(reduce_borel_siebenthal(v));
  CHECK(reps.size() == 4);
}

TEST_CASE("Borel-de Siebenthal at small rank, exhaustively") {
  // Every painting of A_n (n <= 3) under every admissible automorphism
  // reduces to at most two painted vertices (the acceptance suite covers
  // the larger ranks).
  for (int rank = 1; rank <= 3; ++rank) {
    AffineDiagram d = build_affine_diagram(Series::A, rank);
    std::vector<DiagramAutomorphism> auts;
    auts.push_back(identity_automorphism(d.nodes()));
    for (const auto& g : automorphism_group(d))
      if (!g.is_identity() && permutation_order(g.perm) <= 2) auts.push_back(g);
    for (const auto& aut : auts) {
      std::vector<int> fixed;
      for (int i = 0; i < d.nodes(); ++i)
        if (aut.perm[i] == i) fixed.push_back(i);
      for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
        std::set<int> painted;
        for (size_t k = 0; k < fixed.size(); ++k)
          if (mask & (1u << k)) painted.insert(fixed[k]);
        VoganDiagram v = make_vogan(d, painted, aut);
        VoganDiagram rep = reduce_borel_siebenthal(v);
        CHECK(rep.painted.size() <= 2);
        // Painted sets stay on fixed nodes throughout the class.
        for (const auto& m : equivalence_class(v))
          for (int p : m.painted) CHECK(m.automorphism.perm[p] == p);
      }
    }
  }
}

TEST_CASE("vogan json round trip and validation errors") {
  VoganDiagram v = vd(Series::A, 3, {0, 2});
  std::string j = vogan_to_json(v);
  VoganDiagram back = vogan_from_json(j);
  CHECK(back == v);
  CHECK(vogan_to_json(back) == j);

  CHECK_THROWS_WITH_AS(vogan_from_json("{\"schema\":\"kmss/1\",\"series\":\"E\",\"rank\":6}"),
                       doctest::Contains("$.series"), Error);
  CHECK_THROWS_AS(vogan_from_json("{\"schema\":\"kmss/2\"}"), Error);
  CHECK_THROWS_AS(vogan_from_json("not json"), Error);
  // Painted node on an orbit: schema-level validation error.
  AffineDiagram a3 = build_affine_diagram(Series::A, 3);
  std::string bad = vogan_to_json(make_vogan(a3, {0}, aut_named(a3, "s")));
  // Hand-edit the painting onto an orbit node.
  size_t pos = bad.find("\"painted\": [");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, std::string("\"painted\": [\n    0").size(), "\"painted\": [\n    1");
  CHECK_THROWS_AS(vogan_from_json(bad), Error);
}

TEST_CASE("renderers") {
  VoganDiagram v = vd(Series::A, 2, {0});
  std::string ascii = render_ascii(v);
  CHECK(ascii.find("0*") != std::string::npos);
  CHECK(ascii.find("1o") != std::string::npos);
  std::string dot = render_dot(v);
  CHECK(dot.find("graph vogan {") != std::string::npos);
  CHECK(dot.find("style=filled") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);
  // Orbit edges are dashed and double-headed.
  AffineDiagram a3 = build_affine_diagram(Series::A, 3);
  std::string dot2 = render_dot(make_vogan(a3, {}, aut_named(a3, "s")));
  CHECK(dot2.find("style=dashed,dir=both") != std::string::npos);
}

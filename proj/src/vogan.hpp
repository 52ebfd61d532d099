#ifndef KMSS_VOGAN_HPP
#define KMSS_VOGAN_HPP

#include <set>
#include <vector>

#include "cartan.hpp"

namespace kmss {

/// Affine Dynkin diagram with a painting of automorphism-fixed nodes and a
/// diagram automorphism of order at most 2.
struct VoganDiagram {
  AffineDiagram diagram;
  std::set<int> painted;
  DiagramAutomorphism automorphism;

  bool operator==(const VoganDiagram& o) const {
    return painted == o.painted && automorphism.perm == o.automorphism.perm &&
           diagram.series == o.diagram.series && diagram.rank == o.diagram.rank;
  }
  bool operator<(const VoganDiagram& o) const {
    if (painted != o.painted) return painted < o.painted;
    return automorphism.perm < o.automorphism.perm;
  }
};

/// Validates and builds a Vogan diagram.  Errors: painted node on a
/// 2-element orbit; automorphism of order > 2; permutation not a diagram
/// symmetry.
VoganDiagram make_vogan(const AffineDiagram& diagram, const std::set<int>& painted,
                        const DiagramAutomorphism& automorphism);

/// Reflection in a painted (non-compact) simple root.  The reflected node
/// stays painted; automorphism-fixed neighbours flip across single bonds,
/// flip across a double bond only when the reflected node is the long root,
/// and do not flip across the rank-1 quadruple bond.
VoganDiagram reflect_at(const VoganDiagram& vd, int node);

/// Relabels the diagram by `g`: the painting maps forward and the stored
/// automorphism is conjugated.
VoganDiagram apply_diagram_automorphism(const VoganDiagram& vd, const DiagramAutomorphism& g);

/// BFS closure under reflections at painted nodes and relabelings by the
/// full automorphism group; deterministic ordering.  Guarded by node_limit.
std::vector<VoganDiagram> equivalence_class(const VoganDiagram& vd, int node_limit = 12);

/// Canonical representative: fewest painted vertices, then lexicographic
/// painted set, then lexicographic automorphism.  Throws a theorem-violation
/// diagnostic if the minimum exceeds two painted vertices.
VoganDiagram reduce_borel_siebenthal(const VoganDiagram& vd, int node_limit = 12);

}  // namespace kmss

#endif  // KMSS_VOGAN_HPP

#include "vogan.hpp"

#include <algorithm>
#include <map>

namespace kmss {

VoganDiagram make_vogan(const AffineDiagram& diagram, const std::set<int>& painted,
                        const DiagramAutomorphism& automorphism) {
  if (automorphism.perm.size() != static_cast<size_t>(diagram.nodes()))
    throw Error("automorphism size does not match diagram");
  if (!is_diagram_automorphism(diagram, automorphism.perm))
    throw Error("permutation is not a diagram symmetry");
  if (permutation_order(automorphism.perm) > 2)
    throw Error("Vogan diagram requires an automorphism of order 1 or 2");
  for (int p : painted) {
    if (p < 0 || p >= diagram.nodes()) throw Error("painted node out of range");
    if (automorphism.perm[p] != p)
      throw Error("painted node " + std::to_string(p) + " lies on a 2-element orbit");
  }
  VoganDiagram vd;
  vd.diagram = diagram;
  vd.painted = painted;
  vd.automorphism = automorphism;
  vd.automorphism.order = permutation_order(automorphism.perm);
  return vd;
}

VoganDiagram reflect_at(const VoganDiagram& vd, int node) {
  if (vd.painted.count(node) == 0)
    throw Error("reflection requires a painted (non-compact) vertex");
  VoganDiagram out = vd;
  for (const Bond& b : vd.diagram.bonds) {
    if (!b.touches(node)) continue;
    int nb = b.other(node);
    if (vd.automorphism.perm[nb] != nb) continue;  // colours live on 1-element orbits
    bool flip = false;
    switch (b.mult) {
      case 1:
      case 3:
        flip = true;
        break;
      case 2:
        flip = (b.short_node == nb);  // reflected node is the long root
        break;
      case 4:
        // Rank-1 bond: <beta, alpha_check> = -2 is even, no colour change.
        flip = false;
        break;
      default:
        throw Error("bad bond multiplicity");
    }
    if (flip) {
      if (out.painted.count(nb))
        out.painted.erase(nb);
      else
        out.painted.insert(nb);
    }
  }
  return out;
}

VoganDiagram apply_diagram_automorphism(const VoganDiagram& vd, const DiagramAutomorphism& g) {
  if (!is_diagram_automorphism(vd.diagram, g.perm))
    throw Error("permutation is not a diagram symmetry");
  VoganDiagram out = vd;
  out.painted.clear();
  for (int p : vd.painted) out.painted.insert(g.perm[p]);
  out.automorphism = g.inverse().compose(vd.automorphism).compose(g);
  out.automorphism.name = vd.automorphism.name;
  out.automorphism.order = vd.automorphism.order;
  return out;
}

std::vector<VoganDiagram> equivalence_class(const VoganDiagram& vd, int node_limit) {
  if (vd.diagram.nodes() > node_limit)
    throw Error("diagram exceeds the enumeration guard of " + std::to_string(node_limit) +
                " nodes");
  std::vector<DiagramAutomorphism> group = automorphism_group(vd.diagram);
  std::vector<VoganDiagram> out;
  std::set<std::pair<std::set<int>, std::vector<int>>> seen;
  std::vector<VoganDiagram> queue{vd};
  seen.insert({vd.painted, vd.automorphism.perm});
  size_t head = 0;
  while (head < queue.size()) {
    VoganDiagram cur = queue[head++];
    for (int p : cur.painted) {
      VoganDiagram nxt = reflect_at(cur, p);
      if (seen.insert({nxt.painted, nxt.automorphism.perm}).second) queue.push_back(nxt);
    }
    for (const auto& g : group) {
      VoganDiagram nxt = apply_diagram_automorphism(cur, g);
      if (seen.insert({nxt.painted, nxt.automorphism.perm}).second) queue.push_back(nxt);
    }
  }
  out = std::move(queue);
  std::sort(out.begin(), out.end());
  return out;
}

VoganDiagram reduce_borel_siebenthal(const VoganDiagram& vd, int node_limit) {
  std::vector<VoganDiagram> cls = equivalence_class(vd, node_limit);
  const VoganDiagram* best = nullptr;
  for (const auto& member : cls) {
    if (best == nullptr) {
      best = &member;
      continue;
    }
    if (member.painted.size() != best->painted.size()) {
      if (member.painted.size() < best->painted.size()) best = &member;
      continue;
    }
    if (member < *best) best = &member;
  }
  if (best->painted.size() > 2)
    throw Error("Borel-de Siebenthal violation: minimal representative has " +
                std::to_string(best->painted.size()) + " painted vertices");
  return *best;
}

}  // namespace kmss

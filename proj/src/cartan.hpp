#ifndef KMSS_CARTAN_HPP
#define KMSS_CARTAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalars.hpp"

namespace kmss {

enum class Series { A, B, C, D };

char series_letter(Series s);
Series series_from_letter(char c);

using IntMat = std::vector<std::vector<long>>;

enum class GcmClass { Finite, Affine, Other, Invalid };

struct GcmReport {
  GcmClass cls = GcmClass::Invalid;
  std::string reason;
  // Minimal strictly positive integer null vector, present for affine type.
  std::optional<std::vector<long>> null_vector;
};

/// Classifies a square integer matrix against the generalized-Cartan-matrix
/// axioms and the finite/affine trichotomy.  Throws on non-square input.
GcmReport validate_gcm(const IntMat& a);

/// One bond of a Dynkin graph.  mult 1..3 are the usual bonds; mult 4 is the
/// two-node bond of the rank-1 affine diagram (Cartan entries -2/-2), kept as
/// its own kind.  For mult 2,3 `short_node` is the node the arrow points to.
struct Bond {
  int i = 0;
  int j = 0;
  int mult = 1;
  int short_node = -1;  // -1: no arrow

  bool touches(int node) const { return i == node || j == node; }
  int other(int node) const { return i == node ? j : i; }
};

/// Untwisted affine Dynkin diagram: classical series + rank, nodes 0..rank
/// with node 0 the affine node, bonds, and the marks (minimal positive null
/// vector of the Cartan matrix).
struct AffineDiagram {
  Series series = Series::A;
  int rank = 0;  // classical rank n; diagram has rank+1 nodes
  std::vector<Bond> bonds;
  std::vector<long> marks;

  int nodes() const { return rank + 1; }
  IntMat cartan_matrix() const;
  const Bond* bond_between(int i, int j) const;
  std::vector<int> neighbors(int node) const;
  std::string name() const;  // e.g. "A3(1)"
};

/// Builds the standard untwisted affine diagram.  Validity: A n>=1, B n>=2,
/// C n>=2, D n>=4.  Throws Error on out-of-range rank.
AffineDiagram build_affine_diagram(Series s, int rank);

/// Classical root system data in the standard e_i coordinates (Table-VIII
/// style).  A_n lives in R^(n+1), the rest in R^n.
struct RootSystemData {
  Series series = Series::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<std::vector<long>> all_roots;
  std::vector<std::vector<long>> positive_roots;
  std::vector<std::vector<long>> simple_roots;
  std::vector<long> largest_root;
};

RootSystemData root_system(Series s, int rank);

/// Permutation of diagram nodes preserving bonds, arrows and marks.
struct DiagramAutomorphism {
  std::string name;
  std::vector<int> perm;  // image of node i
  int order = 1;

  bool is_identity() const;
  int apply(int node) const { return perm[node]; }
  DiagramAutomorphism compose(const DiagramAutomorphism& then) const;
  DiagramAutomorphism inverse() const;
  bool operator==(const DiagramAutomorphism& o) const { return perm == o.perm; }
  bool operator<(const DiagramAutomorphism& o) const { return perm < o.perm; }
};

DiagramAutomorphism identity_automorphism(int nodes);

/// True when perm maps the diagram onto itself (bond multiplicities, arrows
/// and marks preserved).
bool is_diagram_automorphism(const AffineDiagram& d, const std::vector<int>& perm);

int permutation_order(const std::vector<int>& perm);

/// Generators of the diagram automorphisms catalogued for each series:
/// A: rotation r and reflection s; B/C: the single reflection gamma;
/// D: sigma_v, sigma_s, gamma (sigma_s has order 4 when the rank is odd).
std::vector<DiagramAutomorphism> diagram_automorphisms(const AffineDiagram& d);

/// Closure of the catalogued generators under composition.
std::vector<DiagramAutomorphism> automorphism_group(const AffineDiagram& d);

/// Recognizes the type of an indecomposable finite Cartan matrix.
/// Returns e.g. {Series::A, 2}; throws if the matrix is not of
/// classical finite type (rank-1 matrices report {A, 1}).
std::pair<Series, int> recognize_finite_type(const IntMat& a);

}  // namespace kmss

#endif  // KMSS_CARTAN_HPP

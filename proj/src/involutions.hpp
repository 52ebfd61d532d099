#ifndef KMSS_INVOLUTIONS_HPP
#define KMSS_INVOLUTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loop.hpp"

namespace kmss {

enum class AutKind { K1a, K1b, K2a, K2b };

std::string aut_kind_name(AutKind k);

/// Data of an involutive automorphism: sigma(C(t)) = U(t) C(ut) U(t)^-1 plus
/// the residue correction on c; kind 1b replaces C(ut) by -C(ut)^T, kinds
/// 2a/2b pre-compose with the Cartan semi-involution.  sigma(d) picks up
/// Phi(U) on the loop and xi on c.
class AutomorphismSpec {
 public:
  AutomorphismSpec(std::string name, LaurentMatrix u_matrix, int u, Rational xi, AutKind kind,
                   Rational gamma = Rational(1));

  const std::string& name() const { return name_; }
  const LaurentMatrix& U() const { return U_; }
  const LaurentMatrix& U_inv() const { return U_inv_; }
  int u() const { return u_; }
  const Rational& xi() const { return xi_; }
  AutKind kind() const { return kind_; }
  const Rational& gamma() const { return gamma_; }
  const LaurentMatrix& phi() const { return phi_; }
  /// Maximal degree shift the loop map can induce.
  int shift() const { return shift_; }

  AffineElement apply(const AffineElement& x) const;

 private:
  std::string name_;
  LaurentMatrix U_, U_inv_;
  int u_;
  Rational xi_;
  AutKind kind_;
  Rational gamma_;
  LaurentMatrix phi_;        // Phi(U)
  LaurentMatrix res_kernel_; // U^-1 dU/dt, for the central correction
  int shift_ = 0;
};

/// Phi(U) = -t (dU/dt) U^-1 + (1/d_Gamma) tr(t (dU/dt) U^-1) I.
LaurentMatrix phi_matrix(const LaurentMatrix& U, int d_gamma);

/// Cartan semi-involution: t^n x -> -t^(-n) x^dagger (antilinear),
/// c -> -c, d -> -d.
AffineElement cartan_semi_involution(const AffineElement& x);

/// Finite real span of affine elements, understood as a rational-coefficient
/// basis; loop supports confined to [-window, window].
struct RealSubspace {
  const MatrixLieAlgebra* alg = nullptr;
  std::vector<AffineElement> basis;
  int window = 0;
  int core = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Coordinate flattening of affine elements over Q (real and imaginary parts
/// listed separately), for exact span computations.
class CoordMap {
 public:
  CoordMap(int matrix_dim, int lo, int hi);
  QVec coords(const AffineElement& x) const;
  int length() const { return len_; }

 private:
  int dim_, lo_, hi_, len_;
};

/// Real basis of the compact form on the degree window [-N, N]: the span of
/// (t^n x - t^-n x^dagger) and i(t^n x + t^-n x^dagger) over the algebra
/// basis, with ic and id adjoined; the generating set is redundant and is
/// canonicalized to an independent basis.
RealSubspace compact_form(const MatrixLieAlgebra& alg, int window);

struct InvolutionCheck {
  bool holds_on_core = true;
  /// Indices (into the compact basis) where sigma^2 != id.
  std::vector<int> witnesses;
  /// True when every failure is confined to elements with a d component.
  bool failures_only_on_d = true;
};

InvolutionCheck check_involution(const AutomorphismSpec& spec, const RealSubspace& compact);

struct CartanDecomposition {
  RealSubspace K;          // +1 eigenspace
  RealSubspace P;          // -1 eigenspace
  RealSubspace noncompact; // K + iP
  std::vector<std::string> notes;
};

/// Exact +-1 eigenspace split of the compact slice restricted to the core
/// window.  Throws if sigma fails to square to the identity on an element
/// without d component; d-line failures are dropped with a recorded note.
CartanDecomposition split_eigenspaces(const AutomorphismSpec& spec, const RealSubspace& compact);

/// Inertia (negatives, positives, nulls) of the degree-0 invariant pairing
/// (with the c/d extension) on the subspace.
std::array<int, 3> killing_signature(const RealSubspace& s);

struct Degree0Report {
  int slice_dim = 0;     // dim { x in S : loop support within degree 0 }
  int loop_dim = 0;      // dim of the loop-part projection of the slice
  int central_extra = 0; // slice directions with zero loop part (pure ic/id)
  int center_dim = 0;    // center of the complexified loop algebra
  std::vector<std::pair<Series, int>> types;  // semisimple factors
  std::string describe() const;
};

/// Extracts the degree-0 subalgebra of S, complexifies, root-decomposes and
/// reports Dynkin types plus center dimension of the loop part.
Degree0Report identify_degree0_type(const RealSubspace& s);

/// Largest |degree| in the loop support (0 for pure c/d elements).
int loop_level(const AffineElement& x);

/// Span helpers used by fixtures and the acceptance suite.
bool subspace_contains(const RealSubspace& s, const AffineElement& x);
bool same_span(const RealSubspace& a, const RealSubspace& b);
/// Dimension of { x in span(s) : loop support within [-m, m] }.
int dim_within_degree(const RealSubspace& s, int m);
/// Basis of that slice.
std::vector<AffineElement> slice_within_degree(const RealSubspace& s, int m);

}  // namespace kmss

#endif  // KMSS_INVOLUTIONS_HPP

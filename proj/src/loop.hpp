#ifndef KMSS_LOOP_HPP
#define KMSS_LOOP_HPP

#include <string>
#include <vector>

#include "cartan.hpp"
#include "matrices.hpp"

namespace kmss {

/// Root vector of a matrix realization, keyed by its coordinates in the
/// standard e_i basis.
struct RootVector {
  std::vector<long> root;
  ScalarMatrix matrix;
};

/// Matrix realization of a classical simple Lie algebra.  A_n is traceless
/// (n+1)x(n+1); B_n/D_n preserve the antidiagonal symmetric form; C_n the
/// antidiagonal symplectic form.  The Cartan subalgebra is diagonal
/// throughout, with weight slot k reading the k-th diagonal entry.
class MatrixLieAlgebra {
 public:
  static MatrixLieAlgebra realize(Series s, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  int matrix_dim() const { return matrix_dim_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  const RootSystemData& roots() const { return roots_; }
  const std::vector<RootVector>& root_vectors() const { return root_vectors_; }
  const std::vector<ScalarMatrix>& cartan_basis() const { return cartan_basis_; }
  const std::vector<ScalarMatrix>& basis() const { return basis_; }

  const ScalarMatrix& root_vector(const std::vector<long>& root) const;

  /// Compact involution x -> -x^dagger.
  ScalarMatrix theta(const ScalarMatrix& x) const { return -conj_transpose(x); }

  /// alpha(H) for diagonal H, reading the first ambient_dim diagonal slots.
  GaussianRational eval_root(const std::vector<long>& root, const ScalarMatrix& h) const;

  /// Q(i)-span membership in the algebra.
  bool contains(const ScalarMatrix& x) const;

  /// f-side partner scaled so that [x_alpha, f] is the coroot of alpha.
  ScalarMatrix normalized_opposite(const std::vector<long>& root) const;

 private:
  Series series_ = Series::A;
  int rank_ = 0;
  int matrix_dim_ = 0;
  RootSystemData roots_;
  std::vector<RootVector> root_vectors_;
  std::vector<ScalarMatrix> cartan_basis_;
  std::vector<ScalarMatrix> basis_;
};

/// Element of the untwisted affine algebra: loop part plus coefficients on
/// the central element c and the derivation d.
struct AffineElement {
  LaurentMatrix loop;
  GaussianRational c;
  GaussianRational d;

  AffineElement() = default;
  explicit AffineElement(int dim) : loop(dim) {}
  explicit AffineElement(LaurentMatrix m) : loop(std::move(m)) {}

  int dim() const { return loop.dim(); }
  bool is_zero() const { return loop.is_zero() && c.is_zero() && d.is_zero(); }

  AffineElement operator+(const AffineElement& o) const;
  AffineElement operator-(const AffineElement& o) const;
  AffineElement operator-() const;
  AffineElement scaled(const GaussianRational& k) const;
  bool operator==(const AffineElement& o) const { return loop == o.loop && c == o.c && d == o.d; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }

  static AffineElement central(int dim, GaussianRational coeff);
  static AffineElement derivation(int dim, GaussianRational coeff);
  static AffineElement loop_monomial(int degree, const ScalarMatrix& x);

  std::string str() const;
};

/// Full affine bracket: matrix commutator of loop parts, the derivation
/// action t d/dt weighted by the d-coefficients, and the central cocycle
/// term; the result has no d component and its c component is the cocycle.
AffineElement bracket(const AffineElement& x, const AffineElement& y);

/// L-valued invariant form (P (x) x, Q (x) y)_t = PQ tr(xy); c/d parts ignored.
LaurentScalar invariant_form(const AffineElement& x, const AffineElement& y);

/// Two-cocycle psi(a,b) = Res (da/dt, b)_t.
GaussianRational cocycle(const AffineElement& x, const AffineElement& y);

/// Degree-0 component of the invariant form extended by (c,d)=1,
/// (c,c)=(d,d)=0, (c,loop)=(d,loop)=0; the symmetric pairing used for
/// signature computations.
GaussianRational pairing0(const AffineElement& x, const AffineElement& y);

/// Chevalley generators with the affine index 0 included: e_0 = t (x) x_{-theta},
/// f_0 = t^{-1} (x) x_theta, scaled so [e_0, f_0] is the affine coroot plus the
/// central contribution of the trace form.
struct GeneratorSet {
  std::vector<AffineElement> e, f, h;
};

GeneratorSet chevalley_generators(const MatrixLieAlgebra& alg);

struct SerreReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Verifies (ad e_i)^(1-a_ij) e_j = 0 and the f-side analogue for all i != j
/// (affine index included), [e_i, f_j] = delta_ij h_i, and [h_i, h_j] = 0.
SerreReport check_serre(const MatrixLieAlgebra& alg);

}  // namespace kmss

#endif  // KMSS_LOOP_HPP

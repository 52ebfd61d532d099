#ifndef KMSS_MATRICES_HPP
#define KMSS_MATRICES_HPP

#include <functional>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace kmss {

/// Square matrix over a commutative ring (GaussianRational or LaurentScalar).
template <typename R>
class SquareMat {
 public:
  SquareMat() = default;
  explicit SquareMat(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static SquareMat identity(int n) {
    SquareMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }
  static SquareMat unit(int n, int i, int j, R v = R(1)) {
    SquareMat m(n);
    m.at(i, j) = std::move(v);
    return m;
  }

  int dim() const { return n_; }
  R& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!entry_zero(x)) return false;
    return true;
  }

  SquareMat operator-() const { return map([](const R& x) { return -x; }); }
  SquareMat operator+(const SquareMat& o) const { return zip(o, std::plus<R>()); }
  SquareMat operator-(const SquareMat& o) const { return zip(o, std::minus<R>()); }
  SquareMat& operator+=(const SquareMat& o) { return *this = *this + o; }
  SquareMat& operator-=(const SquareMat& o) { return *this = *this - o; }

  SquareMat operator*(const SquareMat& o) const {
    check_dim(o);
    SquareMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const R& a = at(i, k);
        if (entry_zero(a)) continue;
        for (int j = 0; j < n_; ++j) {
          const R& b = o.at(k, j);
          if (entry_zero(b)) continue;
          r.at(i, j) += a * b;
        }
      }
    return r;
  }

  template <typename S>
  SquareMat scaled(const S& c) const {
    return map([&](const R& x) { return x * R(c); });
  }

  SquareMat transpose() const {
    SquareMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  R trace() const {
    R t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  SquareMat commutator(const SquareMat& o) const { return *this * o - o * *this; }

  bool operator==(const SquareMat& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const SquareMat& o) const { return !(*this == o); }

  SquareMat map(const std::function<R(const R&)>& f) const {
    SquareMat r(n_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f(e_[k]);
    return r;
  }

  template <typename Op>
  SquareMat zip(const SquareMat& o, Op op) const {
    check_dim(o);
    SquareMat r(n_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = op(e_[k], o.e_[k]);
    return r;
  }

  /// Determinant by cofactor expansion; fine at the dimensions used here.
  R det() const {
    if (n_ == 0) return R(1);
    if (n_ == 1) return at(0, 0);
    R d(0);
    for (int j = 0; j < n_; ++j) {
      if (entry_zero(at(0, j))) continue;
      R term = at(0, j) * minor_det(0, j);
      if (j % 2 == 0)
        d += term;
      else
        d -= term;
    }
    return d;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      s += "[ ";
      for (int j = 0; j < n_; ++j) {
        s += entry_str(at(i, j));
        if (j + 1 < n_) s += ", ";
      }
      s += " ]\n";
    }
    return s;
  }

 private:
  static bool entry_zero(const R& x) {
    if constexpr (std::is_same_v<R, GaussianRational>)
      return x.is_zero();
    else
      return x.is_zero();
  }
  static std::string entry_str(const R& x) { return x.str(); }

  void check_dim(const SquareMat& o) const {
    if (n_ != o.n_) throw Error("matrix dimension mismatch");
  }

  R minor_det(int row, int col) const {
    SquareMat m(n_ - 1);
    int r = 0;
    for (int i = 0; i < n_; ++i) {
      if (i == row) continue;
      int c = 0;
      for (int j = 0; j < n_; ++j) {
        if (j == col) continue;
        m.at(r, c) = at(i, j);
        ++c;
      }
      ++r;
    }
    return m.det();
  }

  template <typename>
  friend class SquareMat;
  int n_ = 0;
  std::vector<R> e_;

 public:
  /// Adjugate-based inverse for matrices over the Laurent ring whose
  /// determinant is a unit c*t^k; throws otherwise.
  SquareMat inverse_over_units() const {
    R d = det();
    if constexpr (std::is_same_v<R, LaurentScalar>) {
      if (!d.is_unit()) throw Error("matrix is not invertible over Laurent polynomials");
      SquareMat adj(n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          R c = minor_det(i, j);
          if ((i + j) % 2 != 0) c = -c;
          adj.at(j, i) = c.divided_by_unit(d);
        }
      return adj;
    } else {
      if (entry_zero(d)) throw Error("singular matrix");
      SquareMat adj(n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          R c = minor_det(i, j);
          if ((i + j) % 2 != 0) c = -c;
          adj.at(j, i) = c / d;
        }
      return adj;
    }
  }
};

using ScalarMatrix = SquareMat<GaussianRational>;
using LaurentMatrix = SquareMat<LaurentScalar>;

/// Conjugate transpose of a constant matrix.
inline ScalarMatrix conj_transpose(const ScalarMatrix& m) {
  ScalarMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(j, i).conj();
  return r;
}

/// Entrywise conjugation/degree-flip helpers for Laurent matrices.
inline LaurentMatrix laurent_map(const LaurentMatrix& m,
                                 const std::function<LaurentScalar(const LaurentScalar&)>& f) {
  return m.map(f);
}

inline LaurentMatrix embed(const ScalarMatrix& m, int degree = 0) {
  LaurentMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = LaurentScalar::monomial(degree, m.at(i, j));
  return r;
}

inline LaurentMatrix laurent_derivative(const LaurentMatrix& m) {
  return m.map([](const LaurentScalar& p) { return p.derivative(); });
}

inline LaurentMatrix substitute_sign(const LaurentMatrix& m, int u) {
  return m.map([&](const LaurentScalar& p) { return p.substitute_sign(u); });
}

/// Conjugate transpose on the loop: entry (i,j) <- conj(entry (j,i)) with
/// degree n -> -n (the adjoint on the circle |t| = 1).
inline LaurentMatrix circle_adjoint(const LaurentMatrix& m) {
  LaurentMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(j, i).conjugate_bar(true);
  return r;
}

}  // namespace kmss

#endif  // KMSS_MATRICES_HPP

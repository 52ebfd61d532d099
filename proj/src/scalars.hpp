#ifndef KMSS_SCALARS_HPP
#define KMSS_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace kmss {

/// Exact rational scalar; all arithmetic in the toolkit is over Q or Q(i).
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

std::string to_string(const Rational& r);

/// Element of Q(i): re + i*im with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  /// Rendered as "a/b + c/d i" with zero parts elided.
  std::string str() const;
};

/// Laurent polynomial in t over Q(i); the coefficient ring of every matrix
/// entry in the system.  No zero coefficients are stored, so equality is
/// structural.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_[0] = std::move(c);
  }
  LaurentScalar(long c) : LaurentScalar(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentScalar monomial(int degree, GaussianRational c) {
    LaurentScalar p;
    if (!c.is_zero()) p.coeffs_[degree] = std::move(c);
    return p;
  }
  static LaurentScalar t(int degree = 1) { return monomial(degree, GaussianRational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  /// True when the polynomial is a single monomial c*t^k (a unit of the ring).
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }

  GaussianRational coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? GaussianRational() : it->second;
  }
  GaussianRational constant_term() const { return coefficient(0); }

  int min_degree() const;  // throws on zero
  int max_degree() const;

  const std::map<int, GaussianRational>& coefficients() const { return coeffs_; }

  LaurentScalar operator-() const;
  LaurentScalar operator+(const LaurentScalar& o) const;
  LaurentScalar operator-(const LaurentScalar& o) const;
  LaurentScalar operator*(const LaurentScalar& o) const;
  LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
  LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

  LaurentScalar scaled(const GaussianRational& c) const;

  bool operator==(const LaurentScalar& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

  /// d/dt: c*t^n -> n*c*t^(n-1).
  LaurentScalar derivative() const;
  /// t*d/dt: c*t^n -> n*c*t^n (the loop-algebra derivation action).
  LaurentScalar t_derivative() const;
  /// Coefficient of t^(-1).
  GaussianRational residue() const { return coefficient(-1); }
  /// t -> u*t for u = +/-1: coefficient at degree n picks up u^n.
  LaurentScalar substitute_sign(int u) const;
  /// Conjugates all coefficients; with invert_t also sends degree n to -n.
  LaurentScalar conjugate_bar(bool invert_t) const;
  /// Multiplication by t^k.
  LaurentScalar shifted(int k) const;
  /// Exact division by a unit monomial; throws if divisor is not a unit.
  LaurentScalar divided_by_unit(const LaurentScalar& unit) const;

  std::string str() const;

 private:
  void insert(int degree, GaussianRational c) {
    if (!c.is_zero()) coeffs_.emplace(degree, std::move(c));
  }
  std::map<int, GaussianRational> coeffs_;
};

}  // namespace kmss

#endif  // KMSS_SCALARS_HPP

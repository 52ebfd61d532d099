#include "scalars.hpp"

#include <sstream>

namespace kmss {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  if (o.is_zero()) throw Error("division by zero in Q(i)");
  Rational n = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (re != 0) {
    os << re;
    if (im > 0)
      os << " + " << im << " i";
    else if (im < 0)
      os << " - " << -im << " i";
  } else {
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im << " i";
  }
  return os.str();
}

int LaurentScalar::min_degree() const {
  if (coeffs_.empty()) throw Error("degree of zero Laurent polynomial");
  return coeffs_.begin()->first;
}

int LaurentScalar::max_degree() const {
  if (coeffs_.empty()) throw Error("degree of zero Laurent polynomial");
  return coeffs_.rbegin()->first;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
  return r;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  for (const auto& [d, c] : o.coeffs_) {
    auto it = r.coeffs_.find(d);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const { return *this + (-o); }

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) {
      auto it = r.coeffs_.find(d1 + d2);
      if (it == r.coeffs_.end()) {
        GaussianRational p = c1 * c2;
        if (!p.is_zero()) r.coeffs_.emplace(d1 + d2, std::move(p));
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentScalar LaurentScalar::scaled(const GaussianRational& c) const {
  LaurentScalar r;
  if (c.is_zero()) return r;
  for (const auto& [d, a] : coeffs_) r.coeffs_.emplace(d, a * c);
  return r;
}

LaurentScalar LaurentScalar::derivative() const {
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_)
    if (d != 0) r.coeffs_.emplace(d - 1, c * GaussianRational(d));
  return r;
}

LaurentScalar LaurentScalar::t_derivative() const {
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_)
    if (d != 0) r.coeffs_.emplace(d, c * GaussianRational(d));
  return r;
}

LaurentScalar LaurentScalar::substitute_sign(int u) const {
  if (u != 1 && u != -1) throw Error("substitute_sign: u must be +1 or -1");
  if (u == 1) return *this;
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, (d % 2 == 0) ? c : -c);
  return r;
}

LaurentScalar LaurentScalar::conjugate_bar(bool invert_t) const {
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(invert_t ? -d : d, c.conj());
  return r;
}

LaurentScalar LaurentScalar::shifted(int k) const {
  LaurentScalar r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d + k, c);
  return r;
}

LaurentScalar LaurentScalar::divided_by_unit(const LaurentScalar& unit) const {
  if (!unit.is_unit()) throw Error("divided_by_unit: divisor " + unit.str() + " is not a unit");
  const auto& [deg, c] = *unit.coefficients().begin();
  LaurentScalar r;
  for (const auto& [d, a] : coeffs_) r.coeffs_.emplace(d - deg, a / c);
  return r;
}

std::string LaurentScalar::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    bool trivial = (c == GaussianRational(1));
    if (d == 0) {
      os << "(" << c.str() << ")";
    } else {
      if (!trivial) os << "(" << c.str() << ")";
      os << "t^" << d;
    }
  }
  return os.str();
}

}  // namespace kmss

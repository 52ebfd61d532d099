#include "loop.hpp"

#include <algorithm>
#include <sstream>

namespace kmss {

namespace {

Vec<GaussianRational> flatten(const ScalarMatrix& m) {
  Vec<GaussianRational> v;
  v.reserve(static_cast<size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

MatrixLieAlgebra MatrixLieAlgebra::realize(Series s, int rank) {
  MatrixLieAlgebra alg;
  alg.series_ = s;
  alg.rank_ = rank;
  alg.roots_ = root_system(s, rank);
  const int n = rank;
  auto unit = [&](int i, int j) { return ScalarMatrix::unit(alg.matrix_dim_, i, j); };

  switch (s) {
    case Series::A: {
      alg.matrix_dim_ = n + 1;
      for (int i = 0; i < n; ++i) {
        ScalarMatrix h(alg.matrix_dim_);
        h.at(i, i) = GaussianRational(1);
        h.at(i + 1, i + 1) = GaussianRational(-1);
        alg.cartan_basis_.push_back(h);
      }
      for (const auto& root : alg.roots_.all_roots) {
        int from = -1, to = -1;
        for (int k = 0; k <= n; ++k) {
          if (root[k] == 1) from = k;
          if (root[k] == -1) to = k;
        }
        alg.root_vectors_.push_back({root, unit(from, to)});
      }
      break;
    }
    case Series::B:
    case Series::C:
    case Series::D: {
      const bool sympl = (s == Series::C);
      alg.matrix_dim_ = (s == Series::B) ? 2 * n + 1 : 2 * n;
      const int m = alg.matrix_dim_;
      auto mir = [&](int i) { return m - 1 - i; };
      const int middle = (s == Series::B) ? n : -1;
      for (int i = 0; i < n; ++i) {
        ScalarMatrix h(m);
        h.at(i, i) = GaussianRational(1);
        h.at(mir(i), mir(i)) = GaussianRational(-1);
        alg.cartan_basis_.push_back(h);
      }
      for (const auto& root : alg.roots_.all_roots) {
        // Decode the coordinate pattern of the root.
        std::vector<int> plus, minus;
        bool doubled = false;
        for (int k = 0; k < n; ++k) {
          if (root[k] == 1) plus.push_back(k);
          if (root[k] == -1) minus.push_back(k);
          if (root[k] == 2 || root[k] == -2) {
            doubled = true;
            (root[k] == 2 ? plus : minus).push_back(k);
          }
        }
        ScalarMatrix x(m);
        if (doubled) {  // +-2e_i, C series only
          int i = plus.empty() ? minus[0] : plus[0];
          x = plus.empty() ? unit(mir(i), i) : unit(i, mir(i));
        } else if (plus.size() == 1 && minus.size() == 1) {  // e_i - e_j
          int i = plus[0], j = minus[0];
          x = unit(i, j) - unit(mir(j), mir(i));
        } else if (plus.size() == 2) {  // e_i + e_j, i < j
          int i = plus[0], j = plus[1];
          x = sympl ? unit(i, mir(j)) + unit(j, mir(i)) : unit(i, mir(j)) - unit(j, mir(i));
        } else if (minus.size() == 2) {  // -e_i - e_j
          int i = minus[0], j = minus[1];
          x = sympl ? unit(mir(j), i) + unit(mir(i), j) : unit(mir(j), i) - unit(mir(i), j);
        } else if (plus.size() == 1) {  // e_i, B series
          int i = plus[0];
          x = unit(i, middle) - unit(middle, mir(i));
        } else {  // -e_i
          int i = minus[0];
          x = unit(middle, i) - unit(mir(i), middle);
        }
        alg.root_vectors_.push_back({root, x});
      }
      break;
    }
  }
  alg.basis_ = alg.cartan_basis_;
  for (const auto& rv : alg.root_vectors_) alg.basis_.push_back(rv.matrix);
  return alg;
}

const ScalarMatrix& MatrixLieAlgebra::root_vector(const std::vector<long>& root) const {
  for (const auto& rv : root_vectors_)
    if (rv.root == root) return rv.matrix;
  throw Error("root not present in root system");
}

GaussianRational MatrixLieAlgebra::eval_root(const std::vector<long>& root,
                                             const ScalarMatrix& h) const {
  GaussianRational v;
  for (size_t k = 0; k < root.size(); ++k)
    if (root[k] != 0) v += h.at(static_cast<int>(k), static_cast<int>(k)) * GaussianRational(root[k]);
  return v;
}

bool MatrixLieAlgebra::contains(const ScalarMatrix& x) const {
  Mat<GaussianRational> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(flatten(b));
  return in_span(rows, flatten(x));
}

ScalarMatrix MatrixLieAlgebra::normalized_opposite(const std::vector<long>& root) const {
  std::vector<long> neg(root.size());
  for (size_t k = 0; k < root.size(); ++k) neg[k] = -root[k];
  const ScalarMatrix& x = root_vector(root);
  const ScalarMatrix& y = root_vector(neg);
  ScalarMatrix h = x * y - y * x;
  GaussianRational a = eval_root(root, h);
  if (a.is_zero()) throw Error("degenerate root pairing");
  return y.scaled(GaussianRational(2) / a);
}

AffineElement AffineElement::operator+(const AffineElement& o) const {
  AffineElement r;
  r.loop = loop + o.loop;
  r.c = c + o.c;
  r.d = d + o.d;
  return r;
}

AffineElement AffineElement::operator-(const AffineElement& o) const {
  AffineElement r;
  r.loop = loop - o.loop;
  r.c = c - o.c;
  r.d = d - o.d;
  return r;
}

AffineElement AffineElement::operator-() const {
  AffineElement r;
  r.loop = -loop;
  r.c = -c;
  r.d = -d;
  return r;
}

AffineElement AffineElement::scaled(const GaussianRational& k) const {
  AffineElement r;
  r.loop = loop.map([&](const LaurentScalar& p) { return p.scaled(k); });
  r.c = c * k;
  r.d = d * k;
  return r;
}

AffineElement AffineElement::central(int dim, GaussianRational coeff) {
  AffineElement r(dim);
  r.c = std::move(coeff);
  return r;
}

AffineElement AffineElement::derivation(int dim, GaussianRational coeff) {
  AffineElement r(dim);
  r.d = std::move(coeff);
  return r;
}

AffineElement AffineElement::loop_monomial(int degree, const ScalarMatrix& x) {
  AffineElement r;
  r.loop = embed(x, degree);
  return r;
}

std::string AffineElement::str() const {
  std::ostringstream os;
  os << loop.str();
  if (!c.is_zero()) os << " + (" << c.str() << ")*c";
  if (!d.is_zero()) os << " + (" << d.str() << ")*d";
  return os.str();
}

AffineElement bracket(const AffineElement& x, const AffineElement& y) {
  if (x.dim() != y.dim()) throw Error("bracket: dimension mismatch");
  AffineElement r;
  r.loop = x.loop * y.loop - y.loop * x.loop;
  if (!x.d.is_zero())
    r.loop += y.loop.map([&](const LaurentScalar& p) { return p.t_derivative().scaled(x.d); });
  if (!y.d.is_zero())
    r.loop -= x.loop.map([&](const LaurentScalar& p) { return p.t_derivative().scaled(y.d); });
  r.c = cocycle(x, y);
  return r;
}

LaurentScalar invariant_form(const AffineElement& x, const AffineElement& y) {
  if (x.dim() != y.dim()) throw Error("invariant_form: dimension mismatch");
  return (x.loop * y.loop).trace();
}

GaussianRational cocycle(const AffineElement& x, const AffineElement& y) {
  return (laurent_derivative(x.loop) * y.loop).trace().residue();
}

GaussianRational pairing0(const AffineElement& x, const AffineElement& y) {
  GaussianRational v = invariant_form(x, y).constant_term();
  v += x.c * y.d + x.d * y.c;
  return v;
}

GeneratorSet chevalley_generators(const MatrixLieAlgebra& alg) {
  GeneratorSet g;
  const auto& rs = alg.roots();
  // Affine pair: e_0 = t (x) (lowest-root vector), f_0 = t^{-1} (x) (highest).
  std::vector<long> lowest(rs.largest_root.size());
  for (size_t k = 0; k < lowest.size(); ++k) lowest[k] = -rs.largest_root[k];
  ScalarMatrix y = alg.root_vector(lowest);
  ScalarMatrix z = alg.normalized_opposite(lowest);
  g.e.push_back(AffineElement::loop_monomial(1, y));
  g.f.push_back(AffineElement::loop_monomial(-1, z));
  g.h.push_back(bracket(g.e[0], g.f[0]));
  for (const auto& alpha : rs.simple_roots) {
    g.e.push_back(AffineElement::loop_monomial(0, alg.root_vector(alpha)));
    g.f.push_back(AffineElement::loop_monomial(0, alg.normalized_opposite(alpha)));
    g.h.push_back(bracket(g.e.back(), g.f.back()));
  }
  return g;
}

SerreReport check_serre(const MatrixLieAlgebra& alg) {
  SerreReport rep;
  GeneratorSet g = chevalley_generators(alg);
  AffineDiagram diag = build_affine_diagram(alg.series(), alg.rank());
  IntMat a = diag.cartan_matrix();
  const int m = diag.nodes();
  auto fail = [&](const std::string& what, const AffineElement& witness) {
    rep.ok = false;
    rep.failures.push_back(what + " = " + witness.str());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      long power = 1 - a[i][j];
      AffineElement cur = g.e[j];
      for (long k = 0; k < power; ++k) cur = bracket(g.e[i], cur);
      if (!cur.is_zero())
        fail("(ad e_" + std::to_string(i) + ")^" + std::to_string(power) + " e_" +
                 std::to_string(j),
             cur);
      cur = g.f[j];
      for (long k = 0; k < power; ++k) cur = bracket(g.f[i], cur);
      if (!cur.is_zero())
        fail("(ad f_" + std::to_string(i) + ")^" + std::to_string(power) + " f_" +
                 std::to_string(j),
             cur);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      AffineElement b = bracket(g.e[i], g.f[j]);
      if (i == j) {
        if (b != g.h[i]) fail("[e_i, f_i] - h_i at i=" + std::to_string(i), b - g.h[i]);
      } else if (!b.is_zero()) {
        fail("[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "]", b);
      }
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      AffineElement b = bracket(g.h[i], g.h[j]);
      if (!b.is_zero()) fail("[h_" + std::to_string(i) + ", h_" + std::to_string(j) + "]", b);
    }
  return rep;
}

}  // namespace kmss

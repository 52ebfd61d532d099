#include "involutions.hpp"

#include <algorithm>
#include <sstream>

namespace kmss {

std::string aut_kind_name(AutKind k) {
  switch (k) {
    case AutKind::K1a: return "1a";
    case AutKind::K1b: return "1b";
    case AutKind::K2a: return "2a";
    case AutKind::K2b: return "2b";
  }
  throw Error("bad automorphism kind");
}

namespace {

std::pair<int, int> degree_range(const LaurentMatrix& m) {
  int lo = 0, hi = 0;
  bool any = false;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const LaurentScalar& p = m.at(i, j);
      if (p.is_zero()) continue;
      if (!any) {
        lo = p.min_degree();
        hi = p.max_degree();
        any = true;
      } else {
        lo = std::min(lo, p.min_degree());
        hi = std::max(hi, p.max_degree());
      }
    }
  return {lo, hi};
}

}  // namespace

int loop_level(const AffineElement& x) {
  auto [lo, hi] = degree_range(x.loop);
  return std::max(std::abs(lo), std::abs(hi));
}

LaurentMatrix phi_matrix(const LaurentMatrix& U, int d_gamma) {
  LaurentMatrix u_inv = U.inverse_over_units();
  LaurentMatrix t_du = laurent_derivative(U).map(
      [](const LaurentScalar& p) { return p.shifted(1); });
  LaurentMatrix core = t_du * u_inv;
  LaurentScalar tr = core.trace();
  LaurentMatrix r = -core;
  LaurentScalar diag = tr.scaled(GaussianRational(Rational(1), Rational(0)) /
                                 GaussianRational(Rational(d_gamma), Rational(0)));
  for (int i = 0; i < U.dim(); ++i) r.at(i, i) += diag;
  return r;
}

AutomorphismSpec::AutomorphismSpec(std::string name, LaurentMatrix u_matrix, int u, Rational xi,
                                   AutKind kind, Rational gamma)
    : name_(std::move(name)),
      U_(std::move(u_matrix)),
      u_(u),
      xi_(std::move(xi)),
      kind_(kind),
      gamma_(std::move(gamma)) {
  if (u_ != 1 && u_ != -1) throw Error("automorphism requires u = +1 or -1");
  if (gamma_ == 0) throw Error("gamma must be nonzero");
  U_inv_ = U_.inverse_over_units();
  phi_ = phi_matrix(U_, U_.dim());
  res_kernel_ = U_inv_ * laurent_derivative(U_);
  auto [ulo, uhi] = degree_range(U_);
  auto [ilo, ihi] = degree_range(U_inv_);
  shift_ = std::max(std::abs(ulo + ilo), std::abs(uhi + ihi));
}

AffineElement cartan_semi_involution(const AffineElement& x) {
  AffineElement r;
  r.loop = -circle_adjoint(x.loop);
  r.c = -x.c.conj();
  r.d = -x.d.conj();
  return r;
}

AffineElement AutomorphismSpec::apply(const AffineElement& x) const {
  AffineElement in = x;
  if (kind_ == AutKind::K2a || kind_ == AutKind::K2b) in = cartan_semi_involution(in);

  LaurentMatrix arg = substitute_sign(in.loop, u_);
  if (kind_ == AutKind::K1b || kind_ == AutKind::K2b) arg = -arg.transpose();

  AffineElement out;
  out.loop = U_ * arg * U_inv_;
  GaussianRational inv_gamma(Rational(1) / gamma_);
  out.c = in.c + (res_kernel_ * arg).trace().residue() * inv_gamma +
          GaussianRational(xi_) * in.d;
  out.d = in.d;
  if (!in.d.is_zero())
    out.loop += phi_.map([&](const LaurentScalar& p) { return p.scaled(in.d); });
  return out;
}

CoordMap::CoordMap(int matrix_dim, int lo, int hi) : dim_(matrix_dim), lo_(lo), hi_(hi) {
  len_ = (hi_ - lo_ + 1) * dim_ * dim_ * 2 + 4;
}

QVec CoordMap::coords(const AffineElement& x) const {
  QVec v(static_cast<size_t>(len_), Rational(0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const LaurentScalar& p = x.loop.at(i, j);
      for (const auto& [deg, coef] : p.coefficients()) {
        if (deg < lo_ || deg > hi_) throw Error("coordinate window too small");
        size_t base = (static_cast<size_t>(deg - lo_) * dim_ * dim_ +
                       static_cast<size_t>(i) * dim_ + j) *
                      2;
        v[base] = coef.re;
        v[base + 1] = coef.im;
      }
    }
  size_t tail = static_cast<size_t>(len_) - 4;
  v[tail] = x.c.re;
  v[tail + 1] = x.c.im;
  v[tail + 2] = x.d.re;
  v[tail + 3] = x.d.im;
  return v;
}

RealSubspace compact_form(const MatrixLieAlgebra& alg, int window) {
  if (window < 1) throw Error("compact_form requires window >= 1");
  RealSubspace s;
  s.alg = &alg;
  s.window = window;
  s.core = window;
  std::vector<AffineElement> gens;
  const GaussianRational i_unit = GaussianRational::i();
  for (int n = 0; n <= window; ++n) {
    for (const auto& x : alg.basis()) {
      ScalarMatrix xd = conj_transpose(x);
      AffineElement a(embed(x, n) - embed(xd, -n));
      AffineElement b(embed(x, n) + embed(xd, -n));
      gens.push_back(a);
      gens.push_back(b.scaled(i_unit));
    }
  }
  gens.push_back(AffineElement::central(alg.matrix_dim(), i_unit));
  gens.push_back(AffineElement::derivation(alg.matrix_dim(), i_unit));

  CoordMap cm(alg.matrix_dim(), -window, window);
  QMat rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(cm.coords(g));
  for (size_t idx : independent_subset(rows)) s.basis.push_back(gens[idx]);
  return s;
}

InvolutionCheck check_involution(const AutomorphismSpec& spec, const RealSubspace& compact) {
  InvolutionCheck rep;
  for (int k = 0; k < compact.dim(); ++k) {
    const AffineElement& b = compact.basis[k];
    if (loop_level(b) > compact.core) continue;
    AffineElement twice = spec.apply(spec.apply(b));
    if (twice != b) {
      rep.holds_on_core = false;
      rep.witnesses.push_back(k);
      if (b.d.is_zero()) rep.failures_only_on_d = false;
    }
  }
  return rep;
}

CartanDecomposition split_eigenspaces(const AutomorphismSpec& spec, const RealSubspace& compact) {
  CartanDecomposition dec;
  const int core = compact.window - spec.shift();
  if (core < 0) throw Error("window too small for this automorphism's degree shift");

  RealSubspace slice = compact;
  slice.core = core;
  InvolutionCheck chk = check_involution(spec, slice);
  if (!chk.holds_on_core && !chk.failures_only_on_d)
    throw Error("automorphism is not involutive on the core window");

  std::vector<AffineElement> pool;
  for (int k = 0; k < compact.dim(); ++k) {
    if (loop_level(compact.basis[k]) > core) continue;
    if (std::find(chk.witnesses.begin(), chk.witnesses.end(), k) != chk.witnesses.end()) continue;
    pool.push_back(compact.basis[k]);
  }
  if (!chk.witnesses.empty())
    dec.notes.push_back(
        "sigma^2 != id on the d direction (xi bookkeeping per the general rule); "
        "the d line is excluded from the eigenspace split");

  const int dim = compact.alg->matrix_dim();
  CoordMap cm(dim, -(compact.window + spec.shift()), compact.window + spec.shift());
  QMat minus_rows, plus_rows;
  std::vector<AffineElement> images;
  images.reserve(pool.size());
  for (const auto& b : pool) images.push_back(spec.apply(b));
  for (size_t k = 0; k < pool.size(); ++k) {
    minus_rows.push_back(cm.coords(images[k] - pool[k]));
    plus_rows.push_back(cm.coords(images[k] + pool[k]));
  }
  auto transpose = [](const QMat& m) {
    if (m.empty()) return QMat{};
    QMat t(m[0].size(), QVec(m.size(), Rational(0)));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
  };
  auto build = [&](const QMat& rows) {
    QMat combos = nullspace(transpose(rows));
    rref(combos);
    std::vector<AffineElement> out;
    for (const auto& cvec : combos) {
      AffineElement acc(dim);
      for (size_t k = 0; k < pool.size(); ++k)
        if (cvec[k] != 0) acc = acc + pool[k].scaled(GaussianRational(cvec[k]));
      out.push_back(std::move(acc));
    }
    return out;
  };

  dec.K.alg = dec.P.alg = dec.noncompact.alg = compact.alg;
  dec.K.window = dec.P.window = dec.noncompact.window = compact.window;
  dec.K.core = dec.P.core = dec.noncompact.core = core;
  dec.K.basis = build(minus_rows);
  dec.P.basis = build(plus_rows);
  dec.noncompact.basis = dec.K.basis;
  for (const auto& p : dec.P.basis)
    dec.noncompact.basis.push_back(p.scaled(GaussianRational::i()));
  return dec;
}

std::array<int, 3> killing_signature(const RealSubspace& s) {
  const int n = s.dim();
  QMat g(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      GaussianRational v = pairing0(s.basis[i], s.basis[j]);
      if (v.im != 0) throw Error("pairing is not real on this real span");
      g[i][j] = g[j][i] = v.re;
    }
  return inertia(g);
}

bool subspace_contains(const RealSubspace& s, const AffineElement& x) {
  int w = std::max(s.window, loop_level(x));
  CoordMap cm(s.alg->matrix_dim(), -w, w);
  QMat rows;
  for (const auto& b : s.basis) rows.push_back(cm.coords(b));
  return in_span(rows, cm.coords(x));
}

bool same_span(const RealSubspace& a, const RealSubspace& b) {
  if (a.alg != b.alg) return false;
  int w = std::max(a.window, b.window);
  CoordMap cm(a.alg->matrix_dim(), -w, w);
  QMat ra, rall;
  for (const auto& x : a.basis) {
    ra.push_back(cm.coords(x));
    rall.push_back(ra.back());
  }
  size_t rank_a = rank(ra);
  if (rank_a != a.basis.size()) throw Error("subspace basis is dependent");
  QMat rb;
  for (const auto& x : b.basis) {
    rb.push_back(cm.coords(x));
    rall.push_back(rb.back());
  }
  return rank_a == b.basis.size() && rank(rall) == rank_a;
}

std::vector<AffineElement> slice_within_degree(const RealSubspace& s, int m) {
  if (m >= s.window) return s.basis;
  // Solve for rational combinations whose loop support lies within [-m, m].
  CoordMap cm(s.alg->matrix_dim(), -s.window, s.window);
  const int dim = s.alg->matrix_dim();
  const int n = s.dim();
  QMat constraint;  // rows: coordinates outside [-m, m] for each basis element
  std::vector<size_t> outside;
  for (int deg = -s.window; deg <= s.window; ++deg) {
    if (std::abs(deg) <= m) continue;
    size_t base = static_cast<size_t>(deg + s.window) * dim * dim * 2;
    for (size_t k = 0; k < static_cast<size_t>(dim) * dim * 2; ++k)
      outside.push_back(base + k);
  }
  QMat mat(outside.size(), QVec(n, Rational(0)));
  std::vector<QVec> basis_coords;
  basis_coords.reserve(n);
  for (const auto& b : s.basis) basis_coords.push_back(cm.coords(b));
  for (size_t r = 0; r < outside.size(); ++r)
    for (int k = 0; k < n; ++k) mat[r][k] = basis_coords[k][outside[r]];
  QMat combos = nullspace(mat);
  rref(combos);
  std::vector<AffineElement> out;
  for (const auto& cvec : combos) {
    AffineElement acc(dim);
    for (int k = 0; k < n; ++k)
      if (cvec[k] != 0) acc = acc + s.basis[k].scaled(GaussianRational(cvec[k]));
    out.push_back(std::move(acc));
  }
  return out;
}

int dim_within_degree(const RealSubspace& s, int m) {
  return static_cast<int>(slice_within_degree(s, m).size());
}

std::string Degree0Report::describe() const {
  std::ostringstream os;
  os << "slice dim " << slice_dim << ", loop dim " << loop_dim << ", types [";
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) os << ", ";
    os << series_letter(types[i].first) << types[i].second;
  }
  os << "], center " << center_dim << ", pure-central extras " << central_extra;
  return os.str();
}

namespace {

Vec<GaussianRational> flatten_g(const ScalarMatrix& m) {
  Vec<GaussianRational> v;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  return v;
}

QVec flatten_real(const ScalarMatrix& m) {
  QVec v;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      v.push_back(m.at(i, j).re);
      v.push_back(m.at(i, j).im);
    }
  return v;
}

// Simultaneous root-space decomposition of the complex span of `algebra`
// with respect to the abelian diagonal subalgebra `csa`.
struct WeightSpace {
  std::vector<GaussianRational> weight;  // values on the csa basis
  Mat<GaussianRational> vectors;         // coordinates in `algebra`
};

}  // namespace

Degree0Report identify_degree0_type(const RealSubspace& s) {
  Degree0Report rep;
  const int dim = s.alg->matrix_dim();
  std::vector<AffineElement> slice = slice_within_degree(s, 0);
  rep.slice_dim = static_cast<int>(slice.size());

  // Loop-part projection (constant matrices), real span.
  std::vector<ScalarMatrix> loops;
  {
    QMat rows;
    std::vector<ScalarMatrix> cands;
    for (const auto& x : slice) {
      ScalarMatrix m(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = x.loop.at(i, j).constant_term();
      if (m.is_zero()) continue;
      cands.push_back(m);
      rows.push_back(flatten_real(m));
    }
    for (size_t idx : independent_subset(rows)) loops.push_back(cands[idx]);
  }
  rep.loop_dim = static_cast<int>(loops.size());
  rep.central_extra = rep.slice_dim - rep.loop_dim;
  if (loops.empty()) return rep;

  // Closure under bracket (pure loop at degree 0, no central correction).
  {
    QMat rows;
    for (const auto& m : loops) rows.push_back(flatten_real(m));
    for (size_t i = 0; i < loops.size(); ++i)
      for (size_t j = i + 1; j < loops.size(); ++j) {
        ScalarMatrix br = loops[i] * loops[j] - loops[j] * loops[i];
        if (!in_span(rows, flatten_real(br)))
          throw Error("degree-0 part is not closed under bracket");
      }
  }

  // Complexify: Q(i)-span.
  std::vector<ScalarMatrix> cbasis;
  {
    Mat<GaussianRational> rows;
    for (const auto& m : loops) rows.push_back(flatten_g(m));
    for (size_t idx : independent_subset(rows)) cbasis.push_back(loops[idx]);
  }
  const int L = static_cast<int>(cbasis.size());

  // Center: x with [x, b_j] = 0 for all j.
  Mat<GaussianRational> center_sys(static_cast<size_t>(L) * L * dim * dim,
                                   Vec<GaussianRational>(L, GaussianRational(0)));
  {
    size_t row = 0;
    for (int j = 0; j < L; ++j) {
      std::vector<Vec<GaussianRational>> ad_of_basis;  // [x_k, b_j] flattened
      for (int k = 0; k < L; ++k) {
        ScalarMatrix br = cbasis[k] * cbasis[j] - cbasis[j] * cbasis[k];
        Vec<GaussianRational> f = flatten_g(br);
        for (size_t t = 0; t < f.size(); ++t) center_sys[row + t][k] = f[t];
      }
      row += static_cast<size_t>(dim) * dim;
    }
    center_sys.resize(row);
  }
  Mat<GaussianRational> center = nullspace(center_sys);
  rep.center_dim = static_cast<int>(center.size());

  // Derived algebra [L, L].
  std::vector<ScalarMatrix> derived;
  {
    Mat<GaussianRational> rows;
    std::vector<ScalarMatrix> cands;
    for (int i = 0; i < L; ++i)
      for (int j = i + 1; j < L; ++j) {
        ScalarMatrix br = cbasis[i] * cbasis[j] - cbasis[j] * cbasis[i];
        if (br.is_zero()) continue;
        cands.push_back(br);
        rows.push_back(flatten_g(br));
      }
    for (size_t idx : independent_subset(rows)) derived.push_back(cands[idx]);
  }
  if (derived.empty()) return rep;  // abelian

  Mat<GaussianRational> derived_rows;
  for (const auto& m : derived) derived_rows.push_back(flatten_g(m));

  // Cartan subalgebra: diagonal matrices inside the derived algebra.
  std::vector<ScalarMatrix> csa;
  {
    // Solve for combinations of `derived` that are diagonal.
    const size_t cols = derived.size();
    Mat<GaussianRational> sys;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        Vec<GaussianRational> row(cols, GaussianRational(0));
        for (size_t k = 0; k < cols; ++k) row[k] = derived[k].at(i, j);
        sys.push_back(std::move(row));
      }
    Mat<GaussianRational> combos = nullspace(sys);
    for (const auto& cvec : combos) {
      ScalarMatrix acc(dim);
      for (size_t k = 0; k < cols; ++k)
        if (!cvec[k].is_zero()) acc += derived[k].scaled(cvec[k]);
      csa.push_back(acc);
    }
  }
  if (csa.empty()) throw Error("no diagonal Cartan subalgebra found in degree-0 part");

  // Joint eigenspace decomposition of ad(csa) on the derived algebra.
  std::vector<WeightSpace> spaces;
  {
    WeightSpace whole;
    whole.vectors = Mat<GaussianRational>();
    for (size_t k = 0; k < derived.size(); ++k) {
      Vec<GaussianRational> unitv(derived.size(), GaussianRational(0));
      unitv[k] = GaussianRational(1);
      whole.vectors.push_back(unitv);
    }
    spaces.push_back(whole);
    for (const auto& h : csa) {
      // Candidate eigenvalues: differences of diagonal entries of h.
      std::vector<GaussianRational> cands;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          GaussianRational lam = h.at(i, i) - h.at(j, j);
          bool seen = false;
          for (const auto& c : cands)
            if (c == lam) {
              seen = true;
              break;
            }
          if (!seen) cands.push_back(lam);
        }
      std::vector<WeightSpace> next;
      for (const auto& sp : spaces) {
        for (const auto& lam : cands) {
          // Solve (ad_h - lam) x = 0 within sp.
          Mat<GaussianRational> sys;
          const size_t nv = sp.vectors.size();
          // Rows: flattened ad_h(v_k) - lam v_k as elements of derived span.
          std::vector<Vec<GaussianRational>> images;
          for (size_t k = 0; k < nv; ++k) {
            ScalarMatrix v(dim);
            for (size_t t = 0; t < derived.size(); ++t)
              if (!sp.vectors[k][t].is_zero()) v += derived[t].scaled(sp.vectors[k][t]);
            ScalarMatrix img = h * v - v * h - v.scaled(lam);
            images.push_back(flatten_g(img));
          }
          const size_t flat = images.empty() ? 0 : images[0].size();
          Mat<GaussianRational> mt(flat, Vec<GaussianRational>(nv, GaussianRational(0)));
          for (size_t k = 0; k < nv; ++k)
            for (size_t t = 0; t < flat; ++t) mt[t][k] = images[k][t];
          Mat<GaussianRational> combos = nullspace(mt);
          if (combos.empty()) continue;
          WeightSpace child;
          child.weight = sp.weight;
          child.weight.push_back(lam);
          for (const auto& cvec : combos) {
            Vec<GaussianRational> inherit(derived.size(), GaussianRational(0));
            for (size_t k = 0; k < nv; ++k)
              if (!cvec[k].is_zero())
                for (size_t t = 0; t < derived.size(); ++t)
                  inherit[t] += cvec[k] * sp.vectors[k][t];
            child.vectors.push_back(std::move(inherit));
          }
          next.push_back(std::move(child));
        }
      }
      spaces = std::move(next);
    }
  }

  auto weight_is_zero = [](const std::vector<GaussianRational>& w) {
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  };
  std::vector<WeightSpace> roots;
  size_t decomposed = 0, zero_dim = 0;
  for (auto& sp : spaces) {
    decomposed += sp.vectors.size();
    if (weight_is_zero(sp.weight))
      zero_dim += sp.vectors.size();
    else
      roots.push_back(sp);
  }
  if (decomposed != derived.size())
    throw Error("root-space decomposition does not partition the degree-0 algebra");
  if (zero_dim != csa.size())
    throw Error("diagonal Cartan subalgebra is not maximal in the degree-0 algebra");

  // Deterministic ordering of weights.
  auto weight_less = [](const std::vector<GaussianRational>& a,
                        const std::vector<GaussianRational>& b) {
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k].re != b[k].re) return a[k].re < b[k].re;
      if (a[k].im != b[k].im) return a[k].im < b[k].im;
    }
    return false;
  };
  std::sort(roots.begin(), roots.end(),
            [&](const WeightSpace& x, const WeightSpace& y) { return weight_less(x.weight, y.weight); });

  auto weight_positive = [](const std::vector<GaussianRational>& w) {
    for (const auto& x : w) {
      if (x.re != 0) return x.re > 0;
      if (x.im != 0) return x.im > 0;
    }
    return false;
  };

  std::vector<std::vector<GaussianRational>> positive;
  for (const auto& r : roots)
    if (weight_positive(r.weight)) positive.push_back(r.weight);

  auto weight_eq = [](const std::vector<GaussianRational>& a,
                      const std::vector<GaussianRational>& b) {
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return false;
    return true;
  };
  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<std::vector<GaussianRational>> simple;
  for (const auto& w : positive) {
    bool decomposable = false;
    for (const auto& u : positive) {
      if (decomposable) break;
      for (const auto& v : positive) {
        std::vector<GaussianRational> sum(u.size());
        for (size_t k = 0; k < u.size(); ++k) sum[k] = u[k] + v[k];
        if (weight_eq(sum, w)) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simple.push_back(w);
  }
  std::sort(simple.begin(), simple.end(), weight_less);

  auto space_of = [&](const std::vector<GaussianRational>& w) -> const WeightSpace& {
    for (const auto& r : roots)
      if (weight_eq(r.weight, w)) return r;
    throw Error("missing weight space");
  };

  // Coroots and the Cartan matrix a_ij = alpha_j(coroot_i).
  Mat<GaussianRational> csa_rows;
  for (const auto& h : csa) csa_rows.push_back(flatten_g(h));
  const size_t r = simple.size();
  IntMat cartan(r, std::vector<long>(r, 0));
  for (size_t i = 0; i < r; ++i) {
    std::vector<GaussianRational> neg(simple[i].size());
    for (size_t k = 0; k < simple[i].size(); ++k) neg[k] = -simple[i][k];
    const WeightSpace& plus_sp = space_of(simple[i]);
    const WeightSpace& minus_sp = space_of(neg);
    auto realize_vec = [&](const Vec<GaussianRational>& coords) {
      ScalarMatrix m(dim);
      for (size_t t = 0; t < derived.size(); ++t)
        if (!coords[t].is_zero()) m += derived[t].scaled(coords[t]);
      return m;
    };
    ScalarMatrix x = realize_vec(plus_sp.vectors[0]);
    ScalarMatrix hcand;
    bool found = false;
    for (const auto& yv : minus_sp.vectors) {
      ScalarMatrix y = realize_vec(yv);
      ScalarMatrix h = x * y - y * x;
      if (!h.is_zero()) {
        hcand = h;
        found = true;
        break;
      }
    }
    if (!found) throw Error("degenerate simple root pairing in degree-0 algebra");
    // alpha(h) for h = sum c_k csa_k: express h in the csa basis first.
    auto [ok, hc] = solve_combination(csa_rows, flatten_g(hcand));
    if (!ok) throw Error("coroot escapes the Cartan subalgebra");
    auto eval = [&](const std::vector<GaussianRational>& w) {
      GaussianRational v;
      for (size_t k = 0; k < hc.size(); ++k) v += hc[k] * w[k];
      return v;
    };
    GaussianRational norm = eval(simple[i]);
    if (norm.is_zero()) throw Error("null coroot normalization");
    for (size_t j = 0; j < r; ++j) {
      GaussianRational a = eval(simple[j]) * GaussianRational(2) / norm;
      if (!a.im.is_zero() || denominator(a.re) != 1)
        throw Error("non-integral Cartan entry in degree-0 recognition");
      cartan[i][j] = static_cast<long>(numerator(a.re));
    }
  }

  // Split into indecomposable blocks and recognize each.
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (size_t i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b = 0; b < r; ++b)
        if (comp[b] < 0 && cartan[a][b] != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < r; ++i)
      if (comp[i] == cidx) idx.push_back(i);
    IntMat block(idx.size(), std::vector<long>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) block[a][b] = cartan[idx[a]][idx[b]];
    rep.types.push_back(recognize_finite_type(block));
  }
  std::sort(rep.types.begin(), rep.types.end());
  return rep;
}

}  // namespace kmss

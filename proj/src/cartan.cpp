#include "cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kmss {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
  }
  throw Error("bad series");
}

Series series_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Series::A;
    case 'B': case 'b': return Series::B;
    case 'C': case 'c': return Series::C;
    case 'D': case 'd': return Series::D;
    default: throw Error(std::string("unknown series '") + c + "'");
  }
}

namespace {

bool indecomposable(const IntMat& a) {
  const size_t n = a.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < n; ++j) {
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

// Finds positive rationals d_i with d_i a_ij = d_j a_ji, if they exist.
std::optional<QVec> symmetrizer(const IntMat& a) {
  const size_t n = a.size();
  QVec d(n, Rational(0));
  for (size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<size_t> stack{start};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational dj = d[i] * Rational(a[i][j]) / Rational(a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

bool positive_definite(QMat m) {
  // Symmetric elimination: all pivots positive iff positive definite.
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

std::vector<long> normalize_null_vector(const QVec& v) {
  // Scale to the minimal positive integer vector.
  using boost::multiprecision::cpp_int;
  cpp_int lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<cpp_int> w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(numerator(x) * (lcm_den / denominator(x)));
  cpp_int g = 0;
  for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
  std::vector<long> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(static_cast<long>(x / g));
  return out;
}

}  // namespace

GcmReport validate_gcm(const IntMat& a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("validate_gcm: matrix is not square");
  GcmReport rep;
  if (n == 0) {
    rep.cls = GcmClass::Invalid;
    rep.reason = "empty matrix";
    return rep;
  }
  for (size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) {
      rep.cls = GcmClass::Invalid;
      rep.reason = "diagonal entry is not 2";
      return rep;
    }
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) {
        rep.cls = GcmClass::Invalid;
        rep.reason = "positive off-diagonal entry";
        return rep;
      }
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        rep.cls = GcmClass::Invalid;
        rep.reason = "asymmetric zero pattern";
        return rep;
      }
    }
  }

  // Affine: indecomposable with a strictly positive null vector.
  QMat qa(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) qa[i][j] = Rational(a[i][j]);
  QMat null = nullspace(qa);
  if (null.size() == 1 && indecomposable(a)) {
    QVec v = null[0];
    bool all_pos = true, all_neg = true;
    for (const auto& x : v) {
      if (x <= 0) all_pos = false;
      if (x >= 0) all_neg = false;
    }
    if (all_neg)
      for (auto& x : v) x = -x;
    if (all_pos || all_neg) {
      rep.cls = GcmClass::Affine;
      rep.null_vector = normalize_null_vector(v);
      return rep;
    }
  }

  // Finite: positive definite symmetrization.
  if (auto d = symmetrizer(a)) {
    QMat b(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) b[i][j] = (*d)[i] * Rational(a[i][j]);
    bool symmetric = true;
    for (size_t i = 0; i < n && symmetric; ++i)
      for (size_t j = 0; j < n; ++j)
        if (b[i][j] != b[j][i]) {
          symmetric = false;
          break;
        }
    if (symmetric && positive_definite(b)) {
      rep.cls = GcmClass::Finite;
      return rep;
    }
  }

  rep.cls = GcmClass::Other;
  return rep;
}

IntMat AffineDiagram::cartan_matrix() const {
  const int m = nodes();
  IntMat a(m, std::vector<long>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 2;
  for (const Bond& b : bonds) {
    switch (b.mult) {
      case 1:
        a[b.i][b.j] = a[b.j][b.i] = -1;
        break;
      case 2:
      case 3: {
        int s = b.short_node;
        int l = b.other(s);
        a[l][s] = -1;
        a[s][l] = -b.mult;
        break;
      }
      case 4:
        a[b.i][b.j] = a[b.j][b.i] = -2;
        break;
      default:
        throw Error("bad bond multiplicity");
    }
  }
  return a;
}

const Bond* AffineDiagram::bond_between(int i, int j) const {
  for (const Bond& b : bonds)
    if ((b.i == i && b.j == j) || (b.i == j && b.j == i)) return &b;
  return nullptr;
}

std::vector<int> AffineDiagram::neighbors(int node) const {
  std::vector<int> out;
  for (const Bond& b : bonds)
    if (b.touches(node)) out.push_back(b.other(node));
  std::sort(out.begin(), out.end());
  return out;
}

std::string AffineDiagram::name() const {
  return std::string(1, series_letter(series)) + std::to_string(rank) + "(1)";
}

AffineDiagram build_affine_diagram(Series s, int rank) {
  AffineDiagram d;
  d.series = s;
  d.rank = rank;
  auto single = [&](int i, int j) { d.bonds.push_back({i, j, 1, -1}); };
  auto dbl = [&](int i, int j, int short_node) { d.bonds.push_back({i, j, 2, short_node}); };
  switch (s) {
    case Series::A:
      if (rank < 1) throw Error("A series needs rank >= 1");
      if (rank == 1) {
        d.bonds.push_back({0, 1, 4, -1});
      } else {
        for (int i = 0; i < rank; ++i) single(i, i + 1);
        single(rank, 0);
      }
      break;
    case Series::B:
      if (rank < 2) throw Error("B series needs rank >= 2");
      if (rank == 2) {
        dbl(0, 2, 2);
        dbl(1, 2, 2);
      } else {
        single(0, 2);
        single(1, 2);
        for (int i = 2; i + 1 < rank; ++i) single(i, i + 1);
        dbl(rank - 1, rank, rank);
      }
      break;
    case Series::C:
      if (rank < 2) throw Error("C series needs rank >= 2");
      dbl(0, 1, 1);
      for (int i = 1; i + 1 < rank; ++i) single(i, i + 1);
      dbl(rank - 1, rank, rank - 1);
      break;
    case Series::D:
      if (rank < 4) throw Error("D series needs rank >= 4");
      single(0, 2);
      single(1, 2);
      for (int i = 2; i + 2 < rank; ++i) single(i, i + 1);
      single(rank - 2, rank - 1);
      single(rank - 2, rank);
      break;
  }
  // Marks: minimal positive null vector, computed rather than tabulated.
  GcmReport rep = validate_gcm(d.cartan_matrix());
  if (rep.cls != GcmClass::Affine)
    throw Error("constructed diagram is not of affine type: " + d.name());
  d.marks = *rep.null_vector;
  return d;
}

RootSystemData root_system(Series s, int rank) {
  RootSystemData r;
  r.series = s;
  r.rank = rank;
  auto e = [&](int i) {
    std::vector<long> v(r.ambient_dim, 0);
    v[i] = 1;
    return v;
  };
  auto add = [](std::vector<long> a, const std::vector<long>& b, long sb) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += sb * b[k];
    return a;
  };
  switch (s) {
    case Series::A: {
      if (rank < 1) throw Error("A series needs rank >= 1");
      r.ambient_dim = rank + 1;
      for (int i = 0; i <= rank; ++i)
        for (int j = 0; j <= rank; ++j) {
          if (i == j) continue;
          auto root = add(e(i), e(j), -1);
          r.all_roots.push_back(root);
          if (i < j) r.positive_roots.push_back(root);
        }
      for (int i = 0; i < rank; ++i) r.simple_roots.push_back(add(e(i), e(i + 1), -1));
      r.largest_root = add(e(0), e(rank), -1);
      break;
    }
    case Series::B: {
      if (rank < 2) throw Error("B series needs rank >= 2");
      r.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (long si : {1L, -1L})
            for (long sj : {1L, -1L}) {
              auto root = e(i);
              for (auto& x : root) x *= si;
              root = add(root, e(j), sj);
              r.all_roots.push_back(root);
              if (si == 1) r.positive_roots.push_back(root);
            }
      for (int i = 0; i < rank; ++i) {
        r.all_roots.push_back(e(i));
        r.positive_roots.push_back(e(i));
        auto neg = e(i);
        for (auto& x : neg) x = -x;
        r.all_roots.push_back(neg);
      }
      for (int i = 0; i + 1 < rank; ++i) r.simple_roots.push_back(add(e(i), e(i + 1), -1));
      r.simple_roots.push_back(e(rank - 1));
      r.largest_root = add(e(0), e(1), 1);
      break;
    }
    case Series::C: {
      if (rank < 2) throw Error("C series needs rank >= 2");
      r.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (long si : {1L, -1L})
            for (long sj : {1L, -1L}) {
              auto root = e(i);
              for (auto& x : root) x *= si;
              root = add(root, e(j), sj);
              r.all_roots.push_back(root);
              if (si == 1) r.positive_roots.push_back(root);
            }
      for (int i = 0; i < rank; ++i) {
        auto two = e(i);
        for (auto& x : two) x *= 2;
        r.all_roots.push_back(two);
        r.positive_roots.push_back(two);
        auto neg = two;
        for (auto& x : neg) x = -x;
        r.all_roots.push_back(neg);
      }
      for (int i = 0; i + 1 < rank; ++i) r.simple_roots.push_back(add(e(i), e(i + 1), -1));
      auto last = e(rank - 1);
      for (auto& x : last) x *= 2;
      r.simple_roots.push_back(last);
      r.largest_root = e(0);
      for (auto& x : r.largest_root) x *= 2;
      break;
    }
    case Series::D: {
      if (rank < 4) throw Error("D series needs rank >= 4");
      r.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (long si : {1L, -1L})
            for (long sj : {1L, -1L}) {
              auto root = e(i);
              for (auto& x : root) x *= si;
              root = add(root, e(j), sj);
              r.all_roots.push_back(root);
              if (si == 1) r.positive_roots.push_back(root);
            }
      for (int i = 0; i + 1 < rank; ++i) r.simple_roots.push_back(add(e(i), e(i + 1), -1));
      r.simple_roots.push_back(add(e(rank - 2), e(rank - 1), 1));
      r.largest_root = add(e(0), e(1), 1);
      break;
    }
  }
  return r;
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& then) const {
  DiagramAutomorphism r;
  r.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) r.perm[i] = then.perm[perm[i]];
  r.order = permutation_order(r.perm);
  r.name = r.is_identity() ? "id" : name + "*" + then.name;
  return r;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism r;
  r.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) r.perm[perm[i]] = static_cast<int>(i);
  r.order = order;
  r.name = name + "^-1";
  return r;
}

DiagramAutomorphism identity_automorphism(int nodes) {
  DiagramAutomorphism a;
  a.name = "id";
  a.perm.resize(nodes);
  for (int i = 0; i < nodes; ++i) a.perm[i] = i;
  a.order = 1;
  return a;
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<int> cur(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) cur[i] = static_cast<int>(i);
  int order = 0;
  do {
    for (size_t i = 0; i < perm.size(); ++i) cur[i] = perm[cur[i]];
    ++order;
    bool id = true;
    for (size_t i = 0; i < perm.size(); ++i)
      if (cur[i] != static_cast<int>(i)) {
        id = false;
        break;
      }
    if (id) return order;
  } while (order <= static_cast<int>(perm.size()) * static_cast<int>(perm.size()) + 2);
  throw Error("permutation order overflow");
}

bool is_diagram_automorphism(const AffineDiagram& d, const std::vector<int>& perm) {
  if (perm.size() != static_cast<size_t>(d.nodes())) return false;
  std::vector<bool> hit(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= d.nodes() || hit[p]) return false;
    hit[p] = true;
  }
  for (const Bond& b : d.bonds) {
    const Bond* im = d.bond_between(perm[b.i], perm[b.j]);
    if (im == nullptr || im->mult != b.mult) return false;
    if (b.short_node >= 0 && im->short_node != perm[b.short_node]) return false;
  }
  for (int i = 0; i < d.nodes(); ++i)
    if (d.marks[i] != d.marks[perm[i]]) return false;
  return true;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const AffineDiagram& d) {
  std::vector<DiagramAutomorphism> out;
  const int m = d.nodes();
  auto push = [&](const std::string& name, std::vector<int> perm) {
    DiagramAutomorphism a;
    a.name = name;
    a.perm = std::move(perm);
    a.order = permutation_order(a.perm);
    if (a.is_identity()) return;
    if (!is_diagram_automorphism(d, a.perm))
      throw Error("catalogued automorphism " + name + " does not preserve " + d.name());
    out.push_back(std::move(a));
  };
  switch (d.series) {
    case Series::A: {
      std::vector<int> rot(m), refl(m);
      for (int i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        refl[i] = (m - i) % m;
      }
      push("r", rot);
      push("s", refl);
      break;
    }
    case Series::B: {
      std::vector<int> g(m);
      for (int i = 0; i < m; ++i) g[i] = i;
      g[0] = 1;
      g[1] = 0;
      push("gamma", g);
      break;
    }
    case Series::C: {
      std::vector<int> g(m);
      for (int i = 0; i < m; ++i) g[i] = d.rank - i;
      push("gamma", g);
      break;
    }
    case Series::D: {
      const int r = d.rank;
      std::vector<int> sv(m), g(m), ss(m);
      for (int i = 0; i < m; ++i) sv[i] = g[i] = i;
      sv[0] = 1;
      sv[1] = 0;
      sv[r] = r - 1;
      sv[r - 1] = r;
      g[r] = r - 1;
      g[r - 1] = r;
      if (r % 2 == 0) {
        for (int i = 0; i <= r; ++i) ss[i] = r - i;
      } else {
        for (int i = 2; i <= r - 2; ++i) ss[i] = r - i;
        ss[0] = r;
        ss[r] = 1;
        ss[1] = r - 1;
        ss[r - 1] = 0;
      }
      push("sigma_v", sv);
      push("sigma_s", ss);
      push("gamma", g);
      break;
    }
  }
  return out;
}

std::vector<DiagramAutomorphism> automorphism_group(const AffineDiagram& d) {
  std::vector<DiagramAutomorphism> gens = diagram_automorphisms(d);
  std::set<std::vector<int>> seen;
  std::vector<DiagramAutomorphism> group;
  DiagramAutomorphism id = identity_automorphism(d.nodes());
  group.push_back(id);
  seen.insert(id.perm);
  size_t head = 0;
  while (head < group.size()) {
    DiagramAutomorphism cur = group[head++];
    for (const auto& g : gens) {
      DiagramAutomorphism nxt = cur.compose(g);
      if (seen.insert(nxt.perm).second) {
        if (nxt.name.size() > 24) nxt.name = "w" + std::to_string(group.size());
        group.push_back(nxt);
      }
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::pair<Series, int> recognize_finite_type(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  GcmReport rep = validate_gcm(a);
  if (rep.cls != GcmClass::Finite) throw Error("matrix is not of finite type");
  if (n == 1) return {Series::A, 1};
  // Edge census.
  int doubles = 0, triples = 0;
  std::vector<int> degree(n, 0);
  int double_long = -1, double_short = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long m = a[i][j] * a[j][i];
      if (m == 0) continue;
      ++degree[i];
      ++degree[j];
      if (m == 2) {
        ++doubles;
        // a[l][s] = -1, a[s][l] = -2
        if (a[i][j] == -1) {
          double_long = i;
          double_short = j;
        } else {
          double_long = j;
          double_short = i;
        }
      } else if (m == 3) {
        ++triples;
      } else if (m != 1) {
        throw Error("unsupported bond in finite type recognition");
      }
    }
  if (triples > 0) throw Error("G2 outside supported series");
  int forks = 0;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 3) throw Error("node degree > 3 in finite diagram");
    if (degree[i] == 3) ++forks;
  }
  if (doubles == 0 && forks == 0) return {Series::A, n};
  if (doubles == 0 && forks == 1 && n >= 4) return {Series::D, n};
  if (doubles == 1 && forks == 0) {
    if (n == 2) return {Series::B, 2};  // B2 = C2; report B canonically
    // B: short root at a chain end; C: long root at a chain end.
    if (degree[double_short] == 1) return {Series::B, n};
    if (degree[double_long] == 1) return {Series::C, n};
    throw Error("F4 outside supported series");
  }
  throw Error("unrecognized finite type");
}

}  // namespace kmss

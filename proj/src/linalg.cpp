#include "linalg.hpp"

namespace kmss {

std::array<int, 3> inertia(QMat g) {
  const size_t n = g.size();
  std::vector<bool> done(n, false);
  int neg = 0, pos = 0, nul = 0;
  for (size_t step = 0; step < n; ++step) {
    // Prefer a nonzero diagonal pivot among the remaining rows.
    size_t p = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && g[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish: look for an off-diagonal
      // coupling and symmetrize it onto the diagonal (char 0, so x+y works).
      size_t a = n, b = n;
      for (size_t i = 0; i < n && a == n; ++i) {
        if (done[i]) continue;
        for (size_t j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (g[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a == n) {
        for (size_t i = 0; i < n; ++i)
          if (!done[i]) {
            ++nul;
            done[i] = true;
          }
        break;
      }
      for (size_t j = 0; j < n; ++j) g[a][j] += g[b][j];
      for (size_t i = 0; i < n; ++i) g[i][a] += g[i][b];
      p = a;
    }
    Rational piv = g[p][p];
    if (piv > 0)
      ++pos;
    else
      ++neg;
    done[p] = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || g[i][p] == 0) continue;
      Rational f = g[i][p] / piv;
      for (size_t j = 0; j < n; ++j) g[i][j] -= f * g[p][j];
      for (size_t j = 0; j < n; ++j) g[j][i] = g[i][j];
    }
  }
  return {neg, pos, nul};
}

}  // namespace kmss

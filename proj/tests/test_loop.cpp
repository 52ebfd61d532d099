#include <doctest.h>

#include <random>

#include "loop.hpp"

using namespace kmss;

namespace {

ScalarMatrix sl2(const char which) {
  ScalarMatrix m(2);
  if (which == 'e') m.at(0, 1) = GaussianRational(1);
  if (which == 'f') m.at(1, 0) = GaussianRational(1);
  if (which == 'h') {
    m.at(0, 0) = GaussianRational(1);
    m.at(1, 1) = GaussianRational(-1);
  }
  return m;
}

AffineElement random_element(const MatrixLieAlgebra& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-2, 2), pick(0, alg.dimension() - 1),
      small(0, 2);
  AffineElement x(alg.matrix_dim());
  for (int t = 0; t < 3; ++t) {
    const ScalarMatrix& b = alg.basis()[pick(rng)];
    GaussianRational c{Rational(coef(rng)), Rational(coef(rng))};
    x = x + AffineElement::loop_monomial(deg(rng), b).scaled(c);
  }
  x.c = GaussianRational(Rational(coef(rng)), Rational(coef(rng)));
  x.d = GaussianRational(Rational(coef(rng)), Rational(coef(rng)));
  return x;
}

}  // namespace

TEST_CASE("realizations have the right dimensions and close under bracket") {
  struct Want {
    Series s;
    int rank;
    int dim;
    int mat;
  };
  // A1: dim 3; A2: dim 8; C3: 21 = n(2n+1); B2: 10; D4: 28.
  for (Want w : std::vector<Want>{{Series::A, 1, 3, 2},
                                  {Series::A, 2, 8, 3},
                                  {Series::B, 2, 10, 5},
                                  {Series::C, 3, 21, 6},
                                  {Series::D, 4, 28, 8}}) {
    MatrixLieAlgebra alg = MatrixLieAlgebra::realize(w.s, w.rank);
    CHECK(alg.dimension() == w.dim);
    CHECK(alg.matrix_dim() == w.mat);
    // Spot-check bracket closure on a few pairs.
    for (size_t i = 0; i < alg.basis().size(); i += 3)
      for (size_t j = 1; j < alg.basis().size(); j += 4) {
        ScalarMatrix br = alg.basis()[i] * alg.basis()[j] - alg.basis()[j] * alg.basis()[i];
        CHECK(alg.contains(br));
      }
    // theta is an involutive automorphism.
    for (size_t i = 0; i < alg.basis().size(); i += 2) {
      const ScalarMatrix& x = alg.basis()[i];
      CHECK(alg.theta(alg.theta(x)) == x);
      CHECK(alg.contains(alg.theta(x)));
    }
  }
}

TEST_CASE("A1 realization matches the transcribed generators") {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(Series::A, 1);
  CHECK(alg.root_vector({1, -1}) == sl2('e'));
  CHECK(alg.root_vector({-1, 1}) == sl2('f'));
  CHECK(alg.cartan_basis()[0] == sl2('h'));
}

TEST_CASE("defining-form invariants of the B/C/D realizations") {
  // so: X^T S + S X = 0 (S antidiagonal); sp: X^T J + J X = 0.
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::B, 3}, {Series::C, 3}, {Series::D, 4}}) {
    MatrixLieAlgebra alg = MatrixLieAlgebra::realize(s, n);
    const int m = alg.matrix_dim();
    ScalarMatrix form(m);
    if (s == Series::C) {
      for (int i = 0; i < m / 2; ++i) {
        form.at(i, m - 1 - i) = GaussianRational(1);
        form.at(m - 1 - i, i) = GaussianRational(-1);
      }
    } else {
      for (int i = 0; i < m; ++i) form.at(i, m - 1 - i) = GaussianRational(1);
    }
    for (const ScalarMatrix& x : alg.basis())
      CHECK((x.transpose() * form + form * x).is_zero());
  }
}

TEST_CASE("affine bracket: d action, centrality of c, central term") {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(Series::A, 1);
  AffineElement d = AffineElement::derivation(2, GaussianRational(1));
  AffineElement tx = AffineElement::loop_monomial(3, sl2('e'));
  // [d, t^n x] = n t^n x
  CHECK(bracket(d, tx) == tx.scaled(GaussianRational(3)));
  AffineElement c = AffineElement::central(2, GaussianRational(1));
  std::mt19937 rng(5);
  for (int k = 0; k < 10; ++k) CHECK(bracket(c, random_element(alg, rng)).is_zero());
  // [t e, t^-1 f] = h + c under the trace form.
  AffineElement te = AffineElement::loop_monomial(1, sl2('e'));
  AffineElement tf = AffineElement::loop_monomial(-1, sl2('f'));
  AffineElement want = AffineElement::loop_monomial(0, sl2('h'));
  want.c = GaussianRational(1);
  CHECK(bracket(te, tf) == want);
}

TEST_CASE("invariant form and cocycle examples") {
  AffineElement te = AffineElement::loop_monomial(1, sl2('e'));
  AffineElement tf = AffineElement::loop_monomial(-1, sl2('f'));
  AffineElement h = AffineElement::loop_monomial(0, sl2('h'));
  CHECK(invariant_form(te, tf) == LaurentScalar(GaussianRational(1)));
  CHECK(invariant_form(te, te).is_zero());
  CHECK(invariant_form(h, h) == LaurentScalar(GaussianRational(2)));
  CHECK(cocycle(te, tf) == GaussianRational(1));
  AffineElement e0 = AffineElement::loop_monomial(0, sl2('e'));
  AffineElement f0 = AffineElement::loop_monomial(0, sl2('f'));
  CHECK(cocycle(e0, f0) == GaussianRational(0));
}

TEST_CASE("cocycle antisymmetry and 2-cocycle identity on random pairs") {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(Series::A, 2);
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    AffineElement a = random_element(alg, rng);
    AffineElement b = random_element(alg, rng);
    a.c = a.d = GaussianRational();
    b.c = b.d = GaussianRational();
    CHECK(cocycle(a, b) == -cocycle(b, a));
  }
}

TEST_CASE("Jacobi identity including central terms on 200 random triples") {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(Series::A, 1);
  std::mt19937 rng(23);
  for (int k = 0; k < 200; ++k) {
    AffineElement x = random_element(alg, rng);
    AffineElement y = random_element(alg, rng);
    AffineElement z = random_element(alg, rng);
    AffineElement jac =
        bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("form invariance and degree additivity on random pairs") {
  MatrixLieAlgebra alg = MatrixLieAlgebra::realize(Series::A, 2);
  std::mt19937 rng(31);
  for (int k = 0; k < 100; ++k) {
    AffineElement x = random_element(alg, rng);
    AffineElement y = random_element(alg, rng);
    AffineElement z = random_element(alg, rng);
    x.c = x.d = y.c = y.d = z.c = z.d = GaussianRational();
    // ([x,y],z) + (y,[x,z]) = 0
    LaurentScalar lhs = invariant_form(bracket(x, y), z) + invariant_form(y, bracket(x, z));
    CHECK(lhs.is_zero());
    // Trace-zero loop parts stay trace-zero under bracket.
    CHECK(bracket(x, y).loop.trace().is_zero());
    // Degree additivity: support of [x,y] within support(x) + support(y).
    auto span_of = [](const AffineElement& a) {
      int lo = 0, hi = 0;
      bool any = false;
      for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
          const LaurentScalar& p = a.loop.at(i, j);
          if (p.is_zero()) continue;
          lo = any ? std::min(lo, p.min_degree()) : p.min_degree();
          hi = any ? std::max(hi, p.max_degree()) : p.max_degree();
          any = true;
        }
      return std::tuple{any, lo, hi};
    };
    auto [ax, lx, hx] = span_of(x);
    auto [ay, ly, hy] = span_of(y);
    auto [ab, lb, hb] = span_of(bracket(x, y));
    if (ax && ay && ab) {
      CHECK(lb >= lx + ly);
      CHECK(hb <= hx + hy);
    }
  }
}

TEST_CASE("chevalley generators match the transcribed affine pairs") {
  MatrixLieAlgebra a1 = MatrixLieAlgebra::realize(Series::A, 1);
  GeneratorSet g1 = chevalley_generators(a1);
  CHECK(g1.e[0] == AffineElement::loop_monomial(1, sl2('f')));
  CHECK(g1.f[0] == AffineElement::loop_monomial(-1, sl2('e')));

  MatrixLieAlgebra a2 = MatrixLieAlgebra::realize(Series::A, 2);
  GeneratorSet g2 = chevalley_generators(a2);
  ScalarMatrix e31(3);
  e31.at(2, 0) = GaussianRational(1);
  ScalarMatrix e13(3);
  e13.at(0, 2) = GaussianRational(1);
  CHECK(g2.e[0] == AffineElement::loop_monomial(1, e31));
  CHECK(g2.f[0] == AffineElement::loop_monomial(-1, e13));
  // h_0 = [e_0, f_0] = diag(-1,0,1) + c.
  ScalarMatrix h0(3);
  h0.at(0, 0) = GaussianRational(-1);
  h0.at(2, 2) = GaussianRational(1);
  AffineElement want = AffineElement::loop_monomial(0, h0);
  want.c = GaussianRational(1);
  CHECK(g2.h[0] == want);
}

TEST_CASE("Serre relations for the required realizations") {
  for (auto [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 1},
                                                         {Series::A, 2},
                                                         {Series::B, 2},
                                                         {Series::C, 3},
                                                         {Series::D, 4}}) {
    SerreReport rep = check_serre(MatrixLieAlgebra::realize(s, n));
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
  }
}

TEST_CASE("explicit Serre powers from the text") {
  // A2(1): (ad e_1)^2 e_2 = 0 but (ad e_1) e_2 != 0.
  MatrixLieAlgebra a2 = MatrixLieAlgebra::realize(Series::A, 2);
  GeneratorSet g = chevalley_generators(a2);
  AffineElement one = bracket(g.e[1], g.e[2]);
  CHECK_FALSE(one.is_zero());
  CHECK(bracket(g.e[1], one).is_zero());
  // A1(1): a_10 = -2 so (ad e_1)^3 e_0 = 0, (ad e_1)^2 e_0 != 0.
  MatrixLieAlgebra a1 = MatrixLieAlgebra::realize(Series::A, 1);
  GeneratorSet g1 = chevalley_generators(a1);
  AffineElement two = bracket(g1.e[1], bracket(g1.e[1], g1.e[0]));
  CHECK_FALSE(two.is_zero());
  CHECK(bracket(g1.e[1], two).is_zero());
}

#include <doctest.h>

#include <random>

#include "scalars.hpp"

using namespace kmss;

namespace {

GaussianRational g(long re_n, long re_d, long im_n = 0, long im_d = 1) {
  return {Rational(re_n) / re_d, Rational(im_n) / im_d};
}

LaurentScalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-3, 3), terms(0, 4);
  LaurentScalar p;
  int k = terms(rng);
  for (int t = 0; t < k; ++t)
    p += LaurentScalar::monomial(deg(rng), {Rational(coef(rng)), Rational(coef(rng))});
  return p;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic is exact") {
  GaussianRational a = g(1, 3, 1, 2);
  GaussianRational b = g(2, 5, -1, 4);
  CHECK(a * b == b * a);
  CHECK((a + b) - b == a);
  CHECK(a / a == GaussianRational(1));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).im == 0);
  CHECK_THROWS_AS(a / GaussianRational(0), Error);
}

TEST_CASE("gaussian rational rendering") {
  CHECK(g(1, 2, 3, 4).str() == "1/2 + 3/4 i");
  CHECK(g(0, 1, 1, 1).str() == "i");
  CHECK(g(-2, 1).str() == "-2");
  CHECK(GaussianRational().str() == "0");
}

TEST_CASE("laurent product examples") {
  LaurentScalar t = LaurentScalar::t(1);
  LaurentScalar tinv = LaurentScalar::t(-1);
  // (t + t^-1)(t - t^-1) = t^2 - t^-2
  CHECK((t + tinv) * (t - tinv) == LaurentScalar::t(2) - LaurentScalar::t(-2));
  LaurentScalar p = random_laurent(*[] {
    static std::mt19937 rng(7);
    return &rng;
  }());
  CHECK(p * LaurentScalar(1) == p);
  // (2t^3)(3t^-3) = 6
  CHECK(LaurentScalar::monomial(3, GaussianRational(2)) *
            LaurentScalar::monomial(-3, GaussianRational(3)) ==
        LaurentScalar(GaussianRational(6)));
}

TEST_CASE("derivative and residue") {
  CHECK(LaurentScalar::t(2).derivative() == LaurentScalar::monomial(1, GaussianRational(2)));
  CHECK(LaurentScalar(GaussianRational(5)).derivative().is_zero());
  CHECK(LaurentScalar::t(-1).derivative() == LaurentScalar::monomial(-2, GaussianRational(-1)));

  LaurentScalar p = LaurentScalar::monomial(-1, GaussianRational(3)) +
                    LaurentScalar::monomial(1, GaussianRational(2));
  CHECK(p.residue() == GaussianRational(3));
  CHECK(LaurentScalar(GaussianRational(7)).residue() == GaussianRational(0));
}

TEST_CASE("substitute_sign and conjugate_bar examples") {
  CHECK(LaurentScalar::t(3).substitute_sign(-1) ==
        LaurentScalar::monomial(3, GaussianRational(-1)));
  LaurentScalar even = LaurentScalar::t(2) + LaurentScalar::t(-2);
  CHECK(even.substitute_sign(-1) == even);
  LaurentScalar p = LaurentScalar::monomial(1, GaussianRational::i());
  CHECK(p.conjugate_bar(true) ==
        LaurentScalar::monomial(-1, -GaussianRational::i()));
  CHECK(LaurentScalar(GaussianRational(3)).conjugate_bar(true) ==
        LaurentScalar(GaussianRational(3)));
  LaurentScalar q = LaurentScalar::monomial(2, {Rational(1), Rational(1)});
  CHECK(q.conjugate_bar(false) == LaurentScalar::monomial(2, {Rational(1), Rational(-1)}));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentScalar a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("structural properties") {
  std::mt19937 rng(1);
  for (int iter = 0; iter < 100; ++iter) {
    LaurentScalar p = random_laurent(rng);
    CHECK(p.derivative().residue() == GaussianRational(0));
    CHECK(p.substitute_sign(-1).substitute_sign(-1) == p);
    CHECK(p.conjugate_bar(true).conjugate_bar(true) == p);
  }
}

TEST_CASE("unit division") {
  LaurentScalar u = LaurentScalar::monomial(2, {Rational(3), Rational(0)});
  LaurentScalar p = LaurentScalar::t(3) + LaurentScalar::t(2);
  LaurentScalar q = p.divided_by_unit(u);
  CHECK(q * u == p);
  CHECK_THROWS_AS(p.divided_by_unit(p), Error);
}

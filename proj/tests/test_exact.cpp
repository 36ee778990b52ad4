#include <doctest.h>

#include <random>

#include "lrc/error.hpp"
#include "lrc/exact/poly.hpp"

using namespace lrc;

namespace {
const Ring* Q3() { return Ring::get(NumberField::rationals(), 3); }
const Ring* G2r() { return Ring::get(NumberField::golden(), 2); }

MultiPoly random_poly(std::mt19937& rng, const Ring* r) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), n(0, 4);
  MultiPoly f(r);
  int terms = n(rng);
  for (int k = 0; k < terms; ++k) {
    MultiPoly m = MultiPoly::constant(r, c(rng));
    for (int v = 0; v < r->nvars(); ++v) m *= MultiPoly::variable(r, v).pow(unsigned(e(rng)) * (v < 3));
    f += m;
  }
  return f;
}
}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("golden field arithmetic") {
    const auto* F = NumberField::golden();
    Scalar rho = Scalar::generator(F);
    CHECK(rho * rho == rho + Scalar::from_int(1));
    CHECK((rho * rho).to_string() == "rho + 1");
    CHECK(rho.sign() > 0);
    CHECK((rho - Scalar(Rational(1618, 1000))).sign() > 0);
    CHECK((rho - Scalar(Rational(1619, 1000))).sign() < 0);
    CHECK((rho - Scalar::from_int(1)).sign() > 0);
    CHECK(rho.inverse() == rho - Scalar::from_int(1));
    CHECK((rho / rho).is_one());
    CHECK_THROWS_AS(Scalar(F).inverse(), Error);
  }

  TEST_CASE("user supplied generator") {
    const auto* F = NumberField::intern({"s", {-2, 0, 1}, Rational(1), Rational(2)});
    Scalar s = Scalar::generator(F);
    CHECK(s * s == Scalar::from_int(2));
    CHECK((s - Scalar(Rational(141, 100))).sign() > 0);
    CHECK((s - Scalar(Rational(142, 100))).sign() < 0);
    CHECK_THROWS_AS((s + Scalar::generator(NumberField::golden())), Error);
    CHECK_THROWS_AS(NumberField::intern({"bad", {-2, 0, 1}, Rational(3), Rational(4)}), Error);
  }

  TEST_CASE("polynomial basics") {
    const Ring* r = Q3();
    auto a1 = MultiPoly::alpha(r, 1), a2 = MultiPoly::alpha(r, 2);
    auto sq = (a1 + a2) * (a1 + a2);
    CHECK(sq == MultiPoly::parse(r, "a1^2 + 2*a1*a2 + a2^2"));
    CHECK(sq.exact_div(a1 + a2) == a1 + a2);
    CHECK_THROWS_AS(sq.exact_div(a1 - a2), Error);
    CHECK_THROWS_AS(sq.exact_div_linear(1), Error);
    CHECK((a1 * a2).exact_div_linear(2) == a1);
    CHECK(sq.alpha_degree() == 2);
    CHECK(sq.is_alpha_homogeneous(2));
    CHECK(MultiPoly(r).is_zero());
    CHECK(MultiPoly::constant(r, 5).as_scalar() == Scalar::from_int(5));
    CHECK_THROWS_AS(a1.as_scalar(), Error);
  }

  TEST_CASE("t substitution and positivity") {
    const Ring* r = Q3();
    auto f = MultiPoly::parse(r, "t^2 + 2*t + 1");
    CHECK(f.substitute_t(Scalar::from_int(0)).is_one());
    CHECK(substitute_t(f, Scalar::from_int(1)) == MultiPoly::constant(r, 4));
    CHECK(poly_is_coefficientwise_nonneg(f));
    CHECK_FALSE(poly_is_coefficientwise_nonneg(MultiPoly::parse(r, "t^2 - t")));
    const Ring* g = G2r();
    CHECK(poly_is_coefficientwise_nonneg(MultiPoly::parse(g, "(rho - 1)*t + rho")));
    CHECK_FALSE(poly_is_coefficientwise_nonneg(MultiPoly::parse(g, "(1 - rho)*t")));
  }

  TEST_CASE("printing round trips") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
      auto f = random_poly(rng, Q3());
      CHECK(MultiPoly::parse(Q3(), f.to_string()) == f);
    }
    auto h = MultiPoly::parse(G2r(), "(2*rho - 1)*a1*t + rho^2");
    CHECK(MultiPoly::parse(G2r(), h.to_string()) == h);
    CHECK_THROWS_AS(MultiPoly::parse(Q3(), "a1 +* 2"), Error);
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(3);
    for (int k = 0; k < 150; ++k) {
      auto f = random_poly(rng, Q3()), g = random_poly(rng, Q3()), h = random_poly(rng, Q3());
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * g == g * f);
      CHECK((f + g) - g == f);
      if (!g.is_zero()) CHECK((f * g).exact_div(g) == f);
    }
  }
}

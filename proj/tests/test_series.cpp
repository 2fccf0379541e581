#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tropsvd/laurent_series.hpp"

using namespace tropsvd;

namespace {

LaurentSeries term(long exponent, Complex c = Complex(1, 0), int k = 1) {
  return LaurentSeries::fromTerms(k, exponent, {c});
}

}  // namespace

TEST_CASE("ord is the leading exponent over the ramification") {
  CHECK(ord(term(2)) == Rational(2));

  // 3t^-1 + t
  const LaurentSeries s =
      LaurentSeries::fromTerms(1, -1, {Complex(3, 0), Complex(0, 0), Complex(1, 0)});
  CHECK(ord(s) == Rational(-1));

  // t^(1/2) + t at ramification 2
  const LaurentSeries puiseux =
      LaurentSeries::fromTerms(2, 1, {Complex(1, 0), Complex(1, 0)});
  CHECK(ord(puiseux) == Rational(1, 2));

  CHECK_THROWS_AS(ord(LaurentSeries::zero()), OrdOfZero);
}

TEST_CASE("normalization strips zero leads and rejects empty windows") {
  const LaurentSeries s =
      LaurentSeries::fromTerms(1, 0, {Complex(0, 0), Complex(2, 0)});
  CHECK(s.leadExponent() == 1);
  CHECK(s.coefficients().front() == Complex(2, 0));

  CHECK(LaurentSeries::fromTerms(1, 5, {Complex(0, 0)}).isZero());
  CHECK(LaurentSeries::fromTerms(1, 0, {}).isZero());
}

TEST_CASE("add aligns exponents and renormalizes cancellation") {
  // (1 + t) + (-1 + t) = 2t
  const LaurentSeries a = LaurentSeries::fromTerms(1, 0, {Complex(1, 0), Complex(1, 0)});
  const LaurentSeries b = LaurentSeries::fromTerms(1, 0, {Complex(-1, 0), Complex(1, 0)});
  const LaurentSeries sum = add(a, b);
  CHECK(sum.leadExponent() == 1);
  CHECK(sum.coefficients().front() == Complex(2, 0));

  // t^-1 + t keeps both terms
  const LaurentSeries c = add(term(-1), term(1));
  CHECK(c.leadExponent() == -1);
  REQUIRE(c.precision() >= 3);
  CHECK(c.coefficients()[0] == Complex(1, 0));
  CHECK(c.coefficients()[1] == Complex(0, 0));
  CHECK(c.coefficients()[2] == Complex(1, 0));
}

TEST_CASE("full cancellation is precision exhaustion, not zero") {
  const LaurentSeries a = LaurentSeries::fromTerms(
      1, 0, {Complex(1, 0), Complex(1, 0), Complex(1, 0)}, 3);
  CHECK_THROWS_AS(add(a, negate(a)), PrecisionExhausted);
}

TEST_CASE("add window is the overlap of the known windows") {
  const LaurentSeries a = LaurentSeries::fromTerms(1, 0, {Complex(1, 0)}, 5);
  const LaurentSeries b = LaurentSeries::fromTerms(1, 2, {Complex(1, 0)}, 40);
  const LaurentSeries sum = add(a, b);
  CHECK(sum.leadExponent() == 0);
  CHECK(sum.windowEnd() == 5);  // a is unknown from t^5 on
}

TEST_CASE("mul shifts leads and truncates to the shorter window") {
  const LaurentSeries unit = mul(term(1), term(-1));
  CHECK(unit.leadExponent() == 0);
  CHECK(unit.coefficients().front() == Complex(1, 0));

  // (1+t)(1-t) = 1 - t^2
  const LaurentSeries p = LaurentSeries::fromTerms(1, 0, {Complex(1, 0), Complex(1, 0)});
  const LaurentSeries q = LaurentSeries::fromTerms(1, 0, {Complex(1, 0), Complex(-1, 0)});
  const LaurentSeries prod = mul(p, q);
  CHECK(prod.leadExponent() == 0);
  CHECK(prod.coefficients()[0] == Complex(1, 0));
  CHECK(prod.coefficients()[1] == Complex(0, 0));
  CHECK(prod.coefficients()[2] == Complex(-1, 0));

  CHECK(mul(LaurentSeries::zero(), p).isZero());
}

TEST_CASE("ord is additive over products") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries a = oracles::randomLaurentPolynomial(rng);
    const LaurentSeries b = oracles::randomLaurentPolynomial(rng);
    CHECK(ord(mul(a, b)) == ord(a) + ord(b));
  }
}

TEST_CASE("ord of a sum is bounded by the minimum, with equality off-ties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries a = oracles::randomLaurentPolynomial(rng);
    const LaurentSeries b = oracles::randomLaurentPolynomial(rng);
    const Rational low = std::min(ord(a), ord(b));
    try {
      const LaurentSeries sum = add(a, b);
      if (!sum.isZero()) {
        CHECK(ord(sum) >= low);
        if (ord(a) != ord(b)) CHECK(ord(sum) == low);
      }
    } catch (const PrecisionExhausted&) {
      // exact cancellation of everything known; no ord to compare
    }
  }
}

TEST_CASE("inverse inverts up to truncation") {
  const LaurentSeries invT = inverse(term(1));
  CHECK(invT.leadExponent() == -1);
  CHECK(invT.coefficients().front() == Complex(1, 0));

  // 1/(1 - t) = 1 + t + t^2 + ...
  const LaurentSeries geom =
      inverse(LaurentSeries::fromTerms(1, 0, {Complex(1, 0), Complex(-1, 0)}));
  for (const Complex& c : geom.coefficients()) CHECK(c == Complex(1, 0));

  // 1/(2 + t) = 1/2 - t/4 + t^2/8 - ...
  const LaurentSeries s = LaurentSeries::fromTerms(1, 0, {Complex(2, 0), Complex(1, 0)});
  const LaurentSeries inv = inverse(s);
  CHECK(inv.coefficients()[0].real() == doctest::Approx(0.5));
  CHECK(inv.coefficients()[1].real() == doctest::Approx(-0.25));
  CHECK(inv.coefficients()[2].real() == doctest::Approx(0.125));
  CHECK(maxCoeffDifference(mul(s, inv), LaurentSeries::one()) < 1e-12);

  CHECK_THROWS_AS(inverse(LaurentSeries::zero()), DivisionByZeroSeries);
}

TEST_CASE("inverse round-trip over random series") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries s = oracles::randomLaurentPolynomial(rng);
    CHECK(maxCoeffDifference(mul(s, inverse(s)), LaurentSeries::one()) <=
          1e-12);
  }
}

TEST_CASE("unit part factors out the valuation") {
  const LaurentSeries u = unitPart(term(2, Complex(3, 0)));
  CHECK(u.leadExponent() == 0);
  CHECK(u.coefficients().front() == Complex(3, 0));

  const LaurentSeries s =
      LaurentSeries::fromTerms(1, -1, {Complex(1, 0), Complex(1, 0)});
  const LaurentSeries unit = unitPart(s);
  CHECK(unit.leadExponent() == 0);
  CHECK(unit.coefficients()[1] == Complex(1, 0));

  CHECK_THROWS_AS(unitPart(LaurentSeries::zero()), DivisionByZeroSeries);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries r = oracles::randomLaurentPolynomial(rng);
    CHECK(shiftExponent(unitPart(r), r.leadExponent()) == r);
  }
}

TEST_CASE("evaluate sums the retained terms") {
  CHECK(evaluate(term(2), 0.1).real() == doctest::Approx(0.01));
  const LaurentSeries onePlusT =
      LaurentSeries::fromTerms(1, 0, {Complex(1, 0), Complex(1, 0)});
  CHECK(evaluate(onePlusT, 0.5).real() == doctest::Approx(1.5));
  CHECK(evaluate(term(-1), 0.01).real() == doctest::Approx(100.0));
  CHECK(evaluate(LaurentSeries::zero(), 0.3) == Complex(0, 0));
}

TEST_CASE("evaluation is a ring homomorphism within tolerance") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ts(1e-3, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries a = oracles::randomLaurentPolynomial(rng);
    const LaurentSeries b = oracles::randomLaurentPolynomial(rng);
    const double t = ts(rng);
    try {
      const Complex sum = evaluate(add(a, b), t);
      const Complex direct = evaluate(a, t) + evaluate(b, t);
      CHECK(std::abs(sum - direct) <=
            1e-10 * std::max(1.0, std::abs(direct)));
    } catch (const PrecisionExhausted&) {
    }
    // These polynomials are short enough that the product window keeps every
    // term, so the comparison is a pure floating-point one.
    const Complex prod = evaluate(mul(a, b), t);
    const Complex direct = evaluate(a, t) * evaluate(b, t);
    CHECK(std::abs(prod - direct) <=
          1e-10 * std::max({std::abs(prod), std::abs(direct), 1e-30}));
  }
}

TEST_CASE("ramification lifting preserves exponents") {
  const LaurentSeries half = LaurentSeries::fromTerms(2, 1, {Complex(1, 0)});
  const LaurentSeries whole = term(1);
  const LaurentSeries sum = add(half, whole);
  CHECK(sum.ramification() == 2);
  CHECK(sum.leadExponent() == 1);  // t^(1/2)
  CHECK(ord(sum) == Rational(1, 2));
  CHECK(sum.coefficients()[0] == Complex(1, 0));  // t^(1/2)
  CHECK(sum.coefficients()[1] == Complex(1, 0));  // t = t^(2/2)

  CHECK(ord(mul(half, half)) == Rational(1));
}

TEST_CASE("zero series interacts safely") {
  const LaurentSeries z = LaurentSeries::zero();
  const LaurentSeries s = term(3, Complex(2, 1));
  CHECK(add(z, s) == s);
  CHECK(add(s, z) == s);
  CHECK(mul(z, s).isZero());
  CHECK(scale(s, Complex(0, 0)).isZero());
}

#include "doctest.h"
#include "oracles.hpp"

#include "nvtoric/novikov.hpp"

#include <numbers>

using namespace nvt;

namespace {
NovikovScalar P(const std::string& s, Rational tr = kDefaultTruncation) { return NovikovScalar::parse(s, tr); }
bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("valuation conventions") {
  CHECK(valuation(P("T^(1/2)")) == ExtRational(Rational(1, 2)));
  CHECK(valuation(P("T^(1/2)"), Convention::Q) == ExtRational(Rational(-1, 2)));
  CHECK(valuation(NovikovScalar::zero()).is_pos_inf());
  CHECK(valuation(NovikovScalar::zero(), Convention::Q).is_neg_inf());
  CHECK(P("1 + T").in_lambda0());
  CHECK_FALSE(P("1 + T").in_lambda_plus());
  CHECK(P("T^(1/3)").in_lambda_plus());
  CHECK_FALSE(P("T^(-1/3)").in_lambda0());
}

TEST_CASE("arith examples") {
  auto a = P("1 + T") * P("1 - T");
  CHECK(a.terms().size() == 2);
  CHECK(close(a.coefficient(0), 1));
  CHECK(close(a.coefficient(2), -1));
  CHECK(a.coefficient(1) == Complex(0));

  auto b = P("T^(1/3)") * P("T^(2/3)");
  REQUIRE(b.terms().size() == 1);
  CHECK(b.val() == 1);

  auto c = P("T^(1/2)") + P("-T^(1/2) + T");
  REQUIRE(c.terms().size() == 1);
  CHECK(c.val() == 1);
}

TEST_CASE("invert examples") {
  auto g = P("1 - T").inverse();
  CHECK(g.terms().size() == 5);  // 1 + T + ... + T^4 below E_max = 5
  for (int k = 0; k < 5; ++k) CHECK(close(g.coefficient(k), 1));
  auto h = P("T^(1/2)").inverse();
  REQUIRE(h.terms().size() == 1);
  CHECK(h.val() == Rational(-1, 2));
  auto half = P("2").inverse();
  CHECK(close(half.leading_coefficient(), 0.5));
  CHECK_THROWS_AS(NovikovScalar::zero().inverse(), ValuationError);
}

TEST_CASE("exp and log examples") {
  auto e = P("T^(1/4)").exp();
  double f = 1;
  for (int k = 0; k < 20; ++k) {
    if (k > 0) f *= k;
    CHECK(close(e.coefficient(Rational(k, 4)), 1.0 / f));
  }
  CHECK(P("1").log().is_zero());
  auto l = P("-1").log();
  CHECK(close(l.leading_coefficient(), Complex(0, std::numbers::pi)));
  CHECK_THROWS_AS(P("T^(-1/4)").exp(), ValuationError);
  CHECK_THROWS_AS(P("T").log(), ValuationError);
  try {
    (void)P("T^(-1/20)").exp();
  } catch (const ValuationError& err) {
    CHECK(err.valuation == ExtRational(Rational(-1, 20)));
  }
}

TEST_CASE("text round trip") {
  auto x = P("(1+2i)*T^(-1/3) - 0.25 + 3*T^(7/6) + i*T^(2)");
  auto y = P(x.str());
  CHECK(NovikovScalar::relative_distance(x, y, x.truncation()) < 1e-11);
  auto z = P(x.str(true));
  CHECK(z.truncation() == x.truncation());
  CHECK(P("T").val() == 1);
  CHECK(P("0").is_zero());
  CHECK_THROWS(P("1 + * T"));
  CHECK(P("1 + O(T^(3/2))").truncation() == Rational(3, 2));
}

TEST_CASE("product and inverse agree with dense oracle") {
  std::mt19937_64 rng(11);
  const int D = 6;
  for (int it = 0; it < 200; ++it) {
    auto x = oracle::random_scalar(rng, D, -6, 18, 5, Rational(4));
    auto y = oracle::random_scalar(rng, D, -6, 18, 5, Rational(4));
    if (x.is_zero() || y.is_zero()) continue;
    auto xy = x * y;
    auto dx = oracle::Dense::from(x, D, -6, 40), dy = oracle::Dense::from(y, D, -6, 40);
    auto m = oracle::mul(dx, dy, (xy.truncation() * Rational(D)).numerator());
    for (auto& [k, v] : m) CHECK(std::abs(xy.coefficient(Rational(k, D)) - v) < 1e-10);
    // truncation never exceeds what the inputs determine
    CHECK(xy.truncation() <= x.truncation() + y.val());
    CHECK(xy.truncation() <= y.truncation() + x.val());

    auto xi = x.inverse();
    std::int64_t lo = (x.val() * Rational(D)).numerator();
    auto dxi = oracle::Dense::from(x, D, lo, 60);
    auto inv = oracle::inverse(dxi, (xi.truncation() * Rational(D)).numerator());
    double scale = 0;
    for (auto& [k, v] : inv) scale = std::max(scale, std::abs(v));
    for (auto& [k, v] : inv) CHECK(std::abs(xi.coefficient(Rational(k, D)) - v) <= 1e-9 * scale);
  }
}

TEST_CASE("exp agrees with recurrence oracle") {
  std::mt19937_64 rng(12);
  const int D = 4;
  for (int it = 0; it < 100; ++it) {
    auto x = oracle::random_scalar(rng, D, 0, 12, 4, Rational(5));
    auto e = x.exp();
    auto dx = oracle::Dense::from(x, D, 0, 20);
    auto f = oracle::exp_series(dx, 20);
    double scale = 0;
    for (auto v : f) scale = std::max(scale, std::abs(v));
    for (int k = 0; k < 20; ++k) CHECK(std::abs(e.coefficient(Rational(k, D)) - f[static_cast<std::size_t>(k)]) <= 1e-10 * scale);
  }
}

TEST_CASE("ultrametric and multiplicativity (1000 random cases)") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 1000; ++it) {
    auto x = oracle::random_scalar(rng, 6, -12, 24, 4, Rational(6));
    auto y = oracle::random_scalar(rng, 6, -12, 24, 4, Rational(6));
    auto s = x + y;
    CHECK(s.valuation() >= std::min(x.valuation(), y.valuation()));
    if (x.valuation() != y.valuation()) CHECK(s.valuation() == std::min(x.valuation(), y.valuation()));
    if (!x.is_zero() && !y.is_zero()) CHECK((x * y).val() == x.val() + y.val());
  }
}

TEST_CASE("field axioms up to truncation (500 random cases)") {
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int it = 0; it < 500; ++it) {
    auto x = oracle::random_scalar(rng, 6, 0, 30, 5, Rational(5));
    if (x.is_zero()) continue;
    auto r = x * x.inverse() - NovikovScalar(1.0);
    CHECK(r.valuation_above(1e-10) >= ExtRational(5));
    ++checked;
  }
  CHECK(checked > 450);
}

TEST_CASE("exp is a monoid morphism on Lambda_+") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    auto x = oracle::random_scalar(rng, 6, 1, 24, 4, Rational(5));
    auto y = oracle::random_scalar(rng, 6, 1, 24, 4, Rational(5));
    auto d = (x + y).exp() - x.exp() * y.exp();
    CHECK(d.valuation_above(1e-10) >= ExtRational(5));
  }
}

TEST_CASE("exp and log are inverse on units") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    auto x = oracle::random_scalar(rng, 6, 1, 24, 4, Rational(5)) + NovikovScalar(Complex(0.3, 1.1));
    auto d = x.log().exp() - x;
    CHECK(d.valuation_above(1e-10) >= ExtRational(5));
    auto z = oracle::random_scalar(rng, 6, 1, 24, 4, Rational(5));
    CHECK((z.exp().log() - z).valuation_above(1e-8) >= ExtRational(5));
  }
}

TEST_CASE("truncation coherence") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto gen = [&](Rational tr) {
      std::mt19937_64 r2(static_cast<std::uint64_t>(1000 + it));
      auto a = oracle::random_scalar(r2, 6, 1, 48, 6, tr) + NovikovScalar(Complex(1.0), tr);
      auto b = oracle::random_scalar(r2, 6, 0, 48, 6, tr);
      if (a.is_zero()) return NovikovScalar::zero(tr);
      return (a * b + a.inverse() * b.exp()).truncated(Rational(4));
    };
    auto hi = gen(Rational(8)), lo = gen(Rational(4));
    CHECK(NovikovScalar::relative_distance(hi, lo, Rational(4)) < 1e-9);
  }
}

TEST_CASE("pow and sqrt") {
  auto x = P("4*T^(1/2) + T");
  auto r = x.pow(Rational(1, 2));
  CHECK(r.val() == Rational(1, 4));
  CHECK(((r * r) - x).valuation_bound() >= Rational(5));
  CHECK(((x.pow(3)) - x * x * x).valuation_bound() >= x.pow(3).truncation());
}

TEST_CASE("exponent monoid") {
  ExponentMonoid m({Rational(1, 6), Rational(1, 2)});
  CHECK(m.group_step() == Rational(1, 6));
  CHECK(m.in_group(Rational(-5, 6)));
  CHECK_FALSE(m.in_group(Rational(1, 7)));
  CHECK(m.in_monoid(Rational(7, 6)));
  CHECK_FALSE(m.in_monoid(Rational(-1, 6)));
  ExponentMonoid m2({Rational(2, 3), Rational(1)});
  CHECK_FALSE(m2.in_monoid(Rational(1, 3)));
  CHECK(m2.in_monoid(Rational(5, 3)));
  CHECK_THROWS(ExponentMonoid({Rational(-1)}));
}

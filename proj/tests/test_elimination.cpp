#include "doctest.h"

#include "nvtoric/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace nvt;

namespace {

const Rational kTr(8);

NovikovScalar S(Complex c, Rational e = Rational(0)) { return NovikovScalar::monomial(c, e, kTr); }

bool has_root(const std::vector<Complex>& rs, Complex z, double tol) {
  return std::any_of(rs.begin(), rs.end(), [&](Complex r) { return std::abs(r - z) < tol; });
}

}  // namespace

TEST_CASE("complex_roots: product of linear factors") {
  std::vector<Complex> want{1.0, 2.0, Complex(0, -3)};
  UPoly<Complex> p({1.0});
  for (auto r : want) p = p * UPoly<Complex>({-r, 1.0});
  auto got = complex_roots(p);
  REQUIRE(got.size() == 3);
  for (auto r : want) CHECK(has_root(got, r, 1e-12));
  // zero roots are dropped
  UPoly<Complex> q({0.0, 0.0, -1.0, 0.0, 1.0});  // x^2 (x^2 - 1)
  auto z = complex_roots(q);
  CHECK(z.size() == 2);
  CHECK(has_root(z, 1.0, 1e-12));
  CHECK(has_root(z, -1.0, 1e-12));
}

TEST_CASE("property: complex_roots recovers random roots") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Complex> want;
    UPoly<Complex> p({1.0});
    for (int k = 0; k < 6; ++k) {
      Complex r(d(rng), d(rng));
      if (std::abs(r) < 0.2) r += 0.5;
      want.push_back(r);
      p = p * UPoly<Complex>({-r, 1.0});
    }
    auto got = complex_roots(p);
    REQUIRE(got.size() == 6);
    // residual check independent of root ordering
    for (auto r : got) CHECK(std::abs(p.eval(r)) < 1e-9);
  }
}

TEST_CASE("cluster_roots groups a double root") {
  auto cl = cluster_roots({Complex(1.0, 0.0), Complex(1.0 + 1e-7, 0.0), Complex(-2.0, 0.0)}, 1e-4);
  REQUIRE(cl.size() == 2);
  int m = std::max(cl[0].multiplicity, cl[1].multiplicity);
  CHECK(m == 2);
}

TEST_CASE("resultant_x of x - y and x + y - 2 vanishes exactly at y = 1") {
  // p = x - y, q = x + y - 2; Res_x = q(y) - ... = 2y - 2 up to sign
  BPoly<Complex> p{UPoly<Complex>({0.0, -1.0}), UPoly<Complex>({1.0})};
  BPoly<Complex> q{UPoly<Complex>({-2.0, 1.0}), UPoly<Complex>({1.0})};
  auto R = resultant_x(p, q);
  REQUIRE(R.degree() == 1);
  CHECK(std::abs(R.eval(1.0)) < 1e-14);
  CHECK(std::abs(std::abs(R.c[1]) - 2.0) < 1e-14);
}

TEST_CASE("newton_polygon slopes give root valuations") {
  // (x - 1)(x - T)(x - T^{1/2}) has root valuations 0, 1/2, 1
  UPoly<NovikovScalar> p({S(1.0)});
  for (auto e : {Rational(0), Rational(1), Rational(1, 2)}) p = p * UPoly<NovikovScalar>({-S(1.0, e), S(1.0)});
  auto edges = newton_polygon(p, 1e-12);
  REQUIRE(edges.size() == 3);
  std::vector<Rational> vs;
  for (const auto& e : edges) {
    CHECK(e.count == 1);
    vs.push_back(e.root_valuation);
  }
  std::sort(vs.begin(), vs.end());
  CHECK(vs == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
}

TEST_CASE("lambda_roots: Puiseux branches of (x - 1)^2 - T") {
  UPoly<NovikovScalar> p({S(1.0) - S(1.0, Rational(1)), S(-2.0), S(1.0)});
  LambdaRootOptions o;
  o.target = Rational(6);
  auto rs = lambda_roots(p, Rational(0), o);
  REQUIRE(rs.size() == 2);
  // 1 +- T^{1/2} exactly
  int plus = 0, minus = 0;
  for (const auto& r : rs) {
    NovikovScalar d = r - S(1.0);
    CHECK(d.val() == Rational(1, 2));
    if (std::abs(d.leading_coefficient() - 1.0) < 1e-10) ++plus;
    if (std::abs(d.leading_coefficient() + 1.0) < 1e-10) ++minus;
    CHECK(p.eval(r).valuation_above(1e-10).finite() == false);
  }
  CHECK(plus == 1);
  CHECK(minus == 1);
}

TEST_CASE("lambda_roots only returns the requested valuation") {
  UPoly<NovikovScalar> p({S(1.0, Rational(1)), S(-1.0) - S(1.0, Rational(1)), S(1.0)});  // (x - 1)(x - T)
  LambdaRootOptions o;
  auto r0 = lambda_roots(p, Rational(0), o);
  REQUIRE(r0.size() == 1);
  CHECK(NovikovScalar::relative_distance(r0[0], S(1.0), Rational(5)) < 1e-10);
  auto r1 = lambda_roots(p, Rational(1), o);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].val() == Rational(1));
}

TEST_CASE("solve_complex_system: CP^2 leading system") {
  // y1 - 1/(y1 y2) = 0, y2 - 1/(y1 y2) = 0
  CLaurent f1{{IVec{1, 0}, 1.0}, {IVec{-1, -1}, -1.0}}, f2{{IVec{0, 1}, 1.0}, {IVec{-1, -1}, -1.0}};
  auto s = solve_complex_system({f1, f2});
  CHECK_FALSE(s.degenerate_locus);
  REQUIRE(s.roots.size() == 3);
  for (const auto& r : s.roots) {
    CHECK(std::abs(r.y[0] - r.y[1]) < 1e-10);
    CHECK(std::abs(std::pow(r.y[0], 3) - 1.0) < 1e-10);
    CHECK(r.cond < 10);
  }
}

TEST_CASE("solve_complex_system flags a curve of roots") {
  // (y2 + 1) y1 and (y2 + 1)(y1 - 2): the line y2 = -1 is a common component
  CLaurent f1{{IVec{1, 1}, 1.0}, {IVec{1, 0}, 1.0}};
  CLaurent f2{{IVec{1, 1}, 1.0}, {IVec{1, 0}, 1.0}, {IVec{0, 1}, -2.0}, {IVec{0, 0}, -2.0}};
  auto s = solve_complex_system({f1, f2});
  CHECK(s.degenerate_locus);
  CHECK_FALSE(s.diagnostic.empty());
}

TEST_CASE("solve_lambda_system: a perturbed CP^1 x CP^1 chart") {
  // y1 - y1^{-1}(1 + T) = 0, y2 - y2^{-1} = 0
  LaurentNovikov f1(2), f2(2);
  f1.add_term({1, 0}, S(1.0));
  f1.add_term({-1, 0}, -(S(1.0) + S(1.0, Rational(1))));
  f2.add_term({0, 1}, S(1.0));
  f2.add_term({0, -1}, S(-1.0));
  LambdaSystemOptions o;
  o.target = Rational(6);
  auto sols = solve_lambda_system({f1, f2}, o);
  REQUIRE(sols.size() == 4);
  for (const auto& y : sols) {
    CHECK(f1.evaluate(y).valuation_above(1e-9).finite() == false);
    CHECK(f2.evaluate(y).valuation_above(1e-9).finite() == false);
    // y1^2 = 1 + T
    NovikovScalar sq = y[0] * y[0];
    CHECK(NovikovScalar::relative_distance(sq, S(1.0) + S(1.0, Rational(1)), Rational(5)) < 1e-10);
  }
}

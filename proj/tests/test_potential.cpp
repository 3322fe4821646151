#include "doctest.h"
#include "oracles.hpp"

#include "nvtoric/potential.hpp"

#include <numbers>
#include <random>

using namespace nvt;

namespace {

const Rational kTr(6);

NovikovScalar Tpow(const Rational& e, Complex c = 1.0, Rational tr = kTr) { return NovikovScalar::monomial(c, e, tr); }

// hand-built Laurent polynomial from (exponent, coefficient) pairs
LaurentNovikov poly(int n, std::vector<std::pair<IVec, NovikovScalar>> ts) {
  LaurentNovikov f(n);
  for (auto& [k, c] : ts) f.add_term(k, c);
  return f;
}

bool same(const LaurentNovikov& a, const LaurentNovikov& b, double tol = 1e-12, Rational below = Rational(5)) {
  return laurent_distance(a, b, below) <= tol;
}

bool same_terms(const LaurentNovikov& a, const LaurentNovikov& b) {
  if (a.support() != b.support()) return false;
  for (const auto& [k, c] : a.terms()) {
    const auto& d = b.terms().at(k);
    if (c.terms().size() != d.terms().size()) return false;
    for (std::size_t i = 0; i < c.terms().size(); ++i)
      if (c.terms()[i].exp != d.terms()[i].exp || c.terms()[i].coef != d.terms()[i].coef) return false;
  }
  return true;
}

LaurentNovikov random_laurent(std::mt19937_64& rng, int n, int nterms) {
  std::uniform_int_distribution<int> e(-3, 3);
  LaurentNovikov f(n);
  for (int t = 0; t < nterms; ++t) {
    IVec k(static_cast<std::size_t>(n));
    for (auto& x : k) x = e(rng);
    f.add_term(k, oracle::random_scalar(rng, 6, 0, 12, 3, kTr));
  }
  return f;
}

}  // namespace

TEST_CASE("build_fano: CP^1 interval") {
  auto F = build_fano(builtin::cp(1), {}, kTr);
  auto G = poly(1, {{{1}, Tpow(0)}, {{-1}, Tpow(1)}});
  CHECK(same(F, G));
  CHECK(F.size() == 2);
  CHECK(kushnirenko_bound(F) == 2);
}

TEST_CASE("build_fano: F2(alpha) with nef correction") {
  for (auto a : {Rational(1, 4), Rational(1, 8), Rational(1, 3)}) {
    auto F = examples::f2_potential(a, kTr);
    // y1 + y2 + T^2 y1^-1 y2^-2 + T^{1-a}(1 + T^a) y2^-1
    auto G = poly(2, {{{1, 0}, Tpow(0)},
                      {{0, 1}, Tpow(0)},
                      {{-1, -2}, Tpow(2)},
                      {{0, -1}, Tpow(Rational(1) - a) + Tpow(1)}});
    CAPTURE(to_string(a));
    CHECK(same(F, G));
    CHECK(F.size() == 4);
  }
  BulkParameter bad;
  bad.corrections.push_back({Rational(0), {{IVec{0, 0, 1, 0}, Complex(1.0, 0.0)}}});
  CHECK_THROWS_AS(build_fano(builtin::hirzebruch_f2(Rational(1, 4)), bad, kTr), ValuationError);
  bad.corrections[0].lambda = Rational(-1, 2);
  CHECK_THROWS_AS(build_fano(builtin::hirzebruch_f2(Rational(1, 4)), bad, kTr), ValuationError);
}

TEST_CASE("build_fano: two-point blow-up with T^kappa PD[D1]") {
  Rational a(1, 2), kappa(1, 12);
  auto F = examples::blowup2_potential(a, kappa, kTr);
  // y1 + e^{T^k} y2 + T^{1-a} y2^-1 + T y1^-1 y2^-1 + T^{-(1-a)/2} y1 y2
  std::vector<Term> e;
  double f = 1;
  for (int j = 0; Rational(j) * kappa < kTr; ++j) {
    if (j > 0) f *= j;
    e.push_back({Rational(j) * kappa, Complex(1.0 / f, 0.0)});
  }
  auto G = poly(2, {{{1, 0}, Tpow(0)},
                    {{0, 1}, NovikovScalar::from_terms(e, kTr)},
                    {{0, -1}, Tpow(Rational(1, 2))},
                    {{-1, -1}, Tpow(1)},
                    {{1, 1}, Tpow(Rational(-1, 4))}});
  CHECK(same(F, G, 1e-12, Rational(3)));
  // chart at u = (u, (1-a)/2) reproduces the displayed chart potential
  Rational u(7, 20);
  auto H = F.chart_shift({u, Rational(1, 4)});
  CHECK(H.coefficient({1, 0}).val() == u);
  CHECK(H.coefficient({0, 1}).val() == Rational(1, 4));
  CHECK(H.coefficient({0, -1}).val() == Rational(1, 4));
  CHECK(H.coefficient({-1, -1}).val() == Rational(3, 4) - u);
  CHECK(H.coefficient({1, 1}).val() == u);

  CHECK(examples::blowup_kappa(a, Rational(1, 3)) == Rational(1, 12));
  CHECK(examples::blowup_kappa(a, Rational(3, 10)) == Rational(1, 20));
  CHECK(examples::blowup_kappa(a, Rational(2, 5)) == Rational(-1, 20));
  CHECK_THROWS_AS(examples::blowup2_potential(a, Rational(-1, 20), kTr), ValuationError);
  CHECK_THROWS_AS(examples::blowup2_potential(a, Rational(0), kTr), ValuationError);
}

TEST_CASE("chart_shift examples") {
  auto F = poly(1, {{{1}, Tpow(0)}, {{-1}, Tpow(1)}});
  auto H = F.chart_shift({Rational(1, 2)});
  CHECK(same(H, poly(1, {{{1}, Tpow(Rational(1, 2))}, {{-1}, Tpow(Rational(1, 2))}})));

  Complex a(0.3, -0.7);
  auto S = examples::s2xs2_potential(NovikovScalar(a, kTr), kTr);
  auto Sh = S.chart_shift({Rational(1, 2), Rational(1, 2)});
  auto half = [&](Complex c) { return Tpow(Rational(1, 2), c); };
  CHECK(same(Sh, poly(2, {{{1, 0}, half(std::exp(a))},
                          {{-1, 0}, half(1.0)},
                          {{0, 1}, half(std::exp(-a))},
                          {{0, -1}, half(1.0)}})));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int t = 0; t < 50; ++t) {
    auto G = random_laurent(rng, 2, 6);
    RVec u{Rational(num(rng), 12), Rational(num(rng), 7)};
    CHECK(same_terms(G.chart_shift(u).chart_shift({-u[0], -u[1]}), G));
  }
}

TEST_CASE("S2xS2 bulk potential on the degenerate F2 domain") {
  Rational rho(1, 3);
  auto F = examples::s2xs2_bulk_potential(rho, kTr);
  // e^{T^rho} + e^{-T^rho} = sum 2 T^{2 k rho} / (2k)!
  std::vector<Term> c;
  double f = 1;
  for (int k = 0; Rational(1) + Rational(2 * k) * rho < kTr + Rational(1); ++k) {
    if (k > 0) f *= (2 * k) * (2 * k - 1);
    c.push_back({Rational(1) + Rational(2 * k) * rho, Complex(2.0 / f, 0.0)});
  }
  auto G = poly(2, {{{1, 0}, Tpow(0)},
                    {{0, 1}, Tpow(0)},
                    {{-1, -2}, Tpow(2)},
                    {{0, -1}, NovikovScalar::from_terms(c, kTr + Rational(1))}});
  CHECK(same(F, G, 1e-10, Rational(4)));
  CHECK_THROWS_AS(examples::s2xs2_bulk_potential(Rational(0), kTr), ValuationError);
}

TEST_CASE("log_derivatives examples") {
  auto F = poly(2, {{{1, 2}, Tpow(0)}});
  auto d = F.log_derivatives();
  REQUIRE(d.size() == 2);
  CHECK(same(d[0], poly(2, {{{1, 2}, Tpow(0)}})));
  CHECK(same(d[1], poly(2, {{{1, 2}, Tpow(0, 2.0)}})));

  auto G = poly(1, {{{1}, Tpow(0)}, {{-1}, Tpow(1)}});
  CHECK(same(G.log_derivative(0), poly(1, {{{1}, Tpow(0)}, {{-1}, Tpow(1, -1.0)}})));

  // cubic: Y1 dG/dY1 = sum_i map[i][0] (y_i dF/dy_i)(Y) and the displayed
  // dG/dY1 = 3T(1 - Y1^-2 Y2^-1)(Y1 + Y2 + Y1^-1 Y2^-1)^2
  auto PO = examples::cubic_potential(kTr);
  auto m = examples::cubic_y_to_Y();
  auto D = PO.log_derivatives();
  auto S = poly(2, {{{1, 0}, Tpow(0)}, {{0, 1}, Tpow(0)}, {{-1, -1}, Tpow(0)}});
  auto S2 = S * S;
  for (int j = 0; j < 2; ++j) {
    auto lhs = D[0].scaled(NovikovScalar(static_cast<double>(m[0][static_cast<std::size_t>(j)]))) +
               D[1].scaled(NovikovScalar(static_cast<double>(m[1][static_cast<std::size_t>(j)])));
    IVec own = j == 0 ? IVec{1, 0} : IVec{0, 1};
    auto rhs = poly(2, {{own, Tpow(1, 3.0)}, {{-1, -1}, Tpow(1, -3.0)}}) * S2;
    CHECK(same(lhs.substitute(m), rhs));
  }
}

TEST_CASE("cubic surface: Y-substitution") {
  auto PO = examples::cubic_potential(kTr);
  auto G = examples::cubic_Y_form(kTr);
  auto m = examples::cubic_y_to_Y();
  CHECK(verify_substitution(PO, G, m, Rational(4)));
  CHECK(verify_substitution(PO, PO, {{1, 0}, {0, 1}}, Rational(4)));
  auto bad = G + poly(2, {{{0, 0}, Tpow(1)}});  // constant -5 instead of -6
  CHECK_FALSE(verify_substitution(PO, bad, m, Rational(4)));
  CHECK_THROWS_AS(verify_substitution(PO, G, {{1, 2}, {2, 4}}, Rational(4)), std::invalid_argument);
  // the map has degree 3: Y1^3 = y1^2 y2^-1
  CHECK(nvt::abs(det(std::vector<RVec>{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}})) == Rational(3));
  auto y1sq_over_y2 = poly(2, {{{2, -1}, Tpow(0)}}).substitute(m);
  CHECK(same(y1sq_over_y2, poly(2, {{{3, 0}, Tpow(0)}})));
}

TEST_CASE("cubic surface: bulk coefficient table") {
  std::vector<NovikovScalar> zero(9, NovikovScalar::zero(kTr));
  for (const auto& [k, c] : bulk_coefficient_table(zero)) CHECK(c.valuation_above(1e-14).is_pos_inf());
  CHECK(same(examples::cubic_bulk_potential(zero, kTr), examples::cubic_potential(kTr)));

  auto w0 = examples::cubic_w0(kTr);
  Complex e = std::exp(w0[3].coefficient(0));
  CHECK(std::abs(e * e + e + 1.0) < 1e-14);
  auto P0 = examples::cubic_bulk_potential(w0, kTr);
  CHECK(same(P0, poly(2, {{{-1, 2}, Tpow(1)}, {{2, -1}, Tpow(1)}, {{-1, -1}, Tpow(1)}}), 1e-12));
  CHECK(P0.chopped(1e-12).size() == 3);

  for (auto u : {Rational(1, 2), Rational(1, 3), Rational(1), Rational(0)})
    for (Complex c : {Complex(1.0, 0.0), Complex(-0.5, 2.0)}) {
      CAPTURE(to_string(u));
      auto w = examples::cubic_w_uc_scalar(u, c, kTr);
      // e^w + 1 + e^-w - 3 = c T^u
      auto r = w.exp() + NovikovScalar(1.0) + (-w).exp() - NovikovScalar(3.0);
      CHECK(NovikovScalar::relative_distance(r, Tpow(u, c), Rational(4)) < 1e-10);
      auto F = examples::cubic_bulk_potential(examples::cubic_w_uc(u, c, kTr), kTr);
      // correction c T^{1+u} (Y1 + Y2) Y1 Y2
      auto corr = poly(2, {{{2, 1}, Tpow(Rational(1) + u, c)}, {{1, 2}, Tpow(Rational(1) + u, c)}});
      CHECK(verify_substitution(F, examples::cubic_Y_form(kTr) + corr, examples::cubic_y_to_Y(), Rational(4), 1e-10));
    }
}

TEST_CASE("cubic family: Newton polytope volume 9/2") {
  std::mt19937_64 rng(5);
  std::vector<std::vector<NovikovScalar>> ws = {std::vector<NovikovScalar>(9, NovikovScalar::zero(kTr)),
                                                examples::cubic_w0(kTr),
                                                examples::cubic_w_uc(Rational(1, 2), 1.0, kTr)};
  for (int t = 0; t < 10; ++t) {
    std::vector<NovikovScalar> w;
    for (int i = 0; i < 9; ++i) w.push_back(oracle::random_scalar(rng, 6, 0, 12, 3, kTr));
    ws.push_back(w);
  }
  for (const auto& w : ws) {
    auto info = newton_polytope(examples::cubic_bulk_potential(w, kTr).chopped(1e-13));
    CHECK(info.volume == Rational(9, 2));
    CHECK(info.bound == 9);
  }
}

TEST_CASE("property: chart shift commutes with log derivatives") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-10, 10);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 3;
    auto F = random_laurent(rng, n, 7);
    RVec u;
    for (int i = 0; i < n; ++i) u.push_back(Rational(num(rng), 5 + i));
    auto a = F.chart_shift(u).log_derivatives();
    auto b = F.log_derivatives();
    for (int i = 0; i < n; ++i) CHECK(same_terms(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)].chart_shift(u)));
  }
}

TEST_CASE("property: term valuations in Int P are bounded by min l_j(u)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<MomentPolytope> ps = {builtin::cp(2), builtin::s2xs2(), builtin::hirzebruch_f2(Rational(1, 4)),
                                    builtin::blowup2(Rational(1, 2), Rational(1, 4)),
                                    builtin::blowup3(Rational(1, 2), Rational(1, 10)),
                                    builtin::cubic_resolution(Rational(1, 10)), builtin::cp(3)};
  for (const auto& P : ps) {
    auto F = build_fano(P, {}, kTr);
    const auto& V = P.vertices();
    int hits = 0;
    for (int t = 0; t < 40; ++t) {
      // random rational convex combination of the vertices
      std::vector<std::int64_t> wts;
      std::int64_t tot = 0;
      for (std::size_t i = 0; i < V.size(); ++i) {
        wts.push_back(1 + static_cast<std::int64_t>(U(rng) * 9));
        tot += wts.back();
      }
      RVec u(static_cast<std::size_t>(P.dim()), Rational(0));
      for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t d = 0; d < u.size(); ++d) u[d] += Rational(V[i][d]) * Rational(wts[i], tot);
      REQUIRE(P.interior(u));
      auto H = F.chart_shift(u);
      Rational m = P.min_ell(u);
      CHECK(m > 0);
      CHECK(H.min_valuation() == ExtRational(m));
      for (const auto& [k, c] : H.terms()) CHECK(c.val() >= m);
      ++hits;
    }
    CHECK(hits == 40);
  }
}

TEST_CASE("property: log derivatives match finite differences") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  const double h = 1e-5;
  std::vector<LaurentNovikov> fs = {examples::cubic_potential(kTr),
                                    examples::f2_potential(Rational(1, 4), kTr).chart_shift({Rational(1, 2), Rational(3, 8)}),
                                    examples::blowup2_potential(Rational(1, 2), Rational(1, 12), kTr)};
  for (int t = 0; t < 20; ++t) {
    const auto& F = fs[static_cast<std::size_t>(t) % fs.size()];
    std::vector<NovikovScalar> y;
    for (int i = 0; i < F.nvars(); ++i) y.push_back(NovikovScalar(std::polar(1.0, ang(rng)), kTr));
    auto D = F.log_derivatives();
    for (int i = 0; i < F.nvars(); ++i) {
      auto yp = y, ym = y;
      yp[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)].scaled(1.0 + h);
      ym[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)].scaled(1.0 - h);
      auto fd = F.evaluate(yp) - F.evaluate(ym);
      auto ex = D[static_cast<std::size_t>(i)].evaluate(y);
      Rational v = ex.val();
      Complex approx = fd.coefficient(v) / (2 * h);
      CHECK(std::abs(approx - ex.leading_coefficient()) <= 1e-6 * std::abs(ex.leading_coefficient()));
    }
  }
}

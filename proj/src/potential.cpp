#include "nvtoric/potential.hpp"

#include <cmath>
#include <numbers>

namespace nvt {

LaurentNovikov facet_monomial(const MomentPolytope& P, std::size_t j, const Rational& trunc) {
  const auto& f = P.facets().at(j);
  return LaurentNovikov::monomial(P.dim(), f.normal, NovikovScalar::monomial(Complex(1.0, 0.0), f.offset, f.offset + trunc));
}

LaurentNovikov build_fano(const MomentPolytope& P, const BulkParameter& bulk, const Rational& trunc) {
  const std::size_t m = P.facets().size();
  if (!bulk.facet_weights.empty() && bulk.facet_weights.size() != m)
    throw std::invalid_argument("facet_weights must have one entry per facet");
  const int n = P.dim();
  LaurentNovikov F(n);
  if (!bulk.b0.is_zero()) {
    if (bulk.b0.val() < 0) throw ValuationError("b0 must lie in Lambda_0", bulk.b0.valuation());
    F.add_term(IVec(static_cast<std::size_t>(n), 0), bulk.b0.truncated(trunc));
  }
  std::vector<LaurentNovikov> z;
  for (std::size_t j = 0; j < m; ++j) {
    z.push_back(facet_monomial(P, j, trunc));
    NovikovScalar ew(Complex(1.0, 0.0), trunc);
    if (!bulk.facet_weights.empty() && !bulk.facet_weights[j].is_zero()) {
      const auto& w = bulk.facet_weights[j];
      if (w.val() < 0)
        throw ValuationError("facet weight " + std::to_string(j + 1) + " must lie in Lambda_0", w.valuation());
      ew = w.truncated(trunc).exp();
    }
    F += z.back().scaled(ew);
  }
  for (const auto& c : bulk.corrections) {
    if (!(c.lambda > 0))
      throw ValuationError("correction exponent must be positive, got " + to_string(c.lambda), ExtRational(c.lambda));
    for (const auto& [k, a] : c.poly) {
      if (k.size() != m) throw std::invalid_argument("correction monomial must be over z_1..z_m");
      LaurentNovikov term =
          LaurentNovikov::constant(n, NovikovScalar::monomial(a, c.lambda, c.lambda + trunc + Rational(100)));
      for (std::size_t j = 0; j < m; ++j) {
        if (k[j] < 0) throw std::invalid_argument("correction polynomials use non-negative powers of z");
        term = term * z[j].pow(static_cast<int>(k[j]));
      }
      F += term.truncated(trunc);
    }
  }
  return F;
}

bool verify_substitution(const LaurentNovikov& F, const LaurentNovikov& G, const std::vector<IVec>& map,
                         const Rational& below, double tol) {
  std::vector<RVec> m;
  for (const auto& row : map) {
    RVec r;
    for (auto x : row) r.push_back(Rational(x));
    m.push_back(r);
  }
  if (m.size() != map.size() || (m.size() && m[0].size() != m.size()) || det(m) == 0)
    throw std::invalid_argument("substitution map is not invertible over Q");
  return laurent_distance(F.substitute(map), G, below) <= tol;
}

std::map<IVec, NovikovScalar> bulk_coefficient_table(const std::vector<NovikovScalar>& w) {
  if (w.size() != 9) throw std::invalid_argument("cubic bulk needs 9 wall weights");
  std::vector<NovikovScalar> e, em;
  for (const auto& x : w) {
    e.push_back(x.exp());
    em.push_back((-x).exp());
  }
  auto ex = [&](std::size_t i, std::size_t j) { return (w[i] - w[j]).exp(); };
  const NovikovScalar one(1.0), three(3.0);
  std::map<IVec, NovikovScalar> t;
  t[{-1, 2}] = e[0] - one;
  t[{2, -1}] = e[1] - one;
  t[{-1, -1}] = e[2] - one;
  t[{1, 0}] = e[3] + ex(4, 3) + em[4] - three;
  t[{0, 1}] = e[4] + ex(3, 4) + em[3] - three;
  t[{1, -1}] = e[5] + ex(6, 5) + em[6] - three;
  t[{0, -1}] = e[6] + ex(5, 6) + em[5] - three;
  t[{-1, 0}] = e[7] + ex(8, 7) + em[8] - three;
  t[{-1, 1}] = e[8] + ex(7, 8) + em[7] - three;
  return t;
}

namespace examples {

std::vector<IVec> cubic_y_to_Y() { return {{2, 1}, {1, 2}}; }

LaurentNovikov cubic_Y_form(const Rational& trunc) {
  NovikovScalar one(Complex(1.0, 0.0), trunc);
  LaurentNovikov s(2);
  s.add_term({1, 0}, one);
  s.add_term({0, 1}, one);
  s.add_term({-1, -1}, one);
  LaurentNovikov c = s.pow(3);
  c.add_term({0, 0}, NovikovScalar(Complex(-6.0, 0.0), trunc));
  return c.scaled(NovikovScalar::monomial(Complex(1.0, 0.0), Rational(1), Rational(1) + trunc)).truncated(trunc);
}

LaurentNovikov cubic_potential(const Rational& trunc) {
  auto T = [&](double c) { return NovikovScalar::monomial(Complex(c, 0.0), Rational(1), trunc); };
  LaurentNovikov F(2);
  for (IVec k : {IVec{-1, 2}, IVec{2, -1}, IVec{-1, -1}}) F.add_term(k, T(1.0));
  for (IVec k : {IVec{1, 0}, IVec{0, 1}, IVec{1, -1}, IVec{0, -1}, IVec{-1, 0}, IVec{-1, 1}}) F.add_term(k, T(3.0));
  return F;
}

LaurentNovikov cubic_bulk_potential(const std::vector<NovikovScalar>& w, const Rational& trunc) {
  LaurentNovikov F = cubic_potential(trunc);
  NovikovScalar Tm = NovikovScalar::monomial(Complex(1.0, 0.0), Rational(1), Rational(1) + trunc);
  for (const auto& [k, c] : bulk_coefficient_table(w)) F.add_term(k, (c.truncated(trunc) * Tm).truncated(trunc));
  return F;
}

std::vector<NovikovScalar> cubic_w0(const Rational& trunc) {
  NovikovScalar w0(Complex(0.0, 2.0 * std::numbers::pi / 3.0), trunc);
  std::vector<NovikovScalar> w(9, NovikovScalar::zero(trunc));
  for (std::size_t i = 3; i < 9; ++i) w[i] = w0;
  return w;
}

NovikovScalar cubic_w_uc_scalar(const Rational& u, Complex c, const Rational& trunc) {
  if (u < 0) throw ValuationError("w(u;c) needs u >= 0", ExtRational(u));
  NovikovScalar eps = NovikovScalar::monomial(c, u, u + trunc);
  NovikovScalar four(Complex(4.0, 0.0), trunc + u);
  NovikovScalar root = (eps * (four + eps)).pow(Rational(1, 2));
  NovikovScalar z = (NovikovScalar(Complex(2.0, 0.0), trunc + u) + eps + root).scaled(0.5);
  return z.log().truncated(trunc);
}

std::vector<NovikovScalar> cubic_w_uc(const Rational& u, Complex c, const Rational& trunc) {
  std::vector<NovikovScalar> w(9, NovikovScalar::zero(trunc));
  w[3] = w[4] = cubic_w_uc_scalar(u, c, trunc);
  return w;
}

LaurentNovikov f2_potential(const Rational& alpha, const Rational& trunc) {
  auto P = builtin::hirzebruch_f2(alpha);
  BulkParameter b;
  b.corrections.push_back({alpha, {{IVec{0, 0, 1, 0}, Complex(1.0, 0.0)}}});
  return build_fano(P, b, trunc);
}

LaurentNovikov f2_limit_chart(const Rational& trunc) {
  auto c = [&](double x) { return NovikovScalar::monomial(Complex(x, 0.0), Rational(1, 2), trunc); };
  LaurentNovikov F(2);
  F.add_term({1, 0}, c(1.0));
  F.add_term({0, 1}, c(1.0));
  F.add_term({-1, -2}, c(1.0));
  F.add_term({0, -1}, c(2.0));
  return F;
}

LaurentNovikov s2xs2_bulk_potential(const Rational& rho, const Rational& trunc) {
  if (!(rho > 0)) throw ValuationError("rho must be positive", ExtRational(rho));
  auto P = builtin::s2xs2_degeneration();
  NovikovScalar t = NovikovScalar::monomial(Complex(1.0, 0.0), rho, trunc);
  BulkParameter b;
  b.facet_weights.assign(4, NovikovScalar::zero(trunc));
  b.facet_weights[2] = (t.exp() + (-t).exp()).log();
  return build_fano(P, b, trunc);
}

LaurentNovikov s2xs2_potential(const NovikovScalar& a, const Rational& trunc) {
  BulkParameter b;
  b.facet_weights = {a, NovikovScalar::zero(trunc), -a, NovikovScalar::zero(trunc)};
  return build_fano(builtin::s2xs2(), b, trunc);
}

Rational blowup_kappa(const Rational& alpha, const Rational& u) {
  if (u >= Rational(1, 3)) return (Rational(1) + alpha) / Rational(2) - Rational(2) * u;
  return u - (Rational(1) - alpha) / Rational(2);
}

LaurentNovikov blowup2_potential(const Rational& alpha, const Rational& kappa, const Rational& trunc) {
  if (!(kappa > 0))
    throw ValuationError("bulk T^kappa PD[D_1] needs kappa > 0, got kappa = " + to_string(kappa), ExtRational(kappa));
  auto P = builtin::blowup2(alpha, (Rational(1) - alpha) / Rational(2));
  BulkParameter b;
  b.facet_weights.assign(5, NovikovScalar::zero(trunc));
  b.facet_weights[1] = NovikovScalar::monomial(Complex(1.0, 0.0), kappa, trunc);
  return build_fano(P, b, trunc);
}

}  // namespace examples

}  // namespace nvt

#include "nvtoric/spectral.hpp"

#include <stdexcept>

namespace nvt {

namespace {

std::string vec_str(const RVec& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? ", " : "") + to_string(u[i]);
  return s + ")";
}

}  // namespace

Rational mu_circle(const MomentPolytope& P, const RVec& u, std::size_t j) {
  if (j >= P.facets().size()) throw std::out_of_range("facet index out of range");
  return P.volume() * (P.ell(j, u) - P.ell(j, P.centroid()));
}

Rational mu_circle(const MomentPolytope& P, const CriticalPoint& cp, std::size_t j) { return mu_circle(P, cp.u, j); }

Rational defect_bound(const Rational& e_valuation) {
  if (e_valuation < Rational(0)) throw std::invalid_argument("idempotent valuation must be >= 0");
  return Rational(12) * e_valuation;
}

std::vector<HeavinessStatus> heaviness_report(const JacobianModel& m) {
  std::vector<HeavinessStatus> out;
  for (std::size_t k = 0; k < m.criticals.size(); ++k) {
    const auto& cp = m.criticals[k];
    HeavinessStatus s;
    s.critical = k;
    s.u = cp.u;
    s.heavy = true;
    s.citations.push_back("heavy: toricheavymain (1)");
    if (cp.nondegenerate) s.citations.push_back("superheavy: toricheavymain (2)");
    s.citations.push_back("superheavy: appliHOch");
    s.superheavy = true;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ZetaValue> zeta_values(const MomentPolytope& P, const JacobianModel& m, std::size_t which) {
  if (which >= m.criticals.size()) throw std::out_of_range("critical point index out of range");
  const auto& cp = m.criticals[which];
  const Rational vol = P.volume();
  auto y = cp.coordinates();
  const Rational tr = y.empty() ? Rational(8) : y[0].truncation();
  std::vector<ZetaValue> out;
  for (std::size_t j = 0; j < P.facets().size(); ++j) {
    ZetaValue z;
    z.facet = j;
    const Rational lc = P.ell(j, P.centroid());
    const Rational cal = vol * lc;
    z.via_mu = (cal - mu_circle(P, cp, j)) / vol;
    // x = T^{-l_j(u_cnt)} z_j(y), with v_q read off the evaluated z_j in the q^{l_j(u)} convention
    if (static_cast<int>(y.size()) == P.dim()) {
      auto zj = facet_monomial(P, j, tr).evaluate(y);
      auto v = zj.valuation_above(1e-9 * std::max(1.0, std::abs(zj.leading_coefficient())));
      if (v.finite()) {
        z.via_seidel_ok = true;
        Rational vq_x = v.value() - lc;
        z.via_seidel = -vq_x + lc;
        z.agree = z.via_seidel == z.via_mu;
      }
    }
    out.push_back(z);
  }
  return out;
}

QuasimorphismReport quasimorphism_report(const MomentPolytope& P, const JacobianModel& m) {
  QuasimorphismReport r;
  r.volume = P.volume();
  r.centroid = P.centroid();
  auto status = heaviness_report(m);
  for (std::size_t k = 0; k < m.criticals.size(); ++k) {
    FiberReport f;
    f.critical = k;
    f.u = m.criticals[k].u;
    f.status = status[k];
    for (std::size_t j = 0; j < P.facets().size(); ++j) f.mu.push_back(mu_circle(P, m.criticals[k], j));
    f.idempotent = idempotent_valuation(m, k);
    if (f.idempotent.available) {
      f.defect_available = true;
      f.defect = defect_bound(f.idempotent.value);
    }
    f.zeta = zeta_values(P, m, k);
    r.fibers.push_back(std::move(f));
  }
  return r;
}

IndependenceCertificate independence_certificate(const std::vector<FamilyEntry>& family) {
  IndependenceCertificate c;
  for (const auto& e : family) {
    if (!e.superheavy) throw SpectralError("entry '" + e.bulk_tag + "' is not superheavy-certified");
    for (std::size_t i = 0; i < c.fibers.size(); ++i)
      if (c.fibers[i] == e.point.u)
        throw SpectralError("entries '" + c.tags[i] + "' and '" + e.bulk_tag + "' share the fiber u = " +
                            vec_str(e.point.u));
    c.tags.push_back(e.bulk_tag);
    c.fibers.push_back(e.point.u);
  }
  const std::size_t n = c.fibers.size();
  c.pattern.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c.pattern[i][i] = -1;
  return c;
}

}  // namespace nvt

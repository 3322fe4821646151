#include "nvtoric/quantum.hpp"

#include <algorithm>

namespace nvt {

JacobianModel make_model(const LaurentNovikov& F, std::vector<CriticalPoint> criticals, bool complete,
                         std::vector<IVec> spanning) {
  JacobianModel m;
  m.potential = F;
  m.criticals = std::move(criticals);
  m.kushnirenko = kushnirenko_bound(F);
  const auto count = static_cast<std::int64_t>(m.criticals.size());
  const bool all_nd = std::all_of(m.criticals.begin(), m.criticals.end(),
                                  [](const CriticalPoint& c) { return c.nondegenerate; });
  m.morse = all_nd && (complete || count == m.kushnirenko);
  m.opaque_slots = complete ? 0 : std::max<std::int64_t>(0, m.kushnirenko - count);
  if (spanning.empty()) {
    spanning.push_back(IVec(static_cast<std::size_t>(F.nvars()), 0));
    for (const auto& k : F.support())
      if (std::find(spanning.begin(), spanning.end(), k) == spanning.end()) spanning.push_back(k);
  }
  m.spanning = std::move(spanning);
  for (const auto& cp : m.criticals) {
    auto y = cp.coordinates();
    std::vector<NovikovScalar> row;
    for (const auto& k : m.spanning)
      row.push_back(LaurentNovikov::monomial(F.nvars(), k, NovikovScalar(Complex(1.0, 0.0), cp.value.truncation()))
                        .evaluate(y));
    m.evaluation_table.push_back(std::move(row));
  }
  return m;
}

NovikovScalar evaluate_class(const JacobianModel& m, const LaurentNovikov& F, std::size_t which) {
  if (which >= m.criticals.size()) throw QuantumError("critical point index out of range");
  return F.evaluate(m.criticals[which].coordinates());
}

std::optional<int> separating_coordinate(const JacobianModel& m, double tol) {
  const int n = m.potential.nvars();
  std::vector<std::vector<NovikovScalar>> ys;
  for (const auto& cp : m.criticals) ys.push_back(cp.coordinates());
  for (int j = 0; j < n; ++j) {
    bool ok = true;
    for (std::size_t a = 0; a < ys.size() && ok; ++a)
      for (std::size_t b = a + 1; b < ys.size() && ok; ++b) {
        const auto& ya = ys[a][static_cast<std::size_t>(j)];
        const auto& yb = ys[b][static_cast<std::size_t>(j)];
        Rational below = std::min(ya.truncation(), yb.truncation());
        if (NovikovScalar::relative_distance(ya, yb, below) < tol) ok = false;
      }
    if (ok) return j;
  }
  return std::nullopt;
}

IdempotentRep idempotent_representative(const JacobianModel& m, std::size_t which) {
  if (which >= m.criticals.size()) throw QuantumError("critical point index out of range");
  auto j = separating_coordinate(m);
  if (!j) throw QuantumError("no single coordinate separates the critical points");
  const auto jj = static_cast<std::size_t>(*j);
  const auto yk = m.criticals[which].coordinates()[jj];
  const Rational tr = yk.truncation();
  IdempotentRep rep;
  rep.coordinate = *j;
  rep.poly = UPoly<NovikovScalar>({NovikovScalar(Complex(1.0, 0.0), tr)});
  for (std::size_t l = 0; l < m.criticals.size(); ++l) {
    if (l == which) continue;
    const auto yl = m.criticals[l].coordinates()[jj];
    NovikovScalar inv = (yk - yl).inverse();
    rep.poly = rep.poly * UPoly<NovikovScalar>({-(yl * inv), inv});
  }
  const int n = m.potential.nvars();
  rep.as_laurent = LaurentNovikov(n);
  for (std::size_t d = 0; d < rep.poly.c.size(); ++d) {
    IVec k(static_cast<std::size_t>(n), 0);
    k[jj] = static_cast<std::int64_t>(d);
    rep.as_laurent.add_term(k, rep.poly.c[d]);
  }
  return rep;
}

IdempotentValuation idempotent_valuation(const JacobianModel& m, std::size_t which) {
  IdempotentValuation out;
  if (!m.morse) {
    out.note = "model is not Morse";
    return out;
  }
  if (m.criticals.size() == 1) {
    out.available = true;
    out.value = Rational(0);
    out.coordinate = 0;
    return out;
  }
  IdempotentRep rep;
  try {
    rep = idempotent_representative(m, which);
  } catch (const QuantumError& e) {
    out.note = e.what();
    return out;
  }
  double scale = 0;
  for (const auto& c : rep.poly.c)
    if (!c.is_zero()) scale = std::max(scale, std::abs(c.leading_coefficient()));
  ExtRational lo = ExtRational::pos_inf();
  for (const auto& c : rep.poly.c) {
    ExtRational v = c.valuation_above(1e-9 * std::max(scale, 1.0));
    if (v < lo) lo = v;
  }
  if (!lo.finite()) {
    out.note = "representative vanished to working precision";
    return out;
  }
  out.available = true;
  out.value = -lo.value();
  out.coordinate = rep.coordinate;
  return out;
}

std::vector<NovikovScalar> c1_eigenvalues(const JacobianModel& m) {
  if (!m.morse) throw QuantumError("c1 eigenvalues need a Morse model");
  std::vector<NovikovScalar> out;
  for (const auto& cp : m.criticals) out.push_back(cp.value);
  return out;
}

SeidelLeading seidel_leading(const MomentPolytope& P, std::size_t j) {
  if (j >= P.facets().size()) throw std::out_of_range("facet index out of range");
  SeidelLeading s;
  s.exponent_T = P.ell(j, P.centroid());
  s.exponent_q = -s.exponent_T;
  s.class_tag = "PD[D_" + std::to_string(j + 1) + "]";
  s.bulk_factor = "e^{w_" + std::to_string(j + 1) + "}";
  return s;
}

LaurentNovikov c1_representative(const MomentPolytope& P, const BulkParameter& bulk, const Rational& trunc) {
  BulkParameter b;
  b.facet_weights = bulk.facet_weights;
  return build_fano(P, b, trunc);
}

}  // namespace nvt

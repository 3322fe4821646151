#include "nvtoric/critical.hpp"

#include "nvtoric/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace nvt {

namespace {

const Rational kBig(1000000);

double coef_scale(const LaurentNovikov& f) {
  double s = 0;
  for (const auto& [k, c] : f.terms()) s = std::max(s, c.max_abs());
  return s;
}

std::string u_str(const RVec& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + to_string(u[i]);
  return s + ")";
}

// Effective valuation: ignore terms at or below abs_tol.
ExtRational eff_val(const NovikovScalar& x, double abs_tol) { return x.valuation_above(abs_tol); }

// Solve A d = b over the Novikov field, pivoting on the entry of smallest valuation.
std::vector<NovikovScalar> solve_lambda_linear(std::vector<std::vector<NovikovScalar>> A, std::vector<NovikovScalar> b,
                                               double abs_tol, const Rational& trunc) {
  const std::size_t n = b.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    ExtRational best = ExtRational::pos_inf();
    double bestabs = 0;
    for (std::size_t r = c; r < n; ++r) {
      ExtRational v = eff_val(A[r][c], abs_tol);
      if (!v.finite()) continue;
      double a = std::abs(A[r][c].coefficient(v.value()));
      if (piv == n || v < best || (v == best && a > bestabs)) {
        piv = r;
        best = v;
        bestabs = a;
      }
    }
    if (piv == n) throw CriticalError(CriticalError::Kind::DegenerateJacobian, "Jacobian is singular over the Novikov field");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    NovikovScalar inv = A[c][c].chop(1e-13).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (A[r][c].is_zero()) continue;
      NovikovScalar f = (A[r][c] * inv).truncated(trunc);
      for (std::size_t k = c; k < n; ++k) A[r][k] = (A[r][k] - f * A[c][k]).truncated(trunc);
      b[r] = (b[r] - f * b[c]).truncated(trunc);
    }
  }
  std::vector<NovikovScalar> x(n);
  for (std::size_t c = n; c-- > 0;) {
    NovikovScalar s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s = s - A[c][k] * x[k];
    x[c] = (s * A[c][c].chop(1e-13).inverse()).truncated(trunc);
  }
  return x;
}

struct NewtonOutcome {
  bool converged = false;
  Rational residual;  // min effective residual valuation reached
};

// Multiplicative Newton over the Novikov field on the normalised chart equations.
NewtonOutcome newton_lambda(const ChartSystem& sys, std::vector<NovikovScalar>& y, const Rational& work,
                            double rel_tol, int max_iter = 40) {
  const std::size_t n = y.size();
  std::vector<std::vector<LaurentNovikov>> J(n, std::vector<LaurentNovikov>(n));
  std::vector<double> scale(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    scale[i] = std::max(coef_scale(sys.equations[i]), 1e-300);
    for (std::size_t j = 0; j < n; ++j) J[i][j] = sys.equations[i].log_derivative(static_cast<int>(j));
  }
  NewtonOutcome out;
  Rational last(-1000);
  int stall = 0;
  for (int it = 0; it <= max_iter; ++it) {
    std::vector<NovikovScalar> r(n);
    Rational worst = work, goal = work;
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = sys.equations[i].evaluate(y).truncated(work);
      goal = std::min(goal, r[i].truncation());
      ExtRational v = eff_val(r[i], rel_tol * scale[i]);
      worst = std::min(worst, v.finite() ? std::min(v.value(), r[i].truncation()) : r[i].truncation());
    }
    out.residual = worst;
    if (worst >= goal) {
      out.converged = true;
      return out;
    }
    if (worst <= last) {
      if (++stall >= 3) return out;
    } else {
      stall = 0;
    }
    last = std::max(last, worst);
    if (it == max_iter) break;
    std::vector<std::vector<NovikovScalar>> A(n, std::vector<NovikovScalar>(n));
    std::vector<NovikovScalar> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) A[i][j] = J[i][j].evaluate(y).truncated(work);
      b[i] = -r[i];
      // drop noise so it cannot masquerade as a low-order term
      std::vector<Term> ts;
      for (const auto& t : b[i].terms())
        if (std::abs(t.coef) > rel_tol * scale[i]) ts.push_back(t);
      b[i] = NovikovScalar::from_terms(std::move(ts), b[i].truncation());
    }
    std::vector<NovikovScalar> d;
    try {
      d = solve_lambda_linear(A, b, rel_tol * 1e-3, work);
    } catch (const CriticalError&) {
      return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
      NovikovScalar one(Complex(1.0, 0.0), kBig);
      y[j] = (y[j] * (one + d[j])).truncated(work);
    }
  }
  return out;
}

std::vector<NovikovScalar> units_from(const std::vector<Complex>& root, const Rational& work) {
  std::vector<NovikovScalar> y;
  for (const auto& c : root) y.emplace_back(c, work);
  return y;
}

bool same_point(const CriticalPoint& a, const CriticalPoint& b, const Rational& below) {
  if (a.u != b.u) return false;
  for (std::size_t i = 0; i < a.units.size(); ++i)
    if (NovikovScalar::relative_distance(a.units[i], b.units[i], below) > 1e-6) return false;
  return true;
}

bool point_less(const CriticalPoint& a, const CriticalPoint& b) {
  if (a.u != b.u) return a.u < b.u;
  for (std::size_t i = 0; i < a.leading.size(); ++i) {
    if (std::abs(a.leading[i].real() - b.leading[i].real()) > 1e-9) return a.leading[i].real() < b.leading[i].real();
    if (std::abs(a.leading[i].imag() - b.leading[i].imag()) > 1e-9) return a.leading[i].imag() < b.leading[i].imag();
  }
  // same leading part: order by the first differing higher coefficient
  for (std::size_t i = 0; i < a.units.size(); ++i) {
    const auto& ta = a.units[i].terms();
    const auto& tb = b.units[i].terms();
    for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k) {
      if (ta[k].exp != tb[k].exp) return ta[k].exp < tb[k].exp;
      if (std::abs(ta[k].coef.real() - tb[k].coef.real()) > 1e-9) return ta[k].coef.real() < tb[k].coef.real();
      if (std::abs(ta[k].coef.imag() - tb[k].coef.imag()) > 1e-9) return ta[k].coef.imag() < tb[k].coef.imag();
    }
  }
  return false;
}

Rational work_truncation(const CriticalOptions& opt, int step) {
  static const int margins[] = {1, 2, 4, 6};
  return opt.emax + Rational(margins[std::clamp(step, 0, 3)]);
}

}  // namespace

std::vector<NovikovScalar> CriticalPoint::coordinates() const {
  std::vector<NovikovScalar> y;
  for (std::size_t i = 0; i < units.size(); ++i) y.push_back(units[i].shifted(u[i]));
  return y;
}

ChartSystem chart_system(const LaurentNovikov& F, const RVec& u, double rel_tol) {
  ChartSystem s;
  s.u = u;
  const double scale0 = coef_scale(F);
  s.chart = F.chart_shift(u).chopped(1e-14 * scale0);
  const double scale = std::max(coef_scale(s.chart), 1e-300);
  const int n = F.nvars();
  for (int i = 0; i < n; ++i) {
    LaurentNovikov D = s.chart.log_derivative(i);
    ExtRational m = ExtRational::pos_inf();
    for (const auto& [k, c] : D.terms()) m = std::min(m, eff_val(c, rel_tol * scale));
    Rational mi = m.finite() ? m.value() : Rational(0);
    s.orders.push_back(mi);
    LaurentNovikov E = D.scaled(NovikovScalar::monomial(Complex(1.0, 0.0), -mi, kBig));
    s.equations.push_back(E);
    CLaurent lead;
    if (m.finite()) {
      double ls = 0;
      auto sl = E.slice(Rational(0));
      for (const auto& [k, c] : sl) ls = std::max(ls, std::abs(c));
      for (const auto& [k, c] : sl)
        if (std::abs(c) > rel_tol * std::max(ls, scale)) lead[k] = c;
    }
    s.leading.push_back(lead);
  }
  return s;
}

bool valuation_ties(const LaurentNovikov& F, const RVec& u, double rel_tol) {
  const int n = F.nvars();
  const double scale = std::max(coef_scale(F), 1e-300);
  std::vector<std::pair<const IVec*, Rational>> terms;
  for (const auto& [k, c] : F.terms()) {
    ExtRational v = eff_val(c, rel_tol * scale);
    if (v.finite()) terms.push_back({&k, v.value()});
  }
  for (int i = 0; i < n; ++i) {
    bool have = false;
    Rational best;
    int count = 0;
    for (const auto& [k, v0] : terms) {
      if ((*k)[static_cast<std::size_t>(i)] == 0) continue;
      Rational w = v0;
      for (int j = 0; j < n; ++j) w += Rational((*k)[static_cast<std::size_t>(j)]) * u[static_cast<std::size_t>(j)];
      if (!have || w < best) {
        best = w;
        count = 1;
        have = true;
      } else if (w == best) {
        ++count;
      }
    }
    if (count < 2) return false;
  }
  return true;
}

std::vector<RVec> enumerate_valuations(const LaurentNovikov& F, const MomentPolytope& P, std::int64_t D,
                                       const std::vector<RVec>& extra, bool parallel) {
  if (D < 1 || D > 60) throw std::invalid_argument("denominator bound must be in [1, 60]");
  const int n = P.dim();
  std::vector<std::vector<Rational>> axis(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational lo = P.vertices().front()[static_cast<std::size_t>(i)], hi = lo;
    for (const auto& v : P.vertices()) {
      lo = std::min(lo, v[static_cast<std::size_t>(i)]);
      hi = std::max(hi, v[static_cast<std::size_t>(i)]);
    }
    std::set<Rational> vals;
    for (std::int64_t q = 1; q <= D; ++q) {
      auto cl = [&](const Rational& x, bool up) {
        // floor / ceil of x*q
        __int128 a = static_cast<__int128>(x.numerator()) * q, b = x.denominator();
        __int128 f = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --f;
        if (up && f * b != a) ++f;
        return static_cast<std::int64_t>(f);
      };
      for (std::int64_t p = cl(lo, true); p <= cl(hi, false); ++p) vals.insert(Rational(p, q));
    }
    axis[static_cast<std::size_t>(i)].assign(vals.begin(), vals.end());
  }
  std::vector<RVec> grid;
  RVec cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      grid.push_back(cur);
      return;
    }
    for (const auto& x : axis[static_cast<std::size_t>(i)]) {
      cur[static_cast<std::size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  auto flags = scan_valuation_grid(F, P, grid, parallel ? Exec::OpenMP : Exec::Serial);
  std::set<RVec> out;
  for (std::size_t g = 0; g < grid.size(); ++g)
    if (flags[g]) out.insert(grid[g]);
  for (const auto& e : extra) out.insert(e);
  return {out.begin(), out.end()};
}

ComplexSolve solve_leading(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt) {
  auto sys = chart_system(F, u, opt.rel_tol);
  ComplexSolveOptions co;
  co.seed = opt.seed;
  return solve_complex_system(sys.leading, co);
}

std::size_t ladder_size(const ChartSystem& sys, const Rational& bound, std::size_t cap) {
  std::set<Rational> gens;
  for (const auto& E : sys.equations)
    for (const auto& [k, c] : E.terms())
      for (const auto& t : c.terms())
        if (t.exp > Rational(0) && t.exp < bound) gens.insert(t.exp);
  std::set<Rational> seen{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  while (!frontier.empty()) {
    std::vector<Rational> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Rational s = a + g;
        if (s < bound && seen.insert(s).second) {
          next.push_back(s);
          if (seen.size() > cap) return seen.size();
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace {

// Chart at u after T -> lambda T. The automorphism keeps valuations and leading parts, and
// tames Puiseux series whose coefficients grow geometrically.
struct Frame {
  double lambda = 1;
  RVec u;
  LaurentNovikov chart;
  ChartSystem sys;
};

Frame make_frame(const LaurentNovikov& F, const RVec& u, double lambda, double rel_tol) {
  Frame f;
  f.lambda = lambda;
  f.u = u;
  f.chart = F.chart_shift(u);
  if (lambda != 1) f.chart = f.chart.rescaled_T(lambda);
  f.sys = chart_system(f.chart, RVec(u.size(), Rational(0)), rel_tol);
  f.sys.u = u;
  return f;
}

// Largest tail rate log(|c_e| / |c_0|) / e over exponents e >= 1/2.
double tail_growth(const std::vector<NovikovScalar>& ys) {
  double g = 0;
  for (const auto& y : ys) {
    if (y.is_zero()) continue;
    const double c0 = std::abs(y.leading_coefficient());
    const Rational v0 = y.val();
    for (const auto& t : y.terms()) {
      double e = to_double(t.exp - v0);
      if (e < 0.5 || std::abs(t.coef) == 0) continue;
      g = std::max(g, std::log(std::abs(t.coef) / c0) / e);
    }
  }
  return g;
}

constexpr double kGrowthOk = 3.4;  // about log 30 per unit of valuation
constexpr int kFramePasses = 3;

// Classify in the frame, then undo the rescaling.
CriticalPoint finish(const Frame& fr, std::vector<NovikovScalar> y, const std::string& method,
                     const CriticalOptions& opt) {
  CriticalPoint cp;
  cp.u = RVec(fr.u.size(), Rational(0));
  cp.units = std::move(y);
  cp.method = method;
  cp = classify(fr.chart, cp, opt);
  cp.u = fr.u;
  if (fr.lambda != 1) {
    const double inv = 1.0 / fr.lambda;
    for (auto& v : cp.units) v = v.rescaled_T(inv);
    cp.value = cp.value.rescaled_T(inv);
    for (auto& b : cp.b_components) b = b.rescaled_T(inv);
    if (cp.nondegenerate)
      cp.hessian_leading *= std::exp(-std::log(fr.lambda) * to_double(cp.hessian_valuation.value()));
  }
  return cp;
}

std::vector<std::vector<NovikovScalar>> elimination_candidates(const Frame& fr, const Rational& work,
                                                               const CriticalOptions& opt) {
  LambdaSystemOptions lo;
  lo.target = work;
  lo.rel_tol = opt.rel_tol;
  std::vector<LaurentNovikov> eqs;
  for (const auto& E : fr.sys.equations) eqs.push_back(E.truncated(work));
  std::vector<std::vector<NovikovScalar>> out;
  for (auto y : solve_lambda_system(eqs, lo)) {
    bool unit = true;
    for (auto& v : y) {
      if (v.is_zero() || v.val() != Rational(0)) unit = false;
      else v = v.with_truncation(work);  // Newton supplies the missing tail
    }
    if (!unit) continue;
    newton_lambda(fr.sys, y, work, opt.rel_tol);
    out.push_back(std::move(y));
  }
  return out;
}

// Repeatedly probe at low precision and shrink lambda until the series stop growing fast.
template <class Probe>
Frame pick_frame(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt, Probe probe) {
  double lam = 1;
  Frame fr = make_frame(F, u, lam, opt.rel_tol);
  for (int pass = 0; pass < kFramePasses; ++pass) {
    double g = 0;
    for (const auto& y : probe(fr)) g = std::max(g, tail_growth(y));
    const double next = lam * std::exp(-1.25 * g);
    if (g <= kGrowthOk || !(next > 1e-80)) break;
    lam = next;
    fr = make_frame(F, u, lam, opt.rel_tol);
  }
  return fr;
}

const Rational kProbe(2);

}  // namespace

CriticalPoint hensel_lift(const LaurentNovikov& F, const RVec& u, const std::vector<Complex>& root,
                          const CriticalOptions& opt) {
  auto sys = chart_system(F, u, opt.rel_tol);
  double cond = log_jacobian_cond(sys.leading, root);
  if (!(cond < opt.cond_limit)) {
    std::ostringstream os;
    os << "leading log-Jacobian is singular at u = " << u_str(u) << " (condition number " << cond << ")";
    throw CriticalError(CriticalError::Kind::DegenerateJacobian, os.str());
  }
  std::size_t lad = ladder_size(sys, work_truncation(opt, opt.margin_steps), opt.ladder_limit);
  if (lad > opt.ladder_limit)
    throw CriticalError(CriticalError::Kind::LadderExplosion,
                        "exponent monoid at u = " + u_str(u) + " is not discrete below the working precision");
  Frame fr = pick_frame(F, u, opt, [&](const Frame& f) {
    auto y = units_from(root, kProbe);
    newton_lambda(f.sys, y, kProbe, opt.rel_tol);
    return std::vector<std::vector<NovikovScalar>>{y};
  });
  NewtonOutcome best;
  for (int step = 0; step < std::max(1, opt.margin_steps); ++step) {
    Rational work = work_truncation(opt, step);
    auto y = units_from(root, work);
    best = newton_lambda(fr.sys, y, work, opt.rel_tol);
    CriticalPoint cp = finish(fr, y, "hensel", opt);
    cp.leading = root;
    if (best.converged && cp.residual_valuation >= opt.emax) return cp;
  }
  throw CriticalError(CriticalError::Kind::NoConvergence,
                      "Newton over the Novikov field stalled at residual valuation " + to_string(best.residual) +
                          " at u = " + u_str(u));
}

std::vector<CriticalPoint> lift_by_elimination(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt) {
  if (F.nvars() > 2) throw CriticalError(CriticalError::Kind::Unsupported, "elimination over the Novikov field needs n <= 2");
  Frame fr = pick_frame(F, u, opt, [&](const Frame& f) {
    auto c = elimination_candidates(f, kProbe, opt);
    LambdaSystemOptions lo;
    lo.target = kProbe;
    lo.rel_tol = opt.rel_tol;
    std::vector<LaurentNovikov> eqs;
    for (const auto& E : f.sys.equations) eqs.push_back(E.truncated(kProbe));
    for (auto& r : eliminant_roots(eqs, lo))
      if (!r.is_zero() && r.val() == Rational(0)) c.push_back({r});
    return c;
  });
  std::vector<CriticalPoint> out;
  for (int step = 0; step < std::max(1, opt.margin_steps); ++step) {
    out.clear();
    Rational work = work_truncation(opt, step);
    bool all_ok = true;
    std::vector<std::vector<NovikovScalar>> kept;
    for (auto& y : elimination_candidates(fr, work, opt)) {
      CriticalPoint cp = finish(fr, y, "elimination", opt);
      if (cp.residual_valuation < opt.emax) {
        all_ok = false;
        continue;
      }
      bool dup = false;
      for (const auto& k : kept) {
        bool same = true;
        for (std::size_t i = 0; i < y.size(); ++i)
          if (NovikovScalar::relative_distance(k[i], y[i], opt.emax) > 1e-6) same = false;
        if (same) dup = true;
      }
      if (dup) continue;
      kept.push_back(y);
      out.push_back(cp);
    }
    if (all_ok) break;
  }
  return out;
}

NovikovScalar hessian_determinant(const LaurentNovikov& F, const CriticalPoint& cp) {
  LaurentNovikov G = F.chart_shift(cp.u);
  auto H = G.log_hessian();
  const std::size_t n = H.size();
  std::vector<std::vector<UPoly<NovikovScalar>>> M(n, std::vector<UPoly<NovikovScalar>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = UPoly<NovikovScalar>({H[i][j].evaluate(cp.units)});
  auto d = laplace_det(M);
  return d.is_zero() ? NovikovScalar::zero(cp.units.empty() ? kBig : cp.units.front().truncation()) : d.c[0];
}

std::vector<Rational> residual_valuations(const LaurentNovikov& F, const CriticalPoint& cp, double rel_tol) {
  LaurentNovikov G = F.chart_shift(cp.u);
  std::vector<Rational> out;
  for (int i = 0; i < G.nvars(); ++i) {
    LaurentNovikov D = G.log_derivative(i);
    NovikovScalar r = D.evaluate(cp.units);
    ExtRational v = eff_val(r, rel_tol * std::max(coef_scale(D), 1e-300));
    out.push_back(v.finite() ? std::min(v.value(), r.truncation()) : r.truncation());
  }
  return out;
}

CriticalPoint classify(const LaurentNovikov& F, CriticalPoint cp, const CriticalOptions& opt) {
  LaurentNovikov G = F.chart_shift(cp.u);
  cp.value = G.evaluate(cp.units);
  auto H = G.log_hessian();
  const std::size_t n = H.size();
  double prod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s = std::max(s, H[i][j].evaluate(cp.units).max_abs());
    prod *= std::max(s, 1e-300);
  }
  NovikovScalar det = hessian_determinant(F, cp);
  ExtRational hv = eff_val(det, opt.hess_tol * prod);
  cp.nondegenerate = hv.finite() && hv.value() < det.truncation();
  cp.hessian_valuation = cp.nondegenerate ? hv : ExtRational::pos_inf();
  cp.hessian_leading = cp.nondegenerate ? det.coefficient(hv.value()) : Complex(0.0, 0.0);
  cp.b_components.clear();
  for (const auto& y : cp.units) cp.b_components.push_back(y.log());
  if (cp.leading.empty())
    for (const auto& y : cp.units) cp.leading.push_back(y.leading_coefficient());
  auto rv = residual_valuations(F, cp, opt.rel_tol);
  cp.residual_valuation = rv.empty() ? Rational(0) : *std::min_element(rv.begin(), rv.end());
  return cp;
}

ChartResult critical_points_at(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt) {
  ChartResult res;
  res.u = u;
  auto sys = chart_system(F, u, opt.rel_tol);
  ComplexSolveOptions co;
  co.seed = opt.seed;
  auto cs = solve_complex_system(sys.leading, co);
  res.leading_roots = cs.roots;
  res.degenerate_locus = cs.degenerate_locus;
  if (!cs.diagnostic.empty()) res.diagnostics.push_back("u = " + u_str(u) + ": " + cs.diagnostic);
  bool need_elim = cs.degenerate_locus;
  for (const auto& r : cs.roots) {
    if (!(r.cond < opt.cond_limit)) {
      need_elim = true;
      continue;
    }
    try {
      res.points.push_back(hensel_lift(F, u, r.y, opt));
    } catch (const CriticalError& e) {
      res.diagnostics.push_back(e.what());
      need_elim = true;
    }
  }
  if (need_elim) {
    if (F.nvars() <= 2) {
      for (auto& cp : lift_by_elimination(F, u, opt)) {
        bool dup = false;
        for (const auto& o : res.points)
          if (same_point(o, cp, opt.emax)) dup = true;
        if (!dup) res.points.push_back(std::move(cp));
      }
    } else {
      res.diagnostics.push_back("u = " + u_str(u) + ": singular leading roots left unlifted (n > 2)");
    }
  }
  std::sort(res.points.begin(), res.points.end(), point_less);
  return res;
}

CriticalSearch find_critical_points(const LaurentNovikov& F, const MomentPolytope& P, const CriticalOptions& opt) {
  CriticalSearch s;
  if (opt.only_candidates) {
    std::set<RVec> c(opt.candidates.begin(), opt.candidates.end());
    s.candidates.assign(c.begin(), c.end());
  } else {
    s.candidates = enumerate_valuations(F, P, opt.denom, opt.candidates, opt.parallel);
  }
  s.charts = lift_charts(F, s.candidates, opt, opt.parallel ? Exec::OpenMP : Exec::Serial);
  for (auto& ch : s.charts) {
    for (auto& p : ch.points) {
      p.in_interior = P.interior(p.u);
      s.points.push_back(p);
    }
    for (const auto& d : ch.diagnostics) s.diagnostics.push_back(d);
  }
  std::sort(s.points.begin(), s.points.end(), point_less);
  s.kushnirenko = kushnirenko_bound(F);
  return s;
}

}  // namespace nvt

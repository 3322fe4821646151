#include "nvtoric/elimination.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace nvt {

namespace {

template <class S, class Map>
BPoly<S> bpoly_from(const Map& terms) {
  std::int64_t m1 = 0, m2 = 0, M1 = 0, M2 = 0;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (first) {
      m1 = M1 = k[0];
      m2 = M2 = k[1];
      first = false;
    }
    m1 = std::min(m1, k[0]);
    M1 = std::max(M1, k[0]);
    m2 = std::min(m2, k[1]);
    M2 = std::max(M2, k[1]);
  }
  BPoly<S> b(first ? 1 : static_cast<std::size_t>(M1 - m1 + 1));
  if (first) return b;
  for (auto& u : b) u.c.assign(static_cast<std::size_t>(M2 - m2 + 1), ScalarOps<S>::zero());
  for (const auto& [k, c] : terms) b[static_cast<std::size_t>(k[0] - m1)].c[static_cast<std::size_t>(k[1] - m2)] = c;
  for (auto& u : b) u.trim();
  return b;
}

template <class S, class Map>
UPoly<S> upoly_from(const Map& terms) {
  std::int64_t m = 0, M = 0;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (first) {
      m = M = k[0];
      first = false;
    }
    m = std::min(m, k[0]);
    M = std::max(M, k[0]);
  }
  UPoly<S> u;
  if (first) return u;
  u.c.assign(static_cast<std::size_t>(M - m + 1), ScalarOps<S>::zero());
  for (const auto& [k, c] : terms) u.c[static_cast<std::size_t>(k[0] - m)] = c;
  u.trim();
  return u;
}

double coef_scale(const CLaurent& f) {
  double s = 0;
  for (const auto& [k, c] : f) s = std::max(s, std::abs(c));
  return s;
}

bool same_root(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(b[i]))) return false;
  return true;
}

Eigen::MatrixXcd log_jacobian(const std::vector<CLaurent>& f, const std::vector<Complex>& y) {
  const auto n = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXcd J(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      J(i, j) = evaluate(log_derivative(f[static_cast<std::size_t>(i)], static_cast<int>(j)), y);
  return J;
}

}  // namespace

bool newton_complex(const std::vector<CLaurent>& f, std::vector<Complex>& y, int max_iter);

namespace {

// A singular root lies on a curve of roots if Newton from a step along the kernel
// direction converges to a nearby, different root.
bool on_root_curve(const std::vector<CLaurent>& f, const std::vector<Complex>& y) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(log_jacobian(f, y), Eigen::ComputeFullV);
  const auto& V = svd.matrixV();
  const Eigen::Index k = V.cols() - 1;
  for (double eps : {1e-2, -1e-2}) {
    std::vector<Complex> z = y;
    for (std::size_t j = 0; j < z.size(); ++j) z[j] *= std::exp(eps * V(static_cast<Eigen::Index>(j), k));
    if (!newton_complex(f, z, 30)) continue;
    double d = 0;
    for (std::size_t j = 0; j < z.size(); ++j) d = std::max(d, std::abs(std::log(z[j] / y[j])));
    if (d > 1e-3) return true;
  }
  return false;
}

}  // namespace

BPoly<NovikovScalar> to_bpoly(const LaurentNovikov& f) {
  if (f.nvars() != 2) throw std::invalid_argument("to_bpoly needs two variables");
  return bpoly_from<NovikovScalar>(f.terms());
}
BPoly<Complex> to_bpoly(const CLaurent& f) { return bpoly_from<Complex>(f); }
UPoly<NovikovScalar> to_upoly(const LaurentNovikov& f) {
  if (f.nvars() != 1) throw std::invalid_argument("to_upoly needs one variable");
  return upoly_from<NovikovScalar>(f.terms());
}
UPoly<Complex> to_upoly(const CLaurent& f) { return upoly_from<Complex>(f); }

double relative_residual(const std::vector<CLaurent>& f, const std::vector<Complex>& y) {
  double r = 0;
  for (const auto& fi : f) {
    double s = 0;
    for (const auto& [k, c] : fi) {
      double m = std::abs(c);
      for (std::size_t i = 0; i < k.size(); ++i) m *= std::pow(std::abs(y[i]), static_cast<double>(k[i]));
      s = std::max(s, m);
    }
    r = std::max(r, std::abs(evaluate(fi, y)) / std::max(s, 1e-300));
  }
  return r;
}

double log_jacobian_cond(const std::vector<CLaurent>& f, const std::vector<Complex>& y) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(log_jacobian(f, y));
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double lo = s(s.size() - 1);
  return lo == 0 ? std::numeric_limits<double>::infinity() : s(0) / lo;
}

bool newton_complex(const std::vector<CLaurent>& f, std::vector<Complex>& y, int max_iter) {
  const auto n = static_cast<Eigen::Index>(y.size());
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd r(n);
    for (Eigen::Index i = 0; i < n; ++i) r(i) = evaluate(f[static_cast<std::size_t>(i)], y);
    if (relative_residual(f, y) < 1e-14) return true;
    Eigen::VectorXcd d = log_jacobian(f, y).colPivHouseholderQr().solve(-r);
    double step = d.norm();
    if (!std::isfinite(step)) return false;
    // damp large steps to stay in the torus
    double damp = step > 0.5 ? 0.5 / step : 1.0;
    for (Eigen::Index j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] *= 1.0 + damp * d(j);
    for (const auto& v : y)
      if (std::abs(v) < 1e-12 || std::abs(v) > 1e12 || !std::isfinite(std::abs(v))) return false;
    if (step < 1e-15) break;
  }
  return relative_residual(f, y) < 1e-10;
}

ComplexSolve solve_complex_system(const std::vector<CLaurent>& f, const ComplexSolveOptions& opt) {
  ComplexSolve out;
  const std::size_t n = f.size();
  auto add = [&](std::vector<Complex> y) {
    if (!newton_complex(f, y, 20)) {
      if (relative_residual(f, y) > opt.accept) return;
    }
    double res = relative_residual(f, y);
    if (res > opt.accept) return;
    // escaping to the toric boundary is not a root in the torus
    for (const auto& v : y)
      if (!(std::abs(v) > 1e-6 && std::abs(v) < 1e6)) return;
    for (const auto& r : out.roots)
      if (same_root(r.y, y, opt.dedup)) return;
    out.roots.push_back({y, res, log_jacobian_cond(f, y)});
  };
  for (const auto& fi : f)
    if (fi.empty()) {
      out.degenerate_locus = true;
      out.diagnostic = "an equation vanishes identically at leading order";
      return out;
    }

  if (n == 1) {
    for (const auto& r : complex_roots(to_upoly(f[0]))) add({r});
  } else if (n == 2) {
    auto p = to_bpoly(f[0]), q = to_bpoly(f[1]);
    auto R = resultant_x(p, q);
    double rs = 0;
    for (const auto& c : R.c) rs = std::max(rs, std::abs(c));
    double ref = std::pow(std::max(coef_scale(f[0]), 1e-300), static_cast<double>(q.size() - 1)) *
                 std::pow(std::max(coef_scale(f[1]), 1e-300), static_cast<double>(p.size() - 1));
    if (rs <= 1e-8 * ref) {
      out.degenerate_locus = true;
      out.diagnostic = "resultant vanishes identically: positive-dimensional leading locus";
    } else {
      for (const auto& y2 : complex_roots(R)) {
        UPoly<Complex> px;
        for (const auto& pi : p) px.c.push_back(pi.eval(y2));
        px.trim();
        double ps = 0;
        for (const auto& c : px.c) ps = std::max(ps, std::abs(c));
        if (ps < 1e-10 * coef_scale(f[0])) {
          px.c.clear();
          for (const auto& qi : q) px.c.push_back(qi.eval(y2));
          px.trim();
          double qs = 0;
          for (const auto& c : px.c) qs = std::max(qs, std::abs(c));
          if (qs < 1e-10 * coef_scale(f[1])) {
            // both equations vanish on the line y2 = const
            out.degenerate_locus = true;
            out.diagnostic = "both equations vanish along a fibre: positive-dimensional leading locus";
            continue;
          }
        }
        for (const auto& y1 : complex_roots(px)) add({y1, y2});
      }
    }
  }
  // multistart, also as a cross-check for n <= 2
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    std::normal_distribution<double> rad(0.0, 0.6);
    const int starts = n <= 2 ? opt.starts / 4 : opt.starts;
    for (int s = 0; s < starts; ++s) {
      std::vector<Complex> y(n);
      for (auto& v : y) v = std::polar(std::exp(rad(rng)), ang(rng));
      if (newton_complex(f, y)) add(y);
    }
  }
  if (!out.degenerate_locus)
    for (const auto& r : out.roots)
      if (!(r.cond < 1e8) && on_root_curve(f, r.y)) {
        out.degenerate_locus = true;
        out.diagnostic = "singular roots form a curve: positive-dimensional leading locus";
        break;
      }
  // on a positive-dimensional locus multistart lands anywhere on it; keep isolated roots only
  if (out.degenerate_locus)
    std::erase_if(out.roots, [&](const ComplexRoot& r) { return !(r.cond < 1e8) || (r.cond > 1e3 && on_root_curve(f, r.y)); });
  std::sort(out.roots.begin(), out.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    for (std::size_t i = 0; i < a.y.size(); ++i) {
      if (std::abs(a.y[i].real() - b.y[i].real()) > 1e-9) return a.y[i].real() < b.y[i].real();
      if (std::abs(a.y[i].imag() - b.y[i].imag()) > 1e-9) return a.y[i].imag() < b.y[i].imag();
    }
    return false;
  });
  return out;
}

namespace {

NovikovScalar chop_s(const NovikovScalar& x, double tol) {
  std::vector<Term> ts;
  for (const auto& t : x.terms())
    if (std::abs(t.coef) > tol) ts.push_back(t);
  return NovikovScalar::from_terms(std::move(ts), x.truncation());
}

bool same_lambda(const std::vector<NovikovScalar>& a, const std::vector<NovikovScalar>& b, const Rational& below) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (NovikovScalar::relative_distance(a[i], b[i], below) > 1e-6) return false;
  return true;
}

}  // namespace

std::vector<std::vector<NovikovScalar>> solve_lambda_system(const std::vector<LaurentNovikov>& f,
                                                            const LambdaSystemOptions& opt) {
  std::vector<std::vector<NovikovScalar>> out;
  LambdaRootOptions ro;
  ro.target = opt.target;
  ro.rel_tol = opt.rel_tol;
  const Rational cmp = std::min(Rational(1), opt.target / Rational(2));
  auto push = [&](std::vector<NovikovScalar> y) {
    for (const auto& r : out)
      if (same_lambda(r, y, cmp)) return;
    out.push_back(std::move(y));
  };
  if (f.size() == 1) {
    for (auto& r : lambda_roots(to_upoly(f[0]), Rational(0), ro)) push({r});
    return out;
  }
  if (f.size() != 2) throw std::invalid_argument("elimination over the Novikov field supports n <= 2");
  auto p = to_bpoly(f[0]), q = to_bpoly(f[1]);
  auto R = resultant_x(p, q);
  double scale = 0;
  for (const auto& fi : f)
    for (const auto& [k, c] : fi.terms()) scale = std::max(scale, c.max_abs());
  for (const auto& y2 : lambda_roots(R, Rational(0), ro)) {
    auto specialise = [&](const BPoly<NovikovScalar>& b) {
      UPoly<NovikovScalar> u;
      for (const auto& bi : b) u.c.push_back(chop_s(bi.eval(y2), opt.rel_tol * scale));
      u.trim();
      return u;
    };
    UPoly<NovikovScalar> px = specialise(p);
    if (poly_scale(px) <= opt.rel_tol * scale) px = specialise(q);
    for (const auto& y1 : lambda_roots(px, Rational(0), ro)) {
      // reject spurious pairs (roots of the resultant that belong to another branch)
      NovikovScalar rq = f[1].evaluate({y1, y2});
      NovikovScalar rp = f[0].evaluate({y1, y2});
      Rational need = opt.target / Rational(2);
      ExtRational vq = rq.valuation_above(opt.accept_tol * scale), vp = rp.valuation_above(opt.accept_tol * scale);
      if ((!vq.finite() || vq.value() >= need) && (!vp.finite() || vp.value() >= need)) push({y1, y2});
    }
  }
  return out;
}

std::vector<NovikovScalar> eliminant_roots(const std::vector<LaurentNovikov>& f, const LambdaSystemOptions& opt) {
  LambdaRootOptions ro;
  ro.target = opt.target;
  ro.rel_tol = opt.rel_tol;
  if (f.size() == 1) return lambda_roots(to_upoly(f[0]), Rational(0), ro);
  if (f.size() != 2) throw std::invalid_argument("elimination over the Novikov field supports n <= 2");
  return lambda_roots(resultant_x(to_bpoly(f[0]), to_bpoly(f[1])), Rational(0), ro);
}

}  // namespace nvt

#include "nvtoric/upoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace nvt {

std::vector<Complex> complex_roots(const UPoly<Complex>& p, double rel_zero) {
  double mx = 0;
  for (const auto& c : p.c) mx = std::max(mx, std::abs(c));
  if (mx == 0) return {};
  const double z = rel_zero * mx;
  int hi = p.degree(), lo = 0;
  while (hi >= 0 && std::abs(p.c[static_cast<std::size_t>(hi)]) <= z) --hi;
  while (lo <= hi && std::abs(p.c[static_cast<std::size_t>(lo)]) <= z) ++lo;
  const int d = hi - lo;
  if (d <= 0) return {};
  std::vector<Complex> a(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) a[static_cast<std::size_t>(j)] = p.c[static_cast<std::size_t>(lo + j)];
  std::vector<Complex> roots;
  if (d == 1) {
    roots.push_back(-a[0] / a[1]);
  } else {
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(d)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()[i]);
  }
  UPoly<Complex> q(a);
  UPoly<Complex> dq = q.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      Complex f = q.eval(r), fp = dq.eval(r);
      if (std::abs(fp) < 1e-300) break;
      Complex step = f / fp;
      Complex nr = r - step;
      if (std::abs(q.eval(nr)) >= std::abs(f)) break;
      r = nr;
    }
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius) {
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        Complex a = roots[members[k]];
        if (std::abs(roots[j] - a) <= radius * std::max(1.0, std::abs(a))) {
          used[j] = true;
          members.push_back(j);
        }
      }
    Complex s(0.0, 0.0);
    for (auto m : members) s += roots[m];
    out.push_back({s / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  return out;
}

UPoly<NovikovScalar> chop_poly(const UPoly<NovikovScalar>& p, double abs_tol) {
  UPoly<NovikovScalar> r;
  for (const auto& c : p.c) {
    std::vector<Term> ts;
    for (const auto& t : c.terms())
      if (std::abs(t.coef) > abs_tol) ts.push_back(t);
    r.c.push_back(NovikovScalar::from_terms(std::move(ts), c.truncation()));
  }
  r.trim();
  return r;
}

double poly_scale(const UPoly<NovikovScalar>& p) {
  double s = 0;
  for (const auto& c : p.c) s = std::max(s, c.max_abs());
  return s;
}

std::vector<NewtonEdge> newton_polygon(const UPoly<NovikovScalar>& p, double abs_tol) {
  struct Pt {
    std::int64_t j;
    Rational v;
  };
  std::vector<Pt> pts;
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    ExtRational v = p.c[j].valuation_above(abs_tol);
    if (v.finite()) pts.push_back({static_cast<std::int64_t>(j), v.value()});
  }
  // lower hull, points already sorted by j
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it lies on or above segment a-q
      Rational lhs = (b.v - a.v) * Rational(q.j - a.j), rhs = (q.v - a.v) * Rational(b.j - a.j);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  std::vector<NewtonEdge> edges;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    std::int64_t dj = hull[i + 1].j - hull[i].j;
    edges.push_back({(hull[i].v - hull[i + 1].v) / Rational(dj), static_cast<int>(dj)});
  }
  return edges;
}

namespace {

struct Ctx {
  double abs_tol;
  Rational target;
  Rational trunc;
  int max_depth;
};

NovikovScalar chop_scalar(const NovikovScalar& x, double abs_tol) {
  std::vector<Term> ts;
  for (const auto& t : x.terms())
    if (std::abs(t.coef) > abs_tol) ts.push_back(t);
  return NovikovScalar::from_terms(std::move(ts), x.truncation());
}

NovikovScalar leading_term(const NovikovScalar& x) {
  return NovikovScalar::monomial(x.leading_coefficient(), x.val(), x.truncation());
}

// Newton refinement of a simple root; falls back to leading-term (Puiseux) steps while the
// Hensel condition v(p(x)) > 2 v(p'(x)) does not hold yet.
NovikovScalar refine_simple(const UPoly<NovikovScalar>& p, NovikovScalar x, const Ctx& ctx) {
  UPoly<NovikovScalar> dp = p.derivative();
  const double tol = ctx.abs_tol * std::pow(std::max(1.0, std::abs(x.leading_coefficient())), p.degree());
  ExtRational best = ExtRational::neg_inf();
  int stall = 0;
  for (int it = 0; it < 200; ++it) {
    NovikovScalar r = chop_scalar(p.eval(x), tol);
    ExtRational ev = r.valuation_above(tol);
    if (!ev.finite() || ev.value() >= ctx.target) break;
    if (best.finite() && ev <= best) {
      if (++stall >= 3) break;
    } else {
      stall = 0;
    }
    best = std::max(best, ev);
    NovikovScalar d = chop_scalar(dp.eval(x), tol);
    if (!d.valuation_above(tol).finite()) break;
    NovikovScalar dx = (r * d.inverse()).truncated(ctx.trunc);
    if (dx.is_zero()) break;
    if (!(ev.value() > Rational(2) * d.val())) dx = leading_term(dx);
    x = (x - dx).truncated(ctx.trunc);
  }
  return x;
}

void roots_rec(const UPoly<NovikovScalar>& p, const Rational& v, const Ctx& ctx, int depth,
               std::vector<NovikovScalar>& out) {
  std::int64_t jmin = -1;
  Rational m(0);
  std::vector<std::pair<std::size_t, Rational>> ev;
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    ExtRational e = p.c[j].valuation_above(ctx.abs_tol);
    if (!e.finite()) continue;
    Rational w = e.value() + Rational(static_cast<std::int64_t>(j)) * v;
    ev.push_back({j, w});
    if (jmin < 0 || w < m) {
      m = w;
      jmin = static_cast<std::int64_t>(j);
    }
  }
  if (jmin < 0) return;
  std::vector<Complex> ec(p.c.size(), Complex(0.0, 0.0));
  int on_edge = 0;
  for (const auto& [j, w] : ev)
    if (w == m) {
      ec[j] = p.c[j].coefficient(m - Rational(static_cast<std::int64_t>(j)) * v);
      ++on_edge;
    }
  if (on_edge < 2) return;
  UPoly<Complex> edge(ec);
  auto clusters = cluster_roots(complex_roots(edge), 1e-4);
  for (auto cl : clusters) {
    if (cl.multiplicity > 1) {
      // centre is a simple root of the (m-1)-th derivative
      UPoly<Complex> q = edge;
      for (int k = 1; k < cl.multiplicity; ++k) q = q.derivative();
      UPoly<Complex> dq = q.derivative();
      for (int it = 0; it < 20; ++it) {
        Complex fp = dq.eval(cl.center);
        if (std::abs(fp) == 0) break;
        Complex s = q.eval(cl.center) / fp;
        cl.center -= s;
        if (std::abs(s) < 1e-16 * std::max(1.0, std::abs(cl.center))) break;
      }
    }
    NovikovScalar x0 = NovikovScalar::monomial(cl.center, v, ctx.trunc);
    if (cl.multiplicity == 1) {
      out.push_back(refine_simple(p, x0, ctx));
      continue;
    }
    if (depth >= ctx.max_depth) {
      out.push_back(x0);
      continue;
    }
    UPoly<NovikovScalar> p1 = chop_poly(p.taylor_shift(x0), ctx.abs_tol);
    if (p1.is_zero()) {
      out.push_back(x0);
      continue;
    }
    ExtRational e0 = p1.c[0].valuation_above(ctx.abs_tol);
    bool pushed_center = false;
    if (!e0.finite() || e0.value() >= ctx.target) {
      out.push_back(x0);
      pushed_center = true;
    }
    for (const auto& e : newton_polygon(p1, ctx.abs_tol)) {
      if (!(e.root_valuation > v)) continue;
      if (e.root_valuation >= ctx.target) {
        if (!pushed_center) out.push_back(x0);
        pushed_center = true;
        continue;
      }
      std::vector<NovikovScalar> sub;
      roots_rec(p1, e.root_valuation, ctx, depth + 1, sub);
      for (const auto& z : sub) out.push_back((x0 + z).truncated(ctx.trunc));
    }
  }
}

}  // namespace

std::vector<NovikovScalar> lambda_roots(const UPoly<NovikovScalar>& p, const Rational& v, const LambdaRootOptions& opt) {
  if (p.is_zero()) return {};
  Rational trunc(1000000);
  for (const auto& c : p.c)
    if (!c.is_zero()) trunc = std::min(trunc, c.truncation());
  Ctx ctx{opt.rel_tol * poly_scale(p), opt.target, trunc, opt.max_depth};
  std::vector<NovikovScalar> out;
  roots_rec(chop_poly(p, ctx.abs_tol), v, ctx, 0, out);
  return out;
}

}  // namespace nvt

#pragma once

#include "nvtoric/novikov.hpp"

#include <map>
#include <vector>

namespace nvt {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex from(double d) { return Complex(d, 0.0); }
  static bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
};

template <>
struct ScalarOps<NovikovScalar> {
  static NovikovScalar zero() { return NovikovScalar::zero(Rational(1000000)); }
  static NovikovScalar from(double d) { return NovikovScalar(Complex(d, 0.0), Rational(1000000)); }
  static bool is_zero(const NovikovScalar& c) { return c.is_zero(); }
};

// Dense univariate polynomial, c[j] is the coefficient of x^j.
template <class S>
struct UPoly {
  std::vector<S> c;

  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const S& operator[](std::size_t j) const { return c[j]; }
  S coeff(std::size_t j) const { return j < c.size() ? c[j] : ScalarOps<S>::zero(); }

  void trim() {
    while (!c.empty() && ScalarOps<S>::is_zero(c.back())) c.pop_back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), ScalarOps<S>::zero());
    for (std::size_t j = 0; j < a.c.size(); ++j) r.c[j] = a.c[j];
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[j] = r.c[j] + b.c[j];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, ScalarOps<S>::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (ScalarOps<S>::is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (!ScalarOps<S>::is_zero(b.c[j])) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }

  S eval(const S& x) const {
    if (c.empty()) return ScalarOps<S>::zero();
    S r = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) r = r * x + c[j];
    return r;
  }

  UPoly derivative() const {
    UPoly r;
    for (std::size_t j = 1; j < c.size(); ++j) r.c.push_back(c[j] * ScalarOps<S>::from(static_cast<double>(j)));
    r.trim();
    return r;
  }

  // p(x + a)
  UPoly taylor_shift(const S& a) const {
    UPoly r;
    if (c.empty()) return r;
    r.c = c;
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t j = n - 1; j > k; --j) r.c[j - 1] = r.c[j - 1] + a * r.c[j];
    r.trim();
    return r;
  }
};

// Determinant by Laplace expansion along rows with memoisation over column subsets (N <= 24).
template <class S>
UPoly<S> laplace_det(const std::vector<std::vector<UPoly<S>>>& M) {
  const std::size_t N = M.size();
  if (N == 0) return UPoly<S>({ScalarOps<S>::from(1.0)});
  std::map<std::uint32_t, UPoly<S>> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> UPoly<S> {
    if (row == N) return UPoly<S>({ScalarOps<S>::from(1.0)});
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    UPoly<S> acc;
    int before = 0;
    for (std::size_t col = 0; col < N; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!M[row][col].is_zero()) {
        UPoly<S> minor = self(self, row + 1, mask & ~(1u << col));
        if (!minor.is_zero()) {
          UPoly<S> t = M[row][col] * minor;
          acc = (before % 2 == 0) ? acc + t : acc - t;
        }
      }
      ++before;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (N >= 32) ? ~0u : ((1u << N) - 1u));
}

// Bivariate polynomial: b[i] is the coefficient of x^i, a polynomial in the second variable.
template <class S>
using BPoly = std::vector<UPoly<S>>;

// Res_x(p, q) as a polynomial in the second variable.
template <class S>
UPoly<S> resultant_x(const BPoly<S>& p, const BPoly<S>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1;  // degrees in x
  const std::size_t N = m + n;
  if (N == 0) return UPoly<S>({ScalarOps<S>::from(1.0)});
  std::vector<std::vector<UPoly<S>>> M(N, std::vector<UPoly<S>>(N));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) M[r][r + i] = p[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) M[n + r][r + i] = q[n - i];
  return laplace_det(M);
}

// Roots of a complex polynomial (companion matrix + Newton polish). Leading/trailing
// coefficients below rel_zero * max |c| are treated as zero; zero roots are not returned.
std::vector<Complex> complex_roots(const UPoly<Complex>& p, double rel_zero = 1e-12);

struct RootCluster {
  Complex center;
  int multiplicity = 1;
};
// Groups roots closer than radius * max(1, |z|); centres are the cluster means.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius);

// Newton polygon of a polynomial over the Novikov field. Coefficients are read through
// valuation_above(abs_tol) so numerical noise does not create vertices.
struct NewtonEdge {
  Rational root_valuation;  // minus the slope
  int count = 0;            // number of roots with this valuation
};
std::vector<NewtonEdge> newton_polygon(const UPoly<NovikovScalar>& p, double abs_tol);

struct LambdaRootOptions {
  Rational target{5};    // stop refining once residual valuations reach this
  double rel_tol = 1e-9; // relative noise floor (to the largest coefficient)
  int max_depth = 24;
};

// Roots x of p with v_T(x) = v, by Newton-Puiseux cluster splitting and Newton refinement.
std::vector<NovikovScalar> lambda_roots(const UPoly<NovikovScalar>& p, const Rational& v, const LambdaRootOptions& opt);

// Drops coefficient terms with |coef| <= abs_tol.
UPoly<NovikovScalar> chop_poly(const UPoly<NovikovScalar>& p, double abs_tol);
double poly_scale(const UPoly<NovikovScalar>& p);

}  // namespace nvt

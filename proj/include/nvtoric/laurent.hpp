#pragma once

#include "nvtoric/novikov.hpp"
#include "nvtoric/polytope.hpp"

#include <map>
#include <string>
#include <vector>

namespace nvt {

using CLaurent = std::map<IVec, Complex>;

// Laurent polynomial in y_1..y_n with Novikov coefficients.
class LaurentNovikov {
 public:
  explicit LaurentNovikov(int n = 0) : n_(n) {}
  static LaurentNovikov monomial(int n, IVec k, const NovikovScalar& c);
  static LaurentNovikov constant(int n, const NovikovScalar& c);

  int nvars() const { return n_; }
  const std::map<IVec, NovikovScalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  NovikovScalar coefficient(const IVec& k) const;
  void add_term(const IVec& k, const NovikovScalar& c);

  LaurentNovikov operator-() const;
  LaurentNovikov& operator+=(const LaurentNovikov& o);
  LaurentNovikov& operator-=(const LaurentNovikov& o);
  friend LaurentNovikov operator+(LaurentNovikov a, const LaurentNovikov& b) { return a += b; }
  friend LaurentNovikov operator-(LaurentNovikov a, const LaurentNovikov& b) { return a -= b; }
  friend LaurentNovikov operator*(const LaurentNovikov& a, const LaurentNovikov& b);
  LaurentNovikov scaled(const NovikovScalar& c) const;
  // T -> lambda T on every coefficient.
  LaurentNovikov rescaled_T(double lambda) const;
  LaurentNovikov pow(int k) const;
  LaurentNovikov truncated(const Rational& e) const;
  // Drops coefficients with every term below abs_tol.
  LaurentNovikov chopped(double abs_tol) const;

  // Smallest coefficient valuation (+inf when empty).
  ExtRational min_valuation() const;
  // y_i = T^{u_i} ybar_i
  LaurentNovikov chart_shift(const RVec& u) const;
  // y_i d/dy_i
  LaurentNovikov log_derivative(int i) const;
  std::vector<LaurentNovikov> log_derivatives() const;
  // y_i y_j d^2/dy_i dy_j
  std::vector<std::vector<LaurentNovikov>> log_hessian() const;
  // Coefficients at T^{v} for the minimal valuation v.
  CLaurent leading_part(Rational* v = nullptr) const;
  // Coefficients at T^{v} for a given v.
  CLaurent slice(const Rational& v) const;

  NovikovScalar evaluate(const std::vector<NovikovScalar>& y) const;
  // y_i = prod_j Y_j^{map[i][j]}
  LaurentNovikov substitute(const std::vector<IVec>& map) const;

  std::vector<IVec> support() const;
  std::string str(int digits = 12) const;

 private:
  int n_;
  std::map<IVec, NovikovScalar> terms_;
};

// |a - b| coefficient-wise below `below`, relative to the largest coefficient.
double laurent_distance(const LaurentNovikov& a, const LaurentNovikov& b, const Rational& below);

Complex evaluate(const CLaurent& f, const std::vector<Complex>& y);
CLaurent log_derivative(const CLaurent& f, int i);

struct NewtonPolytopeInfo {
  Rational volume;         // Euclidean volume of the convex hull of the support
  std::int64_t bound = 0;  // n! * volume
  bool degenerate = false;
};
NewtonPolytopeInfo newton_polytope(const LaurentNovikov& f);
std::int64_t kushnirenko_bound(const LaurentNovikov& f);

std::string monomial_str(const IVec& k);

}  // namespace nvt

#pragma once

#include "nvtoric/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nvt {

using Complex = std::complex<double>;

inline const Rational kDefaultTruncation{5};
// Relative magnitude below which a coefficient counts as zero.
inline constexpr double kZeroTol = 1e-12;

enum class Convention { T, Q };

struct Term {
  Rational exp;
  Complex coef;
};

class ValuationError : public std::domain_error {
 public:
  ValuationError(const std::string& what, ExtRational v) : std::domain_error(what), valuation(v) {}
  ExtRational valuation;
};

// Truncated series sum a_i T^{l_i}, l_i rational and strictly increasing, all l_i < truncation.
// q^l is T^{-l}; q is never stored.
class NovikovScalar {
 public:
  NovikovScalar() : trunc_(kDefaultTruncation) {}
  explicit NovikovScalar(Complex c, Rational trunc = kDefaultTruncation);
  NovikovScalar(double c) : NovikovScalar(Complex(c, 0.0)) {}  // NOLINT

  static NovikovScalar zero(Rational trunc = kDefaultTruncation);
  static NovikovScalar monomial(Complex c, Rational e, Rational trunc = kDefaultTruncation);
  // Terms may be unsorted and repeated; they are merged and normalised.
  static NovikovScalar from_terms(std::vector<Term> terms, Rational trunc = kDefaultTruncation);

  const std::vector<Term>& terms() const { return terms_; }
  Rational truncation() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }

  ExtRational valuation(Convention c = Convention::T) const;
  // Finite T-valuation; throws ValuationError on zero.
  Rational val() const;
  // Valuation, or the truncation when the scalar is zero to precision.
  Rational valuation_bound() const;
  // Valuation after discarding terms with |coef| <= abs_tol (numerical residual checks).
  ExtRational valuation_above(double abs_tol) const;
  double max_abs() const;
  Complex leading_coefficient() const;
  Complex coefficient(const Rational& e) const;
  bool in_lambda0() const;
  bool in_lambda_plus() const;

  NovikovScalar operator-() const;
  NovikovScalar& operator+=(const NovikovScalar& o);
  NovikovScalar& operator-=(const NovikovScalar& o);
  NovikovScalar& operator*=(const NovikovScalar& o);
  NovikovScalar& operator/=(const NovikovScalar& o);
  friend NovikovScalar operator+(NovikovScalar a, const NovikovScalar& b) { return a += b; }
  friend NovikovScalar operator-(NovikovScalar a, const NovikovScalar& b) { return a -= b; }
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
  friend NovikovScalar operator/(const NovikovScalar& a, const NovikovScalar& b) { return a * b.inverse(); }

  NovikovScalar scaled(Complex c) const;
  // Multiply by T^e (exact; truncation shifts with it).
  NovikovScalar shifted(const Rational& e) const;
  // T -> lambda T (lambda > 0): the coefficient at T^e is multiplied by lambda^e. Preserves valuations.
  NovikovScalar rescaled_T(double lambda) const;
  // Lower the truncation to min(current, e).
  NovikovScalar truncated(const Rational& e) const;
  // Declare the stored terms exact up to e (used for exact inputs such as polynomial data).
  NovikovScalar with_truncation(const Rational& e) const;
  // Drop terms with |coef| <= rel * |largest coef|.
  NovikovScalar chop(double rel) const;

  NovikovScalar inverse() const;
  NovikovScalar exp() const;
  NovikovScalar log() const;
  // x^r for a unit-times-monomial x; principal branch on the leading coefficient.
  NovikovScalar pow(const Rational& r) const;
  NovikovScalar pow(int k) const;

  // "a0*T^(p/q) + a1*T^(r/s) + ..."; with_order appends " + O(T^(E))".
  std::string str(bool with_order = false, int digits = 12) const;
  static NovikovScalar parse(const std::string& s, Rational trunc = kDefaultTruncation);

  // Largest coefficient-wise difference relative to the largest magnitude, comparing terms below e.
  static double relative_distance(const NovikovScalar& a, const NovikovScalar& b, const Rational& below);

 private:
  void normalize_tail();
  std::vector<Term> terms_;
  Rational trunc_;
};

enum class ExpLogMode { Exp, Log };
NovikovScalar exp_log(const NovikovScalar& x, ExpLogMode mode);
ExtRational valuation(const NovikovScalar& x, Convention c = Convention::T);

// Finitely generated exponent monoid with denominator bound.
class ExponentMonoid {
 public:
  ExponentMonoid() = default;
  ExponentMonoid(std::vector<Rational> generators, std::int64_t denom_bound = 60);
  const std::vector<Rational>& generators() const { return gens_; }
  std::int64_t denom_bound() const { return denom_bound_; }
  // Generator of the group G spanned by the monoid (gcd); 0 for the trivial monoid.
  Rational group_step() const;
  bool in_group(const Rational& x) const;
  // x is an N-combination of generators (bounded search).
  bool in_monoid(const Rational& x) const;

 private:
  std::vector<Rational> gens_;
  std::int64_t denom_bound_ = 60;
};

std::string format_complex(Complex c, int digits = 12);
Complex parse_complex(const std::string& s);

}  // namespace nvt

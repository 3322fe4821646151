#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nvt {

// Exact rational with 64-bit numerator/denominator, always reduced with positive denominator.
// Intermediate products use 128-bit integers; results that do not fit throw std::overflow_error.
class Rational {
 public:
  Rational(std::int64_t n = 0, std::int64_t d = 1);  // NOLINT

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static Rational from_wide(__int128 n, __int128 d);
  std::int64_t num_;
  std::int64_t den_;
};

Rational abs(const Rational& r);

using RVec = std::vector<Rational>;

// Rational extended by +inf / -inf, used for valuations and levels.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite), value_(0) {}
  ExtRational(Rational v) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  ExtRational(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  Kind kind() const { return kind_; }
  // Throws if infinite.
  Rational value() const;

  ExtRational operator-() const;
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  std::string str() const;

 private:
  explicit ExtRational(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

// "p/q" or "p"; also accepts decimal-free integers with sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Greatest g > 0 with every element an integer multiple of g. Zero entries are ignored; returns 0 if none.
Rational rational_gcd(const std::vector<Rational>& xs);

// True iff x is an integer multiple of g (g > 0).
bool is_multiple_of(const Rational& x, const Rational& g);

Rational floor_div(const Rational& x, const Rational& g);

}  // namespace nvt

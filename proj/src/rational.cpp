#include "nvtoric/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nvt {

namespace {
__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  constexpr __int128 lim64 = static_cast<__int128>(INT64_MAX);
  if (d > 0 && d <= lim64 && n <= lim64 && n >= -lim64) {
    // 64-bit fast path
    auto n64 = static_cast<std::int64_t>(n), d64 = static_cast<std::int64_t>(d);
    std::int64_t g = std::gcd(n64, d64);
    Rational r;
    r.num_ = g > 1 ? n64 / g : n64;
    r.den_ = g > 1 ? d64 / g : d64;
    return r;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
  if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d != 1) *this = from_wide(n, d);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

Rational ExtRational::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of infinite ExtRational");
  return value_;
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return ExtRational(-value_);
  }
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.kind_ == ExtRational::Kind::Finite && a.value_ < b.value_;
}

std::string ExtRational::str() const {
  if (kind_ == Kind::PosInf) return "+inf";
  if (kind_ == Kind::NegInf) return "-inf";
  return to_string(value_);
}

Rational parse_rational(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != ' ' && c != '(' && c != ')') s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("trailing characters");
    long long d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("trailing characters");
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: '" + s0 + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational rational_gcd(const std::vector<Rational>& xs) {
  std::int64_t num = 0, den = 1;
  bool any = false;
  for (const auto& x : xs) {
    if (x == 0) continue;
    std::int64_t n = std::abs(x.numerator()), d = x.denominator();
    if (!any) {
      num = n;
      den = d;
      any = true;
      continue;
    }
    // gcd(a/b, c/d) = gcd(a,c) / lcm(b,d) for reduced fractions
    num = std::gcd(num, n);
    den = std::lcm(den, d);
  }
  if (!any) return Rational(0);
  return Rational(num, den);
}

bool is_multiple_of(const Rational& x, const Rational& g) {
  Rational q = x / g;
  return q.denominator() == 1;
}

Rational floor_div(const Rational& x, const Rational& g) {
  Rational q = x / g;
  std::int64_t n = q.numerator(), d = q.denominator();
  std::int64_t f = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --f;
  return Rational(f);
}

}  // namespace nvt

#include "nvtoric/novikov.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace nvt {

namespace {

inline bool rless(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.numerator()) * b.denominator() <
         static_cast<__int128>(b.numerator()) * a.denominator();
}
inline bool req(const Rational& a, const Rational& b) {
  return a.numerator() == b.numerator() && a.denominator() == b.denominator();
}
inline const Rational& rmin(const Rational& a, const Rational& b) { return rless(b, a) ? b : a; }

struct MagTerm {
  Rational exp;
  Complex coef;
  double mag;  // largest summand magnitude contributing to this exponent
};

// Sort, merge equal exponents with cancellation detection, drop terms at or beyond trunc.
std::vector<Term> merge_terms(std::vector<MagTerm>& raw, const Rational& trunc) {
  std::sort(raw.begin(), raw.end(), [](const MagTerm& a, const MagTerm& b) { return rless(a.exp, b.exp); });
  std::vector<Term> out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    if (!rless(raw[i].exp, trunc)) break;
    Complex s = raw[i].coef;
    double m = raw[i].mag;
    std::size_t j = i + 1;
    while (j < raw.size() && req(raw[j].exp, raw[i].exp)) {
      s += raw[j].coef;
      m = std::max(m, raw[j].mag);
      ++j;
    }
    if (std::abs(s) > kZeroTol * m && s != Complex(0.0, 0.0)) out.push_back({raw[i].exp, s});
    i = j;
  }
  return out;
}

// Product on a common exponent grid 1/L when that grid is small; false if not applicable.
bool dense_product(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& tr, std::vector<Term>& out) {
  constexpr std::int64_t kMaxDen = 5040, kMaxSpan = 1 << 16;
  std::int64_t L = tr.denominator();
  for (const auto* v : {&a, &b})
    for (const auto& t : *v) {
      L = std::lcm(L, t.exp.denominator());
      if (L > kMaxDen) return false;
    }
  auto idx = [L](const Rational& e) { return e.numerator() * (L / e.denominator()); };
  const std::int64_t lo = idx(a.front().exp) + idx(b.front().exp), hi = idx(tr);
  if (hi <= lo) {
    out.clear();
    return true;
  }
  if (hi - lo > kMaxSpan) return false;
  const auto span = static_cast<std::size_t>(hi - lo);
  std::vector<Complex> acc(span, Complex(0.0, 0.0));
  std::vector<double> mag(span, 0.0);
  std::vector<std::int64_t> ib(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) ib[j] = idx(b[j].exp);
  for (const auto& x : a) {
    const std::int64_t ix = idx(x.exp);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::int64_t k = ix + ib[j];
      if (k >= hi) break;
      const Complex c = x.coef * b[j].coef;
      const auto s = static_cast<std::size_t>(k - lo);
      acc[s] += c;
      mag[s] = std::max(mag[s], std::norm(c));
    }
  }
  out.clear();
  for (std::size_t s = 0; s < span; ++s) {
    if (mag[s] == 0) continue;
    if (std::norm(acc[s]) > kZeroTol * kZeroTol * mag[s] && acc[s] != Complex(0.0, 0.0))
      out.push_back({Rational(lo + static_cast<std::int64_t>(s), L), acc[s]});
  }
  return true;
}

}  // namespace

NovikovScalar::NovikovScalar(Complex c, Rational trunc) : trunc_(trunc) {
  if (c != Complex(0.0, 0.0) && rless(Rational(0), trunc)) terms_.push_back({Rational(0), c});
}

NovikovScalar NovikovScalar::zero(Rational trunc) {
  NovikovScalar z;
  z.trunc_ = trunc;
  return z;
}

NovikovScalar NovikovScalar::monomial(Complex c, Rational e, Rational trunc) {
  NovikovScalar z;
  z.trunc_ = trunc;
  if (c != Complex(0.0, 0.0) && rless(e, trunc)) z.terms_.push_back({e, c});
  return z;
}

NovikovScalar NovikovScalar::from_terms(std::vector<Term> terms, Rational trunc) {
  std::vector<MagTerm> raw;
  raw.reserve(terms.size());
  for (auto& t : terms) raw.push_back({t.exp, t.coef, std::abs(t.coef)});
  NovikovScalar z;
  z.trunc_ = trunc;
  z.terms_ = merge_terms(raw, trunc);
  z.normalize_tail();
  return z;
}

void NovikovScalar::normalize_tail() {
  if (terms_.empty()) return;
  double lead = std::abs(terms_.front().coef);
  std::erase_if(terms_, [&](const Term& t) { return std::abs(t.coef) <= kZeroTol * lead; });
}

ExtRational NovikovScalar::valuation(Convention c) const {
  if (terms_.empty()) return c == Convention::T ? ExtRational::pos_inf() : ExtRational::neg_inf();
  return c == Convention::T ? ExtRational(terms_.front().exp) : ExtRational(-terms_.front().exp);
}

ExtRational valuation(const NovikovScalar& x, Convention c) { return x.valuation(c); }

Rational NovikovScalar::val() const {
  if (terms_.empty()) throw ValuationError("valuation of zero scalar", ExtRational::pos_inf());
  return terms_.front().exp;
}

Rational NovikovScalar::valuation_bound() const { return terms_.empty() ? trunc_ : terms_.front().exp; }

ExtRational NovikovScalar::valuation_above(double abs_tol) const {
  for (const auto& t : terms_)
    if (std::abs(t.coef) > abs_tol) return ExtRational(t.exp);
  return ExtRational::pos_inf();
}

double NovikovScalar::max_abs() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  return m;
}

Complex NovikovScalar::leading_coefficient() const {
  return terms_.empty() ? Complex(0.0, 0.0) : terms_.front().coef;
}

Complex NovikovScalar::coefficient(const Rational& e) const {
  for (const auto& t : terms_)
    if (req(t.exp, e)) return t.coef;
  return Complex(0.0, 0.0);
}

bool NovikovScalar::in_lambda0() const { return terms_.empty() || !rless(terms_.front().exp, Rational(0)); }
bool NovikovScalar::in_lambda_plus() const {
  return terms_.empty() || rless(Rational(0), terms_.front().exp);
}

NovikovScalar NovikovScalar::operator-() const {
  NovikovScalar r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& o) {
  Rational tr = rmin(trunc_, o.trunc_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    const Term* pick = nullptr;
    Term merged;
    if (j >= o.terms_.size() || (i < terms_.size() && rless(terms_[i].exp, o.terms_[j].exp))) {
      pick = &terms_[i++];
    } else if (i >= terms_.size() || rless(o.terms_[j].exp, terms_[i].exp)) {
      pick = &o.terms_[j++];
    } else {
      Complex s = terms_[i].coef + o.terms_[j].coef;
      double m = std::max(std::abs(terms_[i].coef), std::abs(o.terms_[j].coef));
      merged = {terms_[i].exp, s};
      ++i;
      ++j;
      if (std::abs(s) <= kZeroTol * m || s == Complex(0.0, 0.0)) continue;
      pick = &merged;
    }
    if (!rless(pick->exp, tr)) break;
    out.push_back(*pick);
  }
  terms_ = std::move(out);
  trunc_ = tr;
  normalize_tail();
  return *this;
}

NovikovScalar& NovikovScalar::operator-=(const NovikovScalar& o) { return *this += -o; }

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  Rational tr = rmin(a.trunc_ + b.valuation_bound(), b.trunc_ + a.valuation_bound());
  NovikovScalar r;
  r.trunc_ = tr;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (dense_product(a.terms_, b.terms_, tr, r.terms_)) {
    r.normalize_tail();
    return r;
  }
  std::vector<MagTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Rational e = x.exp + y.exp;
      if (!rless(e, tr)) break;  // b's exponents increase
      Complex c = x.coef * y.coef;
      raw.push_back({e, c, std::abs(c)});
    }
  r.terms_ = merge_terms(raw, tr);
  r.normalize_tail();
  return r;
}

NovikovScalar& NovikovScalar::operator*=(const NovikovScalar& o) { return *this = *this * o; }
NovikovScalar& NovikovScalar::operator/=(const NovikovScalar& o) { return *this = *this * o.inverse(); }

NovikovScalar NovikovScalar::scaled(Complex c) const {
  if (c == Complex(0.0, 0.0)) return zero(trunc_ + Rational(0));
  NovikovScalar r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

NovikovScalar NovikovScalar::rescaled_T(double lambda) const {
  if (!(lambda > 0)) throw std::invalid_argument("rescaling factor must be positive");
  NovikovScalar r = *this;
  const double ll = std::log(lambda);
  for (auto& t : r.terms_) t.coef *= std::exp(ll * to_double(t.exp));
  return r;
}

NovikovScalar NovikovScalar::shifted(const Rational& e) const {
  NovikovScalar r = *this;
  for (auto& t : r.terms_) t.exp += e;
  r.trunc_ += e;
  return r;
}

NovikovScalar NovikovScalar::truncated(const Rational& e) const {
  NovikovScalar r = *this;
  if (rless(e, r.trunc_)) {
    r.trunc_ = e;
    std::erase_if(r.terms_, [&](const Term& t) { return !rless(t.exp, e); });
  }
  return r;
}

NovikovScalar NovikovScalar::with_truncation(const Rational& e) const {
  NovikovScalar r = *this;
  r.trunc_ = e;
  std::erase_if(r.terms_, [&](const Term& t) { return !rless(t.exp, e); });
  return r;
}

NovikovScalar NovikovScalar::chop(double rel) const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  NovikovScalar r = *this;
  std::erase_if(r.terms_, [&](const Term& t) { return std::abs(t.coef) <= rel * m; });
  return r;
}

namespace {

// x = c T^l (1 + eps) with v(eps) > 0. eps carries relative precision trunc - l.
void factor_unit(const NovikovScalar& x, Complex& c, Rational& l, NovikovScalar& eps) {
  c = x.leading_coefficient();
  l = x.val();
  std::vector<Term> rest;
  for (std::size_t i = 1; i < x.terms().size(); ++i)
    rest.push_back({x.terms()[i].exp - l, x.terms()[i].coef / c});
  eps = NovikovScalar::from_terms(std::move(rest), x.truncation() - l);
}

constexpr int kMaxSeriesSteps = 100000;

}  // namespace

NovikovScalar NovikovScalar::inverse() const {
  if (is_zero()) throw ValuationError("invert: zero input", ExtRational::pos_inf());
  Complex c;
  Rational l;
  NovikovScalar eps;
  factor_unit(*this, c, l, eps);
  NovikovScalar neg = -eps;
  NovikovScalar term(Complex(1.0, 0.0), eps.truncation());
  NovikovScalar sum = term;
  for (int k = 0; k < kMaxSeriesSteps && !eps.is_zero(); ++k) {
    term = (term * neg).truncated(eps.truncation());
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.scaled(1.0 / c).shifted(-l);
}

NovikovScalar NovikovScalar::exp() const {
  if (is_zero()) return NovikovScalar(Complex(1.0, 0.0), trunc_);
  if (rless(val(), Rational(0)))
    throw ValuationError("exp: requires v_T >= 0, got v_T = " + to_string(val()), valuation());
  Complex c0 = coefficient(Rational(0));
  std::vector<Term> rest;
  for (const auto& t : terms_)
    if (rless(Rational(0), t.exp)) rest.push_back(t);
  NovikovScalar xp = from_terms(std::move(rest), trunc_);
  NovikovScalar term(Complex(1.0, 0.0), trunc_);
  NovikovScalar sum = term;
  for (int k = 1; k < kMaxSeriesSteps && !xp.is_zero(); ++k) {
    term = (term * xp).scaled(1.0 / k).truncated(trunc_);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.scaled(std::exp(c0));
}

NovikovScalar NovikovScalar::log() const {
  if (is_zero() || val() != 0)
    throw ValuationError("log: requires a unit of Lambda_0 (v_T = 0), got v_T = " + valuation().str(),
                         valuation());
  Complex c;
  Rational l;
  NovikovScalar eps;
  factor_unit(*this, c, l, eps);
  double arg = std::arg(c);
  if (arg < 0) arg += 2.0 * std::numbers::pi;
  if (arg >= 2.0 * std::numbers::pi) arg -= 2.0 * std::numbers::pi;
  Complex lc(std::log(std::abs(c)), arg);
  NovikovScalar sum = zero(eps.truncation());
  NovikovScalar power(Complex(1.0, 0.0), eps.truncation());
  for (int k = 1; k < kMaxSeriesSteps && !eps.is_zero(); ++k) {
    power = (power * eps).truncated(eps.truncation());
    if (power.is_zero()) break;
    sum += power.scaled((k % 2 == 1 ? 1.0 : -1.0) / k);
  }
  return sum + NovikovScalar(lc, sum.truncation());
}

NovikovScalar NovikovScalar::pow(const Rational& r) const {
  if (r.denominator() == 1 && r.numerator() >= 0 && r.numerator() < 64) return pow(static_cast<int>(r.numerator()));
  if (is_zero()) {
    if (r > 0) return zero(trunc_ * r);
    throw ValuationError("pow: zero base with non-positive exponent", ExtRational::pos_inf());
  }
  Complex c;
  Rational l;
  NovikovScalar eps;
  factor_unit(*this, c, l, eps);
  // binomial series (1+eps)^r
  double rd = to_double(r);
  NovikovScalar sum(Complex(1.0, 0.0), eps.truncation());
  NovikovScalar power(Complex(1.0, 0.0), eps.truncation());
  double binom = 1.0;
  for (int k = 1; k < kMaxSeriesSteps && !eps.is_zero(); ++k) {
    power = (power * eps).truncated(eps.truncation());
    if (power.is_zero()) break;
    binom *= (rd - (k - 1)) / k;
    if (binom == 0.0) break;
    sum += power.scaled(binom);
  }
  Complex cr = std::pow(c, rd);
  return sum.scaled(cr).shifted(l * r);
}

NovikovScalar NovikovScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  NovikovScalar result(Complex(1.0, 0.0), std::max(trunc_, Rational(0)) + Rational(1000000));
  if (k == 0) return NovikovScalar(Complex(1.0, 0.0), trunc_ - valuation_bound());
  NovikovScalar base = *this;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string format_complex(Complex c, int digits) {
  auto fmt = [&](double v) {
    char buf[64];
    if (v == 0.0) v = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::string(buf);
  };
  double re = c.real(), im = c.imag();
  if (std::abs(im) <= 1e-300 || im == 0.0) return fmt(re);
  if (re == 0.0) return "(" + fmt(im) + "i)";
  std::string ims = fmt(im);
  if (ims[0] != '-') ims = "+" + ims;
  return "(" + fmt(re) + ims + "i)";
}

std::string NovikovScalar::str(bool with_order, int digits) const {
  std::string s;
  if (terms_.empty()) s = "0";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string cs = format_complex(terms_[i].coef, digits);
    if (i > 0) {
      if (cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    s += cs;
    if (terms_[i].exp != 0) s += "*T^(" + to_string(terms_[i].exp) + ")";
  }
  if (with_order) s += " + O(T^(" + to_string(trunc_) + "))";
  return s;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t p = 0;
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    ws();
    return p < s.size() && s[p] == c;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scalar parse error at " + std::to_string(p) + ": " + msg + " in '" + s + "'");
  }
  double number() {
    ws();
    std::size_t start = p;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.')) ++p;
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
      if (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
        p = q;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      }
    }
    std::string tok = s.substr(start, p - start);
    if (tok.empty() || tok == "+" || tok == "-") fail("expected number");
    return std::stod(tok);
  }
  bool at_digit() {
    ws();
    return p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.');
  }
  // real or imaginary literal: 2, 2.5i, i
  Complex literal() {
    ws();
    if (eat('i')) return Complex(0, 1);
    double v = number();
    if (eat('i')) return Complex(0, v);
    return Complex(v, 0);
  }
  // complex inside parentheses: sums of literals
  Complex paren_complex() {
    Complex z(0, 0);
    bool first = true;
    while (!peek(')')) {
      double sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected + or -");
      }
      z += sign * literal();
      first = false;
    }
    eat(')');
    return z;
  }
  Rational exponent() {
    if (eat('(')) {
      std::size_t start = p;
      while (p < s.size() && s[p] != ')') ++p;
      if (p >= s.size()) fail("unterminated exponent");
      Rational r = parse_rational(s.substr(start, p - start));
      ++p;
      return r;
    }
    ws();
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) fail("expected exponent");
    return parse_rational(s.substr(start, p - start));
  }
};

}  // namespace

NovikovScalar NovikovScalar::parse(const std::string& s, Rational trunc) {
  Lexer lx{s};
  std::vector<Term> terms;
  std::optional<Rational> order;
  bool first = true;
  lx.ws();
  if (lx.p >= s.size()) lx.fail("empty input");
  while (true) {
    lx.ws();
    if (lx.p >= s.size()) break;
    double sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    first = false;
    lx.ws();
    if (lx.p < s.size() && s[lx.p] == 'O') {
      ++lx.p;
      if (!lx.eat('(') || !lx.eat('T')) lx.fail("expected O(T^...)");
      Rational e(1);
      if (lx.eat('^')) e = lx.exponent();
      if (!lx.eat(')')) lx.fail("expected )");
      order = e;
      continue;
    }
    Complex c(1, 0);
    bool have_coef = false;
    if (lx.eat('(')) {
      c = lx.paren_complex();
      have_coef = true;
    } else if (lx.at_digit() || lx.peek('i')) {
      c = lx.literal();
      have_coef = true;
    }
    Rational e(0);
    if (have_coef && lx.eat('*')) {
      if (!lx.eat('T')) lx.fail("expected T");
      e = Rational(1);
      if (lx.eat('^')) e = lx.exponent();
    } else if (!have_coef) {
      if (!lx.eat('T')) lx.fail("expected coefficient or T");
      e = Rational(1);
      if (lx.eat('^')) e = lx.exponent();
    }
    terms.push_back({e, sign * c});
  }
  return from_terms(std::move(terms), order ? *order : trunc);
}

double NovikovScalar::relative_distance(const NovikovScalar& a, const NovikovScalar& b, const Rational& below) {
  NovikovScalar d = a.with_truncation(below + Rational(1000000)) - b.with_truncation(below + Rational(1000000));
  double m = 0, dm = 0;
  for (const auto& t : a.terms_)
    if (rless(t.exp, below)) m = std::max(m, std::abs(t.coef));
  for (const auto& t : b.terms_)
    if (rless(t.exp, below)) m = std::max(m, std::abs(t.coef));
  for (const auto& t : d.terms_)
    if (rless(t.exp, below)) dm = std::max(dm, std::abs(t.coef));
  if (m == 0) return dm;
  return dm / m;
}

NovikovScalar exp_log(const NovikovScalar& x, ExpLogMode mode) {
  return mode == ExpLogMode::Exp ? x.exp() : x.log();
}

ExponentMonoid::ExponentMonoid(std::vector<Rational> generators, std::int64_t denom_bound)
    : gens_(std::move(generators)), denom_bound_(denom_bound) {
  for (const auto& g : gens_) {
    if (g <= 0) throw std::invalid_argument("exponent monoid generators must be positive");
    if (g.denominator() > denom_bound_)
      throw std::invalid_argument("generator " + to_string(g) + " exceeds denominator bound");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Rational ExponentMonoid::group_step() const { return rational_gcd(gens_); }

bool ExponentMonoid::in_group(const Rational& x) const {
  if (x == 0) return true;
  Rational g = group_step();
  if (g == 0) return false;
  return is_multiple_of(x, g);
}

bool ExponentMonoid::in_monoid(const Rational& x) const {
  if (x == 0) return true;
  if (x < 0 || gens_.empty() || !in_group(x)) return false;
  // reachability over multiples of the group step
  Rational g = group_step();
  std::int64_t target = (x / g).numerator();
  if (target > 200000) return true;  // beyond Frobenius range in practice
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  std::vector<std::int64_t> steps;
  for (const auto& gen : gens_) steps.push_back((gen / g).numerator());
  for (std::int64_t t = 1; t <= target; ++t)
    for (auto st : steps)
      if (st <= t && reach[static_cast<std::size_t>(t - st)]) {
        reach[static_cast<std::size_t>(t)] = 1;
        break;
      }
  return reach[static_cast<std::size_t>(target)];
}

Complex parse_complex(const std::string& s) {
  NovikovScalar x = NovikovScalar::parse(s, Rational(1000));
  if (x.is_zero()) return Complex(0, 0);
  if (x.terms().size() != 1 || x.terms()[0].exp != 0) throw std::invalid_argument("not a complex constant: " + s);
  return x.terms()[0].coef;
}

}  // namespace nvt

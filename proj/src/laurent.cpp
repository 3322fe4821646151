#include "nvtoric/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace nvt {

LaurentNovikov LaurentNovikov::monomial(int n, IVec k, const NovikovScalar& c) {
  LaurentNovikov f(n);
  f.add_term(k, c);
  return f;
}

LaurentNovikov LaurentNovikov::constant(int n, const NovikovScalar& c) {
  return monomial(n, IVec(static_cast<std::size_t>(n), 0), c);
}

NovikovScalar LaurentNovikov::coefficient(const IVec& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? NovikovScalar::zero(Rational(1000000)) : it->second;
}

void LaurentNovikov::add_term(const IVec& k, const NovikovScalar& c) {
  if (static_cast<int>(k.size()) != n_) throw std::invalid_argument("monomial has wrong number of variables");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentNovikov LaurentNovikov::operator-() const {
  LaurentNovikov r(n_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentNovikov& LaurentNovikov::operator+=(const LaurentNovikov& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.n_ != n_) throw std::invalid_argument("adding Laurent polynomials in different variables");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentNovikov& LaurentNovikov::operator-=(const LaurentNovikov& o) { return *this += -o; }

LaurentNovikov operator*(const LaurentNovikov& a, const LaurentNovikov& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("multiplying Laurent polynomials in different variables");
  LaurentNovikov r(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      IVec k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      r.add_term(k, ca * cb);
    }
  return r;
}

LaurentNovikov LaurentNovikov::scaled(const NovikovScalar& c) const {
  LaurentNovikov r(n_);
  for (const auto& [k, x] : terms_) r.add_term(k, x * c);
  return r;
}

LaurentNovikov LaurentNovikov::rescaled_T(double lambda) const {
  LaurentNovikov r(n_);
  for (const auto& [k, x] : terms_) r.add_term(k, x.rescaled_T(lambda));
  return r;
}

LaurentNovikov LaurentNovikov::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
  LaurentNovikov r = constant(n_, NovikovScalar(Complex(1.0, 0.0), Rational(1000000)));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

LaurentNovikov LaurentNovikov::truncated(const Rational& e) const {
  LaurentNovikov r(n_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.truncated(e));
  return r;
}

LaurentNovikov LaurentNovikov::chopped(double abs_tol) const {
  LaurentNovikov r(n_);
  for (const auto& [k, c] : terms_) {
    std::vector<Term> ts;
    for (const auto& t : c.terms())
      if (std::abs(t.coef) > abs_tol) ts.push_back(t);
    if (!ts.empty()) r.add_term(k, NovikovScalar::from_terms(std::move(ts), c.truncation()));
  }
  return r;
}

ExtRational LaurentNovikov::min_valuation() const {
  ExtRational v = ExtRational::pos_inf();
  for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
  return v;
}

LaurentNovikov LaurentNovikov::chart_shift(const RVec& u) const {
  if (static_cast<int>(u.size()) != n_) throw std::invalid_argument("chart shift has wrong dimension");
  LaurentNovikov r(n_);
  for (const auto& [k, c] : terms_) {
    Rational s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += Rational(k[i]) * u[i];
    r.terms_.emplace(k, c.shifted(s));
  }
  return r;
}

LaurentNovikov LaurentNovikov::log_derivative(int i) const {
  LaurentNovikov r(n_);
  for (const auto& [k, c] : terms_) {
    auto ki = k.at(static_cast<std::size_t>(i));
    if (ki != 0) r.terms_.emplace(k, c.scaled(Complex(static_cast<double>(ki), 0.0)));
  }
  return r;
}

std::vector<LaurentNovikov> LaurentNovikov::log_derivatives() const {
  std::vector<LaurentNovikov> out;
  for (int i = 0; i < n_; ++i) out.push_back(log_derivative(i));
  return out;
}

std::vector<std::vector<LaurentNovikov>> LaurentNovikov::log_hessian() const {
  std::vector<std::vector<LaurentNovikov>> h(static_cast<std::size_t>(n_),
                                             std::vector<LaurentNovikov>(static_cast<std::size_t>(n_), LaurentNovikov(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, c] : terms_) {
        double f = static_cast<double>(k[static_cast<std::size_t>(i)]) *
                   static_cast<double>(k[static_cast<std::size_t>(j)] - (i == j ? 1 : 0));
        if (f != 0.0) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms_.emplace(k, c.scaled(f));
      }
  return h;
}

CLaurent LaurentNovikov::slice(const Rational& v) const {
  CLaurent out;
  for (const auto& [k, c] : terms_) {
    Complex a = c.coefficient(v);
    if (a != Complex(0.0, 0.0)) out[k] = a;
  }
  return out;
}

CLaurent LaurentNovikov::leading_part(Rational* v) const {
  ExtRational m = min_valuation();
  if (!m.finite()) return {};
  if (v) *v = m.value();
  return slice(m.value());
}

NovikovScalar LaurentNovikov::evaluate(const std::vector<NovikovScalar>& y) const {
  if (static_cast<int>(y.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::map<std::int64_t, NovikovScalar>> powers(static_cast<std::size_t>(n_));
  auto power = [&](std::size_t i, std::int64_t e) -> const NovikovScalar& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(e, y[i].pow(static_cast<int>(e))).first->second;
  };
  NovikovScalar sum = NovikovScalar::zero(Rational(1000000));
  bool first = true;
  for (const auto& [k, c] : terms_) {
    NovikovScalar t = c;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) t *= power(i, k[i]);
    if (first) {
      sum = t;
      first = false;
    } else {
      sum += t;
    }
  }
  return sum;
}

LaurentNovikov LaurentNovikov::substitute(const std::vector<IVec>& map) const {
  if (static_cast<int>(map.size()) != n_) throw std::invalid_argument("substitution map has wrong size");
  const std::size_t m = map.empty() ? 0 : map[0].size();
  LaurentNovikov r(static_cast<int>(m));
  for (const auto& [k, c] : terms_) {
    IVec K(m, 0);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) K[j] += k[i] * map[i][j];
    r.add_term(K, c);
  }
  return r;
}

std::vector<IVec> LaurentNovikov::support() const {
  std::vector<IVec> s;
  for (const auto& [k, c] : terms_) s.push_back(k);
  return s;
}

std::string monomial_str(const IVec& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(i + 1);
    if (k[i] != 1) s += "^" + (k[i] < 0 ? "(" + std::to_string(k[i]) + ")" : std::to_string(k[i]));
  }
  return s.empty() ? "1" : s;
}

std::string LaurentNovikov::str(int digits) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str(false, digits) + ")";
    std::string m = monomial_str(k);
    if (m != "1") s += "*" + m;
  }
  return s;
}

double laurent_distance(const LaurentNovikov& a, const LaurentNovikov& b, const Rational& below) {
  double scale = 0, diff = 0;
  std::map<IVec, bool> keys;
  for (const auto& [k, c] : a.terms()) {
    keys[k] = true;
    scale = std::max(scale, c.max_abs());
  }
  for (const auto& [k, c] : b.terms()) {
    keys[k] = true;
    scale = std::max(scale, c.max_abs());
  }
  for (const auto& [k, unused] : keys) {
    NovikovScalar d = a.coefficient(k) - b.coefficient(k);
    for (const auto& t : d.terms())
      if (t.exp < below) diff = std::max(diff, std::abs(t.coef));
  }
  return scale == 0 ? diff : diff / scale;
}

Complex evaluate(const CLaurent& f, const std::vector<Complex>& y) {
  Complex s(0.0, 0.0);
  for (const auto& [k, c] : f) {
    Complex t = c;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) t *= std::pow(y[i], static_cast<int>(k[i]));
    s += t;
  }
  return s;
}

CLaurent log_derivative(const CLaurent& f, int i) {
  CLaurent r;
  for (const auto& [k, c] : f)
    if (k[static_cast<std::size_t>(i)] != 0) r[k] = c * static_cast<double>(k[static_cast<std::size_t>(i)]);
  return r;
}

NewtonPolytopeInfo newton_polytope(const LaurentNovikov& f) {
  NewtonPolytopeInfo info;
  std::vector<RVec> pts;
  for (const auto& k : f.support()) {
    RVec p;
    for (auto e : k) p.push_back(Rational(e));
    pts.push_back(p);
  }
  if (pts.empty()) {
    info.degenerate = true;
    return info;
  }
  try {
    info.volume = hull_volume_centroid(pts).volume;
  } catch (const std::invalid_argument&) {
    info.degenerate = true;
    return info;
  }
  Rational b = info.volume;
  for (int i = 2; i <= f.nvars(); ++i) b *= Rational(i);
  if (b.denominator() != 1) throw std::logic_error("lattice polytope with non-integral normalised volume");
  info.bound = b.numerator();
  return info;
}

std::int64_t kushnirenko_bound(const LaurentNovikov& f) { return newton_polytope(f).bound; }

}  // namespace nvt

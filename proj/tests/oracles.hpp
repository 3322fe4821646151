#pragma once
// Independent reference implementations used as test oracles.

#include "nvtoric/novikov.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using nvt::Complex;
using nvt::Rational;

// Power series in t = T^{1/D} on a dense coefficient array, exponents k/D for k in [lo, lo + size).
struct Dense {
  std::int64_t D = 1;
  std::int64_t lo = 0;
  std::vector<Complex> c;

  static Dense from(const nvt::NovikovScalar& x, std::int64_t D, std::int64_t lo, std::int64_t size) {
    Dense d{D, lo, std::vector<Complex>(static_cast<std::size_t>(size))};
    for (const auto& t : x.terms()) {
      Rational k = t.exp * Rational(D);
      if (k.denominator() != 1) throw std::logic_error("exponent off grid");
      std::int64_t i = k.numerator() - lo;
      if (i >= 0 && i < size) d.c[static_cast<std::size_t>(i)] = t.coef;
    }
    return d;
  }
  Complex at(std::int64_t k) const {
    std::int64_t i = k - lo;
    if (i < 0 || i >= static_cast<std::int64_t>(c.size())) return 0;
    return c[static_cast<std::size_t>(i)];
  }
};

// Coefficients of a*b for exponents k/D < hi/D.
inline std::map<std::int64_t, Complex> mul(const Dense& a, const Dense& b, std::int64_t hi) {
  std::map<std::int64_t, Complex> out;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      std::int64_t k = a.lo + static_cast<std::int64_t>(i) + b.lo + static_cast<std::int64_t>(j);
      if (k < hi) out[k] += a.c[i] * b.c[j];
    }
  return out;
}

// 1/a by long division: a has leading index a.lo (a.c[0] != 0); returns coefficients for k in [-a.lo, hi).
inline std::map<std::int64_t, Complex> inverse(const Dense& a, std::int64_t hi) {
  std::map<std::int64_t, Complex> r;
  Complex a0 = a.c[0];
  for (std::int64_t k = -a.lo; k < hi; ++k) {
    Complex s = (k == -a.lo) ? Complex(1) : Complex(0);
    for (std::int64_t j = 1; j <= k + a.lo; ++j) {
      auto it = r.find(k - j);
      if (it != r.end()) s -= a.at(a.lo + j) * it->second;
    }
    r[k] = s / a0;
  }
  return r;
}

// exp(x) for x with x.lo >= 0 via k f_k = sum_j j x_j f_{k-j} on the t-grid (constant term handled separately).
inline std::vector<Complex> exp_series(const Dense& x, std::int64_t hi) {
  std::vector<Complex> f(static_cast<std::size_t>(hi));
  f[0] = 1;
  for (std::int64_t k = 1; k < hi; ++k) {
    Complex s = 0;
    for (std::int64_t j = 1; j <= k; ++j) s += static_cast<double>(j) * x.at(j) * f[static_cast<std::size_t>(k - j)];
    f[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
  }
  Complex e0 = std::exp(x.at(0));
  for (auto& v : f) v *= e0;
  return f;
}

inline nvt::NovikovScalar random_scalar(std::mt19937_64& rng, int D, int kmin, int kmax, int nterms,
                                        Rational trunc) {
  std::uniform_int_distribution<int> ek(kmin, kmax);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<nvt::Term> ts;
  for (int i = 0; i < nterms; ++i) ts.push_back({Rational(ek(rng), D), Complex(u(rng), u(rng))});
  return nvt::NovikovScalar::from_terms(ts, trunc);
}

}  // namespace oracle

#include "nvtoric/valfield.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nvt {

namespace {

const Rational kExact{1000000};  // truncation for exact monomial multipliers

NovikovScalar exact_monomial(Complex c, const Rational& e) { return NovikovScalar::monomial(c, e, e + kExact); }

// Remove the term at exponent e if it is numerically negligible.
NovikovScalar purge_term(const NovikovScalar& x, const Rational& e, double abs_tol) {
  Complex c = x.coefficient(e);
  if (c == Complex(0.0, 0.0) || std::abs(c) > abs_tol) return x;
  std::vector<Term> ts;
  for (const auto& t : x.terms())
    if (t.exp != e) ts.push_back(t);
  return NovikovScalar::from_terms(std::move(ts), x.truncation());
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<BasisElement> basis, std::vector<FVec> boundary, ExponentMonoid G)
    : basis_(std::move(basis)), boundary_(std::move(boundary)), G_(std::move(G)) {
  const std::size_t n = basis_.size();
  if (boundary_.size() != n) throw std::invalid_argument("boundary matrix has wrong number of rows");
  for (const auto& row : boundary_)
    if (row.size() != n) throw std::invalid_argument("boundary matrix is not square");
  for (const auto& b : basis_)
    if (b.parity != 0 && b.parity != 1) throw std::invalid_argument("parity must be 0 or 1 for " + b.name);
  work_trunc_ = Rational(5);
  for (const auto& row : boundary_)
    for (const auto& x : row) work_trunc_ = std::max(work_trunc_, x.truncation());
}

FVec FilteredComplex::zero_vector() const { return FVec(dim(), NovikovScalar::zero(work_trunc_)); }

FVec FilteredComplex::unit(std::size_t i) const {
  FVec v = zero_vector();
  v.at(i) = NovikovScalar(Complex(1.0, 0.0), work_trunc_);
  return v;
}

FVec FilteredComplex::apply_boundary(const FVec& x) const {
  FVec out = zero_vector();
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x[j].is_zero()) {
      for (std::size_t i = 0; i < dim(); ++i)
        if (!boundary_[i][j].is_zero())
          out[i] = out[i].truncated(x[j].truncation() + boundary_[i][j].valuation_bound());
      continue;
    }
    for (std::size_t i = 0; i < dim(); ++i)
      if (!boundary_[i][j].is_zero()) out[i] += boundary_[i][j] * x[j];
  }
  return out;
}

ExtRational FilteredComplex::level(const FVec& x) const {
  ExtRational best = ExtRational::neg_inf();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    ExtRational l(basis_[i].level - x[i].val());
    if (l > best) best = l;
  }
  return best;
}

Rational FilteredComplex::precision_floor(const FVec& x) const {
  Rational f = basis_.empty() ? Rational(0) : basis_[0].level - x[0].truncation();
  for (std::size_t i = 1; i < dim(); ++i) f = std::max(f, basis_[i].level - x[i].truncation());
  return f;
}

std::vector<Complex> FilteredComplex::symbol(const FVec& x) const {
  ExtRational L = level(x);
  if (!L.finite()) throw std::invalid_argument("symbol of the zero vector");
  std::vector<Complex> s(dim());
  for (std::size_t i = 0; i < dim(); ++i) s[i] = x[i].coefficient(basis_[i].level - L.value());
  return s;
}

int FilteredComplex::parity_of(const FVec& x) const {
  int p = -2;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (p == -2) p = basis_[i].parity;
    else if (p != basis_[i].parity) return -1;
  }
  return p;
}

bool FilteredComplex::in_G_prime(const Rational& lv) const {
  for (const auto& b : basis_)
    if (G_.in_group(lv - b.level)) return true;
  return false;
}

std::string FilteredComplex::check() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = boundary_[i][j];
      if (x.is_zero()) continue;
      if (basis_[i].parity == basis_[j].parity)
        return "boundary is not parity-reversing at (" + basis_[i].name + ", " + basis_[j].name + ")";
      for (const auto& t : x.terms())
        if (!G_.in_group(t.exp))
          return "exponent " + to_string(t.exp) + " of boundary entry (" + basis_[i].name + ", " +
                 basis_[j].name + ") is not in G";
    }
  double scale = 0;
  for (const auto& row : boundary_)
    for (const auto& x : row) scale = std::max(scale, x.max_abs());
  for (std::size_t j = 0; j < n; ++j) {
    FVec d2 = apply_boundary(apply_boundary(unit(j)));
    for (std::size_t i = 0; i < n; ++i)
      if (d2[i].valuation_above(1e-9 * std::max(1.0, scale * scale)).finite())
        return "boundary squared is nonzero at (" + basis_[i].name + ", " + basis_[j].name + ")";
  }
  return {};
}

StandardBasis::Reduction StandardBasis::reduce(const FVec& x) const {
  const FilteredComplex& K = *K_;
  Reduction r;
  r.remainder = x;
  r.coeffs.assign(vecs_.size(), NovikovScalar::zero(K.working_truncation()));
  const int par = K.parity_of(x);
  std::vector<std::size_t> cand;
  for (std::size_t k = 0; k < vecs_.size(); ++k)
    if (par < 0 || parities_[k] == par) cand.push_back(k);

  for (int step = 0; step < 100000; ++step) {
    FVec& y = r.remainder;
    ExtRational L = K.level(y);
    Rational floor = K.precision_floor(y);
    if (!L.finite() || L.value() <= floor) {
      r.vanished = true;
      r.level = ExtRational(floor);
      return r;
    }
    std::vector<Complex> sig = K.symbol(y);
    double signorm = 0;
    for (auto c : sig) signorm = std::max(signorm, std::abs(c));
    bool solved = false;
    std::vector<Complex> coef(cand.size());
    if (!cand.empty()) {
      Eigen::MatrixXcd S(static_cast<Eigen::Index>(K.dim()), static_cast<Eigen::Index>(cand.size()));
      Eigen::VectorXcd s(static_cast<Eigen::Index>(K.dim()));
      for (std::size_t i = 0; i < K.dim(); ++i) {
        s(static_cast<Eigen::Index>(i)) = sig[i];
        for (std::size_t c = 0; c < cand.size(); ++c)
          S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = symbols_[cand[c]][i];
      }
      Eigen::VectorXcd sol = S.colPivHouseholderQr().solve(s);
      double res = (S * sol - s).norm();
      if (res <= 1e-9 * s.norm()) {
        solved = true;
        for (std::size_t c = 0; c < cand.size(); ++c) coef[c] = sol(static_cast<Eigen::Index>(c));
      }
    }
    if (!solved) {
      r.level = L;
      r.steps = step;
      return r;
    }
    const Rational Lv = L.value();
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (std::abs(coef[c]) <= 1e-12 * signorm) continue;
      const std::size_t k = cand[c];
      NovikovScalar m = exact_monomial(coef[c], levels_[k] - Lv);
      for (std::size_t i = 0; i < K.dim(); ++i)
        if (!vecs_[k][i].is_zero()) y[i] -= m * vecs_[k][i];
      r.coeffs[k] += m;
    }
    for (std::size_t i = 0; i < K.dim(); ++i)
      y[i] = purge_term(y[i], K.basis()[i].level - Lv, 1e-9 * signorm);
    r.steps = step + 1;
  }
  throw std::runtime_error("standard-basis sweep did not terminate");
}

void StandardBasis::push_unchecked(const FVec& v) {
  ExtRational L = K_->level(v);
  if (!L.finite()) throw std::invalid_argument("cannot add the zero vector to a standard basis");
  vecs_.push_back(v);
  levels_.push_back(L.value());
  symbols_.push_back(K_->symbol(v));
  parities_.push_back(K_->parity_of(v));
}

int StandardBasis::add(const FVec& x) {
  Reduction r = reduce(x);
  if (r.vanished) return -1;
  push_unchecked(r.remainder);
  return static_cast<int>(vecs_.size()) - 1;
}

std::vector<FVec> standard_basis(const FilteredComplex& K, const std::vector<FVec>& V) {
  return extend_standard_basis(K, {}, V);
}

std::vector<FVec> extend_standard_basis(const FilteredComplex& K, const std::vector<FVec>& basis,
                                        const std::vector<FVec>& V2) {
  StandardBasis sb(K);
  for (const auto& b : basis) sb.push_unchecked(b);
  for (const auto& v : V2) sb.add(v);
  return sb.vectors();
}

namespace {

FVec axpy(const FVec& y, const NovikovScalar& a, const FVec& x) {
  FVec out = y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero() && !a.is_zero()) out[i] += a * x[i];
  return out;
}

}  // namespace

HomologyDecomposition homology_decompose(const FilteredComplex& K) {
  const std::size_t n = K.dim();
  StandardBasis image(K);
  std::vector<FVec> preimages;  // boundary of preimages[k] is image.vectors()[k]
  std::vector<FVec> cycles;
  for (std::size_t j = 0; j < n; ++j) {
    FVec z = K.unit(j);
    FVec y = K.apply_boundary(z);
    auto red = image.reduce(y);
    for (std::size_t k = 0; k < red.coeffs.size(); ++k)
      if (!red.coeffs[k].is_zero()) z = axpy(z, -red.coeffs[k], preimages[k]);
    if (red.vanished) {
      cycles.push_back(z);
    } else {
      image.push_unchecked(red.remainder);
      preimages.push_back(z);
    }
  }
  HomologyDecomposition dec;
  dec.image = image.vectors();
  StandardBasis kernel(K);
  for (const auto& v : dec.image) kernel.push_unchecked(v);
  for (const auto& z : cycles) {
    int idx = kernel.add(z);
    if (idx >= 0) dec.homology.push_back(kernel.vectors()[static_cast<std::size_t>(idx)]);
  }
  StandardBasis full = kernel;
  for (const auto& w : preimages) {
    int idx = full.add(w);
    if (idx >= 0) dec.complement.push_back(full.vectors()[static_cast<std::size_t>(idx)]);
  }
  for (std::size_t i = 0; i < n && full.size() < n; ++i) {
    int idx = full.add(K.unit(i));
    if (idx >= 0) dec.complement.push_back(full.vectors()[static_cast<std::size_t>(idx)]);
  }
  return dec;
}

UsherEngine::UsherEngine(const FilteredComplex& K) : K_(K), dec_(homology_decompose(K_)) {
  n_image_ = dec_.image.size();
}

SpectralClass UsherEngine::spectral_level(const FVec& cycle) const {
  if (cycle.size() != K_.dim()) throw std::invalid_argument("cycle has wrong length");
  SpectralClass out;
  bool all_zero = std::all_of(cycle.begin(), cycle.end(), [](const NovikovScalar& x) { return x.is_zero(); });
  if (all_zero) {
    out.representative = cycle;
    out.level = ExtRational::neg_inf();
    return out;
  }
  FVec d = K_.apply_boundary(cycle);
  ExtRational dl = K_.level(d);
  if (dl.finite() && dl.value() > K_.precision_floor(d))
    throw NotACycleError("not a cycle: boundary has level " + dl.str(), dl);

  StandardBasis kb(K_);
  for (const auto& v : dec_.image) kb.push_unchecked(v);
  for (const auto& v : dec_.homology) kb.push_unchecked(v);
  auto red = kb.reduce(cycle);
  if (!red.vanished)
    throw NotACycleError("not a cycle: reduction leaves a remainder of level " + red.level.str(), red.level);

  FVec h = K_.zero_vector();
  bool any = false;
  for (std::size_t k = n_image_; k < red.coeffs.size(); ++k) {
    if (red.coeffs[k].is_zero()) continue;
    h = axpy(h, red.coeffs[k], dec_.homology[k - n_image_]);
    any = true;
  }
  out.representative = h;
  if (!any) {
    out.level = ExtRational::neg_inf();
    return out;
  }
  ExtRational L = K_.level(h);
  Rational floor = K_.precision_floor(h);
  if (!L.finite() || L.value() <= floor) {
    out.level = ExtRational(floor);
    out.upper_bound_only = true;
  } else {
    out.level = L;
  }
  return out;
}

SpectralClass spectral_level(const FilteredComplex& K, const FVec& cycle) {
  return UsherEngine(K).spectral_level(cycle);
}

FilteredComplex dual_complex(const FilteredComplex& K) {
  std::vector<BasisElement> b;
  for (const auto& e : K.basis()) b.push_back({e.name + "*", -e.level, e.parity});
  const std::size_t n = K.dim();
  std::vector<FVec> d(n, FVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = K.boundary()[j][i];
  return FilteredComplex(std::move(b), std::move(d), K.monoid());
}

NovikovScalar pairing(const FVec& x, const FVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pairing of vectors of different length");
  NovikovScalar s = NovikovScalar::zero(Rational(1000000));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) {
      if (!x[i].is_zero() || !y[i].is_zero())
        s = s.truncated((x[i] * y[i]).truncation());
      continue;
    }
    s += x[i] * y[i];
  }
  return s;
}

ExtRational duality_sup(const FilteredComplex& K, const FVec& cycle) {
  FilteredComplex D = dual_complex(K);
  HomologyDecomposition hd = homology_decompose(D);
  ExtRational best = ExtRational::neg_inf();
  for (const auto& b : hd.homology) {
    NovikovScalar p = pairing(cycle, b);
    if (p.is_zero()) continue;
    ExtRational v(-p.val() - D.level(b).value());
    if (v > best) best = v;
  }
  return best;
}

bool duality_holds(const FilteredComplex& K, const FVec& cycle) {
  SpectralClass c = spectral_level(K, cycle);
  return c.level == duality_sup(K, cycle);
}

FilteredComplex random_filtered_complex(std::uint64_t seed, const RandomComplexOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Complex gauss[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {2, 0}, {1, -1}, {-2, 1}};
  auto coef = [&]() { return gauss[uni(0, 7)]; };

  const int n = uni(2, opt.max_dim);
  const int n_odd = uni(std::max(1, n - opt.max_block), std::min(opt.max_block, n - 1));
  std::vector<int> parity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parity[static_cast<std::size_t>(i)] = i < n_odd ? 1 : 0;
  std::shuffle(parity.begin(), parity.end(), rng);

  const Rational step(1, opt.denom);
  const int lr = static_cast<int>((opt.level_range / step).numerator());
  std::vector<BasisElement> basis;
  for (int i = 0; i < n; ++i) {
    Rational lv = step * Rational(uni(-lr, lr));
    if (std::uniform_real_distribution<double>(0, 1)(rng) < opt.offset_probability) lv += Rational(1, 7);
    basis.push_back({"e" + std::to_string(i + 1), lv, parity[static_cast<std::size_t>(i)]});
  }
  const Rational tr = opt.truncation;
  auto zero = NovikovScalar::zero(tr);
  std::vector<FVec> d0(static_cast<std::size_t>(n), FVec(static_cast<std::size_t>(n), zero));
  // simple part: disjoint pairs odd -> even or even -> odd
  std::vector<int> odd, even;
  for (int i = 0; i < n; ++i) (parity[static_cast<std::size_t>(i)] ? odd : even).push_back(i);
  std::shuffle(odd.begin(), odd.end(), rng);
  std::shuffle(even.begin(), even.end(), rng);
  const int maxpairs = static_cast<int>(std::min(odd.size(), even.size()));
  const int pairs = uni(0, maxpairs);
  const int emax = static_cast<int>((opt.max_exponent / step).numerator());
  for (int p = 0; p < pairs; ++p) {
    int a = odd[static_cast<std::size_t>(p)], b = even[static_cast<std::size_t>(p)];
    if (uni(0, 1)) std::swap(a, b);
    d0[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
        NovikovScalar::monomial(coef(), step * Rational(uni(0, emax)), tr);
  }
  // unipotent change of basis within each parity
  std::vector<FVec> N(static_cast<std::size_t>(n), FVec(static_cast<std::size_t>(n), zero));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (parity[static_cast<std::size_t>(i)] == parity[static_cast<std::size_t>(j)] && uni(0, 1))
        N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            NovikovScalar::monomial(coef(), step * Rational(uni(0, 2)), tr);
  auto matmul = [&](const std::vector<FVec>& A, const std::vector<FVec>& B) {
    std::vector<FVec> C(static_cast<std::size_t>(n), FVec(static_cast<std::size_t>(n), zero));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const auto& a = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const auto& b = B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
          if (!b.is_zero()) C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a * b;
        }
      }
    return C;
  };
  auto ident = [&]() {
    std::vector<FVec> I(static_cast<std::size_t>(n), FVec(static_cast<std::size_t>(n), zero));
    for (int i = 0; i < n; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = NovikovScalar(1.0, tr);
    return I;
  };
  std::vector<FVec> U = ident(), Uinv = ident(), negN = N, power = ident();
  for (auto& row : negN)
    for (auto& x : row) x = -x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero())
        U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  for (int k = 1; k < n; ++k) {
    power = matmul(power, negN);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Uinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::vector<FVec> d = matmul(matmul(U, d0), Uinv);
  return FilteredComplex(std::move(basis), std::move(d), ExponentMonoid({step}));
}

}  // namespace nvt

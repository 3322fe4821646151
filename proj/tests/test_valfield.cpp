#include "doctest.h"
#include "level_oracle.hpp"
#include "oracles.hpp"

#include <functional>
#include "nvtoric/valfield.hpp"

#include <random>

using namespace nvt;

namespace {

NovikovScalar S(const std::string& s, Rational tr = Rational(24)) { return NovikovScalar::parse(s, tr); }

FilteredComplex make(std::vector<BasisElement> b, const std::vector<std::vector<std::string>>& d) {
  std::vector<FVec> m;
  for (const auto& row : d) {
    FVec r;
    for (const auto& s : row) r.push_back(S(s));
    m.push_back(r);
  }
  return FilteredComplex(std::move(b), std::move(m), ExponentMonoid({Rational(1)}));
}

FVec vec(const std::vector<std::string>& xs) {
  FVec v;
  for (const auto& s : xs) v.push_back(S(s));
  return v;
}

bool negligible(const FVec& v, double tol = 1e-7) {
  for (const auto& x : v)
    if (x.valuation_above(tol).finite()) return false;
  return true;
}

FVec combo(const std::vector<NovikovScalar>& a, const std::vector<FVec>& vs, std::size_t n) {
  FVec out(n, NovikovScalar::zero(Rational(24)));
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (!vs[k][i].is_zero()) out[i] += a[k] * vs[k][i];
  return out;
}

const std::vector<std::vector<std::string>> kZero2 = {{"0", "0"}, {"0", "0"}};

}  // namespace

TEST_CASE("symbol on small examples") {
  auto K = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}}, kZero2);
  auto s1 = K.symbol(vec({"1", "0"}));
  CHECK(s1[0] == Complex(1, 0));
  CHECK(s1[1] == Complex(0, 0));
  // T e1 + e2: e2 has level 0, e1 level -1
  auto x = vec({"1*T^1", "1"});
  CHECK(K.level(x) == ExtRational(Rational(0)));
  auto s2 = K.symbol(x);
  CHECK(s2[0] == Complex(0, 0));
  CHECK(s2[1] == Complex(1, 0));
  CHECK_THROWS_AS(K.symbol(K.zero_vector()), std::invalid_argument);

  // levels 1 and 0: componentwise levels are 1 - 0 and 0 - 0, so only e1 is leading
  auto K2 = make({{"e1", Rational(1), 0}, {"e2", Rational(0), 0}}, kZero2);
  auto y = vec({"1", "1"});
  CHECK(K2.level(y) == ExtRational(Rational(1)));
  auto s3 = K2.symbol(y);
  CHECK(s3[0] == Complex(1, 0));
  CHECK(s3[1] == Complex(0, 0));
  // with e2 scaled by q (= T^-1) both components sit at level 1
  auto s4 = K2.symbol(vec({"1", "2*T^(-1)"}));
  CHECK(s4[1] == Complex(2, 0));
}

TEST_CASE("standard_basis examples") {
  auto K = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}}, kZero2);
  auto b1 = standard_basis(K, {vec({"1", "0"})});
  REQUIRE(b1.size() == 1);

  auto b2 = standard_basis(K, {vec({"1", "0"}), vec({"1", "1*T^1"})});
  REQUIRE(b2.size() == 2);
  CHECK(K.level(b2[1]) == ExtRational(Rational(-1)));
  CHECK(b2[1][0].is_zero());
  CHECK(b2[1][1].coefficient(Rational(1)) == Complex(1, 0));

  auto b3 = standard_basis(K, {vec({"1", "1"}), vec({"1", "-1"})});
  REQUIRE(b3.size() == 2);
  CHECK(b3[1][0].coefficient(Rational(0)) == Complex(1, 0));
  CHECK(b3[1][1].coefficient(Rational(0)) == Complex(-1, 0));

  // dependent inputs shrink the output
  auto b4 = standard_basis(K, {vec({"1", "1"}), vec({"1*T^2", "1*T^2"})});
  CHECK(b4.size() == 1);
}

TEST_CASE("homology_decompose examples") {
  auto K0 = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 1}}, kZero2);
  auto d0 = homology_decompose(K0);
  CHECK(d0.image.empty());
  CHECK(d0.homology.size() == 2);
  CHECK(d0.complement.empty());

  // d e3 = e1 + T^2 e2
  auto K = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}, {"e3", Rational(0), 1}},
                {{"0", "0", "1"}, {"0", "0", "1*T^2"}, {"0", "0", "0"}});
  CHECK(K.check().empty());
  auto d = homology_decompose(K);
  REQUIRE(d.image.size() == 1);
  REQUIRE(d.homology.size() == 1);
  REQUIRE(d.complement.size() == 1);
  CHECK(d.image[0][0].coefficient(Rational(0)) == Complex(1, 0));
  CHECK(d.image[0][1].coefficient(Rational(2)) == Complex(1, 0));
  // hand computation: e1 reduced by e' leaves -T^2 e2
  CHECK(K.level(d.homology[0]) == ExtRational(Rational(-2)));
  CHECK(d.complement[0][2].coefficient(Rational(0)) == Complex(1, 0));

  auto Ka = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 1}}, {{"0", "1"}, {"0", "0"}});
  auto da = homology_decompose(Ka);
  CHECK(da.homology.empty());
  CHECK(da.image.size() == 1);
  CHECK(da.complement.size() == 1);
}

TEST_CASE("spectral_level examples") {
  auto K0 = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}}, kZero2);
  CHECK(spectral_level(K0, vec({"1*T^3", "0"})).level == ExtRational(Rational(-3)));
  CHECK(spectral_level(K0, K0.zero_vector()).level == ExtRational::neg_inf());

  // d e3 = e1 + q^2 e2
  auto K = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}, {"e3", Rational(0), 1}},
                {{"0", "0", "1"}, {"0", "0", "1*T^(-2)"}, {"0", "0", "0"}});
  auto c = spectral_level(K, vec({"0", "1", "0"}));
  CHECK(c.level == ExtRational(Rational(-2)));
  CHECK_FALSE(c.upper_bound_only);
  // brute force over q-monomial multiples of d e3: v_q(e2 + c T^k d e3)
  ExtRational best = ExtRational::pos_inf();
  for (int k = -6; k <= 6; ++k)
    for (double cc : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
      auto m = NovikovScalar::monomial(Complex(cc, 0), Rational(k), Rational(24));
      FVec y = vec({"0", "1", "0"});
      y[0] += m;
      y[1] += m * S("1*T^(-2)");
      best = std::min(best, K.level(y));
    }
  CHECK(best == ExtRational(Rational(-2)));

  CHECK_THROWS_AS(spectral_level(K, vec({"0", "0", "1"})), NotACycleError);
  try {
    spectral_level(K, vec({"0", "0", "1"}));
  } catch (const NotACycleError& e) {
    CHECK(e.residual_level == ExtRational(Rational(2)));
  }
}

TEST_CASE("dual_complex examples") {
  auto K0 = make({{"e1", Rational(1, 2), 0}, {"e2", Rational(-1), 1}}, kZero2);
  auto D0 = dual_complex(K0);
  CHECK(D0.basis()[0].level == Rational(-1, 2));
  CHECK(D0.basis()[1].level == Rational(1));
  CHECK(D0.boundary()[0][1].is_zero());

  // d e2 = q e1  gives  d* e1* = q e2*
  auto K = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 1}}, {{"0", "1*T^(-1)"}, {"0", "0"}});
  auto D = dual_complex(K);
  CHECK(D.boundary()[1][0].coefficient(Rational(-1)) == Complex(1, 0));
  CHECK(D.boundary()[0][1].is_zero());
  CHECK(D.basis()[0].parity == 0);
  CHECK(D.basis()[1].parity == 1);
  CHECK(D.check().empty());
}

TEST_CASE("check rejects malformed complexes") {
  auto bad_par = make({{"e1", Rational(0), 0}, {"e2", Rational(0), 0}}, {{"0", "1"}, {"0", "0"}});
  CHECK_FALSE(bad_par.check().empty());
  std::vector<FVec> m = {{S("0"), S("1*T^(1/2)")}, {S("0"), S("0")}};
  FilteredComplex bad_g({{"e1", Rational(0), 0}, {"e2", Rational(0), 1}}, m, ExponentMonoid({Rational(1)}));
  CHECK(bad_g.check().find("not in G") != std::string::npos);
  CHECK_THROWS_AS(FilteredComplex({{"e1", Rational(0), 0}}, {}, ExponentMonoid({Rational(1)})),
                  std::invalid_argument);
}

TEST_CASE("random complexes: structure and standard-basis valuation property") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto K = random_filtered_complex(seed);
    CAPTURE(seed);
    REQUIRE(K.check().empty());
    auto d = homology_decompose(K);
    const std::size_t n = K.dim();
    CHECK(d.image.size() + d.homology.size() + d.complement.size() == n);
    CHECK(2 * d.image.size() + d.homology.size() == n);
    for (const auto& v : d.image) CHECK(negligible(K.apply_boundary(v)));
    for (const auto& v : d.homology) {
      CHECK(negligible(K.apply_boundary(v)));
      CHECK(K.parity_of(v) >= 0);
    }
    std::vector<FVec> all = d.image;
    all.insert(all.end(), d.homology.begin(), d.homology.end());
    all.insert(all.end(), d.complement.begin(), d.complement.end());
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<NovikovScalar> a;
      ExtRational expect = ExtRational::neg_inf();
      for (std::size_t k = 0; k < all.size(); ++k) {
        a.push_back(oracle::random_scalar(rng, 6, -6, 6, 2, Rational(24)));
        if (!a.back().is_zero())
          expect = std::max(expect, ExtRational(-a.back().val() + K.level(all[k]).value()));
      }
      CHECK(K.level(combo(a, all, n)) == expect);
    }
  }
}

TEST_CASE("random complexes: spectral levels match the feasibility oracle and lie in G'") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ek(0, 6);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto K = random_filtered_complex(seed);
    CAPTURE(seed);
    UsherEngine U(K);
    const auto& hom = U.decomposition().homology;
    if (hom.empty()) continue;
    std::vector<FVec> cycles = hom;
    // a mixed class plus a boundary
    std::vector<NovikovScalar> a;
    for (std::size_t k = 0; k < hom.size(); ++k)
      a.push_back(NovikovScalar::monomial(Complex(1.0 + k, -1.0), Rational(ek(rng) - 3, 6), Rational(24)));
    FVec x = combo(a, hom, K.dim());
    FVec r = K.zero_vector();
    for (auto& e : r) e = NovikovScalar::monomial(Complex(0.5, 1.0), Rational(ek(rng), 6), Rational(24));
    FVec dr = K.apply_boundary(r);
    for (std::size_t i = 0; i < K.dim(); ++i) x[i] += dr[i];
    cycles.push_back(x);
    for (const auto& c : cycles) {
      auto sc = U.spectral_level(c);
      REQUIRE(sc.level.finite());
      REQUIRE_FALSE(sc.upper_bound_only);
      Rational L = sc.level.value();
      CAPTURE(to_string(L));
      CHECK(K.in_G_prime(L));
      CHECK(oracle::level_feasible(K, c, L));
      CHECK_FALSE(oracle::level_feasible(K, c, oracle::next_lower_level(K, L)));
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("random complexes: filtered duality") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto K = random_filtered_complex(seed);
    CAPTURE(seed);
    auto D = dual_complex(K);
    // adjointness on random vectors
    FVec x = K.zero_vector(), y = K.zero_vector();
    for (std::size_t i = 0; i < K.dim(); ++i) {
      x[i] = oracle::random_scalar(rng, 6, -3, 6, 2, Rational(24));
      y[i] = oracle::random_scalar(rng, 6, -3, 6, 2, Rational(24));
    }
    auto lhs = pairing(K.apply_boundary(x), y), rhs = pairing(x, D.apply_boundary(y));
    CHECK((lhs - rhs).valuation_above(1e-9) == ExtRational::pos_inf());

    UsherEngine U(K);
    for (const auto& h : U.decomposition().homology) {
      auto sc = U.spectral_level(h);
      CHECK(sc.level == duality_sup(K, h));
    }
  }
}

TEST_CASE("4-dim duality against a grid of dual cycles") {
  RandomComplexOptions opt;
  opt.max_dim = 4;
  opt.max_block = 2;
  int done = 0;
  for (std::uint64_t seed = 1; seed <= 40 && done < 10; ++seed) {
    auto K = random_filtered_complex(seed, opt);
    if (K.dim() != 4) continue;
    auto D = dual_complex(K);
    UsherEngine U(K);
    // dual cycles: kernel vectors of the transposed boundary found by the sweep over units
    auto dd = homology_decompose(D);
    std::vector<FVec> gens = dd.homology;
    gens.insert(gens.end(), dd.image.begin(), dd.image.end());
    for (const auto& a : U.decomposition().homology) {
      ExtRational rho = U.spectral_level(a).level;
      ExtRational best = ExtRational::neg_inf();
      // b = sum_k c_k T^{m_k/6} g_k over a grid, kept inside F^0 D
      const int G = static_cast<int>(gens.size());
      std::vector<int> idx(static_cast<std::size_t>(G), -1);
      std::function<void(int)> rec = [&](int k) {
        if (k == G) {
          FVec b = D.zero_vector();
          bool any = false;
          for (int j = 0; j < G; ++j) {
            if (idx[static_cast<std::size_t>(j)] < 0) continue;
            any = true;
            // universal field: shifts start exactly at the generator's level
            Rational sh = D.level(gens[static_cast<std::size_t>(j)]).value() + Rational(idx[static_cast<std::size_t>(j)], 6);
            auto m = NovikovScalar::monomial(Complex(1.0, 0.5 * j), sh, sh + Rational(40));
            for (std::size_t i = 0; i < D.dim(); ++i)
              if (!gens[static_cast<std::size_t>(j)][i].is_zero()) b[i] += m * gens[static_cast<std::size_t>(j)][i];
          }
          if (!any) return;
          ExtRational lb = D.level(b);
          if (!(lb <= ExtRational(Rational(0)))) return;
          auto p = pairing(a, b);
          if (p.valuation_above(1e-9).finite()) best = std::max(best, ExtRational(-p.valuation_above(1e-9).value()));
          return;
        }
        for (int v = -1; v <= 12; v += (k == 0 || v < 1 ? 1 : 4)) {
          idx[static_cast<std::size_t>(k)] = v;
          rec(k + 1);
        }
      };
      rec(0);
      INFO(best.str() << " vs " << rho.str());
      CHECK(best == rho);
    }
    ++done;
  }
  CHECK(done > 0);
}

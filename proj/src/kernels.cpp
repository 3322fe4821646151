#include "nvtoric/kernels.hpp"

namespace nvt {

namespace {

char grid_flag(const LaurentNovikov& F, const MomentPolytope& P, const RVec& u, double rel_tol) {
  return (P.interior(u) && valuation_ties(F, u, rel_tol)) ? 1 : 0;
}

ComplexCheck check_one(std::uint64_t seed, const RandomComplexOptions& opt) {
  ComplexCheck c;
  c.seed = seed;
  try {
    auto K = random_filtered_complex(seed, opt);
    c.dim = K.dim();
    UsherEngine U(K);
    const auto& hom = U.decomposition().homology;
    c.classes = hom.size();
    for (const auto& h : hom) {
      auto sc = U.spectral_level(h);
      if (!sc.level.finite() || sc.upper_bound_only || !K.in_G_prime(sc.level.value())) c.levels_in_G = false;
      if (!(sc.level == duality_sup(K, h))) c.duality = false;
    }
  } catch (const std::exception&) {
    c.error = true;
  }
  return c;
}

}  // namespace

std::vector<char> scan_valuation_grid(const LaurentNovikov& F, const MomentPolytope& P, const std::vector<RVec>& grid,
                                      Exec ex, double rel_tol) {
  std::vector<char> flags(grid.size(), 0);
  const auto n = static_cast<std::int64_t>(grid.size());
  if (ex == Exec::Serial) {
    for (std::int64_t g = 0; g < n; ++g) flags[static_cast<std::size_t>(g)] = grid_flag(F, P, grid[static_cast<std::size_t>(g)], rel_tol);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t g = 0; g < n; ++g) flags[static_cast<std::size_t>(g)] = grid_flag(F, P, grid[static_cast<std::size_t>(g)], rel_tol);
  }
  return flags;
}

std::vector<ChartResult> lift_charts(const LaurentNovikov& F, const std::vector<RVec>& us, const CriticalOptions& opt,
                                     Exec ex) {
  std::vector<ChartResult> out(us.size());
  const auto n = static_cast<std::int64_t>(us.size());
  if (ex == Exec::Serial || n < 2) {
    for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = critical_points_at(F, us[static_cast<std::size_t>(k)], opt);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = critical_points_at(F, us[static_cast<std::size_t>(k)], opt);
  }
  return out;
}

std::vector<ComplexCheck> verify_random_complexes(std::uint64_t seed0, std::size_t count,
                                                  const RandomComplexOptions& opt, Exec ex) {
  std::vector<ComplexCheck> out(count);
  const auto n = static_cast<std::int64_t>(count);
  if (ex == Exec::Serial) {
    for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = check_one(seed0 + static_cast<std::uint64_t>(k), opt);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = check_one(seed0 + static_cast<std::uint64_t>(k), opt);
  }
  return out;
}

}  // namespace nvt

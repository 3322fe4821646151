#pragma once
// Batch kernels with a serial reference and an OpenMP version of each.

#include "nvtoric/critical.hpp"
#include "nvtoric/valfield.hpp"

#include <cstdint>
#include <vector>

namespace nvt {

enum class Exec { Serial, OpenMP };

// flags[g] = 1 iff grid[g] is in Int P and satisfies the per-equation tie condition.
std::vector<char> scan_valuation_grid(const LaurentNovikov& F, const MomentPolytope& P, const std::vector<RVec>& grid,
                                      Exec ex, double rel_tol = 1e-9);

// critical_points_at for each candidate, results in input order.
std::vector<ChartResult> lift_charts(const LaurentNovikov& F, const std::vector<RVec>& us, const CriticalOptions& opt,
                                     Exec ex);

struct ComplexCheck {
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t classes = 0;     // homology basis size
  bool levels_in_G = true;     // every basis class level lies in G'
  bool duality = true;         // v_q(a) = sup pairing level for every basis class
  bool error = false;
};

// Seeds seed0, seed0+1, ...: build a random filtered complex and check spectrality and duality.
std::vector<ComplexCheck> verify_random_complexes(std::uint64_t seed0, std::size_t count,
                                                  const RandomComplexOptions& opt, Exec ex);

}  // namespace nvt

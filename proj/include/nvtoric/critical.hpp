#pragma once

#include "nvtoric/elimination.hpp"
#include "nvtoric/laurent.hpp"
#include "nvtoric/polytope.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nvt {

struct CriticalOptions {
  Rational emax{5};
  std::int64_t denom = 12;
  std::uint64_t seed = 0x5eed;
  std::vector<RVec> candidates;  // user-provided valuation vectors, always included
  bool only_candidates = false;  // skip the grid scan
  double cond_limit = 1e8;       // leading Jacobian condition number for plain Hensel lifting
  double rel_tol = 1e-9;         // numerical zero, relative to the coefficient scale
  double hess_tol = 1e-8;        // nondegeneracy threshold on the normalised Hessian determinant
  int margin_steps = 3;          // adaptive working precision E_max + 1, + 2, + 4
  std::size_t ladder_limit = 40000;
  bool parallel = true;
};

struct CriticalPoint {
  RVec u;                                  // v_T of the coordinates
  std::vector<Complex> leading;            // ybar mod Lambda_+
  std::vector<NovikovScalar> units;        // ybar_i, v_T = 0
  NovikovScalar value;                     // PO(y)
  bool nondegenerate = false;
  Complex hessian_leading{0.0, 0.0};       // leading coefficient of det[y_i y_j d^2 PO]
  ExtRational hessian_valuation = ExtRational::pos_inf();
  std::vector<NovikovScalar> b_components; // x_i = log(ybar_i)
  Rational residual_valuation;             // min_i v_T(y_i dPO/dy_i) (capped by precision)
  bool in_interior = true;
  std::string method;                      // "hensel" or "elimination"

  // y_i = T^{u_i} ybar_i
  std::vector<NovikovScalar> coordinates() const;
};

class CriticalError : public std::runtime_error {
 public:
  enum class Kind { DegenerateJacobian, LadderExplosion, NoConvergence, Unsupported };
  CriticalError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

// Log-derivative system in the chart y = T^u ybar, each equation divided by its leading T-power.
struct ChartSystem {
  RVec u;
  LaurentNovikov chart;                  // F(T^u ybar)
  std::vector<Rational> orders;          // m_i, leading valuation of y_i dF/dy_i
  std::vector<LaurentNovikov> equations; // T^{-m_i} y_i dF/dy_i
  std::vector<CLaurent> leading;         // valuation-zero parts
};
ChartSystem chart_system(const LaurentNovikov& F, const RVec& u, double rel_tol = 1e-9);

// Grid scan of Int P with denominators <= D and the per-equation tie condition, united with extra.
std::vector<RVec> enumerate_valuations(const LaurentNovikov& F, const MomentPolytope& P, std::int64_t D,
                                       const std::vector<RVec>& extra = {}, bool parallel = true);
// Tie condition at a single u (exposed for the scan kernels).
bool valuation_ties(const LaurentNovikov& F, const RVec& u, double rel_tol = 1e-9);

ComplexSolve solve_leading(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt = {});

// Newton over the Novikov field from a leading root; throws CriticalError.
CriticalPoint hensel_lift(const LaurentNovikov& F, const RVec& u, const std::vector<Complex>& root,
                          const CriticalOptions& opt = {});
// All valuation-zero chart solutions by elimination over the Novikov field (n <= 2).
std::vector<CriticalPoint> lift_by_elimination(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt = {});
// Fills value, Hessian data and b(y).
CriticalPoint classify(const LaurentNovikov& F, CriticalPoint cp, const CriticalOptions& opt = {});

// min_i v_T(y_i dF/dy_i (y)) ignoring numerical noise, capped at the available precision.
std::vector<Rational> residual_valuations(const LaurentNovikov& F, const CriticalPoint& cp, double rel_tol = 1e-9);
// det[y_i y_j d^2F/dy_i dy_j] at the point.
NovikovScalar hessian_determinant(const LaurentNovikov& F, const CriticalPoint& cp);

struct ChartResult {
  RVec u;
  std::vector<ComplexRoot> leading_roots;
  bool degenerate_locus = false;
  std::vector<CriticalPoint> points;
  std::vector<std::string> diagnostics;
};
ChartResult critical_points_at(const LaurentNovikov& F, const RVec& u, const CriticalOptions& opt = {});

struct CriticalSearch {
  std::vector<RVec> candidates;
  std::vector<ChartResult> charts;
  std::vector<CriticalPoint> points;  // all charts, sorted
  std::int64_t kushnirenko = 0;
  std::vector<std::string> diagnostics;
};
CriticalSearch find_critical_points(const LaurentNovikov& F, const MomentPolytope& P, const CriticalOptions& opt = {});

// Exponent count of the monoid generated by the chart's coefficient exponents below a bound.
std::size_t ladder_size(const ChartSystem& sys, const Rational& bound, std::size_t cap);

}  // namespace nvt

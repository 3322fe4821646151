#pragma once
// Quasimorphism values, defect bounds, heaviness and independence reports.

#include "nvtoric/quantum.hpp"

#include <string>
#include <vector>

namespace nvt {

// Vol(P) (l_j(u) - l_j(u_cnt))
Rational mu_circle(const MomentPolytope& P, const RVec& u, std::size_t j);
Rational mu_circle(const MomentPolytope& P, const CriticalPoint& cp, std::size_t j);

// 12 v_q(e); throws std::invalid_argument for negative input
Rational defect_bound(const Rational& e_valuation);

struct HeavinessStatus {
  std::size_t critical = 0;
  RVec u;
  bool heavy = false;
  bool superheavy = false;
  std::vector<std::string> citations;  // one per claim
};
std::vector<HeavinessStatus> heaviness_report(const JacobianModel& m);

// zeta on l_j o pi by two routes
struct ZetaValue {
  std::size_t facet = 0;
  Rational via_mu;         // (Cal - mu) / Vol, Cal = Vol l_j(u_cnt)
  bool via_seidel_ok = false;
  Rational via_seidel;     // -v_q(x) + l_j(u_cnt), x from z_j evaluated at the critical point
  bool agree = false;
};
std::vector<ZetaValue> zeta_values(const MomentPolytope& P, const JacobianModel& m, std::size_t which);

struct FiberReport {
  std::size_t critical = 0;
  RVec u;
  HeavinessStatus status;
  std::vector<Rational> mu;          // per facet circle
  IdempotentValuation idempotent;    // representative valuation
  bool defect_available = false;
  Rational defect;
  std::vector<ZetaValue> zeta;
};
struct QuasimorphismReport {
  Rational volume;
  RVec centroid;
  std::vector<FiberReport> fibers;
};
QuasimorphismReport quasimorphism_report(const MomentPolytope& P, const JacobianModel& m);

struct FamilyEntry {
  std::string bulk_tag;
  CriticalPoint point;
  bool superheavy = false;
};
struct IndependenceCertificate {
  std::vector<std::string> tags;
  std::vector<RVec> fibers;
  // mu_{e_i}(phi_l) = -k_i delta_il for phi_l supported near L(u_l); entries are the coefficient of k_i
  std::vector<std::vector<int>> pattern;
};
class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
IndependenceCertificate independence_certificate(const std::vector<FamilyEntry>& family);

}  // namespace nvt

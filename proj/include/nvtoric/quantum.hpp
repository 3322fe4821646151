#pragma once
// Evaluation model of the Jacobian ring at the critical points of a potential.

#include "nvtoric/critical.hpp"
#include "nvtoric/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvt {

struct JacobianModel {
  LaurentNovikov potential;
  std::vector<CriticalPoint> criticals;
  std::int64_t kushnirenko = 0;
  bool morse = false;                 // all nondegenerate and complete
  std::int64_t opaque_slots = 0;      // local factors not resolved to points (Kushnirenko deficit)
  std::vector<IVec> spanning;         // monomials of the evaluation table
  std::vector<std::vector<NovikovScalar>> evaluation_table;  // [critical][monomial]
};

// complete = true asserts the list is the full critical set even if it is short of the bound.
JacobianModel make_model(const LaurentNovikov& F, std::vector<CriticalPoint> criticals, bool complete = false,
                         std::vector<IVec> spanning = {});

class QuantumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// eval_y(F)
NovikovScalar evaluate_class(const JacobianModel& m, const LaurentNovikov& F, std::size_t which);

// Single-coordinate Lagrange representative of the idempotent at a critical point.
struct IdempotentRep {
  int coordinate = -1;
  UPoly<NovikovScalar> poly;          // in y_coordinate
  LaurentNovikov as_laurent;
};
// First coordinate whose values separate all critical points; nullopt if none.
std::optional<int> separating_coordinate(const JacobianModel& m, double tol = 1e-8);
IdempotentRep idempotent_representative(const JacobianModel& m, std::size_t which);

struct IdempotentValuation {
  bool available = false;
  Rational value;        // v_q = -min_k v_T(coefficient of y^k)
  int coordinate = -1;
  std::string note;
};
IdempotentValuation idempotent_valuation(const JacobianModel& m, std::size_t which);

// {PO(y) : y critical}; throws QuantumError for a non-Morse model.
std::vector<NovikovScalar> c1_eigenvalues(const JacobianModel& m);

struct SeidelLeading {
  Rational exponent_T;     // l_j(u_cnt)
  Rational exponent_q;     // -l_j(u_cnt)
  std::string class_tag;   // PD[D_j]
  std::string bulk_factor; // e^{w_j}
};
SeidelLeading seidel_leading(const MomentPolytope& P, std::size_t j);

// sum_j e^{w_j} z_j
LaurentNovikov c1_representative(const MomentPolytope& P, const BulkParameter& bulk, const Rational& trunc);

}  // namespace nvt

#pragma once

#include "nvtoric/laurent.hpp"
#include "nvtoric/polytope.hpp"

#include <string>
#include <vector>

namespace nvt {

// T^lambda * P(z_1, ..., z_m), P given on the facet variables z_j.
struct Correction {
  Rational lambda;
  std::map<IVec, Complex> poly;  // exponent vector over z_1..z_m -> coefficient
};

struct BulkParameter {
  NovikovScalar b0 = NovikovScalar::zero();
  std::vector<NovikovScalar> facet_weights;  // w_j in Lambda_0, empty means all zero
  std::vector<Correction> corrections;
};

// z_j = T^{l_j(0)} y^{v_j}
LaurentNovikov facet_monomial(const MomentPolytope& P, std::size_t j, const Rational& trunc);

// b0 + sum_j e^{w_j} z_j + sum T^lambda P(z).
LaurentNovikov build_fano(const MomentPolytope& P, const BulkParameter& bulk, const Rational& trunc = kDefaultTruncation);

// Checks F(y(Y)) == G(Y) below `below`, with y_i = prod_j Y_j^{map[i][j]} (map must be invertible over Q).
bool verify_substitution(const LaurentNovikov& F, const LaurentNovikov& G, const std::vector<IVec>& map,
                         const Rational& below, double tol = 1e-9);

// Coefficient table of (PO_b(w) - PO) / T for the cubic surface with wall weights w_1..w_9.
std::map<IVec, NovikovScalar> bulk_coefficient_table(const std::vector<NovikovScalar>& w);

namespace examples {

// y_i = Y1^2 Y2, Y1 Y2^2 (rows of the substitution matrix)
std::vector<IVec> cubic_y_to_Y();
// T((Y1+Y2+Y1^-1 Y2^-1)^3 - 6)
LaurentNovikov cubic_Y_form(const Rational& trunc);
// PO of the smoothed cubic surface (no bulk), in y
LaurentNovikov cubic_potential(const Rational& trunc);
// PO_b(w) for wall weights w (size 9)
LaurentNovikov cubic_bulk_potential(const std::vector<NovikovScalar>& w, const Rational& trunc);
// w_0 with e^{2 w_0} + e^{w_0} + 1 = 0
std::vector<NovikovScalar> cubic_w0(const Rational& trunc);
// w(u;c) with e^w + 1 + e^{-w} = 3 + c T^u, placed on walls 4 and 5
NovikovScalar cubic_w_uc_scalar(const Rational& u, Complex c, const Rational& trunc);
std::vector<NovikovScalar> cubic_w_uc(const Rational& u, Complex c, const Rational& trunc);

// Theorem-style F_2(alpha) potential with the nef correction T^alpha z_3.
LaurentNovikov f2_potential(const Rational& alpha, const Rational& trunc);
// alpha -> 0 limit at T(0): T^{1/2}(y1 + y2 + y1^-1 y2^-2 + 2 y2^-1) in chart coordinates
LaurentNovikov f2_limit_chart(const Rational& trunc);
// S^2 x S^2 with bulk b(rho) on the F_2(0) domain: weight log(e^{T^rho} + e^{-T^rho}) on facet u2 <= 1
LaurentNovikov s2xs2_bulk_potential(const Rational& rho, const Rational& trunc);
// monotone S^2 x S^2 with facet weights (a, 0, -a, 0)
LaurentNovikov s2xs2_potential(const NovikovScalar& a, const Rational& trunc);
// two-point blow-up with b_kappa = T^kappa PD[D_1] on the facet u2 >= 0, beta = (1 - alpha)/2
LaurentNovikov blowup2_potential(const Rational& alpha, const Rational& kappa, const Rational& trunc);
// kappa(u) of the blow-up family; ValuationError when the family formula leaves (0, inf)
Rational blowup_kappa(const Rational& alpha, const Rational& u);

}  // namespace examples

}  // namespace nvt

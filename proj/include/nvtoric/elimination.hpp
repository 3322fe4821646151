#pragma once

#include "nvtoric/laurent.hpp"
#include "nvtoric/upoly.hpp"

#include <cstdint>
#include <vector>

namespace nvt {

// Two-variable Laurent polynomial times the monomial clearing negative exponents,
// as a polynomial in y1 with coefficients polynomial in y2.
BPoly<NovikovScalar> to_bpoly(const LaurentNovikov& f);
BPoly<Complex> to_bpoly(const CLaurent& f);
UPoly<NovikovScalar> to_upoly(const LaurentNovikov& f);  // one variable
UPoly<Complex> to_upoly(const CLaurent& f);

// Complex solutions of a square Laurent system in (C^*)^n.
struct ComplexRoot {
  std::vector<Complex> y;
  double residual = 0;  // max |f_i(y)| relative to the coefficient scale
  double cond = 0;      // condition number of the log Jacobian
};
struct ComplexSolve {
  std::vector<ComplexRoot> roots;
  bool degenerate_locus = false;  // resultant vanishes identically (n = 2)
  std::string diagnostic;
};

struct ComplexSolveOptions {
  std::uint64_t seed = 0x5eed;
  int starts = 400;         // multistart Newton runs
  double dedup = 1e-7;      // relative distance for identifying roots
  double accept = 1e-10;    // relative residual for accepting a root
};

// Newton in log coordinates, y_j <- y_j (1 + d_j). Returns false if it did not converge.
bool newton_complex(const std::vector<CLaurent>& f, std::vector<Complex>& y, int max_iter = 60);
double log_jacobian_cond(const std::vector<CLaurent>& f, const std::vector<Complex>& y);
double relative_residual(const std::vector<CLaurent>& f, const std::vector<Complex>& y);

// n = 1: polynomial roots; n = 2: resultant + back-substitution, united with multistart;
// n >= 3: seeded multistart Newton.
ComplexSolve solve_complex_system(const std::vector<CLaurent>& f, const ComplexSolveOptions& opt = {});

struct LambdaSystemOptions {
  Rational target{6};    // precision goal for root refinement
  double rel_tol = 1e-9;
  double accept_tol = 1e-6;  // residual terms below this (relative) are ignored when screening pairs
};

// Valuation-zero solutions over the Novikov field of one or two Laurent equations,
// by resultant elimination and Newton-Puiseux. Pairs are screened by residual, not polished.
std::vector<std::vector<NovikovScalar>> solve_lambda_system(const std::vector<LaurentNovikov>& f,
                                                            const LambdaSystemOptions& opt);

// Valuation-zero roots of the eliminant in the last variable (f[0] itself when n = 1).
std::vector<NovikovScalar> eliminant_roots(const std::vector<LaurentNovikov>& f, const LambdaSystemOptions& opt);

}  // namespace nvt

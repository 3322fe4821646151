#pragma once

#include "nvtoric/novikov.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nvt {

using FVec = std::vector<NovikovScalar>;

struct BasisElement {
  std::string name;
  Rational level;  // lambda_i^0, q-convention
  int parity = 0;  // 0 or 1
};

class FilteredComplex {
 public:
  FilteredComplex() = default;
  // boundary[i][j] is the coefficient of e_i in the boundary of e_j.
  FilteredComplex(std::vector<BasisElement> basis, std::vector<FVec> boundary, ExponentMonoid G);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<FVec>& boundary() const { return boundary_; }
  const ExponentMonoid& monoid() const { return G_; }
  // Working truncation used for unit vectors (largest entry truncation, at least 5).
  Rational working_truncation() const { return work_trunc_; }

  FVec zero_vector() const;
  FVec unit(std::size_t i) const;
  FVec apply_boundary(const FVec& x) const;

  // v_q(x) = max_i (lambda_i - v_T(x_i)); -inf for the zero vector.
  ExtRational level(const FVec& x) const;
  // Levels at or below this are not determined by the stored precision.
  Rational precision_floor(const FVec& x) const;
  // Leading coefficient vector at level(x). Throws std::invalid_argument on zero.
  std::vector<Complex> symbol(const FVec& x) const;
  // 0 or 1 when x is parity-pure, -1 when mixed, -2 when zero.
  int parity_of(const FVec& x) const;

  bool in_G_prime(const Rational& level) const;

  // Structural checks; returns an empty string when valid.
  std::string check() const;

 private:
  std::vector<BasisElement> basis_;
  std::vector<FVec> boundary_;
  ExponentMonoid G_;
  Rational work_trunc_{5};
};

// Basis whose symbols are C-linearly independent, grown by the inductive sweep.
class StandardBasis {
 public:
  explicit StandardBasis(const FilteredComplex& K) : K_(&K) {}

  struct Reduction {
    FVec remainder;
    std::vector<NovikovScalar> coeffs;  // x = sum coeffs[k] * vectors[k] + remainder
    bool vanished = false;              // remainder is zero to precision
    ExtRational level;                  // level of the remainder (or floor when vanished)
    int steps = 0;
  };

  Reduction reduce(const FVec& x) const;
  // Reduces x and appends the remainder if it does not vanish. Returns the index or -1.
  int add(const FVec& x);
  void push_unchecked(const FVec& v);

  const std::vector<FVec>& vectors() const { return vecs_; }
  const std::vector<Rational>& levels() const { return levels_; }
  std::size_t size() const { return vecs_.size(); }

 private:
  const FilteredComplex* K_;
  std::vector<FVec> vecs_;
  std::vector<Rational> levels_;
  std::vector<std::vector<Complex>> symbols_;
  std::vector<int> parities_;
};

// Standard basis of span(V); dependent inputs are dropped (the returned list is shorter).
std::vector<FVec> standard_basis(const FilteredComplex& K, const std::vector<FVec>& V);
// Extends a standard basis of V1 by the vectors of V2.
std::vector<FVec> extend_standard_basis(const FilteredComplex& K, const std::vector<FVec>& basis,
                                        const std::vector<FVec>& V2);

struct HomologyDecomposition {
  std::vector<FVec> image;       // e'
  std::vector<FVec> homology;    // e''
  std::vector<FVec> complement;  // e'''
};

HomologyDecomposition homology_decompose(const FilteredComplex& K);

struct SpectralClass {
  FVec representative;      // reduced representative in the e'' span
  ExtRational level;        // its v_q; -inf for the zero class
  bool upper_bound_only = false;  // level is only known to be <= the stated value
};

class NotACycleError : public std::domain_error {
 public:
  NotACycleError(const std::string& w, ExtRational residual_level)
      : std::domain_error(w), residual_level(residual_level) {}
  ExtRational residual_level;
};

// Level computation with a cached decomposition.
class UsherEngine {
 public:
  explicit UsherEngine(const FilteredComplex& K);
  const FilteredComplex& complex() const { return K_; }
  const HomologyDecomposition& decomposition() const { return dec_; }
  SpectralClass spectral_level(const FVec& cycle) const;

 private:
  FilteredComplex K_;
  HomologyDecomposition dec_;
  std::size_t n_image_ = 0;
};

SpectralClass spectral_level(const FilteredComplex& K, const FVec& cycle);

// Dual basis e_i^* with level -lambda_i, same parity, boundary transposed.
FilteredComplex dual_complex(const FilteredComplex& K);
NovikovScalar pairing(const FVec& x, const FVec& y);
// sup { v_q(<a, b>) : b in H(F^0 D) }, computed from the dual complex's homology basis.
ExtRational duality_sup(const FilteredComplex& K, const FVec& cycle);
bool duality_holds(const FilteredComplex& K, const FVec& cycle);

struct RandomComplexOptions {
  int max_dim = 8;
  int max_block = 4;           // at most this many basis vectors of one parity
  std::int64_t denom = 6;      // G = (1/denom) Z
  Rational max_exponent{1};    // exponent range of the simple part
  Rational level_range{1};     // levels drawn from [-level_range, level_range]
  double offset_probability = 0.25;  // chance that a basis vector's level is shifted off G
  Rational truncation{24};
};

// Seeded random complex with boundary squared zero by construction (conjugated simple complex).
FilteredComplex random_filtered_complex(std::uint64_t seed, const RandomComplexOptions& opt = {});

}  // namespace nvt

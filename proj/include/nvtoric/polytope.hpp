#pragma once

#include "nvtoric/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nvt {

using IVec = std::vector<std::int64_t>;

// l(u) = <normal, u> + offset >= 0
struct Facet {
  IVec normal;
  Rational offset;
};

class PolytopeError : public std::invalid_argument {
 public:
  enum class Kind { BadInput, Unbounded, EmptyInterior, NonSimple, NonUnimodular, Redundant, OutOfPolytope };
  PolytopeError(Kind k, const std::string& w) : std::invalid_argument(w), kind(k) {}
  Kind kind;
};

class MomentPolytope {
 public:
  MomentPolytope() = default;

  // Full Delzant validation (n <= 4).
  static MomentPolytope validate_delzant(std::vector<Facet> facets);
  // Bounded, full-dimensional, no redundant facets; smoothness not required (orbifold or
  // degenerate polytopes used only as domains).
  static MomentPolytope domain(std::vector<Facet> facets);

  int dim() const { return n_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<RVec>& vertices() const { return vertices_; }
  // Indices of facets active at vertices()[k].
  const std::vector<std::vector<int>>& active() const { return active_; }
  const Rational& volume() const { return volume_; }
  const RVec& centroid() const { return centroid_; }
  bool delzant() const { return delzant_; }

  Rational ell(std::size_t j, const RVec& u) const;  // no containment check
  bool contains(const RVec& u) const;
  bool interior(const RVec& u) const;
  // l_j(u); throws OutOfPolytope when u is outside the closure.
  Rational facet_value(std::size_t j, const RVec& u) const;
  // l_j(u) - l_j(u_cnt)
  Rational centroid_gap(std::size_t j, const RVec& u) const;
  Rational min_ell(const RVec& u) const;

  std::string describe() const;

 private:
  static MomentPolytope build(std::vector<Facet> facets, bool require_delzant);
  int n_ = 0;
  std::vector<Facet> facets_;
  std::vector<RVec> vertices_;
  std::vector<std::vector<int>> active_;
  Rational volume_;
  RVec centroid_;
  bool delzant_ = false;
};

struct VolumeCentroid {
  Rational volume;
  RVec centroid;
  std::size_t simplices = 0;
};

// Independent computation from the vertex set alone: supporting hyperplanes are rediscovered from
// the points and the hull is triangulated by coning.
VolumeCentroid hull_volume_centroid(const std::vector<RVec>& points);

// Exact determinant of a square rational matrix.
Rational det(std::vector<RVec> m);

namespace builtin {
MomentPolytope cp(int n);
MomentPolytope s2xs2();
MomentPolytope hirzebruch_f2(const Rational& alpha);
// F_2 polytope used as the domain for S^2 x S^2 (alpha = 0, not Delzant).
MomentPolytope s2xs2_degeneration();
MomentPolytope blowup2(const Rational& alpha, const Rational& beta);
MomentPolytope blowup3(const Rational& alpha, const Rational& eps);
// Orbifold triangle of the toric degeneration of the cubic surface (centroid at the origin).
MomentPolytope cubic_degeneration();
// Its toric resolution P_eps with the six extra facets.
MomentPolytope cubic_resolution(const Rational& eps);
// Parses names such as "cp2", "s2xs2", "f2:1/3", "blowup2:1/2,1/4", "blowup3:1/2,1/10", "cubic".
MomentPolytope by_name(const std::string& name);
}  // namespace builtin

}  // namespace nvt

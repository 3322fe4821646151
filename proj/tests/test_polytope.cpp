#include "doctest.h"
#include "nvtoric/polytope.hpp"

#include <random>

using namespace nvt;
using Kind = PolytopeError::Kind;

namespace {

Kind error_kind(const std::vector<Facet>& f) {
  try {
    MomentPolytope::validate_delzant(f);
  } catch (const PolytopeError& e) {
    return e.kind;
  }
  return Kind::BadInput;  // caller checks for a specific non-BadInput kind
}

void check_cross(const MomentPolytope& P) {
  auto hv = hull_volume_centroid(P.vertices());
  CHECK(hv.volume == P.volume());
  CHECK(hv.centroid == P.centroid());
}

}  // namespace

TEST_CASE("CP^n simplices") {
  auto P = builtin::cp(2);
  CHECK(P.delzant());
  CHECK(P.vertices().size() == 3);
  CHECK(P.volume() == Rational(1, 2));
  CHECK(P.centroid() == RVec{Rational(1, 3), Rational(1, 3)});
  CHECK(P.facet_value(2, {Rational(1, 3), Rational(1, 3)}) == Rational(1, 3));
  CHECK(P.centroid_gap(2, P.centroid()) == 0);
  for (int n = 1; n <= 4; ++n) {
    auto Q = builtin::cp(n);
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= Rational(k);
    CHECK(Q.volume() == Rational(1) / f);
    CHECK(Q.centroid() == RVec(static_cast<std::size_t>(n), Rational(1, n + 1)));
    CHECK(Q.vertices().size() == static_cast<std::size_t>(n + 1));
    check_cross(Q);
  }
}

TEST_CASE("Hirzebruch F2 and S2xS2") {
  for (auto a : {Rational(1, 3), Rational(1, 2), Rational(1, 10)}) {
    auto P = builtin::hirzebruch_f2(a);
    CHECK(P.delzant());
    CHECK(P.vertices().size() == 4);
    // integral of (2 - 2 u2) over [0, 1 - a]
    CHECK(P.volume() == (Rational(1) - a) * (Rational(1) + a));
    CHECK(P.facet_value(2, {Rational(1, 2), Rational(0)}) == Rational(1) - a);
    check_cross(P);
  }
  auto S = builtin::s2xs2();
  CHECK(S.volume() == 1);
  CHECK(S.facet_value(0, {Rational(1, 2), Rational(1, 2)}) == Rational(1, 2));
  CHECK(S.centroid() == RVec{Rational(1, 2), Rational(1, 2)});

  auto D = builtin::s2xs2_degeneration();
  CHECK_FALSE(D.delzant());
  CHECK(D.volume() == 1);
  CHECK_THROWS_AS(builtin::hirzebruch_f2(Rational(0)), PolytopeError);
}

TEST_CASE("two- and three-point blow-ups") {
  for (int a = 1; a < 12; ++a)
    for (int b = 1; a + b < 12; ++b) {
      Rational al(a, 12), be(b, 12);
      auto P = builtin::blowup2(al, be);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(P.delzant());
      CHECK(P.vertices().size() == 5);
      // unit triangle minus the two cut corners
      CHECK(P.volume() == Rational(1, 2) - al * al / Rational(2) - be * be / Rational(2));
      check_cross(P);
    }
  // outside the cone the facet u1 >= 0 disappears
  CHECK(error_kind({{{1, 0}, Rational(0)},
                    {{0, 1}, Rational(0)},
                    {{0, -1}, Rational(1, 4)},
                    {{-1, -1}, Rational(1)},
                    {{1, 1}, Rational(-1, 2)}}) == Kind::Redundant);
  auto B3 = builtin::blowup3(Rational(1, 2), Rational(1, 10));
  CHECK(B3.vertices().size() == 6);
  CHECK(B3.volume() == Rational(1, 2) - Rational(1, 8) - Rational(1, 32) - Rational(1, 200));
  check_cross(B3);
}

TEST_CASE("cubic surface polytopes") {
  auto P = builtin::cubic_degeneration();
  CHECK_FALSE(P.delzant());
  CHECK(P.volume() == Rational(3, 2));
  CHECK(P.centroid() == RVec{Rational(0), Rational(0)});
  check_cross(P);
  CHECK_THROWS_AS(MomentPolytope::validate_delzant(P.facets()), PolytopeError);
  auto R = builtin::cubic_resolution(Rational(1, 10));
  CHECK(R.delzant());
  CHECK(R.vertices().size() == 9);
  check_cross(R);
}

TEST_CASE("validation errors") {
  CHECK(error_kind({{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}}) == Kind::Unbounded);
  CHECK(error_kind({{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{1, 1}, Rational(-1)}}) == Kind::Unbounded);
  CHECK(error_kind({{{1}, Rational(0)}, {{-1}, Rational(0)}}) == Kind::EmptyInterior);
  CHECK(error_kind({{{1}, Rational(0)}, {{-1}, Rational(-1)}}) == Kind::EmptyInterior);
  try {
    MomentPolytope::validate_delzant({{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -2}, Rational(2)}});
    FAIL("expected rejection");
  } catch (const PolytopeError& e) {
    CHECK(e.kind == Kind::NonUnimodular);
    CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
  }
  // u1 <= 1 in the blow-up is a redundant inequality touching only a vertex
  CHECK(error_kind({{{1, 0}, Rational(0)},
                    {{0, 1}, Rational(0)},
                    {{0, -1}, Rational(1, 2)},
                    {{-1, -1}, Rational(1)},
                    {{1, 1}, Rational(-1, 4)},
                    {{-1, 0}, Rational(1)}}) == Kind::Redundant);
  CHECK(error_kind({{{2, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(1)}}) == Kind::BadInput);
  auto P = builtin::cp(2);
  CHECK_THROWS_AS(P.facet_value(0, {Rational(2), Rational(0)}), PolytopeError);
}

TEST_CASE("by_name") {
  CHECK(builtin::by_name("cp2").volume() == Rational(1, 2));
  CHECK(builtin::by_name("f2:1/3").volume() == Rational(8, 9));
  CHECK(builtin::by_name("blowup2:1/2,1/4").vertices().size() == 5);
  CHECK(builtin::by_name("cubic").volume() == Rational(3, 2));
  CHECK_THROWS_AS(builtin::by_name("nope"), PolytopeError);
  CHECK_THROWS_AS(builtin::by_name("f2"), PolytopeError);
}

TEST_CASE("unimodular images of built-ins transform covariantly") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-2, 2), tr(-6, 6);
  std::vector<MomentPolytope> base = {builtin::cp(2), builtin::s2xs2(), builtin::hirzebruch_f2(Rational(1, 3)),
                                      builtin::blowup2(Rational(1, 2), Rational(1, 4)),
                                      builtin::blowup3(Rational(1, 2), Rational(1, 10)),
                                      builtin::cubic_resolution(Rational(1, 10))};
  for (int trial = 0; trial < 60; ++trial) {
    // A = [[a, b], [c, d]] with det 1 built from elementary moves
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    for (int k = 0; k < 3; ++k) {
      std::int64_t s = small(rng);
      if (k % 2 == 0) { a += s * c; b += s * d; }
      else { c += s * a; d += s * b; }
    }
    RVec t{Rational(tr(rng), 6), Rational(tr(rng), 6)};
    const auto& P = base[static_cast<std::size_t>(trial) % base.size()];
    // u' = A u + t; normals transform by A^{-T} = [[d, -c], [-b, a]]
    std::vector<Facet> f;
    for (const auto& fc : P.facets()) {
      IVec v{d * fc.normal[0] - c * fc.normal[1], -b * fc.normal[0] + a * fc.normal[1]};
      Rational off = fc.offset - (Rational(v[0]) * t[0] + Rational(v[1]) * t[1]);
      f.push_back({v, off});
    }
    auto Q = MomentPolytope::validate_delzant(f);
    CHECK(Q.volume() == P.volume());
    RVec cc{Rational(a) * P.centroid()[0] + Rational(b) * P.centroid()[1] + t[0],
            Rational(c) * P.centroid()[0] + Rational(d) * P.centroid()[1] + t[1]};
    CHECK(Q.centroid() == cc);
    CHECK(Q.vertices().size() == P.vertices().size());
    for (std::size_t k = 0; k < Q.vertices().size(); ++k) {
      const auto& act = Q.active()[k];
      REQUIRE(act.size() == 2);
      auto n0 = Q.facets()[static_cast<std::size_t>(act[0])].normal, n1 = Q.facets()[static_cast<std::size_t>(act[1])].normal;
      CHECK(std::abs(n0[0] * n1[1] - n0[1] * n1[0]) == 1);
    }
    check_cross(Q);
  }
}

#pragma once
// Exact polygon geometry from facet inequalities, used as an independent oracle in tests.

#include "nvtoric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using nvt::Facet;
using nvt::Rational;
using nvt::RVec;

inline // Vertices of a 2-d polygon from its facets, counterclockwise.
std::vector<RVec> polygon_vertices(const std::vector<Facet>& fs) {
  std::vector<RVec> vs;
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      Rational a1(fs[a].normal[0]), b1(fs[a].normal[1]), a2(fs[b].normal[0]), b2(fs[b].normal[1]);
      Rational d = a1 * b2 - a2 * b1;
      if (d == Rational(0)) continue;
      // a.u + offset = 0
      Rational c1 = -fs[a].offset, c2 = -fs[b].offset;
      RVec u{(c1 * b2 - c2 * b1) / d, (a1 * c2 - a2 * c1) / d};
      bool inside = std::all_of(fs.begin(), fs.end(), [&](const Facet& f) {
        return Rational(f.normal[0]) * u[0] + Rational(f.normal[1]) * u[1] + f.offset >= Rational(0);
      });
      if (inside && std::find(vs.begin(), vs.end(), u) == vs.end()) vs.push_back(u);
    }
  double cx = 0, cy = 0;
  for (const auto& v : vs) cx += to_double(v[0]), cy += to_double(v[1]);
  cx /= vs.size(), cy /= vs.size();
  std::sort(vs.begin(), vs.end(), [&](const RVec& p, const RVec& q) {
    return std::atan2(to_double(p[1]) - cy, to_double(p[0]) - cx) < std::atan2(to_double(q[1]) - cy, to_double(q[0]) - cx);
  });
  return vs;
}

// (1/Vol) int_P (n.u + offset) by a triangle fan
inline Rational mean_ell(const std::vector<RVec>& vs, const Facet& f) {
  auto ell = [&](const RVec& u) { return Rational(f.normal[0]) * u[0] + Rational(f.normal[1]) * u[1] + f.offset; };
  Rational area(0), integral(0);
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const auto &p = vs[0], &q = vs[i], &r = vs[i + 1];
    Rational A = ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])) / Rational(2);
    area += A;
    integral += A * (ell(p) + ell(q) + ell(r)) / Rational(3);
  }
  return integral / area;
}


inline Rational polygon_area(const std::vector<RVec>& vs) {
  Rational a(0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto &p = vs[i], &q = vs[(i + 1) % vs.size()];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return a / Rational(2);
}

// shoelace centroid
inline RVec polygon_centroid(const std::vector<RVec>& vs) {
  Rational cx(0), cy(0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto &p = vs[i], &q = vs[(i + 1) % vs.size()];
    Rational cr = p[0] * q[1] - q[0] * p[1];
    cx += (p[0] + q[0]) * cr;
    cy += (p[1] + q[1]) * cr;
  }
  Rational six_a = Rational(6) * polygon_area(vs);
  return {cx / six_a, cy / six_a};
}

}  // namespace oracle

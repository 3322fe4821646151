#include "nvtoric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace nvt {

namespace {

std::string vec_str(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

// Row-reduces a copy; returns rank.
std::size_t rank_of(std::vector<RVec> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<RVec> solve(std::vector<RVec> a, RVec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Generalised cross product: a vector orthogonal to the n-1 rows.
RVec cross(const std::vector<RVec>& rows, std::size_t n) {
  RVec d(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RVec> minor;
    for (const auto& r : rows) {
      RVec m;
      for (std::size_t c = 0; c < n; ++c)
        if (c != k) m.push_back(r[c]);
      minor.push_back(m);
    }
    Rational dk = n == 1 ? Rational(1) : det(minor);
    d[k] = (k % 2 == 0) ? dk : -dk;
  }
  return d;
}

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<std::int64_t>(i));
  return f;
}

Rational simplex_volume(const std::vector<RVec>& pts) {
  const std::size_t n = pts[0].size();
  std::vector<RVec> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RVec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = pts[i][k] - pts[0][k];
    m.push_back(r);
  }
  return abs(det(m)) / factorial(n);
}

std::size_t affine_dim(const std::vector<RVec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<RVec> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RVec r(pts[0].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = pts[i][k] - pts[0][k];
    m.push_back(r);
  }
  return rank_of(m);
}

}  // namespace

Rational det(std::vector<RVec> m) {
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return d;
}

MomentPolytope MomentPolytope::validate_delzant(std::vector<Facet> facets) { return build(std::move(facets), true); }
MomentPolytope MomentPolytope::domain(std::vector<Facet> facets) { return build(std::move(facets), false); }

MomentPolytope MomentPolytope::build(std::vector<Facet> facets, bool require_delzant) {
  using K = PolytopeError::Kind;
  if (facets.empty()) throw PolytopeError(K::BadInput, "no facets");
  const std::size_t n = facets[0].normal.size();
  if (n == 0 || n > 4) throw PolytopeError(K::BadInput, "dimension must be between 1 and 4");
  for (std::size_t j = 0; j < facets.size(); ++j) {
    const auto& f = facets[j];
    if (f.normal.size() != n) throw PolytopeError(K::BadInput, "facet " + std::to_string(j + 1) + " has wrong dimension");
    std::int64_t g = 0;
    for (auto c : f.normal) g = std::gcd(g, c);
    if (g == 0) throw PolytopeError(K::BadInput, "facet " + std::to_string(j + 1) + " has zero normal");
    if (require_delzant && g != 1)
      throw PolytopeError(K::BadInput, "facet " + std::to_string(j + 1) + " normal is not primitive");
  }
  MomentPolytope P;
  P.n_ = static_cast<int>(n);
  P.facets_ = std::move(facets);
  const std::size_t m = P.facets_.size();
  auto normal_row = [&](std::size_t j) {
    RVec r;
    for (auto c : P.facets_[j].normal) r.push_back(Rational(c));
    return r;
  };

  // boundedness: normals of full rank and no extreme ray of the recession cone
  std::vector<RVec> all;
  for (std::size_t j = 0; j < m; ++j) all.push_back(normal_row(j));
  if (rank_of(all) < n) throw PolytopeError(K::Unbounded, "polytope is unbounded (normals do not span)");
  auto recedes = [&](const RVec& d) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < n; ++k) s += all[j][k] * d[k];
      if (s < 0) return false;
    }
    return true;
  };
  bool unbounded = false;
  for_each_subset(m, n - 1, [&](const std::vector<std::size_t>& S) {
    if (unbounded) return;
    std::vector<RVec> rows;
    for (auto j : S) rows.push_back(all[j]);
    RVec d = n == 1 ? RVec{Rational(1)} : cross(rows, n);
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; })) return;
    RVec nd(d.size());
    for (std::size_t k = 0; k < n; ++k) nd[k] = -d[k];
    if (recedes(d) || recedes(nd)) unbounded = true;
  });
  if (unbounded) throw PolytopeError(K::Unbounded, "polytope is unbounded");

  for_each_subset(m, n, [&](const std::vector<std::size_t>& S) {
    std::vector<RVec> a;
    RVec b;
    for (auto j : S) {
      a.push_back(all[j]);
      b.push_back(-P.facets_[j].offset);
    }
    auto x = solve(a, b);
    if (!x || !P.contains(*x)) return;
    if (std::find(P.vertices_.begin(), P.vertices_.end(), *x) == P.vertices_.end()) P.vertices_.push_back(*x);
  });
  if (P.vertices_.empty()) throw PolytopeError(K::EmptyInterior, "polytope is empty");
  std::sort(P.vertices_.begin(), P.vertices_.end());
  for (const auto& v : P.vertices_) {
    std::vector<int> act;
    for (std::size_t j = 0; j < m; ++j)
      if (P.ell(j, v) == 0) act.push_back(static_cast<int>(j));
    P.active_.push_back(act);
  }
  if (affine_dim(P.vertices_) < n) throw PolytopeError(K::EmptyInterior, "polytope has empty interior");

  // facets must be genuine (n-1)-dimensional faces
  bool all_genuine = true;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<RVec> on;
    for (std::size_t k = 0; k < P.vertices_.size(); ++k)
      if (std::find(P.active_[k].begin(), P.active_[k].end(), static_cast<int>(j)) != P.active_[k].end())
        on.push_back(P.vertices_[k]);
    bool genuine = !on.empty() && affine_dim(on) + 1 == n;
    if (!genuine) {
      all_genuine = false;
      if (require_delzant) throw PolytopeError(K::Redundant, "facet " + std::to_string(j + 1) + " is redundant");
      if (on.empty()) throw PolytopeError(K::Redundant, "facet " + std::to_string(j + 1) + " does not touch P");
    }
  }

  bool delzant = all_genuine;
  for (std::size_t k = 0; k < P.vertices_.size(); ++k) {
    const auto& act = P.active_[k];
    if (act.size() != n) {
      if (require_delzant)
        throw PolytopeError(K::NonSimple, "vertex " + vec_str(P.vertices_[k]) + " lies on " +
                                              std::to_string(act.size()) + " facets");
      delzant = false;
      continue;
    }
    std::vector<RVec> rows;
    for (int j : act) rows.push_back(all[static_cast<std::size_t>(j)]);
    Rational d = det(rows);
    if (abs(d) != 1) {
      if (require_delzant)
        throw PolytopeError(K::NonUnimodular, "normals at vertex " + vec_str(P.vertices_[k]) +
                                                  " are not a Z-basis (determinant " + to_string(d) + ")");
      delzant = false;
    }
  }
  P.delzant_ = delzant;

  // volume and centroid: pulling triangulation of the face lattice
  Rational vol(0);
  RVec moment(n, Rational(0));
  std::function<void(const std::vector<std::size_t>&, std::size_t, std::vector<std::size_t>&)> tri =
      [&](const std::vector<std::size_t>& face, std::size_t d, std::vector<std::size_t>& cone) {
        if (d == 0) {
          cone.push_back(face[0]);
          if (cone.size() == n + 1) {
            std::vector<RVec> pts;
            for (auto i : cone) pts.push_back(P.vertices_[i]);
            Rational v = simplex_volume(pts);
            vol += v;
            for (std::size_t k = 0; k < n; ++k) {
              Rational s(0);
              for (const auto& p : pts) s += p[k];
              moment[k] += v * s / Rational(static_cast<std::int64_t>(n + 1));
            }
          }
          cone.pop_back();
          return;
        }
        const std::size_t apex = face[0];
        cone.push_back(apex);
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t j = 0; j < m; ++j) {
          std::vector<std::size_t> sub;
          for (auto v : face)
            if (std::find(P.active_[v].begin(), P.active_[v].end(), static_cast<int>(j)) != P.active_[v].end())
              sub.push_back(v);
          if (sub.empty() || std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
          std::vector<RVec> pts;
          for (auto v : sub) pts.push_back(P.vertices_[v]);
          if (affine_dim(pts) + 1 != d || !seen.insert(sub).second) continue;
          tri(sub, d - 1, cone);
        }
        cone.pop_back();
      };
  std::vector<std::size_t> allv(P.vertices_.size());
  std::iota(allv.begin(), allv.end(), 0);
  std::vector<std::size_t> cone;
  tri(allv, n, cone);
  P.volume_ = vol;
  P.centroid_.resize(n);
  for (std::size_t k = 0; k < n; ++k) P.centroid_[k] = moment[k] / vol;
  return P;
}

Rational MomentPolytope::ell(std::size_t j, const RVec& u) const {
  const auto& f = facets_.at(j);
  if (u.size() != f.normal.size()) throw PolytopeError(PolytopeError::Kind::BadInput, "point has wrong dimension");
  Rational s = f.offset;
  for (std::size_t k = 0; k < u.size(); ++k) s += Rational(f.normal[k]) * u[k];
  return s;
}

bool MomentPolytope::contains(const RVec& u) const {
  for (std::size_t j = 0; j < facets_.size(); ++j)
    if (ell(j, u) < 0) return false;
  return true;
}

bool MomentPolytope::interior(const RVec& u) const {
  for (std::size_t j = 0; j < facets_.size(); ++j)
    if (ell(j, u) <= 0) return false;
  return true;
}

Rational MomentPolytope::facet_value(std::size_t j, const RVec& u) const {
  if (j >= facets_.size()) throw PolytopeError(PolytopeError::Kind::BadInput, "facet index out of range");
  if (!contains(u)) throw PolytopeError(PolytopeError::Kind::OutOfPolytope, "point " + vec_str(u) + " is outside P");
  return ell(j, u);
}

Rational MomentPolytope::centroid_gap(std::size_t j, const RVec& u) const {
  return facet_value(j, u) - ell(j, centroid_);
}

Rational MomentPolytope::min_ell(const RVec& u) const {
  Rational best = ell(0, u);
  for (std::size_t j = 1; j < facets_.size(); ++j) best = std::min(best, ell(j, u));
  return best;
}

std::string MomentPolytope::describe() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < facets_.size(); ++j) {
    os << "l" << j + 1 << "(u) = ";
    bool first = true;
    for (std::size_t k = 0; k < facets_[j].normal.size(); ++k) {
      auto c = facets_[j].normal[k];
      if (c == 0) continue;
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (std::abs(c) != 1) os << std::abs(c);
      os << "u" << k + 1;
      first = false;
    }
    const Rational& o = facets_[j].offset;
    if (first) os << to_string(o);
    else if (o != 0) os << (o < 0 ? " - " : " + ") << to_string(abs(o));
    os << "\n";
  }
  return os.str();
}

namespace {

// Triangulation of conv(points) in Q^d (points affinely spanning Q^d); returns index tuples.
std::vector<std::vector<std::size_t>> hull_triangulate(const std::vector<RVec>& pts) {
  const std::size_t d = pts[0].size();
  std::vector<std::vector<std::size_t>> out;
  if (d == 0) return {{0}};
  const std::size_t apex = 0;
  std::set<std::vector<std::size_t>> faces;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& S) {
    std::vector<RVec> rows;
    for (std::size_t i = 1; i < S.size(); ++i) {
      RVec r(d);
      for (std::size_t k = 0; k < d; ++k) r[k] = pts[S[i]][k] - pts[S[0]][k];
      rows.push_back(r);
    }
    RVec nrm = d == 1 ? RVec{Rational(1)} : cross(rows, d);
    if (std::all_of(nrm.begin(), nrm.end(), [](const Rational& x) { return x == 0; })) return;
    auto side = [&](const RVec& p) {
      Rational s(0);
      for (std::size_t k = 0; k < d; ++k) s += nrm[k] * (p[k] - pts[S[0]][k]);
      return s;
    };
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational s = side(pts[i]);
      if (s > 0) pos = true;
      else if (s < 0) neg = true;
      else on.push_back(i);
    }
    if (pos && neg) return;
    faces.insert(on);
  });
  for (const auto& face : faces) {
    if (std::find(face.begin(), face.end(), apex) != face.end()) continue;
    // coordinates inside the face's affine hull
    const RVec& p0 = pts[face[0]];
    std::vector<RVec> basis;
    for (std::size_t i = 1; i < face.size() && basis.size() + 1 < d; ++i) {
      RVec r(d);
      for (std::size_t k = 0; k < d; ++k) r[k] = pts[face[i]][k] - p0[k];
      auto trial = basis;
      trial.push_back(r);
      if (rank_of(trial) == trial.size()) basis = trial;
    }
    // pick d-1 coordinate rows where the basis is invertible
    std::vector<std::size_t> rowsel;
    for_each_subset(d, d - 1, [&](const std::vector<std::size_t>& R) {
      if (!rowsel.empty()) return;
      std::vector<RVec> sq;
      for (auto r : R) {
        RVec row;
        for (const auto& b : basis) row.push_back(b[r]);
        sq.push_back(row);
      }
      if (d == 1 || det(sq) != 0) rowsel = R;
    });
    std::vector<RVec> local;
    for (auto i : face) {
      if (d == 1) {
        local.push_back({});
        continue;
      }
      std::vector<RVec> sq;
      RVec rhs;
      for (auto r : rowsel) {
        RVec row;
        for (const auto& b : basis) row.push_back(b[r]);
        sq.push_back(row);
        rhs.push_back(pts[i][r] - p0[r]);
      }
      local.push_back(*solve(sq, rhs));
    }
    for (auto simplex : hull_triangulate(local)) {
      std::vector<std::size_t> s{apex};
      for (auto li : simplex) s.push_back(face[li]);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

VolumeCentroid hull_volume_centroid(const std::vector<RVec>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t n = points[0].size();
  if (affine_dim(points) != n) throw std::invalid_argument("points are not full-dimensional");
  VolumeCentroid out;
  out.centroid.assign(n, Rational(0));
  auto simplices = hull_triangulate(points);
  out.simplices = simplices.size();
  for (const auto& s : simplices) {
    std::vector<RVec> p;
    for (auto i : s) p.push_back(points[i]);
    Rational v = simplex_volume(p);
    out.volume += v;
    for (std::size_t k = 0; k < n; ++k) {
      Rational c(0);
      for (const auto& q : p) c += q[k];
      out.centroid[k] += v * c / Rational(static_cast<std::int64_t>(n + 1));
    }
  }
  for (auto& c : out.centroid) c /= out.volume;
  return out;
}

namespace builtin {

MomentPolytope cp(int n) {
  if (n < 1 || n > 4) throw PolytopeError(PolytopeError::Kind::BadInput, "cp(n) needs 1 <= n <= 4");
  std::vector<Facet> f;
  for (int i = 0; i < n; ++i) {
    IVec v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    f.push_back({v, Rational(0)});
  }
  f.push_back({IVec(static_cast<std::size_t>(n), -1), Rational(1)});
  return MomentPolytope::validate_delzant(f);
}

MomentPolytope s2xs2() {
  return MomentPolytope::validate_delzant(
      {{{1, 0}, Rational(0)}, {{-1, 0}, Rational(1)}, {{0, 1}, Rational(0)}, {{0, -1}, Rational(1)}});
}

MomentPolytope hirzebruch_f2(const Rational& alpha) {
  return MomentPolytope::validate_delzant(
      {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{0, -1}, Rational(1) - alpha}, {{-1, -2}, Rational(2)}});
}

MomentPolytope s2xs2_degeneration() {
  return MomentPolytope::domain(
      {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{0, -1}, Rational(1)}, {{-1, -2}, Rational(2)}});
}

MomentPolytope blowup2(const Rational& alpha, const Rational& beta) {
  return MomentPolytope::validate_delzant({{{1, 0}, Rational(0)},
                                           {{0, 1}, Rational(0)},
                                           {{0, -1}, Rational(1) - alpha},
                                           {{-1, -1}, Rational(1)},
                                           {{1, 1}, -beta}});
}

MomentPolytope blowup3(const Rational& alpha, const Rational& eps) {
  return MomentPolytope::validate_delzant({{{1, 0}, Rational(0)},
                                           {{0, 1}, Rational(0)},
                                           {{0, -1}, Rational(1) - alpha},
                                           {{-1, -1}, Rational(1)},
                                           {{1, 1}, -(Rational(1) - alpha) / Rational(2)},
                                           {{-1, 0}, Rational(1) - eps}});
}

MomentPolytope cubic_degeneration() {
  return MomentPolytope::domain({{{-1, 2}, Rational(1)}, {{2, -1}, Rational(1)}, {{-1, -1}, Rational(1)}});
}

MomentPolytope cubic_resolution(const Rational& eps) {
  const Rational c = Rational(1) - eps;
  return MomentPolytope::validate_delzant({{{-1, 2}, Rational(1)},
                                           {{2, -1}, Rational(1)},
                                           {{-1, -1}, Rational(1)},
                                           {{1, 0}, c},
                                           {{0, 1}, c},
                                           {{1, -1}, c},
                                           {{0, -1}, c},
                                           {{-1, 0}, c},
                                           {{-1, 1}, c}});
}

MomentPolytope by_name(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::vector<Rational> args;
  if (colon != std::string::npos) {
    std::string rest = name.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      args.push_back(parse_rational(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw PolytopeError(PolytopeError::Kind::BadInput, "'" + head + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (head.rfind("cp", 0) == 0 && head.size() == 3) {
    need(0);
    return cp(head[2] - '0');
  }
  if (head == "s2xs2") return need(0), s2xs2();
  if (head == "f2" || head == "hirzebruch_f2") return need(1), hirzebruch_f2(args[0]);
  if (head == "blowup2") return need(2), blowup2(args[0], args[1]);
  if (head == "blowup3") return need(2), blowup3(args[0], args[1]);
  if (head == "cubic" || head == "cubic_degeneration") return need(0), cubic_degeneration();
  if (head == "cubic_resolution") return need(1), cubic_resolution(args[0]);
  throw PolytopeError(PolytopeError::Kind::BadInput, "unknown polytope '" + name + "'");
}

}  // namespace builtin

}  // namespace nvt

#include "nvtoric/report.hpp"

#include <cmath>
#include <sstream>

namespace nvt::report {

namespace {

Complex clean(Complex c) {
  const double m = std::abs(c);
  double re = c.real(), im = c.imag();
  if (std::abs(re) <= 1e-10 * m) re = 0.0;
  if (std::abs(im) <= 1e-10 * m) im = 0.0;
  return {re, im};
}

std::string ext_str(const ExtRational& v) { return v.finite() ? to_string(v.value()) : v.str(); }

IVec parse_ivec(const std::string& s) {
  IVec k;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) k.push_back(std::stoll(tok));
  return k;
}

}  // namespace

std::string scalar_str(const NovikovScalar& x, const Rational& below) {
  std::vector<Term> ts;
  const NovikovScalar xt = x.truncated(below);
  for (const auto& t : xt.terms()) {
    Complex c = clean(t.coef);
    if (c != Complex(0.0, 0.0)) ts.push_back({t.exp, c});
  }
  return NovikovScalar::from_terms(ts, below).str(false, 12);
}

std::string complex_str(Complex c) { return format_complex(clean(c), 12); }

json rvec_json(const RVec& u) {
  json a = json::array();
  for (const auto& x : u) a.push_back(to_string(x));
  return a;
}

json polytope_json(const MomentPolytope& P) {
  json j;
  j["n"] = P.dim();
  j["delzant"] = P.delzant();
  json fs = json::array();
  for (const auto& f : P.facets()) fs.push_back({{"normal", f.normal}, {"offset", to_string(f.offset)}});
  j["facets"] = fs;
  json vs = json::array();
  for (const auto& v : P.vertices()) vs.push_back(rvec_json(v));
  j["vertices"] = vs;
  j["volume"] = to_string(P.volume());
  j["centroid"] = rvec_json(P.centroid());
  return j;
}

json potential_json(const LaurentNovikov& F, const Rational& below) {
  json j;
  j["nvars"] = F.nvars();
  json ts = json::array();
  for (const auto& [k, c] : F.terms()) ts.push_back({{"monomial", monomial_str(k)}, {"coefficient", scalar_str(c, below)}});
  j["terms"] = ts;
  j["kushnirenko_bound"] = kushnirenko_bound(F);
  return j;
}

json critical_json(const CriticalPoint& cp, const Rational& below) {
  json j;
  j["u"] = rvec_json(cp.u);
  json lead = json::array();
  for (auto c : cp.leading) lead.push_back(complex_str(c));
  j["leading"] = lead;
  json units = json::array();
  for (const auto& y : cp.units) units.push_back(scalar_str(y, below));
  j["units"] = units;
  j["value"] = scalar_str(cp.value, below);
  j["nondegenerate"] = cp.nondegenerate;
  j["hessian_valuation"] = ext_str(cp.hessian_valuation);
  j["hessian_leading"] = complex_str(cp.hessian_leading);
  json b = json::array();
  for (const auto& x : cp.b_components) b.push_back(scalar_str(x, below));
  j["b"] = b;
  j["residual_valuation"] = to_string(cp.residual_valuation);
  j["in_interior"] = cp.in_interior;
  j["method"] = cp.method;
  return j;
}

json search_json(const CriticalSearch& s, const Rational& below) {
  json j;
  json cands = json::array();
  for (const auto& u : s.candidates) cands.push_back(rvec_json(u));
  j["candidates"] = cands;
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(critical_json(p, below));
  j["points"] = pts;
  j["count"] = s.points.size();
  j["kushnirenko_bound"] = s.kushnirenko;
  json charts = json::array();
  for (const auto& c : s.charts) {
    json lr = json::array();
    for (const auto& r : c.leading_roots) {
      json y = json::array();
      for (auto v : r.y) y.push_back(complex_str(v));
      lr.push_back(y);
    }
    charts.push_back({{"u", rvec_json(c.u)},
                      {"leading_roots", lr},
                      {"degenerate_locus", c.degenerate_locus},
                      {"lifted", c.points.size()}});
  }
  j["charts"] = charts;
  j["diagnostics"] = s.diagnostics;
  return j;
}

json quantum_json(const JacobianModel& m, const Rational& below) {
  json j;
  j["morse"] = m.morse;
  j["criticals"] = m.criticals.size();
  j["kushnirenko_bound"] = m.kushnirenko;
  j["opaque_slots"] = m.opaque_slots;
  if (m.morse) {
    json ev = json::array();
    for (const auto& e : c1_eigenvalues(m)) ev.push_back(scalar_str(e, below));
    j["c1_eigenvalues"] = ev;
  } else {
    j["c1_eigenvalues"] = nullptr;
  }
  json iv = json::array();
  for (std::size_t k = 0; k < m.criticals.size(); ++k) {
    auto v = idempotent_valuation(m, k);
    json e{{"kind", "representative valuation"}, {"available", v.available}};
    if (v.available) {
      e["value"] = to_string(v.value);
      e["coordinate"] = v.coordinate + 1;
    } else {
      e["value"] = nullptr;
      e["note"] = v.note;
    }
    iv.push_back(e);
  }
  j["idempotent_valuations"] = iv;
  return j;
}

json spectral_json(const QuasimorphismReport& r) {
  json j;
  j["volume"] = to_string(r.volume);
  j["centroid"] = rvec_json(r.centroid);
  json fibers = json::array();
  for (const auto& f : r.fibers) {
    json e;
    e["critical"] = f.critical;
    e["u"] = rvec_json(f.u);
    e["heavy"] = f.status.heavy;
    e["superheavy"] = f.status.superheavy;
    e["citations"] = f.status.citations;
    json mu = json::array();
    for (const auto& x : f.mu) mu.push_back(to_string(x));
    e["mu_circle"] = mu;
    e["defect_bound"] = f.defect_available ? json(to_string(f.defect)) : json(nullptr);
    json z = json::array();
    for (const auto& v : f.zeta) {
      json zv{{"facet", v.facet + 1}, {"via_mu", to_string(v.via_mu)}, {"agree", v.agree},
              {"convention_sensitive", true}};
      zv["via_seidel"] = v.via_seidel_ok ? json(to_string(v.via_seidel)) : json(nullptr);
      z.push_back(zv);
    }
    e["zeta"] = z;
    fibers.push_back(e);
  }
  j["fibers"] = fibers;
  return j;
}

json certificate_json(const IndependenceCertificate& c) {
  json j;
  j["entries"] = c.tags.size();
  j["tags"] = c.tags;
  json fs = json::array();
  for (const auto& u : c.fibers) fs.push_back(rvec_json(u));
  j["fibers"] = fs;
  j["pattern"] = c.pattern;
  j["pattern_meaning"] = "mu_{e_i}(phi_l) = pattern[i][l] * k_i";
  j["citation"] = "lieind";
  return j;
}

MomentPolytope polytope_from_json(const json& j) {
  if (j.is_string()) return builtin::by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("facets"))
    throw PolytopeError(PolytopeError::Kind::BadInput, "polytope JSON needs \"facets\"");
  std::vector<Facet> fs;
  for (const auto& f : j.at("facets")) {
    Facet x;
    x.normal = f.at("normal").get<IVec>();
    const auto& off = f.at("offset");
    x.offset = off.is_string() ? parse_rational(off.get<std::string>()) : Rational(off.get<std::int64_t>());
    fs.push_back(std::move(x));
  }
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(fs.empty() ? 0 : fs[0].normal.size()))
    throw PolytopeError(PolytopeError::Kind::BadInput, "\"n\" does not match the facet normals");
  if (j.value("domain", false)) return MomentPolytope::domain(std::move(fs));
  return MomentPolytope::validate_delzant(std::move(fs));
}

BulkParameter bulk_from_json(const json& j, const Rational& trunc) {
  BulkParameter b;
  b.b0 = NovikovScalar::zero(trunc);
  if (j.is_null()) return b;
  if (j.contains("b0")) b.b0 = NovikovScalar::parse(j.at("b0").get<std::string>(), trunc);
  if (j.contains("facet_weights"))
    for (const auto& w : j.at("facet_weights")) b.facet_weights.push_back(NovikovScalar::parse(w.get<std::string>(), trunc));
  if (j.contains("corrections"))
    for (const auto& c : j.at("corrections")) {
      Correction cr;
      const auto& l = c.at("lambda");
      cr.lambda = l.is_string() ? parse_rational(l.get<std::string>()) : Rational(l.get<std::int64_t>());
      for (const auto& [k, v] : c.at("poly").items()) cr.poly[parse_ivec(k)] = parse_complex(v.get<std::string>());
      b.corrections.push_back(std::move(cr));
    }
  return b;
}

FilteredComplex complex_from_json(const json& j) {
  std::vector<BasisElement> basis;
  for (const auto& e : j.at("basis")) {
    BasisElement b;
    b.name = e.at("name").get<std::string>();
    const auto& l = e.at("level");
    b.level = l.is_string() ? parse_rational(l.get<std::string>()) : Rational(l.get<std::int64_t>());
    b.parity = e.value("parity", 0);
    basis.push_back(std::move(b));
  }
  std::vector<FVec> bd;
  for (const auto& row : j.at("boundary")) {
    FVec r;
    for (const auto& s : row) r.push_back(NovikovScalar::parse(s.get<std::string>()));
    bd.push_back(std::move(r));
  }
  std::vector<Rational> gens;
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) gens.push_back(parse_rational(g.get<std::string>()));
  else
    gens.push_back(Rational(1, 6));
  return FilteredComplex(std::move(basis), std::move(bd), ExponentMonoid(gens));
}

namespace {

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      } else {
        os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (flat) {
      std::string line;
      for (const auto& v : j) line += (line.empty() ? "" : ", ") + scalar(v);
      os << pad << "[" << line << "]\n";
      return;
    }
    for (const auto& v : j) {
      os << pad << "-\n";
      render(v, indent + 2, os);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace nvt::report

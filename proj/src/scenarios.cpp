#include "nvtoric/scenarios.hpp"

#include "nvtoric/kernels.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace nvt {

using report::json;

namespace {

Rational trunc_of(const PipelineConfig& cfg) { return cfg.emax + Rational(3); }

CriticalOptions options_of(const PipelineConfig& cfg) {
  CriticalOptions o;
  o.emax = cfg.emax;
  o.denom = cfg.denom;
  o.seed = cfg.seed;
  return o;
}

std::string param(const PipelineConfig& cfg, const std::string& key, const std::string& dflt = "") {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? dflt : it->second;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::vector<Rational> rational_grid(const PipelineConfig& cfg, std::vector<Rational> dflt) {
  auto g = param(cfg, "grid");
  if (g.empty()) return dflt;
  std::vector<Rational> out;
  for (const auto& s : split(g, ',')) out.push_back(parse_rational(s));
  return out;
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PipelineError("input", kExitUsage, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw PipelineError("input", kExitValidation, std::string("malformed JSON: ") + e.what());
  }
}

bool negligible(const NovikovScalar& x, const Rational& above) {
  auto v = x.valuation_above(1e-8);
  return !v.finite() || v.value() >= above;
}

json config_json(const PipelineConfig& cfg) {
  json c{{"emax", to_string(cfg.emax)}, {"denom", cfg.denom}, {"seed", cfg.seed}};
  if (!cfg.params.empty()) c["params"] = cfg.params;
  return c;
}

// Runs `f`, rethrowing library errors with a module tag.
template <class F>
auto tagged(const std::string& module, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw classify_error(e, module);
  }
}

Problem builtin_problem(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  Problem pr;
  pr.options = options_of(cfg);
  std::string head = cfg.target;
  auto arg = [&](std::size_t i, const std::string& key, const std::string& dflt) {
    if (i < cfg.args.size()) return parse_rational(cfg.args[i]);
    return parse_rational(param(cfg, key, dflt));
  };

  if (head == "cubic" || head == "cubic_degeneration") {
    pr.P = tagged("polytope", [] { return builtin::cubic_degeneration(); });
    const std::string bulk = param(cfg, "bulk", "none");
    pr.meta["bulk"] = bulk;
    pr.F = tagged("potential", [&] {
      if (bulk == "w0") return examples::cubic_bulk_potential(examples::cubic_w0(tr), tr);
      if (bulk == "wuc") {
        Rational u = parse_rational(param(cfg, "u", "0"));
        Complex c = parse_complex(param(cfg, "c", "1+1i"));
        return examples::cubic_bulk_potential(examples::cubic_w_uc(u, c, tr), tr);
      }
      if (bulk == "none") return examples::cubic_potential(tr);
      throw std::invalid_argument("unknown cubic bulk '" + bulk + "' (none, w0, wuc)");
    });
    pr.label = "cubic surface, bulk " + bulk;
  } else if (head == "blowup2") {
    const Rational alpha = arg(0, "alpha", "1/2");
    const Rational beta = cfg.args.size() > 1 ? parse_rational(cfg.args[1])
                                               : parse_rational(param(cfg, "beta", to_string((Rational(1) - alpha) / Rational(2))));
    pr.P = tagged("polytope", [&] { return builtin::blowup2(alpha, beta); });
    pr.label = "two-point blow-up, alpha = " + to_string(alpha);
    pr.meta["alpha"] = to_string(alpha);
    pr.meta["beta"] = to_string(beta);
    if (!param(cfg, "u").empty()) {
      const Rational u = parse_rational(param(cfg, "u"));
      if (beta != (Rational(1) - alpha) / Rational(2))
        throw PipelineError("potential", kExitValidation, "the b_kappa family needs beta = (1 - alpha)/2");
      const Rational kappa = tagged("potential", [&] { return examples::blowup_kappa(alpha, u); });
      pr.meta["u"] = to_string(u);
      pr.meta["kappa"] = to_string(kappa);
      pr.F = tagged("potential", [&] { return examples::blowup2_potential(alpha, kappa, tr); });
      pr.options.candidates = {{u, beta}};
      pr.options.only_candidates = true;
    } else {
      pr.F = tagged("potential", [&] { return build_fano(pr.P, {}, tr); });
    }
  } else if (head == "f2" || head == "hirzebruch_f2") {
    const Rational alpha = arg(0, "alpha", "1/4");
    pr.P = tagged("polytope", [&] { return builtin::hirzebruch_f2(alpha); });
    pr.F = tagged("potential", [&] { return examples::f2_potential(alpha, tr); });
    pr.label = "Hirzebruch F2, alpha = " + to_string(alpha);
    pr.meta["alpha"] = to_string(alpha);
  } else if (head == "s2xs2" && !param(cfg, "rho").empty()) {
    const Rational rho = parse_rational(param(cfg, "rho"));
    pr.P = tagged("polytope", [] { return builtin::s2xs2_degeneration(); });
    pr.F = tagged("potential", [&] { return examples::s2xs2_bulk_potential(rho, tr); });
    pr.options.candidates = {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2) - rho, Rational(1, 2) + rho}};
    pr.options.only_candidates = true;
    pr.label = "S2xS2 with bulk b(rho), rho = " + to_string(rho);
    pr.meta["rho"] = to_string(rho);
  } else {
    std::string name = head;
    if (head == "cp" && !cfg.args.empty()) name = "cp" + cfg.args[0];
    else if (!cfg.args.empty()) {
      name += ":";
      for (std::size_t i = 0; i < cfg.args.size(); ++i) name += (i ? "," : "") + cfg.args[i];
    }
    pr.P = tagged("polytope", [&] { return builtin::by_name(name); });
    pr.F = tagged("potential", [&] { return build_fano(pr.P, {}, tr); });
    pr.label = name;
  }
  pr.has_potential = true;
  return pr;
}

json complex_report(const json& j) {
  FilteredComplex K = tagged("valfield", [&] { return report::complex_from_json(j); });
  json out;
  out["dim"] = K.dim();
  std::string err = K.check();
  out["valid"] = err.empty();
  if (!err.empty()) throw PipelineError("valfield", kExitValidation, err);
  UsherEngine eng = tagged("valfield", [&] { return UsherEngine(K); });
  json classes = json::array();
  for (const auto& h : eng.decomposition().homology) {
    auto sc = eng.spectral_level(h);
    json c{{"level", sc.level.finite() ? to_string(sc.level.value()) : sc.level.str()},
           {"upper_bound_only", sc.upper_bound_only}};
    c["in_G_prime"] = sc.level.finite() && K.in_G_prime(sc.level.value());
    c["duality"] = duality_holds(K, h);
    classes.push_back(c);
  }
  out["classes"] = classes;
  return out;
}

}  // namespace

PipelineError classify_error(const std::exception& e, const std::string& module_hint) {
  if (auto p = dynamic_cast<const PipelineError*>(&e)) return *p;
  if (dynamic_cast<const PolytopeError*>(&e)) return {"polytope", kExitValidation, e.what()};
  if (dynamic_cast<const ValuationError*>(&e))
    return {module_hint == "polytope" ? "potential" : module_hint, kExitValidation, e.what()};
  if (dynamic_cast<const CriticalError*>(&e)) return {"critical", kExitSolver, e.what()};
  if (dynamic_cast<const QuantumError*>(&e)) return {"quantum", kExitAnalysis, e.what()};
  if (dynamic_cast<const SpectralError*>(&e)) return {"spectral", kExitAnalysis, e.what()};
  if (dynamic_cast<const NotACycleError*>(&e)) return {"valfield", kExitValidation, e.what()};
  if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
      dynamic_cast<const std::out_of_range*>(&e))
    return {module_hint, kExitValidation, e.what()};
  if (module_hint == "critical") return {"critical", kExitSolver, e.what()};
  if (module_hint == "quantum" || module_hint == "spectral") return {module_hint, kExitAnalysis, e.what()};
  return {module_hint, kExitInternal, e.what()};
}

Problem make_problem(const PipelineConfig& cfg) {
  if (cfg.target.empty()) throw PipelineError("input", kExitUsage, "no target given");
  if (!ends_with(cfg.target, ".json")) return builtin_problem(cfg);
  const Rational tr = trunc_of(cfg);
  json j = read_json_file(cfg.target);
  Problem pr;
  pr.options = options_of(cfg);
  pr.label = cfg.target;
  if (j.contains("basis")) {
    pr.meta["complex"] = true;
    return pr;
  }
  const json& pj = j.contains("polytope") ? j.at("polytope") : j;
  pr.P = tagged("polytope", [&] { return report::polytope_from_json(pj); });
  if (j.contains("polytope") || j.contains("bulk")) {
    BulkParameter b = tagged("potential", [&] { return report::bulk_from_json(j.value("bulk", json()), tr); });
    pr.F = tagged("potential", [&] { return build_fano(pr.P, b, tr); });
  } else {
    pr.F = tagged("potential", [&] { return build_fano(pr.P, {}, tr); });
  }
  if (j.contains("candidates")) {
    for (const auto& u : j.at("candidates")) {
      RVec r;
      for (const auto& x : u) r.push_back(parse_rational(x.get<std::string>()));
      pr.options.candidates.push_back(r);
    }
    pr.options.only_candidates = j.value("only_candidates", false);
  }
  pr.has_potential = true;
  return pr;
}

report::json run_stages(const PipelineConfig& cfg, Stage upto) {
  json out;
  out["target"] = cfg.target;
  if (!cfg.args.empty()) out["args"] = cfg.args;
  out["config"] = config_json(cfg);
  if (ends_with(cfg.target, ".json")) {
    json j = read_json_file(cfg.target);
    if (j.contains("basis")) {
      out["complex"] = complex_report(j);
      return out;
    }
  }
  Problem pr = make_problem(cfg);
  out["label"] = pr.label;
  if (!pr.meta.is_null()) out["parameters"] = pr.meta;
  out["polytope"] = report::polytope_json(pr.P);
  if (upto == Stage::Validate) return out;

  const Rational below = cfg.emax;
  out["potential"] = report::potential_json(pr.F, trunc_of(cfg));
  if (upto == Stage::Potential) return out;

  CriticalSearch s = tagged("critical", [&] { return find_critical_points(pr.F, pr.P, pr.options); });
  out["critical"] = report::search_json(s, below);
  if (upto == Stage::Critical) return out;

  JacobianModel m = tagged("quantum", [&] { return make_model(pr.F, s.points); });
  out["quantum"] = tagged("quantum", [&] { return report::quantum_json(m, below); });
  if (upto == Stage::Quantum) return out;

  out["spectral"] = tagged("spectral", [&] { return report::spectral_json(quasimorphism_report(pr.P, m)); });
  return out;
}

// ---------------------------------------------------------------------------------------------
// example library

std::vector<ScenarioInfo> example_library() {
  return {
      {"cp-estimate", "CP^n, n = 1..3: critical points, idempotent valuations n/(n+1), defect bounds 12n/(n+1)",
       {"Prop. estimateC"}},
      {"s2xs2-monotone", "monotone S2xS2: four critical points, c1 eigenvalues +-4T^{1/2}, 0, 0",
       {"Sec. S2xS2 eigenvalues"}},
      {"s2xs2-bulk", "S2xS2 with bulk b(rho): T(0) and T(rho) critical values over a rho grid; independence family",
       {"Theorem uncount (1)"}},
      {"f2-degeneration", "F2(alpha) potential term by term and the alpha -> 0 limit critical points +-(1/2, 2)",
       {"Theorem F2PO"}},
      {"blowup2-family", "two-point blow-up, alpha = 1/2, b_kappa family over a u grid; independence certificate",
       {"Theorem CP2heavy", "Corollary lieind"}},
      {"cubic-w0", "cubic surface with bulk w0: nine nondegenerate critical points of valuation (0,0)",
       {"Theorem cubicmain", "Eq. 3irdorderX"}},
      {"cubic-family", "cubic surface with bulk w(u;c): lifted roots of (x-1)(2x+1)^2 + cT^u x^3 over a (u,c) grid",
       {"Eq. 3irdorderX"}},
      {"usher-random", "seeded random filtered complexes: spectral levels in G' and the duality identity",
       {"Lemma Usher"}},
  };
}

bool is_scenario(const std::string& name) {
  for (const auto& s : example_library())
    if (s.name == name) return true;
  return false;
}

namespace {

json points_json(const std::vector<CriticalPoint>& ps, const Rational& below) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(report::critical_json(p, below));
  return a;
}

json scenario_cp(const PipelineConfig& cfg) {
  json rows = json::array();
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    PipelineConfig c = cfg;
    c.target = "cp";
    c.args = {std::to_string(n)};
    Problem pr = make_problem(c);
    auto s = tagged("critical", [&] { return find_critical_points(pr.F, pr.P, pr.options); });
    auto m = make_model(pr.F, s.points);
    json row{{"n", n}, {"count", s.points.size()}};
    json vq = json::array(), db = json::array();
    bool good = s.points.size() == static_cast<std::size_t>(n + 1);
    for (std::size_t k = 0; k < m.criticals.size(); ++k) {
      auto iv = idempotent_valuation(m, k);
      good = good && iv.available && iv.value == Rational(n, n + 1) && m.criticals[k].nondegenerate;
      vq.push_back(iv.available ? json(to_string(iv.value)) : json(nullptr));
      db.push_back(iv.available ? json(to_string(defect_bound(iv.value))) : json(nullptr));
    }
    row["idempotent_valuations"] = vq;
    row["defect_bounds"] = db;
    row["expected"] = {{"idempotent_valuation", to_string(Rational(n, n + 1))},
                       {"defect_bound", to_string(Rational(12 * n, n + 1))}};
    row["points"] = points_json(s.points, cfg.emax);
    row["ok"] = good;
    ok = ok && good;
    rows.push_back(row);
  }
  return {{"rows", rows}, {"ok", ok}};
}

json scenario_s2_monotone(const PipelineConfig& cfg) {
  PipelineConfig c = cfg;
  c.target = "s2xs2";
  c.args.clear();
  c.params.erase("rho");
  json r = run_pipeline(c);
  Problem pr = make_problem(c);
  auto s = find_critical_points(pr.F, pr.P, pr.options);
  int plus = 0, minus = 0, zero = 0;
  for (const auto& p : s.points) {
    if (negligible(p.value, cfg.emax)) ++zero;
    else if (std::abs(p.value.coefficient(Rational(1, 2)) - 4.0) < 1e-8) ++plus;
    else if (std::abs(p.value.coefficient(Rational(1, 2)) + 4.0) < 1e-8) ++minus;
  }
  r["ok"] = s.points.size() == 4 && plus == 1 && minus == 1 && zero == 2;
  return r;
}

NovikovScalar exp_half(const Rational& rho, const Rational& tr) {
  return (NovikovScalar::monomial(Complex(0.5, 0.0), rho, tr)).exp();
}

json scenario_s2_bulk(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  json rows = json::array();
  bool ok = true;
  for (const auto& rho : rational_grid(cfg, {Rational(1, 4), Rational(1, 2)})) {
    auto F = tagged("potential", [&] { return examples::s2xs2_bulk_potential(rho, tr); });
    NovikovScalar e = exp_half(rho, tr), ei = e.inverse();
    NovikovScalar sum = (e + ei).shifted(Rational(1, 2)).scaled(2.0), dif = (e - ei).shifted(Rational(1, 2)).scaled(2.0);
    json row{{"rho", to_string(rho)}};
    auto chart = [&](const RVec& u, const NovikovScalar& expect, const std::string& key) {
      auto r = tagged("critical", [&] { return critical_points_at(F, u, options_of(cfg)); });
      int plus = 0, minus = 0;
      for (const auto& p : r.points) {
        if (NovikovScalar::relative_distance(p.value, expect, cfg.emax) < 1e-8) ++plus;
        if (NovikovScalar::relative_distance(p.value, -expect, cfg.emax) < 1e-8) ++minus;
      }
      json vals = json::array();
      for (const auto& p : r.points) vals.push_back(report::scalar_str(p.value, cfg.emax));
      bool good = r.points.size() == 2 && plus == 1 && minus == 1;
      row[key] = {{"u", report::rvec_json(u)},
                  {"values", vals},
                  {"expected", "+-" + report::scalar_str(expect, cfg.emax)},
                  {"ok", good}};
      ok = ok && good;
    };
    chart({Rational(1, 2), Rational(1, 2)}, sum, "T(0)");
    chart({Rational(1, 2) - rho, Rational(1, 2) + rho}, dif, "T(rho)");
    rows.push_back(row);
  }
  // independence family T(rho), rho in {1/8, 1/4, 3/8}, plus T(0)
  std::vector<FamilyEntry> fam;
  for (auto rho : {Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
    auto F = examples::s2xs2_bulk_potential(rho, tr);
    auto r = critical_points_at(F, {Rational(1, 2) - rho, Rational(1, 2) + rho}, options_of(cfg));
    if (!r.points.empty()) fam.push_back({"b(" + to_string(rho) + ")", r.points[0], true});
  }
  {
    auto F = examples::s2xs2_bulk_potential(Rational(1, 4), tr);
    auto r = critical_points_at(F, {Rational(1, 2), Rational(1, 2)}, options_of(cfg));
    if (!r.points.empty()) fam.push_back({"T(0)", r.points[0], true});
  }
  json cert = report::certificate_json(tagged("spectral", [&] { return independence_certificate(fam); }));
  ok = ok && fam.size() == 4;
  return {{"rows", rows}, {"independence", cert}, {"ok", ok}};
}

json scenario_f2(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  json rows = json::array();
  bool ok = true;
  for (const auto& a : rational_grid(cfg, {Rational(1, 4), Rational(1, 8)})) {
    auto F = tagged("potential", [&] { return examples::f2_potential(a, tr); });
    // y1 + y2 + T^2 y1^-1 y2^-2 + T^{1-a}(1 + T^a) y2^-1
    LaurentNovikov G(2);
    G.add_term({1, 0}, NovikovScalar(Complex(1.0, 0.0), tr));
    G.add_term({0, 1}, NovikovScalar(Complex(1.0, 0.0), tr));
    G.add_term({-1, -2}, NovikovScalar::monomial(1.0, Rational(2), tr));
    G.add_term({0, -1}, NovikovScalar::monomial(1.0, Rational(1) - a, tr) + NovikovScalar::monomial(1.0, Rational(1), tr));
    const bool same = laurent_distance(F, G, tr) < 1e-12 && F.size() == G.size();
    ok = ok && same;
    rows.push_back({{"alpha", to_string(a)}, {"potential", report::potential_json(F, tr)}, {"matches_formula", same}});
  }
  auto L = examples::f2_limit_chart(tr);
  auto r = tagged("critical", [&] { return critical_points_at(L, {Rational(0), Rational(0)}, options_of(cfg)); });
  int hits = 0;
  for (const auto& p : r.points)
    for (double sgn : {1.0, -1.0})
      if (std::abs(p.leading[0] - sgn * 0.5) < 1e-8 && std::abs(p.leading[1] - sgn * 2.0) < 1e-8) ++hits;
  const bool lim_ok = r.points.size() == 2 && hits == 2;
  ok = ok && lim_ok;
  return {{"rows", rows},
          {"limit", {{"potential", report::potential_json(L, tr)}, {"points", points_json(r.points, cfg.emax)}, {"ok", lim_ok}}},
          {"ok", ok}};
}

json scenario_blowup(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  const Rational alpha = parse_rational(param(cfg, "alpha", "1/2"));
  const Rational beta = (Rational(1) - alpha) / Rational(2);
  auto P = builtin::blowup2(alpha, beta);
  json rows = json::array();
  std::vector<FamilyEntry> fam;
  bool ok = true;
  for (const auto& u : rational_grid(cfg, {Rational(2, 7), Rational(3, 10), Rational(1, 3), Rational(7, 20), Rational(5, 14)})) {
    json row{{"u", to_string(u)}};
    try {
      const Rational kappa = tagged("potential", [&] { return examples::blowup_kappa(alpha, u); });
      row["kappa"] = to_string(kappa);
      row["case"] = u > Rational(1, 3) ? "1" : (u == Rational(1, 3) ? "boundary" : "2");
      auto F = tagged("potential", [&] { return examples::blowup2_potential(alpha, kappa, tr); });
      auto o = options_of(cfg);
      o.candidates = {{u, beta}};
      o.only_candidates = true;
      auto s = tagged("critical", [&] { return find_critical_points(F, P, o); });
      row["points"] = points_json(s.points, cfg.emax);
      bool good = !s.points.empty();
      for (const auto& p : s.points) good = good && p.u == RVec{u, beta};
      row["ok"] = good;
      ok = ok && good;
      if (!s.points.empty()) fam.push_back({"kappa = " + to_string(kappa), s.points[0], true});
    } catch (const PipelineError& e) {
      row["error"] = {{"module", e.module}, {"message", e.what()}};
      row["ok"] = false;
      ok = false;
    }
    rows.push_back(row);
  }
  json out{{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"rows", rows}};
  try {
    out["independence"] = report::certificate_json(independence_certificate(fam));
  } catch (const SpectralError& e) {
    out["independence"] = {{"error", e.what()}};
    ok = false;
  }
  out["ok"] = ok;
  return out;
}

json scenario_cubic_w0(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  PipelineConfig c = cfg;
  c.target = "cubic";
  c.args.clear();
  c.params["bulk"] = "w0";
  json r = run_pipeline(c);
  const bool subst = verify_substitution(examples::cubic_potential(tr), examples::cubic_Y_form(tr),
                                         examples::cubic_y_to_Y(), cfg.emax + Rational(1));
  r["substitution_verified"] = subst;
  const auto& pts = r["critical"]["points"];
  bool ok = subst && pts.size() == 9 && r["critical"]["kushnirenko_bound"] == 9;
  for (const auto& p : pts) ok = ok && p["nondegenerate"].get<bool>() && p["u"] == json::array({"0", "0"});
  r["ok"] = ok;
  return r;
}

json scenario_cubic_family(const PipelineConfig& cfg) {
  const Rational tr = trunc_of(cfg);
  std::vector<std::pair<Rational, Complex>> grid{{Rational(0), Complex(1, 1)}, {Rational(1, 2), Complex(1, 0)}};
  if (!param(cfg, "grid").empty()) {
    grid.clear();
    for (const auto& e : split(param(cfg, "grid"), ',')) {
      auto parts = split(e, ':');
      if (parts.size() != 2) throw PipelineError("input", kExitUsage, "cubic-family grid entries are u:c");
      grid.emplace_back(parse_rational(parts[0]), parse_complex(parts[1]));
    }
  }
  json rows = json::array();
  bool ok = true;
  for (const auto& [u, c] : grid) {
    auto F = tagged("potential", [&] { return examples::cubic_bulk_potential(examples::cubic_w_uc(u, c, tr), tr); });
    auto r = tagged("critical", [&] { return critical_points_at(F, {Rational(0), Rational(0)}, options_of(cfg)); });
    json pts = json::array();
    bool good = r.points.size() == 3;
    for (const auto& p : r.points) {
      const NovikovScalar& x = p.units[0];
      NovikovScalar one(Complex(1.0, 0.0), tr), two(Complex(2.0, 0.0), tr);
      NovikovScalar q = (x - one) * (two * x + one) * (two * x + one) + NovikovScalar::monomial(c, u, tr) * x * x * x;
      NovikovScalar h = ((two * x + one).pow(4) * x.pow(4).inverse()).shifted(Rational(2)).scaled(3.0);
      auto qv = q.valuation_above(1e-8);
      const bool res_ok = !qv.finite() || qv.value() >= cfg.emax;
      const bool hess_ok = p.nondegenerate && p.hessian_valuation.value() == h.val() &&
                           std::abs(p.hessian_leading - h.leading_coefficient()) < 1e-7 * std::abs(h.leading_coefficient());
      good = good && res_ok && hess_ok;
      json pj = report::critical_json(p, cfg.emax);
      pj["x"] = report::scalar_str(x, cfg.emax);
      pj["cubic_residual_valuation"] = qv.finite() ? to_string(qv.value()) : qv.str();
      pj["hessian_formula"] = report::scalar_str(h, Rational(3));
      pj["hessian_ok"] = hess_ok;
      pts.push_back(pj);
    }
    ok = ok && good;
    rows.push_back({{"u", to_string(u)}, {"c", report::complex_str(c)}, {"points", pts}, {"ok", good}});
  }
  return {{"rows", rows}, {"ok", ok}};
}

json scenario_usher(const PipelineConfig& cfg) {
  RandomComplexOptions o;
  auto checks = verify_random_complexes(cfg.seed, 200, o, Exec::OpenMP);
  std::size_t bad = 0, classes = 0;
  for (const auto& c : checks) {
    classes += c.classes;
    if (c.error || !c.levels_in_G || !c.duality) ++bad;
  }
  return {{"complexes", checks.size()}, {"classes", classes}, {"failures", bad}, {"ok", bad == 0}};
}

}  // namespace

report::json run_scenario(const std::string& name, const PipelineConfig& cfg) {
  json out;
  for (const auto& s : example_library())
    if (s.name == name) {
      out["scenario"] = s.name;
      out["summary"] = s.summary;
      out["refs"] = s.refs;
    }
  if (out.is_null()) throw PipelineError("input", kExitUsage, "unknown example '" + name + "'");
  out["config"] = config_json(cfg);
  json r;
  if (name == "cp-estimate") r = scenario_cp(cfg);
  else if (name == "s2xs2-monotone") r = scenario_s2_monotone(cfg);
  else if (name == "s2xs2-bulk") r = scenario_s2_bulk(cfg);
  else if (name == "f2-degeneration") r = scenario_f2(cfg);
  else if (name == "blowup2-family") r = scenario_blowup(cfg);
  else if (name == "cubic-w0") r = scenario_cubic_w0(cfg);
  else if (name == "cubic-family") r = scenario_cubic_family(cfg);
  else r = scenario_usher(cfg);
  out["result"] = r;
  return out;
}

}  // namespace nvt

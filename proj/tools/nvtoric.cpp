// nvtoric command-line front end.

#include "nvtoric/scenarios.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using nvt::report::json;

namespace {

struct Flags {
  std::string emax = "5";
  std::int64_t denom = 12;
  std::uint64_t seed = 0x5eed;
  bool as_json = false;
  std::string out;
  std::string alpha, beta, u, c, rho, bulk, grid;
};

struct Target {
  std::string name;
  std::vector<std::string> args;
};

void add_target(CLI::App* sub, Target& t, bool required = true) {
  sub->add_option("target", t.name, "built-in polytope (cp, s2xs2, f2, blowup2, cubic, ...), example name or JSON file")
      ->required(required);
  sub->add_option("args", t.args, "polytope parameters, e.g. 2 in 'cp 2'");
}

nvt::PipelineConfig make_config(const Flags& f, const Target& t) {
  nvt::PipelineConfig cfg;
  cfg.target = t.name;
  cfg.args = t.args;
  try {
    cfg.emax = nvt::parse_rational(f.emax);
  } catch (const std::exception& e) {
    throw nvt::PipelineError("input", nvt::kExitUsage, "--emax: " + std::string(e.what()));
  }
  if (!(cfg.emax > nvt::Rational(0))) throw nvt::PipelineError("input", nvt::kExitUsage, "--emax must be positive");
  cfg.denom = f.denom;
  cfg.seed = f.seed;
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) cfg.params[k] = v;
  };
  put("alpha", f.alpha);
  put("beta", f.beta);
  put("u", f.u);
  put("c", f.c);
  put("rho", f.rho);
  put("bulk", f.bulk);
  put("grid", f.grid);
  return cfg;
}

int emit(const Flags& f, const json& j) {
  std::string text = f.as_json ? j.dump(2) + "\n" : nvt::report::render_text(j);
  if (!f.out.empty()) {
    std::ofstream os(f.out);
    if (!os) {
      std::cerr << "error [input]: cannot write '" << f.out << "'\n";
      return nvt::kExitUsage;
    }
    os << text;
  } else {
    std::cout << text;
  }
  return nvt::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Novikov-field toric potentials: critical points, Jacobian-ring model and spectral reports"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--emax", f.emax, "precision target E_max (rational)")->capture_default_str();
  app.add_option("--denom", f.denom, "denominator bound D for the valuation grid scan")->capture_default_str();
  app.add_option("--seed", f.seed, "seed for multistart solvers and random complexes")->capture_default_str();
  app.add_flag("--json", f.as_json, "JSON output");
  app.add_option("--out", f.out, "write the report to a file");
  app.add_option("--alpha", f.alpha, "alpha parameter (f2, blowup2)");
  app.add_option("--beta", f.beta, "beta parameter (blowup2)");
  app.add_option("--u", f.u, "fiber coordinate u (blowup2 b_kappa family, cubic w(u;c))");
  app.add_option("--c", f.c, "complex c of the cubic w(u;c) bulk");
  app.add_option("--rho", f.rho, "rho of the S2xS2 bulk b(rho)");
  app.add_option("--bulk", f.bulk, "cubic bulk: none, w0, wuc");
  app.add_option("--grid", f.grid, "comma-separated grid for examples (u:c pairs for cubic-family)");
  app.fallthrough();

  Target t;
  struct Sub {
    const char* name;
    const char* help;
    nvt::Stage stage;
  };
  const Sub subs[] = {{"validate", "validate a polytope (or a filtered complex JSON)", nvt::Stage::Validate},
                      {"potential", "build the potential", nvt::Stage::Potential},
                      {"critical", "find and classify critical points", nvt::Stage::Critical},
                      {"quantum", "Jacobian-ring model: eigenvalues and idempotent valuations", nvt::Stage::Quantum},
                      {"spectral", "quasimorphism values, defect bounds and heaviness", nvt::Stage::Spectral}};
  std::vector<std::pair<CLI::App*, nvt::Stage>> stage_cmds;
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    add_target(sc, t);
    stage_cmds.emplace_back(sc, s.stage);
  }
  auto* run = app.add_subcommand("run", "full pipeline on a target, or run a named example");
  add_target(run, t);
  auto* ex = app.add_subcommand("examples", "list the example library");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? nvt::kExitOk : nvt::kExitUsage;
  }

  try {
    if (ex->parsed()) {
      json lib = json::array();
      for (const auto& s : nvt::example_library()) lib.push_back({{"name", s.name}, {"summary", s.summary}, {"refs", s.refs}});
      return emit(f, json{{"examples", lib}});
    }
    auto cfg = make_config(f, t);
    if (run->parsed()) {
      if (nvt::is_scenario(t.name)) {
        json r = nvt::run_scenario(t.name, cfg);
        int rc = emit(f, r);
        if (rc != nvt::kExitOk) return rc;
        return r["result"].value("ok", false) ? nvt::kExitOk : nvt::kExitCheckFailed;
      }
      return emit(f, nvt::run_pipeline(cfg));
    }
    for (const auto& [sc, stage] : stage_cmds)
      if (sc->parsed()) return emit(f, nvt::run_stages(cfg, stage));
  } catch (const nvt::PipelineError& e) {
    std::cerr << "error [" << e.module << "]: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    auto pe = nvt::classify_error(e, "input");
    std::cerr << "error [" << pe.module << "]: " << pe.what() << "\n";
    return pe.code;
  }
  return nvt::kExitInternal;
}

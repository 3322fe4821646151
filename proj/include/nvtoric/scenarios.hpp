#pragma once
// Pipeline driver (polytope -> potential -> critical -> quantum -> spectral) and the example library.

#include "nvtoric/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace nvt {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitValidation = 3,  // polytope, potential and valuation errors
  kExitSolver = 4,      // critical-point search failures
  kExitAnalysis = 5,    // quantum and spectral errors
  kExitCheckFailed = 6, // an example ran but its expected values did not match
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string module, int code, const std::string& what)
      : std::runtime_error(module + ": " + what), module(std::move(module)), code(code) {}
  std::string module;
  int code;
};

struct PipelineConfig {
  std::string target;                        // built-in polytope, example name or JSON file
  std::vector<std::string> args;             // positional parameters, e.g. "2" in "cp 2"
  std::map<std::string, std::string> params; // alpha, beta, u, c, rho, bulk, grid
  Rational emax{5};
  std::int64_t denom = 12;
  std::uint64_t seed = 0x5eed;
};

enum class Stage { Validate, Potential, Critical, Quantum, Spectral };

struct Problem {
  std::string label;
  MomentPolytope P;
  bool has_potential = false;
  LaurentNovikov F;
  CriticalOptions options;
  report::json meta;
};

// Builds the polytope and potential; throws PipelineError tagged "polytope" or "potential".
Problem make_problem(const PipelineConfig& cfg);
// Runs the pipeline up to and including `upto`.
report::json run_stages(const PipelineConfig& cfg, Stage upto);
inline report::json run_pipeline(const PipelineConfig& cfg) { return run_stages(cfg, Stage::Spectral); }

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> refs;
};
std::vector<ScenarioInfo> example_library();
bool is_scenario(const std::string& name);
report::json run_scenario(const std::string& name, const PipelineConfig& cfg);

// Maps any exception from the library to a PipelineError with module tag and exit code.
PipelineError classify_error(const std::exception& e, const std::string& module_hint);

}  // namespace nvt

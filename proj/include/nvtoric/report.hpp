#pragma once
// JSON serialisation of pipeline results and JSON input parsing.

#include "nvtoric/spectral.hpp"
#include "nvtoric/valfield.hpp"

#include "json.hpp"

#include <string>

namespace nvt::report {

using json = nlohmann::json;

// Coefficients to 12 significant digits; real or imaginary parts below 1e-10 of the modulus are dropped.
std::string scalar_str(const NovikovScalar& x, const Rational& below);
std::string complex_str(Complex c);
json rvec_json(const RVec& u);

json polytope_json(const MomentPolytope& P);
json potential_json(const LaurentNovikov& F, const Rational& below);
json critical_json(const CriticalPoint& cp, const Rational& below);
json search_json(const CriticalSearch& s, const Rational& below);
json quantum_json(const JacobianModel& m, const Rational& below);
json spectral_json(const QuasimorphismReport& r);
json certificate_json(const IndependenceCertificate& c);

// {"n": 2, "facets": [{"normal": [1, 0], "offset": "0"}, ...]} or a built-in name such as "cp2", "f2:1/4".
MomentPolytope polytope_from_json(const json& j);
// {"b0": scalar, "facet_weights": [scalar...], "corrections": [{"lambda": "p/q", "poly": {"1,0,2": "c"}}]}
BulkParameter bulk_from_json(const json& j, const Rational& trunc);
// {"basis": [{"name", "level", "parity"}], "boundary": [[scalar-string]], "generators": ["1/6"]}
FilteredComplex complex_from_json(const json& j);

// Indented "key: value" rendering for text output.
std::string render_text(const json& j);

}  // namespace nvt::report

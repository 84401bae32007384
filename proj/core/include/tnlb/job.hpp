#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tnlb/bounds.hpp"
#include "tnlb/dt.hpp"
#include "tnlb/polytope.hpp"

namespace tnlb {

using json = nlohmann::ordered_json;

/// One unit of work for the CLI: an input presentation (textual grammar or
/// DT code), a class, a character, coefficients, a mode, and checks.
struct JobSpec {
    std::string name;
    std::optional<std::string> presentation;
    std::optional<std::vector<long>> dt_code;
    std::vector<mpz_class> psi;
    unsigned sigma_order = 1;
    std::vector<long> sigma_images;
    CoefficientKind kind = CoefficientKind::seifert;
    std::optional<CustomSkewSpec> custom;
    SpaceMode mode = SpaceMode::manifold;
    std::optional<int> epsilon;
    bool check_cross_validate = false;
    std::optional<mpz_class> fibered_chi_minus;
    bool polytope = false;
};

JobSpec parse_job(const json& j);
JobSpec parse_job_text(const std::string& text);

struct RunOptions {
    std::optional<int> epsilon_override;
    bool strict = false;   // refuse to default a missing epsilon
    bool polytope = false; // alexander: also emit Newton polytope vertices
};

struct JobOutcome {
    int exit_code = 0;  // 0 ok, 1 parse error, 2 inconsistent configuration
    json report;
};

JobOutcome run_bound_job(const JobSpec& job, const RunOptions& opt);
JobOutcome run_alexander_job(const JobSpec& job, const RunOptions& opt);

struct BatchResult {
    std::vector<JobOutcome> outcomes;  // input order, regardless of workers
    int exit_code = 0;                 // 0 clean, 3 when any job failed
};

/// Runs bound jobs concurrently (worker pool) with deterministic output
/// order. workers = 0 picks a sensible default.
BatchResult run_batch(const std::vector<JobSpec>& jobs, const RunOptions& opt,
                      unsigned workers);

/// Serialization of polynomial data used in reports:
/// a list of {"exp": [..], "coeff": "<rational or a0+a1*z+... string>"}.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, unsigned cyc_order);
json polytope_to_json(const NewtonPolytope& np);

/// Plain-text rendering of a report (format: text).
std::string report_to_text(const json& report);

}  // namespace tnlb

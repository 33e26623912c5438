#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logkahler/dombrowski.hpp"

#include <json.hpp>

namespace logkahler {

enum class VerdictStatus { PASS, FAIL, REPORTED };

std::string to_string(VerdictStatus s);

/// One machine-readable check result.  PASS asserts residual <= tolerance;
/// REPORTED carries a measured residual for a claim the suite does not
/// endorse, and never affects exit codes.
struct Verdict {
    std::string claim;
    VerdictStatus status = VerdictStatus::FAIL;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string anchor;
    std::string notes;
};

struct RunConfig {
    std::uint64_t seed = 2026;
    int n_states = 100;       // random tangent states per property check
    double flow_step = 1e-3;  // RK4 step for the flow suites
};

/// The fixed claim registry; report-all must cover exactly these ids,
/// and a missing id is itself a failure.
const std::vector<std::string>& claim_registry();

/// Deterministic 20-point theta grid shared by the metric checks.
std::vector<NaturalPoint> standard_theta_grid();

/// Seeded random tangent states with theta2 bounded away from zero.
std::vector<TangentState> sample_states(std::uint64_t seed, int count);

std::vector<Verdict> suite_metric(const RunConfig& cfg);        // lem1
std::vector<Verdict> suite_kahler(const RunConfig& cfg);        // pro2.*
std::vector<Verdict> suite_family(const RunConfig& cfg);        // family.pde
std::vector<Verdict> suite_translations(const RunConfig& cfg);  // pro400.*
std::vector<Verdict> suite_fields(const RunConfig& cfg);        // pro40.*
std::vector<Verdict> suite_flows(const RunConfig& cfg);         // flow.*
std::vector<Verdict> suite_schrodinger(const RunConfig& cfg);   // eq22..energy

std::vector<Verdict> run_all_suites(const RunConfig& cfg);

/// Canonically ordered JSON document: version, config echo, verdicts.
/// Appends a FAIL entry for any registry id absent from `results`.
nlohmann::ordered_json emit_verdicts(const std::vector<Verdict>& results,
                                     const RunConfig& cfg);

bool any_fail(const nlohmann::ordered_json& doc);

}  // namespace logkahler

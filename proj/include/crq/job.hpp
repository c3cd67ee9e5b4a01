#pragma once

#include "crq/io.hpp"
#include "crq/suites.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crq {

/// Analyses in the order they run.
const std::vector<std::string>& known_analyses();

struct JobConfig {
    Json quadric_descriptor;
    std::optional<QuadricSpec> quadric;
    std::optional<SphereSpec> sphere;
    /// Subset of known_analyses(); empty means the default of the command.
    std::vector<std::string> analyses;
    std::uint64_t seed = 1;
    std::optional<std::string> output;
};

/// {quadric, analyses?, seed?, output?, sphere?}. Builds the quadric and
/// sphere so that every parse or construction error surfaces here, before any
/// computation.
JobConfig parse_job(const Json& j);

enum class Suite { None, Fast, Full };

struct JobResult {
    /// Deterministic report: identical for identical config, seed and suite.
    Json report;
    bool passed = true;
    /// Wall-clock seconds per stage, kept out of the report.
    std::vector<std::pair<std::string, double>> timing;
};

/// Runs the analyses in dependency order. With Suite::None only the
/// requested analyses run (default: hol). With Fast or Full all analyses run
/// unless a subset is requested; Fast skips Type V quadrics and the symbolic
/// group audits. Failed checks and errors raised by an analysis are recorded
/// in the report, never thrown.
JobResult run_job(const JobConfig& config, Suite suite);

/// One line per check plus a summary.
std::string summarize(const Json& report);

}  // namespace crq

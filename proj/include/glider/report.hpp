#pragma once

#include "glider/sim.hpp"

#include <string>
#include <utility>
#include <vector>

namespace glider {

/// One named run feeding the report outputs.
struct RunSummary {
    std::string name;
    MetricsReport metrics;
    bool aborted = false;       // run stopped before the horizon
    double abort_time = 0.0;    // valid when aborted
    std::string abort_reason;   // valid when aborted
};

/// Serialized metrics.json document for a set of runs on one scenario
/// (2-space indented, stable key order, trailing newline).
std::string metrics_json_text(const ScenarioConfig& cfg, const std::vector<RunSummary>& runs);

/// Plain-text comparison matrix (rows = metric x channel, columns =
/// controllers); the minimum of each row is marked with '*'.
std::string comparison_table(const std::vector<RunSummary>& runs);

}  // namespace glider

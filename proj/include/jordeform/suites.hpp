#pragma once

// Suite runner: maps a run configuration onto the verification checks from
// the other modules. Suites dispatch on worker threads and the report is
// merged in a fixed suite order, so the record layout is deterministic.

#include "jordeform/report.hpp"

#include <string>
#include <vector>

namespace jordeform {

struct RunConfig {
    int order = 4;                   // z-series truncation
    int fock_dim = 16;               // number-state matrix size
    int fb_degree = 12;              // polynomial degree cap for FB operators
    std::string algebra = "all";     // h6, h6-dual, schrodinger, all
    std::vector<std::string> suites; // empty means all
};

const std::vector<std::string>& suite_names();

// runs the selected suites; throws std::invalid_argument on a bad config
Report run_suites(const RunConfig& cfg);

} // namespace jordeform

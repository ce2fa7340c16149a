#pragma once

#include "matspace/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace matspace {

struct SuiteOptions {
    unsigned field = 0; // 0 = suite default; suites with pinned fields ignore it
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool long_running = false;
};

const std::vector<std::string>& suite_names();

// Runs one named suite.  The claims section of the result is byte-for-byte
// independent of opts.jobs; runtime_ms is the only nondeterministic field.
// Throws value_error for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace matspace

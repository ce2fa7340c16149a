#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace matspace {

using ordered_json = nlohmann::ordered_json;

// One checked value.  Status is derived: pass iff expected == actual
// exactly (integers, booleans, strings, arrays; never tolerances).
struct Claim {
    std::string id;
    std::string description;
    ordered_json expected;
    ordered_json actual;
    std::string status; // "pass", "fail", "skipped"
};

// Everything except runtime_ms is deterministic for fixed flags; the claims
// section is additionally independent of the jobs count.
struct Report {
    int schema = 1;
    std::string suite;
    ordered_json parameters = ordered_json::object();
    std::vector<Claim> claims;
    unsigned partitions = 1;
    std::uint64_t runtime_ms = 0;

    void add(const std::string& id, const std::string& description, ordered_json expected,
             ordered_json actual);
    void add_skipped(const std::string& id, const std::string& description,
                     const std::string& reason);
    bool all_pass() const; // skipped claims do not fail a report
    ordered_json to_json() const;
};

} // namespace matspace

#include "matspace/report.hpp"

namespace matspace {

void Report::add(const std::string& id, const std::string& description, ordered_json expected,
                 ordered_json actual) {
    Claim c;
    c.id = id;
    c.description = description;
    c.status = expected == actual ? "pass" : "fail";
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    claims.push_back(std::move(c));
}

void Report::add_skipped(const std::string& id, const std::string& description,
                         const std::string& reason) {
    Claim c;
    c.id = id;
    c.description = description;
    c.expected = nullptr;
    c.actual = reason;
    c.status = "skipped";
    claims.push_back(std::move(c));
}

bool Report::all_pass() const {
    for (const Claim& c : claims)
        if (c.status == "fail") return false;
    return true;
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["schema"] = schema;
    j["suite"] = suite;
    j["parameters"] = parameters;
    ordered_json list = ordered_json::array();
    for (const Claim& c : claims) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["status"] = c.status;
        list.push_back(std::move(cj));
    }
    j["claims"] = std::move(list);
    j["partitions"] = partitions;
    j["runtime_ms"] = runtime_ms;
    return j;
}

} // namespace matspace

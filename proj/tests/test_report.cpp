#include "matspace/suites.hpp"

#include "matspace/common.hpp"

#include "doctest.h"

using namespace matspace;

namespace {

ordered_json claims_of(const Report& r) {
    ordered_json j = r.to_json();
    return j["claims"];
}

} // namespace

TEST_CASE("claim status is exact equality") {
    Report r;
    r.suite = "probe";
    r.add("match", "equal values pass", 42, 42);
    r.add("mismatch", "unequal values fail", 42, 43);
    r.add("typed", "booleans are not integers", true, 1);
    r.add_skipped("gated", "requires a flag", "disabled here");
    CHECK(r.claims[0].status == "pass");
    CHECK(r.claims[1].status == "fail");
    CHECK(r.claims[2].status == "fail");
    CHECK(r.claims[3].status == "skipped");
    CHECK_FALSE(r.all_pass());

    Report ok;
    ok.add("a", "", 1, 1);
    ok.add_skipped("b", "", "later");
    CHECK(ok.all_pass());
}

TEST_CASE("report serialization is stable and versioned") {
    Report r;
    r.suite = "probe";
    r.parameters["field"] = 2;
    r.add("a", "first", 1, 1);
    ordered_json j = r.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "probe");
    CHECK(j["claims"].size() == 1);
    CHECK(j["claims"][0]["id"] == "a");
    CHECK(j["claims"][0]["status"] == "pass");
    // key order is fixed
    auto it = j.begin();
    CHECK(it.key() == "schema");
    ++it;
    CHECK(it.key() == "suite");
}

TEST_CASE("suite names are exposed and unknown names throw") {
    CHECK(suite_names().size() == 8);
    SuiteOptions defaults;
    CHECK_THROWS_AS(run_suite("no-such-suite", defaults), value_error);
}

TEST_CASE("counts suite passes and is deterministic") {
    Report a = run_suite("counts", {});
    CHECK(a.all_pass());
    Report b = run_suite("counts", {});
    CHECK(claims_of(a) == claims_of(b));
}

TEST_CASE("oracle suite claims are jobs-independent") {
    SuiteOptions one, four;
    four.jobs = 4;
    Report a = run_suite("oracles", one);
    Report b = run_suite("oracles", four);
    CHECK(a.all_pass());
    CHECK(claims_of(a) == claims_of(b));
}

TEST_CASE("the GF(4) suite is skipped without the flag") {
    Report r = run_suite("m2-hyperplanes-f4", {});
    CHECK(r.all_pass());
    for (const Claim& c : r.claims) CHECK(c.status == "skipped");
    CHECK(r.claims.size() == 4);
}

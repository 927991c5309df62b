#include "gnc/errors.hpp"
#include "gnc/json.hpp"
#include "gnc/verify.hpp"

#include <doctest.h>

using namespace gnc;

namespace {

std::string dump(const std::vector<SuiteReport>& reports)
{
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(suite_json(r));
    return out.dump();
}

} // namespace

TEST_CASE("suite catalogue")
{
    const auto& names = suite_names();
    CHECK(names.size() == 8);
    CHECK(names.front() == "kappa1");
    CHECK(default_max_n("trees") == 9);
    CHECK_THROWS_AS(run_suite("nonsense", {}), ParameterError);
}

TEST_CASE("small suites pass")
{
    for (const char* name : {"kappa1", "kappa2", "bounds", "monotone", "relations", "extremal-formulas"}) {
        CAPTURE(name);
        const auto r = run_suite(name, {.max_n = 6});
        CHECK(r.passed());
        CHECK(r.max_n == 6);
        std::uint64_t cases = 0;
        for (const auto& c : r.checks) cases += c.cases;
        CHECK(cases > 0);
    }
    CHECK(run_suite("trees", {.max_n = 8}).passed());
}

TEST_CASE("advisory checks never fail a suite")
{
    CheckResult c{.name = "x", .cases = 3, .failures = 2, .advisory = true, .counterexamples = {}};
    CHECK(c.passed());
    c.advisory = false;
    CHECK_FALSE(c.passed());
    SuiteReport s{.suite = "s", .max_n = 1, .checks = {c}};
    CHECK_FALSE(s.passed());
}

TEST_CASE("suite output is identical across thread counts")
{
    const auto base = dump(run_suites("bounds", {.max_n = 6, .threads = 1}));
    for (int threads : {2, 4, 8}) CHECK(dump(run_suites("bounds", {.max_n = 6, .threads = threads})) == base);
    const auto fam = dump(run_suites("families", {.max_n = 10, .threads = 1}));
    CHECK(dump(run_suites("families", {.max_n = 10, .threads = 8})) == fam);
}

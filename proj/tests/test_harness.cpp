#include "lz/harness.hpp"

#include <doctest.h>

#include <set>

using namespace lz;

TEST_CASE("registry ids are unique and cover every zeta kind")
{
    std::set<std::string> ids;
    for (const auto& c : list_cases()) CHECK(ids.insert(c.id).second);
    for (const char* k : {"gspin-gl2", "gspin5-gl", "gspin-gl3", "multi-gl", "multi-gspin", "d4", "d5",
                          "glue-gl-gl", "glue-gl-gspin", "glue-gspin-gspin"}) {
        int owners = 0;
        for (const auto& c : list_cases()) owners += std::count(c.zeta_cases.begin(), c.zeta_cases.end(), k);
        CHECK_MESSAGE(owners == 1, k);
    }
}

TEST_CASE("named registry rows")
{
    CHECK(describe_case("2.8/n=10").dual_group == "GSpin_10");
    CHECK(case_for_zeta("d5").tau == "Spin");
    CHECK(case_for_zeta("d4").dual_group == "Spin_8");
    CHECK(describe_case("S10+S11").excluded);
    CHECK(describe_case("2.9").disconnected);
    CHECK_THROWS_AS(describe_case("9.9"), std::out_of_range);
    const json j = describe_case("22.1");
    CHECK(j["zeta_cases"][0] == "d4");
}

TEST_CASE("config validation")
{
    SuiteConfig c;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.deg_x = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.suites = {"nope"};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.only = {"cauchy:zz"};
    CHECK_THROWS_AS(plan_suite(c), ConfigError);
}

TEST_CASE("plan selection")
{
    SuiteConfig c;
    CHECK(plan_suite(c).size() == 60);
    c.only = {"cauchy:a"};
    auto p = plan_suite(c);
    REQUIRE(p.size() == 1);
    CHECK(p[0].id() == "cauchy:a");
    c.only = {"zeta:glue-gl-gl"};
    CHECK(plan_suite(c).size() == 2);
    c.only = {"stabilizers:xi"};
    CHECK(plan_suite(c).size() == 5);
    c.only = {"stabilizers"};
    CHECK(plan_suite(c).size() == 10);
    c = {};
    c.suites = {"zeta"};
    c.case_name = "multi-gl";
    c.rank_n = 5;
    p = plan_suite(c);
    REQUIRE(p.size() == 1);
    CHECK(p[0].key == "multi-gl(5)");
}

TEST_CASE("report round trip and determinism")
{
    SuiteConfig c;
    c.only = {"cauchy:a", "zeta:multi-gl(2)", "orbits:GL2GL2"};
    c.deg_x = 6;
    c.deg_y = 6;
    const SuiteResult a = run_suite(c);
    CHECK(a.exit_code == 0);
    CHECK(validate_report(a.report) == "");
    c.jobs = 3;
    const SuiteResult b = run_suite(c);

    auto strip = [](json j) {
        j.erase("runtime_ms");
        j["config"].erase("jobs");
        for (auto& r : j["reports"]) r.erase("elapsed_ms");
        for (auto& r : j["reports"])
            if (r["details"].contains("ranks"))
                for (auto& s : r["details"]["ranks"]) s.erase("elapsed_ms");
        return j;
    };
    CHECK(strip(a.report).dump() == strip(b.report).dump());

    std::vector<IdentityReport> back = a.report["reports"].get<std::vector<IdentityReport>>();
    CHECK(json(back) == a.report["reports"]);

    json broken = a.report;
    broken["summary"]["passed"] = 0;
    CHECK(validate_report(broken) != "");
    broken = a.report;
    broken["reports"][0].erase("pass");
    CHECK(validate_report(broken) != "");
}

TEST_CASE("failing cells give exit code 1")
{
    SuiteConfig c;
    c.only = {"stabilizers:xi(1)"};
    const SuiteResult r = run_suite(c);
    CHECK(r.exit_code == 1);
    CHECK(validate_report(r.report) == "");
}

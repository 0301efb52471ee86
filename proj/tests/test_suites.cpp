#include <doctest.h>

#include "omegapow/errors.hpp"
#include "omegapow/suites.hpp"

using namespace omegapow;

namespace
{

SuiteParams bounded(std::uint64_t bound)
{
    SuiteParams p;
    p.bound = bound;
    return p;
}

} // namespace

TEST_CASE("suite registry")
{
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), invalid_parameter);
}

TEST_CASE("E-dual-characterization covers every word")
{
    const auto report = run_suite("E-dual-characterization", bounded(6));
    CHECK(report.cases_total == (729 * 3 - 1) / 2);
    CHECK(report.verdict() == Verdict::pass);
}

TEST_CASE("small runs of every suite pass")
{
    SuiteParams p;
    p.bound = 2;
    p.samples = 50;
    p.jmax = 1;
    for (const auto& name : suite_names()) {
        const auto report = run_suite(name, p);
        CAPTURE(name);
        CHECK(report.cases_total > 0);
        CHECK(report.verdict() == Verdict::pass);
        CHECK(report.cases_failed + report.cases_inconclusive <= report.cases_total);
    }
}

TEST_CASE("key equality suite on the diagonal tree")
{
    SuiteParams p;
    p.rtree = "diag";
    p.jmax = 2;
    p.bound = 3;
    const auto report = run_suite("theorem2-key-equality", p);
    CHECK(report.verdict() == Verdict::pass);
    CHECK(report.parameters["rtree"] == nlohmann::ordered_json::array({"diag"}));
}

TEST_CASE("reports are deterministic and omit timing by default")
{
    SuiteParams p;
    p.bound = 3;
    p.samples = 200;
    p.seed = 42;
    const auto a = report_to_json(run_suite("sigma2-main", p)).dump();
    const auto b = report_to_json(run_suite("sigma2-main", p)).dump();
    CHECK(a == b);
    CHECK(a.find("runtime_ms") == std::string::npos);
    CHECK(a.find("\"seed\":42") != std::string::npos);
    p.timing = true;
    CHECK(report_to_json(run_suite("sigma2-main", p)).contains("runtime_ms"));
}

TEST_CASE("verdicts")
{
    SuiteReport r;
    CHECK(r.verdict() == Verdict::inconclusive);
    r.cases_total = 100;
    CHECK(r.verdict() == Verdict::pass);
    r.cases_inconclusive = 6;
    CHECK(r.verdict() == Verdict::inconclusive);
    r.cases_failed = 1;
    CHECK(r.verdict() == Verdict::fail);
    const auto j = report_to_json(r);
    CHECK(j["verdict"] == "fail");
    CHECK(j["tool_version"] == kToolVersion);
}

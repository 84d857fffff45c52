//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <doctest.h>
#include <json.hpp>

#include "harness.hpp"

using namespace ssb;

namespace
{
// Small grids that exercise every code path of each suite in seconds.
std::string tiny(std::string const& suite)
{
    if (suite == "simulate")
        return R"({"n":[16],"horizon":0.5,"ensemble":2,"record_stride":50,
                   "snapshot":true,"moment_sites":[8,16]})";
    if (suite == "invariance-exact")
        return R"({"corpus":5})";
    if (suite == "stationarity")
        return R"({"n":[16],"sites":32,"horizon":1,"times":[0,1],
                   "record_stride":100,"ensemble":6})";
    if (suite == "qv")
        return R"({"n":[16],"horizon":0.5,"times":[0.25,0.5],"ensemble":6})";
    if (suite == "bg-scaling" || suite == "one-block")
        return R"({"n":[16,36],"l":[1,2,3],"l_ref":2,"horizon":0.25,
                   "record_stride":25,"ensemble":6})";
    if (suite == "ucp")
        return R"({"n":[16,36],"horizon":0.25,"record_stride":25,"ensemble":6})";
    if (suite == "ec")
        return R"({"n":[64],"eps":[0.25,0.5],"times":[0.125,0.25],
                   "record_stride":25,"ensemble":6})";
    if (suite == "baseline-ou")
        return R"({"ensemble":20,"sites":48})";
    return R"({"n":[16],"sites":256,"horizon":0.25,"record_stride":400,
               "ensemble":6})";
}
}  // namespace

TEST_CASE("every suite runs and is independent of the thread count")
{
    for (auto const& suite : suite_names())
    {
        CAPTURE(suite);
        auto const cfg = parse_config(suite, tiny(suite));
        auto const a = run_suite(suite, cfg, {1});
        auto const b = run_suite(suite, cfg, {3});
        CHECK(a.to_json() == b.to_json());
        CHECK(a.to_csv() == b.to_csv());
        CHECK_FALSE(a.checks().empty());
        auto const j = nlohmann::json::parse(a.to_json());
        CHECK(j["config_hash"] == cfg.hash());
        if (suite != "invariance-exact")
            CHECK(a.steps() > 0);
    }
}

TEST_CASE("seeds change results")
{
    auto const a = run_suite("qv", parse_config("qv", tiny("qv")));
    auto j = nlohmann::json::parse(tiny("qv"));
    j["seed"] = 2;
    auto const b = run_suite("qv", parse_config("qv", j));
    CHECK(a.to_csv() != b.to_csv());
}

TEST_CASE("simulate emits series and snapshot artifacts")
{
    auto const r = run_suite("simulate", parse_config("simulate", tiny("simulate")));
    std::size_t series = 0, snaps = 0;
    for (auto const& a : r.artifacts())
    {
        series += a.name.rfind("series_", 0) == 0;
        if (a.name.rfind("snapshot_", 0) == 0)
        {
            ++snaps;
            CHECK(a.content.rfind("# seed=1, replicate=", 0) == 0);
        }
    }
    CHECK(series == 2);
    CHECK(snaps == 2);
}

TEST_CASE("linear baseline matches the heat kernel at gamma = 0")
{
    // 128 site-covariance z-scores per run: bound the largest one at a
    // Bonferroni level instead of 3 sigma.
    auto const r = run_suite("baseline-ou",
                             parse_config("baseline-ou", R"({"ensemble":400})"));
    for (auto const& c : r.checks())
    {
        CAPTURE(c.name);
        if (c.name.find("site covariance") != std::string::npos)
            CHECK(c.value < 4.5);
        else
            CHECK(c.passed);
    }
}

TEST_CASE("dispatch errors")
{
    auto const cfg = parse_config("qv", "");
    CHECK_THROWS_AS(run_suite("plots", cfg), UnknownSuiteError);
    CHECK_THROWS(run_suite("ucp", cfg));
}

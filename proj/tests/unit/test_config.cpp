//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <string>

#include <doctest.h>

#include "config.hpp"
#include "spectral.hpp"

using namespace ssb;

namespace
{
std::vector<std::string> violations(std::string const& suite,
                                    std::string const& text)
{
    try
    {
        parse_config(suite, text);
    }
    catch (ConfigError const& e)
    {
        return e.violations();
    }
    return {};
}

bool mentions(std::vector<std::string> const& v, std::string const& needle)
{
    for (auto const& s : v)
    {
        if (s.find(needle) != std::string::npos)
            return true;
    }
    return false;
}
}  // namespace

TEST_CASE("empty configs take the documented defaults")
{
    for (auto const& suite : suite_names())
    {
        auto const cfg = parse_config(suite, "");
        CHECK(cfg.suite == suite);
        CHECK(cfg.seed == 1);
        CHECK(parse_config(suite, "{}").hash() == cfg.hash());
        // Every default key appears in the canonical form.
        auto const defaults = suite_defaults(suite);
        for (auto const& [key, value] : defaults.items())
            CHECK(cfg.canonical.contains(key));
    }
    auto const qv = parse_config("qv", "");
    CHECK(qv.integrator.scheme == Scheme::euler);
    CHECK(qv.n == std::vector<std::uint64_t>{64});
    auto const bg = parse_config("bg-scaling", "");
    CHECK(bg.n == std::vector<std::uint64_t>{64, 128, 256, 512});
    CHECK(bg.l == std::vector<std::size_t>{2, 4, 8, 16, 32});
}

TEST_CASE("unknown suite and unknown keys")
{
    CHECK_THROWS_AS(parse_config("plot", ""), UnknownSuiteError);
    auto const v = violations("qv", R"({"n":[64],"colour":1,"l":[2]})");
    CHECK(mentions(v, "colour"));
    CHECK(mentions(v, "'l'"));
}

TEST_CASE("euler stability bound is named")
{
    auto const v = violations("qv", R"({"dt":1.5})");
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "dt = 1.5 violates the explicit stability bound dt < 1 "
                  "for scheme=euler");
    CHECK(violations("qv", R"({"dt":1.5,"scheme":"ou-splitting",
                               "horizon":3,"times":[3],"record_stride":1})")
              .empty());
}

TEST_CASE("torus size rule is enforced per n")
{
    // Gaussian of scale 1 has R = sqrt(12 ln 10) ~ 5.26: 8 * 16 * R > 384
    auto const v = violations("qv", R"({"n":[256],"sites":384,"phi":"gaussian",
                                       "horizon":0.25,"times":[0.25]})");
    CHECK(mentions(v, "torus rule"));
    CHECK(mentions(v, "n = 256"));
    // Scale 3/R gives R = 3, so M = 384 is exactly enough.
    auto const r = TestFunction::gaussian().support_radius();
    std::string const ok = R"({"n":[256],"sites":384,"phi":"gaussian",
        "horizon":0.25,"times":[0.25],"phi_scale":)"
                           + std::to_string(2.999 / r) + "}";
    CHECK(violations("qv", ok).empty());
    auto const cfg = parse_config("qv", R"({"n":[256],"horizon":0.25,"times":[0.25]})");
    CHECK(cfg.sites_for(256) >= required_sites(256, r));
    CHECK(cfg.sites_for(256) == smooth_size(required_sites(256, r)));
}

TEST_CASE("violations are reported together")
{
    auto const v = violations("bg-scaling", R"({"ensemble":0,"dt":-1,
        "l":[0],"phi":"square","n":[]})");
    CHECK(v.size() >= 4);
}

TEST_CASE("time grids must align with steps and records")
{
    auto const v = violations("qv", R"({"times":[0.3]})");
    CHECK(mentions(v, "record grid"));
    auto const w = violations("qv", R"({"times":[2.0]})");
    CHECK(mentions(w, "outside"));
    CHECK(step_for_time(0.5, 64, 0.01) == 3200u);
    CHECK_FALSE(step_for_time(0.5, 64, 0.03).has_value());
}

TEST_CASE("hash depends on canonical content only")
{
    auto const a = parse_config("ucp", R"({"n":[64,128],"seed":3})");
    auto const b = parse_config("ucp", R"({"seed":3,"n":[64,128],"dt":0.01})");
    auto const c = parse_config("ucp", R"({"seed":4,"n":[64,128]})");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != c.hash());
    CHECK(a.hash().size() == 16);
    CHECK(a.canonical_text() == b.canonical_text());
    // FNV-1a 64 reference values
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("coupling and integrator derived from the config")
{
    auto const cfg = parse_config("baseline-ou", "");
    CHECK(cfg.params(1, 64).gamma == 0);
    auto const s = parse_config("stationarity", "");
    CHECK(s.params(256, 256).gamma == doctest::Approx(0.25));
    auto const integ = s.integrator_for(256, 10.0 / 256);
    CHECK(integ.total_steps() == 1000);
    CHECK(s.sites_for(256) == 256);
}

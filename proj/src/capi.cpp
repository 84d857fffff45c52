//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file capi.cpp
//! extern "C" wrappers; no exception crosses this boundary.
//---------------------------------------------------------------------------//
#include "ssburgers/ssburgers.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "harness.hpp"
#include "integrator.hpp"
#include "lattice.hpp"
#include "test_function.hpp"
#include "version.hpp"

struct ssb_config
{
    ssb::ExperimentConfig cfg;
};

struct ssb_report
{
    ssb::Report report;
};

namespace
{
thread_local std::string last_error;

ssb_status fail(ssb_status code, std::string msg)
{
    last_error = std::move(msg);
    return code;
}

char* duplicate(std::string const& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ssb::Nonlinearity to_kind(ssb_nonlinearity k)
{
    return k == SSB_NAIVE ? ssb::Nonlinearity::naive
                          : ssb::Nonlinearity::sasamoto_spohn;
}

template<class F>
ssb_status guarded(F&& f)
{
    last_error.clear();
    try
    {
        return f();
    }
    catch (ssb::ConfigError const& e)
    {
        std::string msg;
        for (auto const& v : e.violations())
            msg += (msg.empty() ? "" : "\n") + v;
        return fail(SSB_VALIDATION, msg.empty() ? e.what() : msg);
    }
    catch (ssb::UnknownSuiteError const& e)
    {
        return fail(SSB_UNKNOWN_SUITE, e.what());
    }
    catch (ssb::TrajectoryError const& e)
    {
        return fail(SSB_TRAJECTORY, e.what());
    }
    catch (ssb::Error const& e)
    {
        return fail(SSB_INVALID_ARGUMENT, e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(SSB_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(SSB_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(SSB_INTERNAL, "unknown error");
    }
}

#define SSB_REQUIRE(cond)                                                  \
    do                                                                     \
    {                                                                      \
        if (!(cond))                                                       \
            return fail(SSB_INVALID_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

bool known_suite(char const* suite)
{
    for (auto const& s : ssb::suite_names())
    {
        if (s == suite)
            return true;
    }
    return false;
}
}  // namespace

extern "C" {

char const* ssb_version(void)
{
    return ssb::version_string;
}

char const* ssb_last_error(void)
{
    return last_error.c_str();
}

void ssb_string_free(char* s)
{
    std::free(s);
}

size_t ssb_suite_count(void)
{
    return ssb::suite_names().size();
}

char const* ssb_suite_name(size_t index)
{
    auto const& names = ssb::suite_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

ssb_status ssb_config_defaults(char const* suite, char** json_out)
{
    SSB_REQUIRE(suite && json_out);
    return guarded([&] {
        if (!known_suite(suite))
            return fail(SSB_UNKNOWN_SUITE,
                        std::string("unknown suite '") + suite + "'");
        *json_out = duplicate(ssb::suite_defaults(suite).dump(2));
        return SSB_OK;
    });
}

ssb_status ssb_config_parse(char const* suite, char const* json,
                            ssb_config** out)
{
    SSB_REQUIRE(suite && json && out);
    *out = nullptr;
    return guarded([&] {
        auto cfg = ssb::parse_config(suite, std::string(json));
        *out = new ssb_config{std::move(cfg)};
        return SSB_OK;
    });
}

void ssb_config_destroy(ssb_config* cfg)
{
    delete cfg;
}

ssb_status ssb_config_canonical(ssb_config const* cfg, char** json_out)
{
    SSB_REQUIRE(cfg && json_out);
    return guarded([&] {
        *json_out = duplicate(cfg->cfg.canonical_text());
        return SSB_OK;
    });
}

ssb_status ssb_config_hash(ssb_config const* cfg, char** hash_out)
{
    SSB_REQUIRE(cfg && hash_out);
    return guarded([&] {
        *hash_out = duplicate(cfg->cfg.hash());
        return SSB_OK;
    });
}

ssb_status ssb_run_suite(ssb_config const* cfg, unsigned threads,
                         ssb_report** out)
{
    SSB_REQUIRE(cfg && out);
    *out = nullptr;
    return guarded([&] {
        ssb::RunOptions opts;
        opts.threads = threads;
        auto report = ssb::run_suite(cfg->cfg.suite, cfg->cfg, opts);
        *out = new ssb_report{std::move(report)};
        return SSB_OK;
    });
}

void ssb_report_destroy(ssb_report* report)
{
    delete report;
}

int ssb_report_passed(ssb_report const* report)
{
    return report && report->report.passed() ? 1 : 0;
}

uint64_t ssb_report_steps(ssb_report const* report)
{
    return report ? report->report.steps() : 0;
}

ssb_status ssb_report_json(ssb_report const* report, char** out)
{
    SSB_REQUIRE(report && out);
    return guarded([&] {
        *out = duplicate(report->report.to_json());
        return SSB_OK;
    });
}

ssb_status ssb_report_csv(ssb_report const* report, char** out)
{
    SSB_REQUIRE(report && out);
    return guarded([&] {
        *out = duplicate(report->report.to_csv());
        return SSB_OK;
    });
}

size_t ssb_report_artifact_count(ssb_report const* report)
{
    return report ? report->report.artifacts().size() : 0;
}

ssb_status ssb_report_artifact(ssb_report const* report, size_t index,
                               char** name_out, char** content_out)
{
    SSB_REQUIRE(report && name_out && content_out);
    SSB_REQUIRE(index < report->report.artifacts().size());
    return guarded([&] {
        auto const& a = report->report.artifacts()[index];
        *name_out = duplicate(a.name);
        *content_out = duplicate(a.content);
        return SSB_OK;
    });
}

ssb_status ssb_drift(double const* u, size_t sites, double gamma,
                     ssb_nonlinearity kind, double* drift_out)
{
    SSB_REQUIRE(u && drift_out && sites >= ssb::min_sites);
    return guarded([&] {
        ssb::LatticeState state(std::vector<double>(u, u + sites));
        auto const p = ssb::ScalingParams::fixed(1, gamma, sites);
        auto const d = ssb::drift(state, p, to_kind(kind));
        std::copy(d.begin(), d.end(), drift_out);
        return SSB_OK;
    });
}

ssb_status ssb_local_current(double const* u, size_t sites, long j,
                             ssb_nonlinearity kind, double* out)
{
    SSB_REQUIRE(u && out && sites >= ssb::min_sites);
    return guarded([&] {
        ssb::LatticeState state(std::vector<double>(u, u + sites));
        *out = ssb::local_current(state, j, to_kind(kind));
        return SSB_OK;
    });
}

ssb_status ssb_sample_invariant(uint64_t seed, uint64_t replicate,
                                size_t sites, double* out)
{
    SSB_REQUIRE(out && sites > 0);
    return guarded([&] {
        ssb::NoiseStream rng(seed, replicate);
        auto const u = ssb::sample_invariant(rng, sites);
        std::copy(u.values().begin(), u.values().end(), out);
        return SSB_OK;
    });
}

size_t ssb_required_sites(uint64_t n, double support_radius)
{
    try
    {
        return ssb::required_sites(n, support_radius);
    }
    catch (...)
    {
        return 0;
    }
}

}  // extern "C"

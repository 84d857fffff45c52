//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file harness.cpp
//---------------------------------------------------------------------------//
#include "harness.hpp"

#include <map>

#include "suites.hpp"

namespace ssb
{
Report run_suite(std::string const& name, ExperimentConfig const& cfg,
                 RunOptions const& opts)
{
    using Runner = Report (*)(ExperimentConfig const&, RunOptions const&);
    static std::map<std::string, Runner> const table{
        {"simulate", run_simulate},
        {"invariance-exact", run_invariance_exact},
        {"stationarity", run_stationarity},
        {"qv", run_qv_check},
        {"bg-scaling", run_bg_scaling},
        {"one-block", run_one_block},
        {"ec", run_ec_estimates},
        {"ucp", run_ucp_decay},
        {"baseline-ou", run_linear_baseline},
        {"fixed-time", run_fixed_time_field},
    };
    auto const it = table.find(name);
    if (it == table.end())
        throw UnknownSuiteError("unknown suite '" + name + "'");
    if (cfg.suite != name)
        throw Error("configuration was parsed for suite '" + cfg.suite
                    + "', not '" + name + "'");
    return it->second(cfg, opts);
}

}  // namespace ssb

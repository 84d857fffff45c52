//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suites.hpp
//! Entry points of the individual suites.
//---------------------------------------------------------------------------//
#pragma once

#include "config.hpp"
#include "harness_common.hpp"
#include "report.hpp"

namespace ssb
{
Report run_simulate(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_invariance_exact(ExperimentConfig const& cfg,
                            RunOptions const& opts);
Report run_stationarity(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_qv_check(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_bg_scaling(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_one_block(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_ec_estimates(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_ucp_decay(ExperimentConfig const& cfg, RunOptions const& opts);
Report run_linear_baseline(ExperimentConfig const& cfg,
                           RunOptions const& opts);
Report run_fixed_time_field(ExperimentConfig const& cfg,
                            RunOptions const& opts);
}  // namespace ssb

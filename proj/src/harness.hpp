//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file harness.hpp
//! Suite dispatch by name.
//---------------------------------------------------------------------------//
#pragma once

#include <string>

#include "config.hpp"
#include "harness_common.hpp"
#include "report.hpp"

namespace ssb
{
//! Run the named suite. Throws UnknownSuiteError for unregistered names.
Report run_suite(std::string const& name, ExperimentConfig const& cfg,
                 RunOptions const& opts = {});

}  // namespace ssb

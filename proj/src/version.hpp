//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file version.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace ssb
{
inline constexpr char version_string[] = "0.1.0";
}

//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file config.hpp
//! Experiment configuration: per-suite defaults, strict JSON parsing with
//! en-bloc validation, and the canonical form used for hashing.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "integrator.hpp"
#include "lattice.hpp"
#include "test_function.hpp"

#include "json.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
//! Raised for unknown suites and invalid configurations.
class ConfigError : public Error
{
  public:
    explicit ConfigError(std::vector<std::string> violations);
    std::vector<std::string> const& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

class UnknownSuiteError : public Error
{
  public:
    using Error::Error;
};

//---------------------------------------------------------------------------//
//! One term of a polynomial observable: coefficient and (site, power) list.
struct ObservableTerm
{
    double coefficient = 0;
    std::vector<std::pair<long, int>> factors;
};

struct ExperimentConfig
{
    std::string suite;
    std::uint64_t seed = 1;

    // Grids
    std::vector<std::uint64_t> n;
    std::vector<std::size_t> l;
    std::size_t l_ref = 0;
    std::vector<double> eps;
    std::vector<double> times;  //!< macroscopic

    // Test function
    TestFamily phi = TestFamily::gaussian;
    double phi_scale = 1.0;

    // Dynamics
    std::size_t ensemble = 2;
    double horizon = 0;  //!< macroscopic
    IntegratorConfig integrator;
    std::size_t sites = 0;  //!< 0 selects the torus rule per n
    Nonlinearity nonlinearity = Nonlinearity::sasamoto_spohn;
    std::optional<double> gamma;  //!< unset: gamma = n^{-1/4}

    // Exact calculus
    std::size_t corpus = 0;
    int degree = 0;
    int window = 0;
    std::string arithmetic;

    // Suite extras
    bool dt_study = false;
    bool snapshot = false;
    std::vector<std::size_t> moment_sites;
    std::vector<ObservableTerm> observable;

    //! Fully populated configuration, keys sorted.
    nlohmann::json canonical;

    TestFunction test_function() const;
    //! Torus size for scaling parameter n_value.
    std::size_t sites_for(std::uint64_t n_value) const;
    ScalingParams params(std::uint64_t n_value, std::size_t torus) const;
    //! Integrator settings for a run to macroscopic time `macro` at n.
    IntegratorConfig integrator_for(std::uint64_t n_value, double macro) const;
    //! Canonical JSON text.
    std::string canonical_text() const;
    //! 16 hex digit FNV-1a hash of the suite name and canonical text.
    std::string hash() const;
};

//---------------------------------------------------------------------------//
//! Names of all suites in dispatch order.
std::vector<std::string> const& suite_names();

//! Default configuration for a suite; throws UnknownSuiteError.
nlohmann::json suite_defaults(std::string const& suite);

//! Parse JSON text (empty means "{}") over the suite defaults.
ExperimentConfig parse_config(std::string const& suite,
                              std::string const& json_text);
ExperimentConfig parse_config(std::string const& suite,
                              nlohmann::json const& overrides);
inline ExperimentConfig parse_config(std::string const& suite,
                                     char const* json_text)
{
    return parse_config(suite, std::string(json_text));
}

//! Step index for macroscopic time t, or nullopt if t is off the step grid.
std::optional<std::size_t>
step_for_time(double t, std::uint64_t n, double dt);

std::uint64_t fnv1a(std::string const& text);

}  // namespace ssb

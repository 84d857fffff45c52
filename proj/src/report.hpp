//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file report.hpp
//! Suite output: grid-point estimates, scaling fits, pass/fail checks and
//! auxiliary files, serialized as CSV and JSON.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stats.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
//! One Monte Carlo (or exact) estimate at a grid point.
struct EstimateRow
{
    std::string quantity;
    std::uint64_t n = 0;
    std::size_t l = 0;
    double eps = 0;
    double t = 0;
    std::size_t replicates = 0;
    double mean = 0;
    double sd = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::optional<double> reference;

    //! Fill mean/sd/CI from a sample summary.
    EstimateRow& with(SampleSummary const& s);
};

//! Power-law fit across a grid.
struct FitRow
{
    std::string quantity;
    std::string variable;  //!< "n", "l", "eps" or "t"
    std::uint64_t n = 0;   //!< fixed n (0 if n varies)
    std::size_t l = 0;     //!< fixed l (0 if l varies)
    double t = 0;
    LinearFit fit;
    //! exp(intercept): the fitted prefactor
    double constant() const;
    //! False when R^2 is below min_fit_r2.
    bool conclusive() const { return fit.r2 >= min_fit_r2; }
};

struct CheckRow
{
    std::string name;
    bool passed = false;
    double value = 0;
    double lower = 0;
    double upper = 0;
    std::string detail;
};

//! Auxiliary output file (series, snapshots).
struct Artifact
{
    std::string name;
    std::string content;
};

//---------------------------------------------------------------------------//
class Report
{
  public:
    Report(std::string suite, std::string config_json, std::string config_hash,
           std::uint64_t seed);

    std::string const& suite() const { return suite_; }
    std::uint64_t seed() const { return seed_; }
    std::string const& config_hash() const { return config_hash_; }

    EstimateRow& add(EstimateRow row);
    void add(FitRow row) { fits_.push_back(std::move(row)); }
    //! Record a check; returns its outcome.
    bool check(std::string name, double value, double lower, double upper,
               std::string detail = {});
    bool check(CheckRow row);
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void attach(std::string name, std::string content);
    void add_steps(std::uint64_t steps) { steps_ += steps; }

    std::vector<EstimateRow> const& estimates() const { return rows_; }
    std::vector<FitRow> const& fits() const { return fits_; }
    std::vector<CheckRow> const& checks() const { return checks_; }
    std::vector<Artifact> const& artifacts() const { return artifacts_; }
    std::uint64_t steps() const { return steps_; }

    //! True when every check passed.
    bool passed() const;

    //! One row per estimate and per fit.
    std::string to_csv() const;
    std::string to_json() const;

  private:
    std::string suite_;
    std::string config_json_;
    std::string config_hash_;
    std::uint64_t seed_;
    std::vector<EstimateRow> rows_;
    std::vector<FitRow> fits_;
    std::vector<CheckRow> checks_;
    std::vector<std::string> notes_;
    std::vector<Artifact> artifacts_;
    std::uint64_t steps_ = 0;
};

//! Shortest round-trip decimal form; "nan"/"inf" spelled out.
std::string format_number(double v);

//! RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string const& s);

}  // namespace ssb

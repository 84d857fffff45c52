//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file harness_common.hpp
//! Shared machinery of the statistical suites: the deterministic ensemble
//! runner, replicate stream numbering, translation copies and the
//! left-endpoint quadrature observer.
//---------------------------------------------------------------------------//
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "config.hpp"
#include "integrator.hpp"
#include "report.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
struct RunOptions
{
    unsigned threads = 1;
};

/*!
 * Evaluate task(i) for i in [0, count) on `threads` workers.
 *
 * Results are stored by index, so the returned vector does not depend on
 * scheduling. If tasks throw, the exception of the lowest index is
 * rethrown after all workers stop.
 */
template<class Result, class Task>
std::vector<Result>
run_ensemble(std::size_t count, unsigned threads, Task&& task)
{
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;)
        {
            std::size_t const i = next.fetch_add(1);
            if (i >= count || failed.load())
                return;
            try
            {
                results[i] = task(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };
    unsigned const workers
        = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                       std::max<std::size_t>(
                                                           count, 1))));
    if (workers == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
    return results;
}

//! Stream id of replicate r at grid point `point` of a suite.
inline std::uint64_t stream_id(std::uint64_t point, std::uint64_t r)
{
    return (point << 32) | r;
}

//---------------------------------------------------------------------------//
/*!
 * Offsets of disjoint translated copies of a test-function window.
 *
 * Each copy occupies span + reach sites; copies are spread evenly over the
 * torus. At least one copy is always returned.
 */
std::vector<long> copy_offsets(std::size_t sites, std::size_t span,
                               std::size_t reach);

//---------------------------------------------------------------------------//
/*!
 * Records the running left-endpoint integrals of a vector integrand.
 *
 * At each recorded snapshot the integrand is evaluated; the previous value
 * is weighted by the elapsed macroscopic time (micro / n).
 */
class QuadratureObserver final : public Observer
{
  public:
    using Integrand
        = std::function<void(LatticeState const&, std::span<double>)>;

    QuadratureObserver(std::size_t width, std::uint64_t n, Integrand f);

    void record(LatticeState const& u, std::size_t step) override;

    //! Macroscopic record times.
    std::vector<double> const& times() const { return times_; }
    //! integrals()[k][i]: integral of component i up to times()[k].
    std::vector<std::vector<double>> const& integrals() const
    {
        return integrals_;
    }
    //! values()[k][i]: integrand at times()[k].
    std::vector<std::vector<double>> const& values() const { return values_; }
    //! Index of a record time equal to t, throws if absent.
    std::size_t index_of(double t) const;

  private:
    std::size_t width_;
    double n_;
    Integrand f_;
    std::vector<double> times_;
    std::vector<std::vector<double>> integrals_;
    std::vector<std::vector<double>> values_;
};

//---------------------------------------------------------------------------//
//! Estimate row helper.
EstimateRow estimate(std::string quantity, std::span<double const> samples);

//! Fit a power law and add it to the report.
FitRow add_power_fit(Report& report, std::string quantity,
                     std::string variable, std::span<double const> x,
                     std::span<double const> y);

//! Check that a conclusive exponent lies in [lo, hi].
bool check_exponent(Report& report, std::string name, FitRow const& fit,
                    double lo, double hi);

//! New report stamped with the configuration.
Report make_report(ExperimentConfig const& cfg);

}  // namespace ssb

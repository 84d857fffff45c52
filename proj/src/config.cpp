//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file config.cpp
//---------------------------------------------------------------------------//
#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "fields.hpp"
#include "report.hpp"
#include "spectral.hpp"

namespace ssb
{
namespace
{
using json = nlohmann::json;

std::string join(std::vector<std::string> const& v)
{
    std::string out;
    for (auto const& s : v)
    {
        if (!out.empty())
            out += "; ";
        out += s;
    }
    return out;
}

json base_dynamics()
{
    return {{"seed", 1},
            {"ensemble", 200},
            {"dt", 0.01},
            {"scheme", "ou-splitting"},
            {"record_stride", 10},
            {"sites", 0},
            {"nonlinearity", "sasamoto-spohn"},
            {"gamma", nullptr}};
}

json with_phi(json j)
{
    j["phi"] = "gaussian";
    j["phi_scale"] = 1.0;
    return j;
}

// Suites whose torus must satisfy the test-function size rule.
bool uses_torus_rule(std::string const& suite)
{
    return suite != "stationarity" && suite != "invariance-exact";
}

//---------------------------------------------------------------------------//
// Typed extraction collecting every violation.
class Reader
{
  public:
    Reader(json const& j, std::vector<std::string>& errors)
        : j_(j), errors_(errors)
    {
    }

    bool has(char const* key) const { return j_.contains(key); }

    std::uint64_t uint(char const* key)
    {
        auto const& v = j_.at(key);
        if (v.is_number_unsigned())
            return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        fail(key, "a non-negative integer");
        return 0;
    }

    double real(char const* key)
    {
        auto const& v = j_.at(key);
        if (v.is_number())
        {
            double const d = v.get<double>();
            if (std::isfinite(d))
                return d;
        }
        fail(key, "a finite number");
        return 0;
    }

    bool boolean(char const* key)
    {
        auto const& v = j_.at(key);
        if (v.is_boolean())
            return v.get<bool>();
        fail(key, "a boolean");
        return false;
    }

    std::string string(char const* key)
    {
        auto const& v = j_.at(key);
        if (v.is_string())
            return v.get<std::string>();
        fail(key, "a string");
        return {};
    }

    std::vector<std::uint64_t> uint_list(char const* key)
    {
        std::vector<std::uint64_t> out;
        auto const& v = j_.at(key);
        if (!v.is_array())
        {
            fail(key, "an array of non-negative integers");
            return out;
        }
        for (auto const& e : v)
        {
            if (e.is_number_unsigned()
                || (e.is_number_integer() && e.get<std::int64_t>() >= 0))
            {
                out.push_back(e.get<std::uint64_t>());
            }
            else
            {
                fail(key, "an array of non-negative integers");
                return {};
            }
        }
        return out;
    }

    std::vector<double> real_list(char const* key)
    {
        std::vector<double> out;
        auto const& v = j_.at(key);
        if (!v.is_array())
        {
            fail(key, "an array of numbers");
            return out;
        }
        for (auto const& e : v)
        {
            if (!e.is_number() || !std::isfinite(e.get<double>()))
            {
                fail(key, "an array of finite numbers");
                return {};
            }
            out.push_back(e.get<double>());
        }
        return out;
    }

    void fail(char const* key, char const* what)
    {
        errors_.push_back(std::string("'") + key + "' must be " + what);
    }

  private:
    json const& j_;
    std::vector<std::string>& errors_;
};

std::string fmt(double v)
{
    return format_number(v);
}

}  // namespace

//---------------------------------------------------------------------------//
ConfigError::ConfigError(std::vector<std::string> violations)
    : Error("invalid configuration: " + join(violations))
    , violations_(std::move(violations))
{
}

std::vector<std::string> const& suite_names()
{
    static std::vector<std::string> const names{
        "simulate",     "invariance-exact", "stationarity", "qv",
        "bg-scaling",   "one-block",        "ec",           "ucp",
        "baseline-ou",  "fixed-time"};
    return names;
}

json suite_defaults(std::string const& suite)
{
    json j;
    if (suite == "simulate")
    {
        j = with_phi(base_dynamics());
        j["n"] = {64};
        j["horizon"] = 0.25;
        j["ensemble"] = 4;
        j["record_stride"] = 100;
        j["snapshot"] = false;
        j["moment_sites"] = {64, 128, 256};
    }
    else if (suite == "invariance-exact")
    {
        j = {{"seed", 1},
             {"corpus", 50},
             {"degree", 4},
             {"window", 5},
             {"arithmetic", "both"}};
    }
    else if (suite == "stationarity")
    {
        j = base_dynamics();
        j["n"] = {256};
        j["sites"] = 256;
        j["horizon"] = 10.0 / 256;
        j["times"] = {0.0, 2.0 / 256, 5.0 / 256, 10.0 / 256};
        j["record_stride"] = 100;
        j["dt_study"] = true;
    }
    else if (suite == "qv")
    {
        j = with_phi(base_dynamics());
        j["n"] = {64};
        j["horizon"] = 1.0;
        j["times"] = {0.25, 0.5, 0.75, 1.0};
        j["scheme"] = "euler";
        j["record_stride"] = 100;
    }
    else if (suite == "bg-scaling" || suite == "one-block")
    {
        j = with_phi(base_dynamics());
        j["n"] = {64, 128, 256, 512};
        j["l"] = {2, 4, 8, 16, 32};
        j["l_ref"] = 4;
        j["horizon"] = 1.0;
        if (suite == "one-block")
        {
            j["observable"] = json::array(
                {json::array({1.0, json::array({json::array({0, 2})})}),
                 json::array({-1.0, json::array()})});
        }
    }
    else if (suite == "ucp")
    {
        j = with_phi(base_dynamics());
        j["n"] = {64, 128, 256, 512};
        j["horizon"] = 1.0;
    }
    else if (suite == "ec")
    {
        j = with_phi(base_dynamics());
        j["n"] = {512};
        j["eps"] = {0.05, 0.1, 0.2, 0.4};
        j["times"] = {0.1, 0.2, 0.5, 1.0};
    }
    else if (suite == "baseline-ou")
    {
        j = with_phi(base_dynamics());
        j.erase("nonlinearity");
        j["n"] = {1};
        j["sites"] = 64;
        j["gamma"] = 0.0;
        j["times"] = {0.5, 1.0};
        j["ensemble"] = 2000;
        j["dt"] = 0.5;
        j["record_stride"] = 1;
    }
    else if (suite == "fixed-time")
    {
        j = with_phi(base_dynamics());
        j["n"] = {256};
        j["sites"] = 4096;
        j["horizon"] = 0.02;
        j["ensemble"] = 1000;
        j["record_stride"] = 512;
    }
    else
    {
        throw UnknownSuiteError("unknown suite '" + suite + "'");
    }
    return j;
}

//---------------------------------------------------------------------------//
std::optional<std::size_t>
step_for_time(double t, std::uint64_t n, double dt)
{
    if (t < 0 || !(dt > 0))
        return std::nullopt;
    double const k = t * static_cast<double>(n) / dt;
    double const r = std::round(k);
    if (std::abs(k - r) > 1e-9 * std::max(1.0, r))
        return std::nullopt;
    return static_cast<std::size_t>(r);
}

std::uint64_t fnv1a(std::string const& text)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

//---------------------------------------------------------------------------//
TestFunction ExperimentConfig::test_function() const
{
    return TestFunction(phi, phi_scale, 0.0);
}

std::size_t ExperimentConfig::sites_for(std::uint64_t n_value) const
{
    if (sites != 0)
        return sites;
    // Round up to a length the FFT handles without large prime factors.
    return smooth_size(std::max(
        min_sites, required_sites(n_value, test_function().support_radius())));
}

ScalingParams ExperimentConfig::params(std::uint64_t n_value,
                                       std::size_t torus) const
{
    if (gamma)
        return ScalingParams::fixed(n_value, *gamma, torus);
    return ScalingParams::scaling(n_value, torus);
}

IntegratorConfig ExperimentConfig::integrator_for(std::uint64_t n_value,
                                                  double macro) const
{
    IntegratorConfig c = integrator;
    c.t_end = macro * static_cast<double>(n_value);
    auto const steps = step_for_time(macro, n_value, c.dt);
    if (steps)
        c.t_end = static_cast<double>(*steps) * c.dt;
    c.validate();
    return c;
}

std::string ExperimentConfig::canonical_text() const
{
    return canonical.dump();
}

std::string ExperimentConfig::hash() const
{
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a(suite + "\n" + canonical_text())));
    return buf;
}

//---------------------------------------------------------------------------//
ExperimentConfig parse_config(std::string const& suite,
                              std::string const& json_text)
{
    json overrides = json::object();
    bool blank = std::all_of(json_text.begin(), json_text.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (!blank)
    {
        try
        {
            overrides = json::parse(json_text);
        }
        catch (json::parse_error const& e)
        {
            throw ConfigError({std::string("malformed JSON: ") + e.what()});
        }
    }
    return parse_config(suite, overrides);
}

ExperimentConfig parse_config(std::string const& suite,
                              json const& overrides)
{
    json merged = suite_defaults(suite);
    std::vector<std::string> errors;
    if (!overrides.is_object())
        throw ConfigError({"configuration must be a JSON object"});
    for (auto it = overrides.begin(); it != overrides.end(); ++it)
    {
        if (!merged.contains(it.key()))
        {
            errors.push_back("unknown key '" + it.key() + "' for suite "
                             + suite);
            continue;
        }
        merged[it.key()] = it.value();
    }

    ExperimentConfig cfg;
    cfg.suite = suite;
    Reader r(merged, errors);
    json canon = json::object();

    canon["seed"] = cfg.seed = r.uint("seed");
    if (r.has("n"))
    {
        canon["n"] = cfg.n = r.uint_list("n");
        if (cfg.n.empty())
            errors.push_back("'n' must list at least one value");
        for (auto v : cfg.n)
        {
            if (v < 1)
                errors.push_back("n values must be >= 1");
        }
    }
    if (r.has("l"))
    {
        auto const l = r.uint_list("l");
        cfg.l.assign(l.begin(), l.end());
        canon["l"] = l;
        if (cfg.l.empty())
            errors.push_back("'l' must list at least one value");
        for (auto v : cfg.l)
        {
            if (v < 1)
                errors.push_back("block lengths l must be >= 1");
        }
    }
    if (r.has("l_ref"))
    {
        canon["l_ref"] = cfg.l_ref = r.uint("l_ref");
        if (std::find(cfg.l.begin(), cfg.l.end(), cfg.l_ref) == cfg.l.end())
        {
            errors.push_back("l_ref = " + std::to_string(cfg.l_ref)
                             + " must be one of the l grid values");
        }
    }
    if (r.has("eps"))
    {
        canon["eps"] = cfg.eps = r.real_list("eps");
        if (cfg.eps.size() < 2 && suite == "ec")
            errors.push_back("'eps' needs at least two values");
        std::set<double> distinct(cfg.eps.begin(), cfg.eps.end());
        if (distinct.size() != cfg.eps.size())
            errors.push_back("'eps' values must be distinct");
        for (double e : cfg.eps)
        {
            if (!(e > 0))
            {
                errors.push_back("eps values must be positive");
                continue;
            }
            for (auto n : cfg.n)
            {
                double const raw = e * std::sqrt(static_cast<double>(n));
                if (std::floor(raw + 1e-9) < 1)
                {
                    errors.push_back("eps = " + fmt(e) + " gives block size "
                                     "floor(eps sqrt n) < 1 at n = "
                                     + std::to_string(n));
                }
            }
        }
    }
    if (r.has("times"))
        canon["times"] = cfg.times = r.real_list("times");
    if (r.has("phi"))
    {
        auto const name = r.string("phi");
        canon["phi"] = name;
        try
        {
            cfg.phi = test_family_from_string(name);
        }
        catch (Error const&)
        {
            errors.push_back("'phi' must be gaussian, hermite or "
                             "smoothed-indicator (got '" + name + "')");
        }
    }
    if (r.has("phi_scale"))
    {
        canon["phi_scale"] = cfg.phi_scale = r.real("phi_scale");
        if (!(cfg.phi_scale > 0))
            errors.push_back("'phi_scale' must be positive");
    }
    if (r.has("ensemble"))
    {
        canon["ensemble"] = cfg.ensemble = r.uint("ensemble");
        if (cfg.ensemble < 2)
        {
            errors.push_back("'ensemble' must be >= 2 so the variance is "
                             "estimable");
        }
    }
    if (r.has("horizon"))
    {
        canon["horizon"] = cfg.horizon = r.real("horizon");
        if (cfg.horizon < 0)
            errors.push_back("'horizon' must be >= 0");
    }
    else if (!cfg.times.empty())
    {
        cfg.horizon = *std::max_element(cfg.times.begin(), cfg.times.end());
    }
    if (r.has("dt"))
    {
        canon["dt"] = cfg.integrator.dt = r.real("dt");
        if (!(cfg.integrator.dt > 0))
            errors.push_back("'dt' must be positive");
    }
    if (r.has("scheme"))
    {
        auto const name = r.string("scheme");
        canon["scheme"] = name;
        try
        {
            cfg.integrator.scheme = scheme_from_string(name);
        }
        catch (Error const&)
        {
            errors.push_back("'scheme' must be euler or ou-splitting (got '"
                             + name + "')");
        }
    }
    if (r.has("record_stride"))
    {
        canon["record_stride"] = cfg.integrator.record_stride
            = r.uint("record_stride");
        if (cfg.integrator.record_stride < 1)
            errors.push_back("'record_stride' must be >= 1");
    }
    if (cfg.integrator.scheme == Scheme::euler && cfg.integrator.dt >= 1)
    {
        errors.push_back("dt = " + fmt(cfg.integrator.dt)
                         + " violates the explicit stability bound dt < 1 "
                           "for scheme=euler");
    }
    if (r.has("sites"))
    {
        canon["sites"] = cfg.sites = r.uint("sites");
        if (cfg.sites != 0 && cfg.sites < min_sites)
            errors.push_back("'sites' must be 0 (automatic) or >= 4");
    }
    if (r.has("nonlinearity"))
    {
        auto const name = r.string("nonlinearity");
        canon["nonlinearity"] = name;
        try
        {
            cfg.nonlinearity = nonlinearity_from_string(name);
        }
        catch (Error const&)
        {
            errors.push_back("'nonlinearity' must be sasamoto-spohn or naive "
                             "(got '" + name + "')");
        }
    }
    if (r.has("gamma"))
    {
        if (merged.at("gamma").is_null())
        {
            canon["gamma"] = nullptr;
        }
        else
        {
            double const g = r.real("gamma");
            canon["gamma"] = g;
            cfg.gamma = g;
            if (g < 0)
                errors.push_back("'gamma' must be >= 0 or null (scaling)");
        }
    }
    if (r.has("corpus"))
    {
        canon["corpus"] = cfg.corpus = r.uint("corpus");
        if (cfg.corpus < 1)
            errors.push_back("'corpus' must be >= 1");
    }
    if (r.has("degree"))
    {
        auto const d = r.uint("degree");
        canon["degree"] = d;
        cfg.degree = static_cast<int>(std::min<std::uint64_t>(d, 64));
        if (d < 1 || d > 8)
            errors.push_back("'degree' must lie in [1, 8]");
    }
    if (r.has("window"))
    {
        auto const w = r.uint("window");
        canon["window"] = w;
        cfg.window = static_cast<int>(std::min<std::uint64_t>(w, 64));
        if (w < 1 || w > 8)
            errors.push_back("'window' must lie in [1, 8]");
    }
    if (r.has("arithmetic"))
    {
        canon["arithmetic"] = cfg.arithmetic = r.string("arithmetic");
        if (cfg.arithmetic != "rational" && cfg.arithmetic != "float"
            && cfg.arithmetic != "both")
        {
            errors.push_back("'arithmetic' must be rational, float or both");
        }
    }
    if (r.has("dt_study"))
        canon["dt_study"] = cfg.dt_study = r.boolean("dt_study");
    if (r.has("snapshot"))
        canon["snapshot"] = cfg.snapshot = r.boolean("snapshot");
    if (r.has("moment_sites"))
    {
        auto const m = r.uint_list("moment_sites");
        canon["moment_sites"] = m;
        cfg.moment_sites.assign(m.begin(), m.end());
        for (auto v : m)
        {
            if (v < min_sites)
                errors.push_back("'moment_sites' entries must be >= 4");
        }
    }
    if (r.has("observable"))
    {
        auto const& obs = merged.at("observable");
        bool ok = obs.is_array() && !obs.empty();
        if (ok)
        {
            for (auto const& term : obs)
            {
                if (!term.is_array() || term.size() != 2
                    || !term[0].is_number() || !term[1].is_array())
                {
                    ok = false;
                    break;
                }
                ObservableTerm t;
                t.coefficient = term[0].get<double>();
                for (auto const& f : term[1])
                {
                    if (!f.is_array() || f.size() != 2
                        || !f[0].is_number_integer()
                        || !f[1].is_number_integer() || f[1].get<int>() < 1)
                    {
                        ok = false;
                        break;
                    }
                    t.factors.emplace_back(f[0].get<long>(), f[1].get<int>());
                }
                cfg.observable.push_back(std::move(t));
            }
        }
        if (!ok)
        {
            errors.push_back("'observable' must be a non-empty array of "
                             "[coefficient, [[site, power], ...]] terms");
            cfg.observable.clear();
        }
        canon["observable"] = obs;
    }

    // Cross-field rules
    if (errors.empty())
    {
        auto const stride = cfg.integrator.record_stride;
        for (auto n : cfg.n)
        {
            auto const total = step_for_time(cfg.horizon, n, cfg.integrator.dt);
            if (!total)
            {
                errors.push_back("horizon " + fmt(cfg.horizon)
                                 + " (microscopic " + fmt(cfg.horizon
                                 * static_cast<double>(n)) + ") is not a "
                                 "whole number of steps dt = "
                                 + fmt(cfg.integrator.dt) + " at n = "
                                 + std::to_string(n));
                continue;
            }
            if (*total > 0 && cfg.horizon * static_cast<double>(n)
                                  < cfg.integrator.dt)
            {
                errors.push_back("horizon shorter than one step at n = "
                                 + std::to_string(n));
            }
            for (double t : cfg.times)
            {
                auto const k = step_for_time(t, n, cfg.integrator.dt);
                if (t < 0 || t > cfg.horizon + 1e-12)
                {
                    errors.push_back("time " + fmt(t)
                                     + " lies outside [0, horizon]");
                }
                else if (!k || (*k % stride != 0 && *k != *total))
                {
                    errors.push_back("time " + fmt(t) + " at n = "
                                     + std::to_string(n) + " is not on the "
                                     "record grid (record_stride = "
                                     + std::to_string(stride) + " steps of dt = "
                                     + fmt(cfg.integrator.dt) + ")");
                }
            }
        }
        if (uses_torus_rule(suite) && r.has("phi"))
        {
            double const radius = cfg.test_function().support_radius();
            for (auto n : cfg.n)
            {
                auto const need = required_sites(n, radius);
                if (cfg.sites != 0 && cfg.sites < need)
                {
                    errors.push_back(
                        "sites = " + std::to_string(cfg.sites)
                        + " is below the torus rule M >= 8 ceil(sqrt(n)) R = "
                        + std::to_string(need) + " for n = "
                        + std::to_string(n) + ", R = " + fmt(radius));
                }
            }
        }
    }

    if (!errors.empty())
        throw ConfigError(std::move(errors));
    cfg.canonical = std::move(canon);
    return cfg;
}

}  // namespace ssb

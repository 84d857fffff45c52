//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file ssb.cpp
//! Command-line driver for the verification suites.
//---------------------------------------------------------------------------//
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssburgers/ssburgers.h"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace
{
constexpr int exit_pass = 0;
constexpr int exit_error = 1;
constexpr int exit_failed_check = 2;

class CliError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Owning wrapper for strings returned by the library.
std::string take(char* s)
{
    std::string out = s ? s : "";
    ssb_string_free(s);
    return out;
}

void require(ssb_status st, std::string const& what)
{
    if (st != SSB_OK)
        throw CliError(what + ":\n" + ssb_last_error());
}

struct Overrides
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint64_t> n;
    std::vector<std::size_t> l;
    std::vector<double> eps;
    std::optional<std::string> phi;
    std::optional<double> dt;
    std::optional<std::string> scheme;
    std::optional<std::size_t> ensemble;
    std::optional<std::size_t> sites;
    std::optional<double> horizon;
    std::string out_dir;
    std::string format = "both";
    unsigned threads = 0;
};

void add_options(CLI::App& sub, Overrides& o)
{
    sub.add_option("--config", o.config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    sub.add_option("--seed", o.seed, "master seed");
    sub.add_option("--n", o.n, "scaling parameters, comma separated")
        ->delimiter(',');
    sub.add_option("--l", o.l, "block sizes, comma separated")->delimiter(',');
    sub.add_option("--eps", o.eps, "mollifier widths, comma separated")
        ->delimiter(',');
    sub.add_option("--phi", o.phi, "test function family")
        ->check(CLI::IsMember({"gaussian", "hermite", "smoothed-indicator"}));
    sub.add_option("--dt", o.dt, "microscopic time step");
    sub.add_option("--scheme", o.scheme, "time integrator")
        ->check(CLI::IsMember({"euler", "ou-splitting"}));
    sub.add_option("--ensemble", o.ensemble, "replicates per grid point");
    sub.add_option("--sites", o.sites, "torus size M (0: size rule per n)");
    sub.add_option("--horizon", o.horizon, "macroscopic horizon T");
    sub.add_option("--out-dir", o.out_dir,
                   "output directory (default $SSB_OUT_DIR or .)");
    sub.add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    sub.add_option("--threads", o.threads,
                   "worker threads, 0 = all cores; results do not depend on it");
}

json load_config(Overrides const& o)
{
    json j = json::object();
    if (!o.config_path.empty())
    {
        std::ifstream in(o.config_path);
        if (!in)
            throw CliError("cannot read config '" + o.config_path + "'");
        try
        {
            j = json::parse(in);
        }
        catch (json::exception const& e)
        {
            throw CliError("config '" + o.config_path + "': " + e.what());
        }
        if (!j.is_object())
            throw CliError("config '" + o.config_path
                           + "' must hold a JSON object");
    }
    if (o.seed)
        j["seed"] = *o.seed;
    if (!o.n.empty())
        j["n"] = o.n;
    if (!o.l.empty())
        j["l"] = o.l;
    if (!o.eps.empty())
        j["eps"] = o.eps;
    if (o.phi)
        j["phi"] = *o.phi;
    if (o.dt)
        j["dt"] = *o.dt;
    if (o.scheme)
        j["scheme"] = *o.scheme;
    if (o.ensemble)
        j["ensemble"] = *o.ensemble;
    if (o.sites)
        j["sites"] = *o.sites;
    if (o.horizon)
        j["horizon"] = *o.horizon;
    return j;
}

void write_file(fs::path const& path, std::string const& content)
{
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CliError("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw CliError("failed writing '" + path.string() + "'");
}

void print_checks(std::string const& report_json)
{
    auto const j = json::parse(report_json);
    for (auto const& c : j.at("checks"))
    {
        std::cout << (c.at("passed").get<bool>() ? "PASS  " : "FAIL  ")
                  << c.at("name").get<std::string>();
        auto const& d = c.at("detail");
        if (d.is_string() && !d.get<std::string>().empty())
            std::cout << "  [" << d.get<std::string>() << "]";
        std::cout << '\n';
    }
}

//! Update manifest.json in the output directory with this run's entry.
void write_manifest(fs::path const& dir, std::string const& suite,
                    std::string const& hash, std::uint64_t seed,
                    std::vector<std::string> const& outputs, double seconds,
                    std::uint64_t steps, bool passed)
{
    fs::path const path = dir / "manifest.json";
    ordered_json m = ordered_json::object();
    if (fs::exists(path))
    {
        std::ifstream in(path);
        try
        {
            m = ordered_json::parse(in);
        }
        catch (json::exception const&)
        {
            m = ordered_json::object();
        }
    }
    m["version"] = ssb_version();
    ordered_json entry;
    entry["config_hash"] = hash;
    entry["seed"] = seed;
    entry["outputs"] = outputs;
    entry["passed"] = passed;
    entry["wall_clock_seconds"] = seconds;
    entry["steps"] = steps;
    m["runs"][suite] = entry;
    write_file(path, m.dump(2) + "\n");
}

int run(std::string const& suite, Overrides const& o)
{
    auto const merged = load_config(o);

    ssb_config* raw_cfg = nullptr;
    require(ssb_config_parse(suite.c_str(), merged.dump().c_str(), &raw_cfg),
            "invalid configuration for '" + suite + "'");
    std::unique_ptr<ssb_config, decltype(&ssb_config_destroy)> cfg(
        raw_cfg, ssb_config_destroy);

    char* s = nullptr;
    require(ssb_config_hash(cfg.get(), &s), "config hash");
    std::string const hash = take(s);
    require(ssb_config_canonical(cfg.get(), &s), "canonical config");
    auto const canonical = json::parse(take(s));
    std::uint64_t const seed = canonical.value("seed", std::uint64_t{0});

    fs::path dir = o.out_dir;
    if (dir.empty())
    {
        char const* env = std::getenv("SSB_OUT_DIR");
        dir = env && *env ? env : ".";
    }

    std::cout << suite << "  config " << hash << "  seed " << seed << '\n';
    auto const start = std::chrono::steady_clock::now();
    ssb_report* raw_report = nullptr;
    require(ssb_run_suite(cfg.get(), o.threads, &raw_report),
            "suite '" + suite + "' failed");
    std::unique_ptr<ssb_report, decltype(&ssb_report_destroy)> report(
        raw_report, ssb_report_destroy);
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();

    std::vector<std::string> outputs;
    require(ssb_report_json(report.get(), &s), "report json");
    std::string const report_json = take(s);
    if (o.format != "csv")
    {
        write_file(dir / (suite + ".json"), report_json);
        outputs.push_back(suite + ".json");
    }
    if (o.format != "json")
    {
        require(ssb_report_csv(report.get(), &s), "report csv");
        write_file(dir / (suite + ".csv"), take(s));
        outputs.push_back(suite + ".csv");
    }
    for (std::size_t i = 0; i < ssb_report_artifact_count(report.get()); ++i)
    {
        char* name = nullptr;
        char* content = nullptr;
        require(ssb_report_artifact(report.get(), i, &name, &content),
                "report artifact");
        fs::path const rel = fs::path(suite) / take(name);
        write_file(dir / rel, take(content));
        outputs.push_back(rel.string());
    }

    bool const passed = ssb_report_passed(report.get()) != 0;
    write_manifest(dir, suite, hash, seed, outputs, seconds,
                   ssb_report_steps(report.get()), passed);

    print_checks(report_json);
    std::cout << (passed ? "passed" : "FAILED") << "  ("
              << ssb_report_steps(report.get()) << " lattice steps, "
              << seconds << " s) -> " << dir.string() << '\n';
    return passed ? exit_pass : exit_failed_check;
}

std::string defaults_text()
{
    std::ostringstream out;
    out << "Suite defaults (JSON keys; flags override config-file values):\n";
    for (std::size_t i = 0; i < ssb_suite_count(); ++i)
    {
        char const* name = ssb_suite_name(i);
        char* s = nullptr;
        if (ssb_config_defaults(name, &s) == SSB_OK)
        {
            out << "  " << name << ": "
                << json::parse(take(s)).dump() << '\n';
        }
    }
    return out.str();
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lattice stochastic Burgers simulator and verification "
                 "harness"};
    app.footer(
        "Cost model: a run to macroscopic time T at scaling n advances the "
        "lattice\nsteps = T * n / dt times per replicate, each costing O(M) "
        "(O(M log M)\nfor ou-splitting). Suites sum this over their grid and "
        "ensemble.\n\nExit codes: 0 all checks passed, 2 a check failed, 1 "
        "error.\n\n"
        + defaults_text());
    app.require_subcommand(0, 1);

    Overrides o;
    std::string chosen;
    std::vector<std::pair<std::string, std::string>> const help{
        {"simulate", "trajectories, field decomposition series, snapshots"},
        {"invariance-exact", "exact invariance and Gaussian IBP over a "
                             "polynomial corpus"},
        {"stationarity", "site moments along equilibrium trajectories"},
        {"qv", "quadratic variation of the martingale field"},
        {"bg-scaling", "second-order Boltzmann-Gibbs error scaling"},
        {"one-block", "one-block estimate scaling"},
        {"ec", "energy-condition estimates for A^eps"},
        {"ucp", "sup-norm decay of the local-product remainder"},
        {"baseline-ou", "linear dynamics against the heat-kernel covariance"},
        {"fixed-time", "fixed-time white-noise statistics of the field"},
    };
    for (auto const& [name, text] : help)
    {
        auto* sub = app.add_subcommand(name, text);
        add_options(*sub, o);
        sub->callback([&chosen, name] { chosen = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? exit_pass : exit_error;
    }

    if (chosen.empty())
    {
        std::cerr << app.help();
        return exit_error;
    }

    try
    {
        return run(chosen, o);
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
}

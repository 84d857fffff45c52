//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file report.cpp
//---------------------------------------------------------------------------//
#include "report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "version.hpp"

namespace ssb
{
namespace
{
nlohmann::ordered_json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_number(v);
}

nlohmann::ordered_json optional_number(std::optional<double> const& v)
{
    return v ? number(*v) : nlohmann::ordered_json(nullptr);
}
}  // namespace

//---------------------------------------------------------------------------//
std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

EstimateRow& EstimateRow::with(SampleSummary const& s)
{
    replicates = s.count;
    mean = s.mean;
    sd = s.sd;
    ci_low = s.ci_low();
    ci_high = s.ci_high();
    return *this;
}

double FitRow::constant() const
{
    return std::exp(fit.intercept);
}

//---------------------------------------------------------------------------//
Report::Report(std::string suite, std::string config_json,
               std::string config_hash, std::uint64_t seed)
    : suite_(std::move(suite))
    , config_json_(std::move(config_json))
    , config_hash_(std::move(config_hash))
    , seed_(seed)
{
}

EstimateRow& Report::add(EstimateRow row)
{
    rows_.push_back(std::move(row));
    return rows_.back();
}

bool Report::check(std::string name, double value, double lower, double upper,
                   std::string detail)
{
    CheckRow row;
    row.name = std::move(name);
    row.value = value;
    row.lower = lower;
    row.upper = upper;
    row.passed = value >= lower && value <= upper;
    row.detail = std::move(detail);
    return check(std::move(row));
}

bool Report::check(CheckRow row)
{
    bool const ok = row.passed;
    checks_.push_back(std::move(row));
    return ok;
}

void Report::attach(std::string name, std::string content)
{
    artifacts_.push_back({std::move(name), std::move(content)});
}

bool Report::passed() const
{
    for (auto const& c : checks_)
    {
        if (!c.passed)
            return false;
    }
    return true;
}

//---------------------------------------------------------------------------//
std::string Report::to_csv() const
{
    std::ostringstream os;
    os << "suite,kind,quantity,variable,n,l,eps,t,replicates,mean,sd,ci_low,"
          "ci_high,reference,exponent,exponent_se,r2,constant,status\n";
    for (auto const& r : rows_)
    {
        os << csv_field(suite_) << ",estimate," << csv_field(r.quantity)
           << ",," << r.n << ',' << r.l << ',' << format_number(r.eps) << ','
           << format_number(r.t) << ',' << r.replicates << ','
           << format_number(r.mean) << ',' << format_number(r.sd) << ','
           << format_number(r.ci_low) << ',' << format_number(r.ci_high)
           << ',' << (r.reference ? format_number(*r.reference) : "")
           << ",,,,,\n";
    }
    for (auto const& f : fits_)
    {
        os << csv_field(suite_) << ",fit," << csv_field(f.quantity) << ','
           << f.variable << ',' << f.n << ',' << f.l << ",," << format_number(f.t)
           << ',' << f.fit.points << ",,,,,,";
        if (f.conclusive())
        {
            os << format_number(f.fit.slope) << ','
               << format_number(f.fit.slope_se) << ',';
        }
        else
        {
            os << ",,";
        }
        os << format_number(f.fit.r2) << ',' << format_number(f.constant())
           << ',' << (f.conclusive() ? "ok" : "inconclusive") << '\n';
    }
    return os.str();
}

std::string Report::to_json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["version"] = version_string;
    j["seed"] = seed_;
    j["config_hash"] = config_hash_;
    j["config"] = nlohmann::ordered_json::parse(config_json_);
    j["passed"] = passed();
    j["steps"] = steps_;

    auto& est = j["estimates"] = nlohmann::ordered_json::array();
    for (auto const& r : rows_)
    {
        nlohmann::ordered_json e;
        e["quantity"] = r.quantity;
        e["n"] = r.n;
        e["l"] = r.l;
        e["eps"] = number(r.eps);
        e["t"] = number(r.t);
        e["replicates"] = r.replicates;
        e["mean"] = number(r.mean);
        e["sd"] = number(r.sd);
        e["ci_low"] = number(r.ci_low);
        e["ci_high"] = number(r.ci_high);
        e["reference"] = optional_number(r.reference);
        est.push_back(std::move(e));
    }
    auto& fits = j["fits"] = nlohmann::ordered_json::array();
    for (auto const& f : fits_)
    {
        nlohmann::ordered_json e;
        e["quantity"] = f.quantity;
        e["variable"] = f.variable;
        e["n"] = f.n;
        e["l"] = f.l;
        e["t"] = number(f.t);
        e["points"] = f.fit.points;
        e["status"] = f.conclusive() ? "ok" : "inconclusive";
        e["exponent"] = f.conclusive() ? number(f.fit.slope)
                                       : nlohmann::ordered_json(nullptr);
        e["exponent_se"] = f.conclusive() ? number(f.fit.slope_se)
                                          : nlohmann::ordered_json(nullptr);
        e["r2"] = number(f.fit.r2);
        e["constant"] = number(f.constant());
        fits.push_back(std::move(e));
    }
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks_)
    {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["value"] = number(c.value);
        e["lower"] = number(c.lower);
        e["upper"] = number(c.upper);
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["notes"] = notes_;
    auto& arts = j["artifacts"] = nlohmann::ordered_json::array();
    for (auto const& a : artifacts_)
        arts.push_back(a.name);
    return j.dump(2) + "\n";
}

}  // namespace ssb

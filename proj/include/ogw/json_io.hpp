#pragma once

// Canonical JSON shape of a series: a list of
// {monomial: {var: exp}, re: "p/q", im: "p/q"} in monomial order.

#include <json.hpp>

#include <string>

#include "series.hpp"

namespace ogw {

inline nlohmann::ordered_json monomial_json(const Monomial& m, const std::string& analytic_name = "z")
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.entries())
        j[v.name(analytic_name)] = e;
    return j;
}

inline nlohmann::ordered_json series_json(const TruncSeries& s, const std::string& analytic_name = "z")
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::ordered_json row;
        row["monomial"] = monomial_json(m, analytic_name);
        row["re"] = c.re().str();
        row["im"] = c.im().str();
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string series_csv(const TruncSeries& s, const std::string& analytic_name = "z")
{
    std::string out = "monomial,re,im\n";
    for (const auto& [m, c] : s.terms())
        out += m.str(analytic_name) + "," + c.re().str() + "," + c.im().str() + "\n";
    return out;
}

inline std::string series_text(const TruncSeries& s, const std::string& analytic_name = "z")
{
    std::string out;
    for (const auto& [m, c] : s.terms())
        out += m.str(analytic_name) + "  " + c.str() + "\n";
    return out;
}

} // namespace ogw

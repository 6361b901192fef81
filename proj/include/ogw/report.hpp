#pragma once

// Verification reports: one row per compared coefficient, plus free-form notes
// for quantities that are observed but not asserted.

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "series.hpp"

namespace ogw {

struct CheckEntry {
    std::string check;
    std::string monomial;
    GaussRat lhs;
    GaussRat rhs;
    bool pass = false;
};

class Report {
public:
    void add(std::string check, std::string monomial, GaussRat lhs, GaussRat rhs)
    {
        bool pass = lhs == rhs;
        entries_.push_back({std::move(check), std::move(monomial), std::move(lhs), std::move(rhs), pass});
    }

    /// One row per monomial present on either side and accepted by keep.
    void compare(const std::string& check, const TruncSeries& lhs, const TruncSeries& rhs,
                 const std::function<bool(const Monomial&)>& keep = {}, const std::string& prefix = "",
                 const std::string& analytic_name = "z")
    {
        std::map<Monomial, std::pair<GaussRat, GaussRat>> rows;
        for (const auto& [m, c] : lhs.terms())
            rows[m].first = c;
        for (const auto& [m, c] : rhs.terms())
            rows[m].second = c;
        for (const auto& [m, v] : rows)
            if (!keep || keep(m))
                add(check, prefix + m.str(analytic_name), v.first, v.second);
    }

    void note(std::string s) { notes_.push_back(std::move(s)); }

    void merge(const Report& other)
    {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }
    const std::vector<std::string>& notes() const { return notes_; }

    bool all_pass() const
    {
        for (const auto& e : entries_)
            if (!e.pass)
                return false;
        return !entries_.empty();
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& e : entries_)
            n += e.pass ? 0 : 1;
        return n;
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& e : entries_) {
            nlohmann::ordered_json row;
            row["check"] = e.check;
            row["monomial"] = e.monomial;
            row["lhs"] = e.lhs.str();
            row["rhs"] = e.rhs.str();
            row["pass"] = e.pass;
            out.push_back(std::move(row));
        }
        return out;
    }

    std::string to_csv() const
    {
        std::string out = "check,monomial,lhs,rhs,pass\n";
        for (const auto& e : entries_)
            out += e.check + "," + e.monomial + "," + e.lhs.str() + "," + e.rhs.str() + "," + (e.pass ? "1" : "0") + "\n";
        return out;
    }

    /// Per-check tallies, failing rows in full, then the notes.
    std::string to_text() const
    {
        std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
        std::string fails;
        for (const auto& e : entries_) {
            auto& t = tally[e.check];
            ++t.first;
            if (!e.pass) {
                ++t.second;
                fails += "  FAIL " + e.check + " " + e.monomial + ": " + e.lhs.str() + " != " + e.rhs.str() + "\n";
            }
        }
        std::string out;
        for (const auto& [name, t] : tally)
            out += (t.second ? "FAIL " : "PASS ") + name + " (" + std::to_string(t.first) + " coefficients, "
                   + std::to_string(t.second) + " mismatches)\n";
        out += fails;
        for (const auto& n : notes_)
            out += "note: " + n + "\n";
        return out;
    }

private:
    std::vector<CheckEntry> entries_;
    std::vector<std::string> notes_;
};

} // namespace ogw

#pragma once

// Two-part hyperelliptic Hodge integrals
//   L(g, i, m) = integral of lambda_g lambda_{g-i} psi^m
// over the moduli of genus-0 admissible double covers with 2g+2 branch points.
// Computed by the closed form, by the localization recursion, and through the
// generating function sec^{2d}(x/2)/(2d).

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

#include "special.hpp"

namespace ogw::hodge {

using MultiIndex = std::vector<int>;

inline int weight(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline Rat multinomial(const MultiIndex& m)
{
    Rat r = factorial(weight(m));
    for (int e : m)
        r /= factorial(e);
    return r;
}

/// Zero for unstable or dimensionally impossible queries.
inline bool trivially_zero(int g, int i, const MultiIndex& m)
{
    int len = static_cast<int>(m.size());
    return g < 0 || i < 1 || 2 * g + 2 < std::max(3, len) || weight(m) != i - 1;
}

/// Powers of log sec(x/2), grown on demand; safe to share between threads.
class LogSecPowers {
public:
    /// (2g)! times the x^{2g} coefficient of log sec(x/2)^i.
    Rat scaled_coeff(int g, int i)
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (2 * g + 1 > order_) {
            order_ = std::max(2 * g + 1, 2 * order_);
            powers_.clear();
        }
        if (powers_.empty())
            powers_.push_back(special::log_sec_half(order_).one());
        while (static_cast<int>(powers_.size()) <= i)
            powers_.push_back(powers_.back() * special::log_sec_half(order_));
        return powers_[i].coeff(2 * g).re() * factorial(2 * g);
    }

    static LogSecPowers& shared()
    {
        static LogSecPowers instance;
        return instance;
    }

private:
    std::mutex mu_;
    int order_ = 16;
    std::vector<TruncSeries> powers_;
};

/// multinomial(m) * 2^{i-1}/i! * (2g)! [x^{2g}] log sec(x/2)^i.
inline Rat closed_form(int g, int i, const MultiIndex& m)
{
    if (trivially_zero(g, i, m))
        return Rat(0);
    return multinomial(m) * Rat(2).pow(i - 1) / factorial(i) * LogSecPowers::shared().scaled_coeff(g, i);
}

/// Generating function (1/(2d)) sec^{2d}(x/2) with d the sum of the specialized
/// descendant variables; its x^{2g}/(2g)! coefficient for g >= 1 is the sum of
/// prod d_k^{j_k} L(g, i, j) over all i and all j of the same length as dvals.
inline TruncSeries jumbo_specialize(const std::vector<int>& dvals, int order)
{
    require(!dvals.empty(), "jumbo generating function needs at least one variable");
    int d = std::accumulate(dvals.begin(), dvals.end(), 0);
    require(d >= 1, "specialized variables must be positive");
    return special::sec_pow(2 * d, order) * GaussRat(Rat(1, 2 * d));
}

/// H(z) with H'' = log sec(z/2) and H(0) = H'(0) = 0.
inline TruncSeries closed_orbifold_H(int order)
{
    require(order >= 4, "order must be at least 4");
    return special::log_sec_half(order).antiderive(Constant::at_zero()).antiderive(Constant::at_zero());
}

/// Localization recursion among the L values, seeded only by the expansion of
/// log sec(x/2) and the single-insertion case.
class Recursion {
public:
    Rat value(int g, int i, const MultiIndex& m)
    {
        if (trivially_zero(g, i, m))
            return Rat(0);
        MultiIndex nz;
        for (int e : m)
            if (e > 0)
                nz.push_back(e);
        std::sort(nz.rbegin(), nz.rend());
        return reduced(g, i, nz);
    }

private:
    using Key = std::tuple<int, int, MultiIndex>;

    Rat reduced(int g, int i, const MultiIndex& nz)
    {
        if (i > g)
            return Rat(0); // lambda_{g-i} vanishes
        if (i == 1)
            return LogSecPowers::shared().scaled_coeff(g, 1);
        if (nz.size() == 1)
            return Rat(2).pow(i - 1) / factorial(i) * LogSecPowers::shared().scaled_coeff(g, i);

        Key key{g, i, nz};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }
        Rat v = step(g, i, nz);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(std::move(key), v);
        return v;
    }

    // nz is sorted descending with at least two positive entries. The first entry
    // is split at the node; the last two stay over the point fixed at zero; the
    // middle entries are distributed over the two contracted components.
    Rat step(int g, int i, const MultiIndex& nz)
    {
        MultiIndex m = nz;
        while (m.size() < 3)
            m.push_back(0);
        const int l = static_cast<int>(m.size()) - 1;
        const int first = m[0];
        const int last_a = m[l - 1], last_b = m[l];
        const MultiIndex middle(m.begin() + 1, m.begin() + (l - 1));
        const int nmid = static_cast<int>(middle.size());

        Rat total(0);
        for (int g1 = 1; g1 < g; ++g1) {
            const int g2 = g - g1;
            for (int k = 1; k < i; ++k) {
                for (unsigned mask = 0; mask < (1u << nmid); ++mask) {
                    MultiIndex in_a, out_a;
                    for (int t = 0; t < nmid; ++t)
                        ((mask >> t) & 1u ? in_a : out_a).push_back(middle[t]);
                    const int p2 = k - 1 - weight(out_a);
                    const int p1 = first - 1 - p2;
                    if (p1 < 0 || p2 < 0)
                        continue;
                    Rat ways = binomial(2 * g + 1 - l, 2 * g1 - 1 - static_cast<int>(in_a.size()));
                    if (ways.is_zero())
                        continue;
                    MultiIndex left{p1};
                    left.insert(left.end(), in_a.begin(), in_a.end());
                    left.push_back(last_a);
                    left.push_back(last_b);
                    MultiIndex right{p2};
                    right.insert(right.end(), out_a.begin(), out_a.end());
                    Rat a = value(g1, i - k, left);
                    if (a.is_zero())
                        continue;
                    total += sign_power(p2) * ways * a * value(g2, k, right);
                }
            }
        }
        return Rat(2) * total;
    }

    std::mutex mu_;
    std::map<Key, Rat> memo_;
};

inline Rat recursion_oracle(int g, int i, const MultiIndex& m)
{
    static Recursion rec;
    return rec.value(g, i, m);
}

/// Rows (g, i, m, L) for every m sorted descending with |m| = i - 1.
struct Row {
    int g;
    int i;
    MultiIndex m;
    Rat value;
};

/// Descending partitions of total into at most max_len positive parts.
inline std::vector<MultiIndex> partitions(int total, int max_len)
{
    std::vector<MultiIndex> out;
    MultiIndex cur;
    auto go = [&](auto&& self, int rem, int cap) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len)
            return;
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    go(go, total, total);
    return out;
}

inline std::vector<Row> table(int max_genus, int max_i)
{
    std::vector<Row> rows;
    for (int g = 1; g <= max_genus; ++g)
        for (int i = 1; i <= max_i; ++i)
            for (auto& m : partitions(i - 1, 2 * g + 2))
                rows.push_back({g, i, m, closed_form(g, i, m)});
    return rows;
}

} // namespace ogw::hodge

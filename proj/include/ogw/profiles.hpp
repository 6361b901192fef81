#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ogw {

/// Unordered multiset of positive winding degrees, kept non-increasing.
class WindingProfile {
public:
    WindingProfile() = default;
    WindingProfile(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            require(p >= 1, "winding degrees must be positive");
        std::sort(parts_.rbegin(), parts_.rend());
    }
    WindingProfile(std::initializer_list<int> parts) : WindingProfile(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Product of factorials of the multiplicities.
    Rat aut() const
    {
        std::map<int, int> mult;
        for (int p : parts_)
            ++mult[p];
        Rat r(1);
        for (const auto& [p, m] : mult)
            r *= factorial(m);
        return r;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const WindingProfile&, const WindingProfile&) = default;

private:
    std::vector<int> parts_;
};

/// Every profile with parts <= max_part, at most max_count parts and total <= max_total.
inline std::vector<WindingProfile> enumerate_profiles(int max_part, int max_count, int max_total)
{
    std::vector<WindingProfile> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int cap, int rem) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) >= max_count)
            return;
        for (int p = std::min(cap, rem); p >= 1; --p) {
            cur.push_back(p);
            go(p, rem - p);
            cur.pop_back();
        }
    };
    go(max_part, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

/// (-1)^{d+1} binom(2d-1, d) / d: the one-boundary weight of a winding-d disk.
inline Rat disk_weight(int d) { return sign_power(d + 1) * binomial(2 * d - 1, d) / Rat(d); }

} // namespace ogw

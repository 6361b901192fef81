#pragma once

// Fixed-seed generators for property tests.

#include <random>
#include <vector>

#include "ogw/series.hpp"

namespace testing_support {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    ogw::Rat rat(long bound = 9)
    {
        long den = integer(1, bound);
        return ogw::Rat(integer(-bound, bound), den);
    }

    ogw::Rat nonzero_rat(long bound = 9)
    {
        for (;;) {
            ogw::Rat r = rat(bound);
            if (!r.is_zero())
                return r;
        }
    }

    ogw::GaussRat gauss(long bound = 9) { return ogw::GaussRat(rat(bound), rat(bound)); }

    /// Series in the analytic variable plus up to two winding variables and q.
    ogw::TruncSeries series(const ogw::Caps& caps, int terms)
    {
        using namespace ogw;
        TruncSeries s(caps);
        for (int t = 0; t < terms; ++t) {
            Monomial m = Monomial::analytic(static_cast<int>(integer(0, caps.order - 1)));
            if (caps.max_winding > 0 && integer(0, 2) == 0)
                m = m * Monomial(VarId::winding(Side::Top, static_cast<int>(integer(1, caps.max_winding))), 1);
            if (caps.max_degree > 0 && integer(0, 2) == 0)
                m = m * Monomial(VarId::degree(DegreeName::q), static_cast<int>(integer(1, caps.max_degree)));
            s.add(m, gauss());
        }
        return s;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Every sequence of len non-negative integers summing to total.
inline std::vector<std::vector<int>> compositions(int total, int len)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto go = [&](auto&& self, int rem, int slots) -> void {
        if (slots == 0) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        for (int p = 0; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p, slots - 1);
            cur.pop_back();
        }
    };
    go(go, total, len);
    return out;
}

} // namespace testing_support

#pragma once

// Open potential of [C^3/Z_2] in the twisted-sector variable z and the winding
// variables w_d: a sum over fixed loci through Hodge integrals, and the closed
// form built from sec^{2d}(z/2).

#include <algorithm>
#include <vector>

#include "hodge.hpp"
#include "profiles.hpp"
#include "series.hpp"

namespace ogw {

/// m twisted insertions on a contracted component carrying disks of the given windings.
struct OrbifoldLocus {
    int m = 0;
    WindingProfile profile;
};

inline VarId orb_var(int d) { return VarId::winding(Side::Orbifold, d); }

/// prod_i (2d_i - 1)!!/(2d_i)!!.
inline Rat profile_ratio(const WindingProfile& p)
{
    Rat r(1);
    for (int d : p.parts())
        r *= double_factorial_ratio(d);
    return r;
}

/// OGW of one locus; the z^m/m! coefficient of the potential restricted to the profile.
inline Rat orbifold_locus_contribution(const OrbifoldLocus& loc)
{
    require(loc.m >= 0, "insertion count must be non-negative");
    const int n = loc.profile.size();
    const int m = loc.m;
    if (m == 0 && n == 1) {
        const int d = loc.profile.parts()[0];
        return Rat(1, 2L * d * d);
    }
    if ((m + n) % 2 != 0 || m + n < 2)
        return Rat(0);
    const Rat pre = profile_ratio(loc.profile) / loc.profile.aut();
    if (m + n == 2) {
        // Unstable contracted component: a disk meeting a twisted point or a second disk.
        if (n == 0)
            return Rat(0);
        return pre / Rat(2 * loc.profile.total());
    }
    const int g = (m + n - 2) / 2;
    Rat sum(0);
    for (int i = 1; i <= g; ++i) {
        // Descendant vectors on the n disk nodes, |j| = i - 1.
        std::vector<int> j(n, 0);
        auto go = [&](auto&& self, int pos, int rem) -> void {
            if (n == 0) {
                if (rem == 0)
                    sum += hodge::closed_form(g, i, {});
                return;
            }
            if (pos == n - 1) {
                j[pos] = rem;
                Rat w(1);
                for (int k = 0; k < n; ++k)
                    w *= Rat(loc.profile.parts()[k]).pow(j[k]);
                sum += w * hodge::closed_form(g, i, j);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                j[pos] = e;
                self(self, pos + 1, rem - e);
            }
        };
        go(go, 0, i - 1);
    }
    return pre * sum;
}

namespace detail {

/// dst += c * mono * src, term by term; dst drops anything outside its caps.
inline void add_scaled(TruncSeries& dst, const TruncSeries& src, const Monomial& mono, const GaussRat& c)
{
    for (const auto& [m, v] : src.terms())
        dst.add(m * mono, v * c);
}

inline Monomial orb_profile_monomial(const WindingProfile& p)
{
    Monomial m;
    for (int d : p.parts())
        m = m * Monomial(orb_var(d), 1);
    return m;
}

inline std::vector<WindingProfile> orb_profiles(const Caps& caps)
{
    return enumerate_profiles(caps.max_winding, caps.max_boundary, caps.max_winding * caps.max_boundary);
}

} // namespace detail

/// Route 1: sum over loci of OGW z^m/m! times the winding monomial.
inline TruncSeries lambda_sum(const Caps& caps)
{
    TruncSeries s(caps);
    for (const auto& p : detail::orb_profiles(caps)) {
        const Monomial wm = detail::orb_profile_monomial(p);
        for (int m = 0; m < caps.order; ++m) {
            Rat c = orbifold_locus_contribution({m, p});
            if (!c.is_zero())
                s.add(wm * Monomial::analytic(m), GaussRat(c / factorial(m)));
        }
    }
    return s;
}

/// Route 2: H(z) + one-boundary terms + z-derivatives of sec^{2d}(z/2)/(2d).
inline TruncSeries open_potential_orbifold(const Caps& caps)
{
    TruncSeries s(caps);
    detail::add_scaled(s, hodge::closed_orbifold_H(std::max(caps.order, 4)), Monomial(), GaussRat(1));
    if (caps.max_boundary >= 1)
        for (int d = 1; d <= caps.max_winding; ++d) {
            const Monomial wm(orb_var(d), 1);
            s.add(wm, GaussRat(Rat(1, 2L * d * d)));
            detail::add_scaled(s, special::sec_integral(d, caps.order), wm,
                               GaussRat(double_factorial_ratio(d) / Rat(2 * d)));
        }
    for (const auto& p : detail::orb_profiles(caps)) {
        if (p.size() < 2)
            continue;
        const int steps = p.size() - 2;
        // Differentiating lowers the order, so start high enough.
        TruncSeries f = hodge::jumbo_specialize({p.total()}, caps.order + steps);
        for (int k = 0; k < steps; ++k)
            f = f.derive();
        detail::add_scaled(s, f, detail::orb_profile_monomial(p), GaussRat(profile_ratio(p) / p.aut()));
    }
    return s;
}

} // namespace ogw

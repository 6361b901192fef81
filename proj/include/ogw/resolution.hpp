#pragma once

// Open potential of the resolution K_{P^1} + O_{P^1}: a fixed-locus graph sum
// and the resummed closed form, both in the variable Q = q e^x.

#include <vector>

#include "profiles.hpp"
#include "qform.hpp"
#include "series.hpp"

namespace ogw {

/// Genus-0 descendant integral (m-3)! / prod a_j! on M_{0,m}; zero unless sum a = m - 3.
inline Rat psi_integral_genus0(const std::vector<int>& a)
{
    const int m = static_cast<int>(a.size());
    if (m < 3)
        throw UnstableError("psi integral needs at least three marked points");
    int sum = 0;
    for (int e : a) {
        require(e >= 0, "psi exponents must be non-negative");
        sum += e;
    }
    if (sum != m - 3)
        return Rat(0);
    Rat r = factorial(m - 3);
    for (int e : a)
        r /= factorial(e);
    return r;
}

/// Fixed locus: covers not attached to bottom disks (kparts), disks at the top
/// vertex, and disks at the bottom vertex glued to covers of the same degree.
/// The degenerate locus is a lone disk whose origin maps to the bottom vertex.
struct ResolutionLocus {
    WindingProfile kparts;
    WindingProfile top;
    WindingProfile bottom;
    bool is_gamma_prime = false;

    int q_degree() const { return kparts.total() + bottom.total(); }
};

namespace detail {

/// sum over p with |p| = N-3 of prod a_j^{p_j} times the psi integral; for one or
/// two points the unstable integrals are 1/a^2 and 1/(a_1 + a_2).
inline Rat node_integral(const std::vector<int>& a)
{
    const int n = static_cast<int>(a.size());
    if (n == 1)
        return Rat(1, static_cast<long>(a[0]) * a[0]);
    if (n == 2)
        return Rat(1, a[0] + a[1]);
    Rat total(0);
    std::vector<int> p(n, 0);
    auto go = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            p[pos] = rem;
            Rat w(1);
            for (int j = 0; j < n; ++j)
                w *= Rat(a[j]).pow(p[j]);
            total += w * psi_integral_genus0(p);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            p[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    go(go, 0, n - 3);
    return total;
}

} // namespace detail

/// Contribution of one fixed locus, t-free.
inline Rat resolution_locus_contribution(const ResolutionLocus& loc)
{
    if (loc.is_gamma_prime) {
        require(loc.kparts.empty() && loc.top.empty() && loc.bottom.size() == 1,
                "degenerate locus is a single bottom disk");
        int d = loc.bottom.parts()[0];
        return Rat(1, static_cast<long>(d) * d);
    }
    const int n_pts = loc.kparts.size() + loc.top.size() + loc.bottom.size();
    require(n_pts > 0, "the empty locus is the degree-0 cubic term");

    Rat c = (loc.kparts.aut() * loc.top.aut() * loc.bottom.aut()).inverse();
    std::vector<int> a;
    for (int k : loc.kparts.parts()) {
        c *= sign_power(k) / Rat(k) * binomial(2 * k - 1, k);
        a.push_back(k);
    }
    for (const auto* side : {&loc.top, &loc.bottom})
        for (int d : side->parts()) {
            c *= sign_power(d + 1) * binomial(2 * d - 1, d);
            a.push_back(d);
        }
    c *= Rat(-2).pow(n_pts - 1);
    return c * detail::node_integral(a);
}

/// Variables used for the resolution side.
inline VarId top_var(int d) { return VarId::winding(Side::Top, d); }
inline VarId bottom_var(int d) { return VarId::winding(Side::Bottom, d); }
inline VarId q_var() { return VarId::degree(DegreeName::q); }

inline Monomial profile_monomial(Side side, const WindingProfile& p)
{
    Monomial m;
    for (int d : p.parts())
        m = m * Monomial(VarId::winding(side, d), 1);
    return m;
}

/// Coefficient of the degree-0 cubic term x^3.
inline Rat resolution_cubic_coeff() { return Rat(-1, 12); }

/// Route 1: sum of every fixed-locus contribution within caps, with the q-degree
/// variable standing for Q = q e^x and the analytic variable for x.
inline TruncSeries graph_sum_resolution(const Caps& caps)
{
    TruncSeries s(caps);
    s.add(Monomial::analytic(3), GaussRat(resolution_cubic_coeff()));
    auto sides = enumerate_profiles(caps.max_winding, caps.max_boundary, caps.max_winding * caps.max_boundary);
    auto covers = enumerate_profiles(caps.max_degree, caps.max_degree, caps.max_degree);
    for (const auto& top : sides)
        for (const auto& bottom : sides) {
            if (top.size() + bottom.size() > caps.max_boundary)
                continue;
            for (const auto& k : covers) {
                ResolutionLocus loc{k, top, bottom, false};
                if (loc.q_degree() > caps.max_degree || (k.empty() && top.empty() && bottom.empty()))
                    continue;
                Monomial m = profile_monomial(Side::Top, top) * profile_monomial(Side::Bottom, bottom);
                m = m * Monomial(q_var(), loc.q_degree());
                s.add(m, GaussRat(resolution_locus_contribution(loc)));
            }
        }
    if (caps.max_boundary >= 1)
        for (int d = 1; d <= caps.max_winding; ++d)
            s.add(Monomial(bottom_var(d), 1), GaussRat(resolution_locus_contribution({{}, {}, {d}, true})));
    return s;
}

/// The closed sector: cubic x^3 + b_coeff * B with B = sum_k -Q^k / k^3.
struct ClosedSector {
    Rat cubic;
    Rat b_coeff;
};

/// bottom_constant * yb_d + a_coeff * (yt_d + yb_d Q^d) Q^{-d} A_d(Q).
struct OneBoundarySector {
    int d;
    Rat bottom_constant;
    Rat a_coeff;
};

/// coeff * prod_i (yt_{d_i} + yb_{d_i} Q^{d_i}) * kernel(Q).
struct MultiBoundarySector {
    WindingProfile profile;
    Rat coeff;
    RatFuncQ kernel;
};

struct SectorExpr {
    ClosedSector closed;
    std::vector<OneBoundarySector> one_boundary;
    std::vector<MultiBoundarySector> multi_boundary;

    TruncSeries expand(const Caps& caps) const
    {
        TruncSeries s(caps);
        const int nq = caps.max_degree + 1;
        s.add(Monomial::analytic(3), GaussRat(closed.cubic));
        for (int k = 1; k < nq; ++k)
            s.add(Monomial(q_var(), k), GaussRat(-closed.b_coeff / Rat(k).pow(3)));

        for (const auto& ob : one_boundary) {
            s.add(Monomial(bottom_var(ob.d), 1), GaussRat(ob.bottom_constant));
            auto a = shifted_a_series(ob.d, nq);
            for (int k = 0; k < nq; ++k) {
                GaussRat c(ob.a_coeff * a[k]);
                s.add(Monomial(top_var(ob.d), 1) * Monomial(q_var(), k), c);
                s.add(Monomial(bottom_var(ob.d), 1) * Monomial(q_var(), k + ob.d), c);
            }
        }

        for (const auto& mb : multi_boundary) {
            const auto& parts = mb.profile.parts();
            const int n = static_cast<int>(parts.size());
            auto kern = mb.kernel.series(nq);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                Monomial m;
                int shift = 0;
                for (int i = 0; i < n; ++i) {
                    if ((mask >> i) & 1u) {
                        m = m * Monomial(bottom_var(parts[i]), 1);
                        shift += parts[i];
                    } else {
                        m = m * Monomial(top_var(parts[i]), 1);
                    }
                }
                for (int k = 0; k + shift < nq; ++k)
                    s.add(m * Monomial(q_var(), k + shift), GaussRat(mb.coeff * kern[k]));
            }
        }
        return s;
    }
};

/// -2^{n-1} / (d |Aut|) prod (-1)^{d_i} binom(2d_i - 1, d_i).
inline Rat multi_boundary_coeff(const WindingProfile& p)
{
    Rat c = -Rat(2).pow(p.size() - 1) / (Rat(p.total()) * p.aut());
    for (int d : p.parts())
        c *= sign_power(d) * binomial(2 * d - 1, d);
    return c;
}

/// Route 2: the resummed potential, sector by sector.
inline SectorExpr open_potential_resolution(const Caps& caps)
{
    SectorExpr e;
    e.closed = {resolution_cubic_coeff(), Rat(1)};
    if (caps.max_boundary >= 1)
        for (int d = 1; d <= caps.max_winding; ++d)
            e.one_boundary.push_back({d, Rat(1, static_cast<long>(d) * d), disk_weight(d)});
    for (const auto& p : enumerate_profiles(caps.max_winding, caps.max_boundary, caps.max_winding * caps.max_boundary)) {
        if (p.size() < 2)
            continue;
        e.multi_boundary.push_back({p, multi_boundary_coeff(p), profile_kernel(p.total(), p.size() - 2)});
    }
    return e;
}

} // namespace ogw

#pragma once

// Verification suites shared by the command-line tool and the acceptance run.
// Every suite returns a Report with one row per compared value.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crc.hpp"
#include "hodge.hpp"
#include "vertex_edge.hpp"

namespace ogw::checks {

/// Default seed of the sampled gluing sweep.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

namespace detail {

inline std::string index_str(const hodge::MultiIndex& m)
{
    std::string s = "(";
    for (std::size_t k = 0; k < m.size(); ++k)
        s += (k ? "," : "") + std::to_string(m[k]);
    return s + ")";
}

/// Every vector of len non-negative integers with the given sum.
inline void for_each_composition(int total, int len, const std::function<void(const hodge::MultiIndex&)>& f)
{
    hodge::MultiIndex cur(len, 0);
    auto go = [&](auto&& self, int pos, int rem) -> void {
        if (pos == len - 1) {
            cur[pos] = rem;
            f(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (len == 0) {
        if (total == 0)
            f(cur);
        return;
    }
    go(go, 0, total);
}

inline Rat sample_rat(std::mt19937_64& rng, long bound, bool nonzero)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    for (;;) {
        Rat r(num(rng), den(rng));
        if (!nonzero || !r.is_zero())
            return r;
    }
}

} // namespace detail

/// Recursion against closed form for every (g, i, m) with g <= max_genus,
/// i <= max_i and every ordered m of length at most 2g + 2.
inline Report tphi(int max_genus, int max_i)
{
    require(max_genus >= 1 && max_i >= 1, "genus and i bounds must be positive");
    Report rep;
    for (int g = 1; g <= max_genus; ++g)
        for (int i = 1; i <= max_i; ++i)
            for (int len = 0; len <= 2 * g + 2; ++len)
                detail::for_each_composition(i - 1, len, [&](const hodge::MultiIndex& m) {
                    rep.add("tphi", "g=" + std::to_string(g) + " i=" + std::to_string(i) + " m=" + detail::index_str(m),
                            GaussRat(hodge::recursion_oracle(g, i, m)), GaussRat(hodge::closed_form(g, i, m)));
                });
    return rep;
}

/// The X^k coefficients of G^n, n = 1..max_n, k = 0..upto.
inline std::vector<std::vector<Rat>> gtable(int max_n, int upto)
{
    require(max_n >= 1 && upto >= 0, "table bounds out of range");
    std::vector<std::vector<Rat>> rows;
    for (int n = 1; n <= max_n; ++n)
        rows.push_back(g_power_coefficients(n, upto));
    return rows;
}

/// X^k coefficient of G^{2(d+k)} against the closed formula, d + k <= max_sum.
inline Report g_lemma(int max_sum)
{
    Report rep;
    for (int d = 0; d <= max_sum; ++d)
        for (int k = 0; d + k <= max_sum; ++k) {
            if (d == 0 && k == 0)
                continue;
            rep.add("g-lemma", "d=" + std::to_string(d) + " k=" + std::to_string(k),
                    GaussRat(g_lemma_coefficient(d, k)), GaussRat(g_power_coefficients(2 * (d + k), k)[k]));
        }
    return rep;
}

/// disk * factor * disk = cover over sampled edge weights and both orientation pairs.
inline Report gluing(int max_d, int max_k, std::uint64_t seed = kDefaultSeed, int samples = 10)
{
    Report rep;
    std::mt19937_64 rng(seed);
    auto one = [&](const Rat& a, const Rat& b, const std::string& tag) {
        for (int k = 1; k <= max_k; ++k)
            for (int d = 1; d <= max_d; ++d)
                for (bool left : {true, false})
                    for (bool right : {true, false}) {
                        EdgeGeom g{a, b, k, left, right};
                        Rat glued = disk_smooth(g, VertexSide::Left, d) * glue_factor_smooth(d, k, left == right)
                                    * disk_smooth(g, VertexSide::Right, d);
                        rep.add("gluing", tag + " k=" + std::to_string(k) + " d=" + std::to_string(d)
                                              + (left ? " +" : " -") + (right ? "+" : "-"),
                                GaussRat(glued), GaussRat(edge_cover(g, d)));
                    }
    };
    one(Rat(1), Rat(3), "a=1 b=3");
    for (int s = 0; s < samples; ++s) {
        Rat a = detail::sample_rat(rng, 9, true), b = detail::sample_rat(rng, 9, false);
        one(a, b, "a=" + a.str() + " b=" + b.str());
    }
    return rep;
}

/// Orbifold gluing: disk * disk * (-1)^d * factor = cover, twisted and untwisted.
inline Report orb_gluing(int max_d)
{
    Report rep;
    for (int d = 1; d <= max_d; ++d)
        for (auto kind : {OrbDiskKind::Twisted, OrbDiskKind::Untwisted}) {
            Rat disk = disk_orbifold(d, kind);
            rep.add("orb-gluing",
                    std::string(kind == OrbDiskKind::Twisted ? "twisted" : "untwisted") + " d=" + std::to_string(d),
                    GaussRat(disk * disk * sign_power(d) * orb_glue_factor(d)), GaussRat(orb_edge_cover(d, kind)));
        }
    return rep;
}

/// Both open potentials computed two ways. Resolution caps use degree as the
/// Q_-degree bound; the orbifold uses order as the z-order.
inline Report routes(const Caps& caps)
{
    Report rep;
    Caps rc{std::max(caps.order, 4), caps.max_winding, caps.max_boundary, caps.max_degree};
    rep.compare("routes-resolution", open_potential_resolution(rc).expand(rc), graph_sum_resolution(rc), {}, "", "x");
    Caps oc{caps.order, caps.max_winding, caps.max_boundary, 0};
    rep.compare("routes-orbifold", open_potential_orbifold(oc), lambda_sum(oc));
    return rep;
}

} // namespace ogw::checks

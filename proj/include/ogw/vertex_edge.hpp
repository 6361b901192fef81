#pragma once

// Local contributions: disk functions at smooth and orbifold vertices, multiple
// covers of compact edges, the factors that glue two disks into a cover, and
// the coefficients of powers of G = (1 + sqrt(1 + 4X))/2.

#include <vector>

#include "rational.hpp"

namespace ogw {

/// A compact edge with normal bundle O(-k) + O(k-2). The weights at the left
/// vertex are (a, b, -a-b); everything else follows from (a, b, k).
/// An orientation flag set to false reverses the arrow on that Lagrangian.
struct EdgeGeom {
    Rat a;
    Rat b;
    int k = 1;
    bool orient_left = true;
    bool orient_right = true;
};

enum class VertexSide { Left, Right };

/// Winding-d disk function at one end of the edge.
inline Rat disk_smooth(const EdgeGeom& g, VertexSide side, int d)
{
    require(d >= 1, "disk winding must be positive");
    if (g.a.is_zero())
        throw PreconditionError("edge weight a must be nonzero");
    const Rat bd = g.b * Rat(d);
    Rat prod(1);
    for (int i = 1; i < d; ++i)
        prod *= side == VertexSide::Left ? bd - g.a * Rat(i) : bd - g.a * Rat(g.k * d) + g.a * Rat(i);
    Rat value = prod / (g.a.pow(d - 1) * Rat(d) * factorial(d));
    if (side == VertexSide::Left)
        value *= sign_power(d + 1);
    bool flipped = side == VertexSide::Left ? !g.orient_left : !g.orient_right;
    return flipped ? value * sign_power(d + 1) : value;
}

/// Degree-d multiple cover of the compact edge.
inline Rat edge_cover(const EdgeGeom& g, int d)
{
    require(d >= 1 && g.k >= 1, "cover degree and k must be positive");
    if (g.a.is_zero())
        throw PreconditionError("edge weight a must be nonzero");
    const Rat bd = g.b * Rat(d);
    Rat prod(1);
    for (int i = 1; i < d; ++i)
        prod *= (bd - g.a * Rat(i)) * (bd - g.a * Rat(g.k * d) + g.a * Rat(i));
    Rat df = factorial(d);
    return sign_power(static_cast<long>(d) * (g.k + 1)) * prod / (g.a.pow(2 * d - 2) * Rat(d) * df * df);
}

/// Factor turning the product of the two winding-d disks into the cover.
inline Rat glue_factor_smooth(int d, int k, bool same_orientation)
{
    require(d >= 1 && k >= 1, "d and k must be positive");
    long e = same_orientation ? static_cast<long>(d) * k + 1 : static_cast<long>(d) * k + d;
    return sign_power(e) * Rat(d);
}

enum class OrbDiskKind { Twisted, Untwisted };

/// Winding-d disk at the orbifold point: twisted marked origin or unmarked.
inline Rat disk_orbifold(int d, OrbDiskKind kind)
{
    require(d >= 1, "disk winding must be positive");
    if (kind == OrbDiskKind::Twisted)
        return double_factorial_ratio(d) / Rat(2 * d);
    return Rat(1, 2L * d * d);
}

/// Degree-d cover of the twisted line in the orbifold closed geometry.
inline Rat orb_edge_cover(int d, OrbDiskKind kind)
{
    require(d >= 1, "cover degree must be positive");
    if (kind == OrbDiskKind::Twisted) {
        Rat r = double_factorial_ratio(d);
        return r * r / Rat(2 * d);
    }
    return Rat(1, 2L * d * d * d);
}

/// Gluing factor for two orbifold disks; the right disk carries an extra (-1)^d.
inline Rat orb_glue_factor(int d)
{
    require(d >= 1, "d must be positive");
    return sign_power(d) * Rat(2 * d);
}

/// X-coefficients 0..upto of G^n, from G^0 = 1, the signed Catalan series G^1
/// and G^n = G^{n-1} + X G^{n-2}.
inline std::vector<Rat> g_power_coefficients(int n, int upto)
{
    require(n >= 0 && upto >= 0, "n and upto must be non-negative");
    const std::size_t len = static_cast<std::size_t>(upto) + 1;
    std::vector<Rat> prev(len, Rat(0)), cur(len, Rat(0));
    prev[0] = Rat(1);
    cur[0] = Rat(1);
    for (int k = 1; k <= upto; ++k)
        cur[k] = sign_power(k + 1) * binomial(2 * (k - 1), k - 1) / Rat(k);
    if (n == 0)
        return prev;
    for (int p = 2; p <= n; ++p) {
        std::vector<Rat> next = cur;
        for (std::size_t k = 1; k < len; ++k)
            next[k] += prev[k - 1];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// The X^k coefficient of G^{2(d+k)}.
inline Rat g_lemma_coefficient(int d, int k)
{
    require(d >= 0 && k >= 0 && (d > 0 || k > 0), "(d, k) must be non-negative and not both zero");
    if (d == 0)
        return Rat(2);
    return binomial(k + 2 * d - 1, 2 * d - 1) * Rat(d + k) / Rat(d);
}

} // namespace ogw

#pragma once

// Closed genus-0 contributions of a localization tree, assembled by gluing the
// open vertex contributions along the edges.
//
// Resolution side: the winding variables cancel against the edge factors, so a
// tree contributes a closed form in Q_ = Q e^X times (U e^Y)^D with D the label
// sum. Orbifold side: a series in Z times (P e^W)^D.

#include <vector>

#include "orbifold.hpp"
#include "resolution.hpp"
#include "trees.hpp"
#include "vertex_edge.hpp"

namespace ogw {

/// GW_Y(T) = form(Q e^X) (U e^Y)^u_degree.
struct ResolutionTreeExpr {
    int u_degree = 0;
    QForm form;
};

/// GW_X(T) = z_series(Z) (P e^W)^p_degree.
struct OrbifoldTreeExpr {
    int p_degree = 0;
    TruncSeries z_series;
};

/// Edge labels at v, in incident-edge order, and whether each edge lies in the subset.
struct VertexView {
    std::vector<int> labels;
    std::vector<bool> in_subset;
};

inline VertexView vertex_view(const LocalizationTree& t, int v, unsigned subset = 0)
{
    VertexView view;
    for (int i : t.incident(v)) {
        view.labels.push_back(t.edges()[i].d);
        view.in_subset.push_back(((subset >> i) & 1u) != 0);
    }
    return view;
}

/// Caps large enough to hold every vertex profile of the tree.
inline Caps tree_caps(const LocalizationTree& t, int order)
{
    return Caps{order, t.max_label(), t.max_valence(), 0};
}

namespace detail {

inline const OneBoundarySector& one_boundary_at(const SectorExpr& s, int d)
{
    for (const auto& ob : s.one_boundary)
        if (ob.d == d)
            return ob;
    throw PreconditionError("one-boundary sector outside the computed caps");
}

inline const MultiBoundarySector& multi_boundary_at(const SectorExpr& s, const WindingProfile& p)
{
    for (const auto& mb : s.multi_boundary)
        if (mb.profile == p)
            return mb;
    throw PreconditionError("multi-boundary sector outside the computed caps");
}

inline QForm a_term(const Rat& c, int shift, int d)
{
    return QForm(QTerm{c, shift, RatFuncQ::constant(Rat(1)), {d}});
}

} // namespace detail

/// V^(S)(v) or its tilde version with the winding variables of the edges at v
/// divided out. Subset edges are the ones on the top line.
inline QForm resolution_vertex_factor(const SectorExpr& sectors, const VertexView& view, Color color)
{
    const bool black = color == Color::Black;
    if (view.labels.size() == 1) {
        const int d = view.labels[0];
        const auto& ob = detail::one_boundary_at(sectors, d);
        // Black on the top line and white on the bottom line see the top-disk
        // piece only; the other two also carry the lone-disk constant.
        if (view.in_subset[0] == black)
            return detail::a_term(ob.a_coeff, -d, d);
        return detail::a_term(ob.a_coeff, 0, d) + QForm::constant(ob.bottom_constant);
    }
    const auto& mb = detail::multi_boundary_at(sectors, WindingProfile(view.labels));
    int shift = 0;
    for (std::size_t i = 0; i < view.labels.size(); ++i)
        if (view.in_subset[i] != black)
            shift += view.labels[i];
    return QForm(QTerm{mb.coeff, shift, mb.kernel, {}});
}

/// Gluing factor -d of a resolution edge, without its (U e^Y)^d.
inline Rat resolution_edge_factor(int d) { return Rat(-d); }

/// Sum over subsets S of the edges of prod V^(S) prod E' prod tilde V^(S).
inline ResolutionTreeExpr closed_tree_contribution_resolution(const LocalizationTree& t, const SectorExpr& sectors)
{
    require(t.edge_count() < 31, "tree too large for subset enumeration");
    ResolutionTreeExpr out;
    out.u_degree = t.total_degree();
    Rat edges(1);
    for (const auto& e : t.edges())
        edges *= resolution_edge_factor(e.d);
    for (unsigned s = 0; s < (1u << t.edge_count()); ++s) {
        QForm prod = QForm::constant(edges);
        for (int v = 0; v < t.vertex_count(); ++v)
            prod = prod * resolution_vertex_factor(sectors, vertex_view(t, v, s), t.colors()[v]);
        out.form = out.form + prod;
    }
    return out;
}

inline ResolutionTreeExpr closed_tree_contribution_resolution(const LocalizationTree& t)
{
    return closed_tree_contribution_resolution(t, open_potential_resolution(tree_caps(t, 4)));
}

/// V(v): the coefficient of prod w_{d_i} in the open orbifold potential, as a
/// series in Z. Univalent vertices keep only disks with twisted origin; white
/// vertices use the right-hand potential, w_d -> (-1)^d tilde w_d.
inline TruncSeries orbifold_vertex_factor(const TruncSeries& potential, const VertexView& view, Color color)
{
    const Monomial target = detail::orb_profile_monomial(WindingProfile(view.labels));
    TruncSeries r(Caps::analytic_only(potential.caps().order));
    for (const auto& [m, c] : potential.terms()) {
        Monomial rest = m.without(VarId::analytic());
        if (rest != target)
            continue;
        int e = m.analytic_exponent();
        if (view.labels.size() == 1 && e == 0)
            continue;
        r.add(Monomial::analytic(e), c);
    }
    if (color == Color::White) {
        Rat sign(1);
        for (int d : view.labels)
            sign *= sign_power(d);
        r = r * GaussRat(sign);
    }
    require(!r.is_zero(), "vertex profile outside the computed potential");
    return r;
}

/// Gluing factor (-1)^d 2d of an orbifold edge, without its (P e^W)^d.
inline Rat orbifold_edge_factor(int d) { return orb_glue_factor(d); }

/// Extra term of the one-edge tree from gluing two unmarked disks.
inline Rat unmarked_pair_term(int d) { return orb_edge_cover(d, OrbDiskKind::Untwisted); }

inline OrbifoldTreeExpr closed_tree_contribution_orbifold(const LocalizationTree& t, const TruncSeries& potential)
{
    const Caps zc = Caps::analytic_only(potential.caps().order);
    OrbifoldTreeExpr out{t.total_degree(), TruncSeries::constant(zc, GaussRat(1))};
    for (const auto& e : t.edges())
        out.z_series = out.z_series * GaussRat(orbifold_edge_factor(e.d));
    for (int v = 0; v < t.vertex_count(); ++v)
        out.z_series = out.z_series * orbifold_vertex_factor(potential, vertex_view(t, v), t.colors()[v]);
    if (t.edge_count() == 1)
        out.z_series = out.z_series + TruncSeries::constant(zc, GaussRat(unmarked_pair_term(t.edges()[0].d)));
    return out;
}

inline OrbifoldTreeExpr closed_tree_contribution_orbifold(const LocalizationTree& t, int order)
{
    return closed_tree_contribution_orbifold(t, open_potential_orbifold(tree_caps(t, order)));
}

/// Weight of a tree in the closed potential: vertex contributions already carry
/// 1/|Aut| of their winding profiles, which the tree automorphisms replace.
inline Rat tree_weight(const LocalizationTree& t)
{
    Rat w(1, t.aut());
    for (int v = 0; v < t.vertex_count(); ++v)
        w *= WindingProfile(vertex_view(t, v).labels).aut();
    return w;
}

/// Expansion in Q and U at X = Y = 0; the divisor equation restores X and Y as
/// Q^n U^D -> (Q e^X)^n (U e^Y)^D.
inline TruncSeries expand_resolution_tree(const ResolutionTreeExpr& e, const Caps& caps)
{
    TruncSeries s(caps);
    if (e.u_degree > caps.max_degree)
        return s;
    auto coeffs = e.form.expand(caps.max_degree + 1);
    const Monomial u(VarId::degree(DegreeName::U), e.u_degree);
    for (int n = 0; n <= caps.max_degree; ++n)
        s.add(u * Monomial(q_var(), n), GaussRat(coeffs[n]));
    return s;
}

/// Expansion in Z, P and W with (P e^W)^D = P^D sum_k D^k W^k / k!.
inline TruncSeries expand_orbifold_tree(const OrbifoldTreeExpr& e, const Caps& caps, int max_w)
{
    TruncSeries s(caps);
    if (e.p_degree > caps.max_degree)
        return s;
    const VarId p = VarId::degree(DegreeName::P), w = VarId::degree(DegreeName::W);
    for (int k = 0; k <= std::min(max_w, caps.max_degree); ++k) {
        GaussRat wk(Rat(e.p_degree).pow(k) / factorial(k));
        for (const auto& [m, c] : e.z_series.terms())
            s.add(m * Monomial(p, e.p_degree) * Monomial(w, k), c * wk);
    }
    return s;
}

} // namespace ogw

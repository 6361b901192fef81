#include <gtest/gtest.h>

#include <algorithm>

#include "ogw/orbifold.hpp"
#include "ogw/resolution.hpp"
#include "ogw/vertex_edge.hpp"
#include "support.hpp"

using namespace ogw;

namespace {

Monomial yt(int d, int e = 1) { return Monomial(top_var(d), e); }
Monomial yb(int d, int e = 1) { return Monomial(bottom_var(d), e); }
Monomial qq(int k) { return Monomial(q_var(), k); }
Monomial w(int d, int e = 1) { return Monomial(orb_var(d), e); }

Caps resolution_caps(int winding, int boundary, int degree) { return Caps{4, winding, boundary, degree}; }

} // namespace

TEST(PsiIntegral, Examples)
{
    EXPECT_EQ(psi_integral_genus0({0, 0, 0}), Rat(1));
    EXPECT_EQ(psi_integral_genus0({1, 1, 0, 0, 0}), Rat(2));
    EXPECT_EQ(psi_integral_genus0({2, 0, 0, 0}), Rat(0));
    EXPECT_EQ(psi_integral_genus0({1, 0, 0, 0}), Rat(1));
    EXPECT_THROW(psi_integral_genus0({0, 0}), UnstableError);
}

TEST(ResolutionLocus, Examples)
{
    EXPECT_EQ(resolution_locus_contribution({{}, {}, {2}, true}), Rat(1, 4));
    EXPECT_EQ(resolution_locus_contribution({{1}, {}, {}, false}), Rat(-1));
    EXPECT_EQ(resolution_locus_contribution({{3}, {}, {}, false}), Rat(-10, 27));
    for (int k = 1; k <= 6; ++k) {
        Rat total(0);
        for (const auto& p : enumerate_profiles(k, k, k))
            if (p.total() == k)
                total += resolution_locus_contribution({p, {}, {}, false});
        EXPECT_EQ(total, Rat(-1, static_cast<long>(k) * k * k)) << k;
    }
    EXPECT_EQ(resolution_locus_contribution({{}, {1, 1}, {}, false}), Rat(-1, 2));
    EXPECT_EQ(resolution_locus_contribution({{}, {1}, {1}, false}), Rat(-1));
    EXPECT_THROW(resolution_locus_contribution({{}, {}, {}, false}), PreconditionError);
    EXPECT_THROW(resolution_locus_contribution({{1}, {}, {2}, true}), PreconditionError);
}

TEST(ResolutionLocus, StableLociMatchCollapsedPower)
{
    // For three or more special points the string equation collapses the
    // integral to (d + k)^{N-3}.
    for (const auto& k : enumerate_profiles(3, 3, 4))
        for (const auto& top : enumerate_profiles(3, 2, 5))
            for (const auto& bottom : enumerate_profiles(3, 2, 5)) {
                const int n_pts = k.size() + top.size() + bottom.size();
                if (n_pts < 3)
                    continue;
                Rat c = Rat(-1) * Rat(2).pow(n_pts - 1) / (k.aut() * top.aut() * bottom.aut());
                for (int x : k.parts())
                    c *= sign_power(x + 1) / Rat(x) * binomial(2 * x - 1, x);
                for (const auto* side : {&top, &bottom})
                    for (int x : side->parts())
                        c *= sign_power(x) * binomial(2 * x - 1, x);
                c *= Rat(k.total() + top.total() + bottom.total()).pow(n_pts - 3);
                EXPECT_EQ(resolution_locus_contribution({k, top, bottom, false}), c)
                    << k.str() << top.str() << bottom.str();
            }
}

TEST(ResolutionPotential, Examples)
{
    TruncSeries s = open_potential_resolution(resolution_caps(3, 3, 4)).expand(resolution_caps(3, 3, 4));
    EXPECT_EQ(s.coeff(yb(1)), GaussRat(1));
    EXPECT_EQ(s.coeff(yt(1)), GaussRat(1));
    EXPECT_EQ(s.coeff(yt(1) * yb(1) * qq(1)), GaussRat(-1));
    EXPECT_EQ(s.coeff(qq(1)), GaussRat(-1));
    EXPECT_EQ(s.coeff(qq(2)), GaussRat(Rat(-1, 8)));
    EXPECT_EQ(s.coeff(Monomial::analytic(3)), GaussRat(Rat(-1, 12)));
    EXPECT_EQ(s.coeff(yt(1, 2)), GaussRat(Rat(-1, 2)));
}

TEST(ResolutionPotential, RoutesAgreeOnSmallCaps)
{
    for (int wmax = 1; wmax <= 3; ++wmax)
        for (int nmax = 1; nmax <= 3; ++nmax) {
            Caps caps = resolution_caps(wmax, nmax, 4);
            EXPECT_EQ(open_potential_resolution(caps).expand(caps), graph_sum_resolution(caps))
                << wmax << "," << nmax;
        }
}

TEST(ResolutionPotential, ResummationThroughPowersOfG)
{
    // Summing covers of total degree k at fixed profile picks out the X^k
    // coefficient of G^{2(d+k)}, scaled by (d+k)^{n-3}.
    Caps caps = resolution_caps(3, 3, 6);
    TruncSeries s = open_potential_resolution(caps).expand(caps);
    for (const auto& p : enumerate_profiles(3, 3, 9)) {
        if (p.empty())
            continue;
        Monomial tops;
        for (int x : p.parts())
            tops = tops * yt(x);
        const int n = p.size(), d = p.total();
        for (int k = 0; k <= 6; ++k) {
            Rat c = Rat(-1) * Rat(2).pow(n - 1) / p.aut();
            for (int x : p.parts())
                c *= sign_power(x) * binomial(2 * x - 1, x);
            c = c / Rat(d + k).pow(3 - n) * g_power_coefficients(2 * (d + k), k)[k];
            EXPECT_EQ(s.coeff(tops * qq(k)), GaussRat(c)) << p.str() << " k=" << k;
            if (n == 1) {
                EXPECT_EQ(c, disk_weight(d) * Rat(d) * g_lemma_coefficient(d, k) / Rat(d + k).pow(2));
            }
        }
    }
}

TEST(ResolutionPotential, BottomVariablesCarryTheirOwnDegree)
{
    // Moving a disk from top to bottom multiplies by Q^d, except for the lone
    // bottom-disk constant 1/d^2.
    Caps caps = resolution_caps(3, 3, 6);
    TruncSeries s = open_potential_resolution(caps).expand(caps);
    for (const auto& [m, c] : s.terms())
        for (int d = 1; d <= 3; ++d) {
            int e = m.exponent(top_var(d));
            int k = m.exponent(q_var());
            if (e == 0 || k + d > 6)
                continue;
            Monomial moved = m.with(top_var(d), e - 1).with(bottom_var(d), m.exponent(bottom_var(d)) + 1).with(q_var(), k + d);
            // Multiplicities of each variable enter through |Aut|, so compare the
            // coefficients of the symmetric polynomials prod(yt + yb Q^d).
            Rat ratio = Rat(e) / Rat(m.exponent(bottom_var(d)) + 1);
            EXPECT_EQ(s.coeff(moved), c * GaussRat(ratio)) << m.str();
        }
}

TEST(OrbifoldLocus, Examples)
{
    EXPECT_EQ(orbifold_locus_contribution({1, {1}}), Rat(1, 4));
    EXPECT_EQ(orbifold_locus_contribution({0, {1, 2}}), Rat(1, 32));
    EXPECT_EQ(orbifold_locus_contribution({2, {}}), Rat(0));
    EXPECT_EQ(orbifold_locus_contribution({0, {3}}), Rat(1, 18));
    EXPECT_EQ(orbifold_locus_contribution({1, {1, 1}}), Rat(0));
    EXPECT_EQ(orbifold_locus_contribution({4, {}}), Rat(1, 4));
}

TEST(OrbifoldPotential, Examples)
{
    Caps caps{12, 3, 3, 0};
    TruncSeries s = open_potential_orbifold(caps);
    EXPECT_EQ(s.coeff(w(1) * Monomial::analytic(1)), GaussRat(Rat(1, 4)));
    EXPECT_EQ(s.coeff(w(1) * w(2)), GaussRat(Rat(1, 32)));
    EXPECT_EQ(s.coeff(Monomial::analytic(4)), GaussRat(Rat(1, 96)));
    EXPECT_EQ(s.coeff(w(1)), GaussRat(Rat(1, 2)));
    EXPECT_EQ(s.coeff(Monomial::analytic(2)), GaussRat(0));
}

TEST(OrbifoldPotential, RoutesAgree)
{
    for (int wmax = 1; wmax <= 3; ++wmax)
        for (int nmax = 0; nmax <= 3; ++nmax) {
            Caps caps{10, wmax, nmax, 0};
            EXPECT_EQ(open_potential_orbifold(caps), lambda_sum(caps)) << wmax << "," << nmax;
        }
}

TEST(OrbifoldPotential, ThirdDerivativeOfClosedPartIsHalfTangent)
{
    Caps caps{12, 0, 0, 0};
    TruncSeries h = open_potential_orbifold(caps);
    TruncSeries t = special::tan_half(9) * GaussRat(Rat(1, 2));
    EXPECT_EQ(h.derive().derive().derive().recap(Caps::analytic_only(9)), t);
}

TEST(Potentials, ProfileSymmetry)
{
    testing_support::Gen gen(41);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> a, b, c;
        for (int i = 0, n = static_cast<int>(gen.integer(0, 3)); i < n; ++i)
            a.push_back(static_cast<int>(gen.integer(1, 3)));
        for (int i = 0, n = static_cast<int>(gen.integer(0, 3)); i < n; ++i)
            b.push_back(static_cast<int>(gen.integer(1, 3)));
        for (int i = 0, n = static_cast<int>(gen.integer(1, 3)); i < n; ++i)
            c.push_back(static_cast<int>(gen.integer(1, 3)));
        Rat base = resolution_locus_contribution({c, a, b, false});
        std::shuffle(a.begin(), a.end(), gen.engine());
        std::shuffle(b.begin(), b.end(), gen.engine());
        std::shuffle(c.begin(), c.end(), gen.engine());
        EXPECT_EQ(resolution_locus_contribution({c, a, b, false}), base);
        int m = static_cast<int>(gen.integer(0, 6));
        Rat orb = orbifold_locus_contribution({m, a});
        std::reverse(a.begin(), a.end());
        EXPECT_EQ(orbifold_locus_contribution({m, a}), orb);
    }
}

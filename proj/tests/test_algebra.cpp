#include <gtest/gtest.h>

#include "ogw/json_io.hpp"
#include "ogw/special.hpp"
#include "support.hpp"

using namespace ogw;
using testing_support::Gen;

namespace {

TruncSeries z_poly(int order, std::vector<GaussRat> cs) { return TruncSeries::from_coeffs(Caps::analytic_only(order), cs); }

GaussRat q(long n, long d = 1) { return GaussRat(Rat(n, d)); }

} // namespace

TEST(Rat, CanonicalForm)
{
    Rat r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rat(0, -7).str(), "0");
    EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
    EXPECT_THROW(Rat(1, 0), DivisionByZero);
    EXPECT_THROW(Rat(0).inverse(), DivisionByZero);
    EXPECT_THROW(Rat::parse("x"), PreconditionError);
}

TEST(Rat, RingLawsOnRandomInputs)
{
    Gen gen(11);
    for (int t = 0; t < 300; ++t) {
        Rat a = gen.rat(), b = gen.rat(), c = gen.rat();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rat(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rat(1));
        }
    }
}

TEST(GaussRat, RingLawsOnRandomInputs)
{
    Gen gen(12);
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
    for (int t = 0; t < 300; ++t) {
        GaussRat a = gen.gauss(), b = gen.gauss(), c = gen.gauss();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), GaussRat(1));
        }
        Rat r = gen.rat();
        EXPECT_EQ(GaussRat(r) * GaussRat(r), GaussRat(r * r));
        EXPECT_TRUE(GaussRat(r).is_real());
    }
}

TEST(Rat, DoubleFactorialIdentity)
{
    for (long d = 1; d <= 20; ++d) {
        Rat lhs = binomial(2 * d - 1, d) / Rat(4).pow(d) * Rat(1, d);
        Rat odd(1), even(1);
        for (long j = 1; j <= 2 * d; ++j)
            (j % 2 ? odd : even) *= Rat(j);
        EXPECT_EQ(lhs, odd / even * Rat(1, 2 * d)) << d;
        EXPECT_EQ(double_factorial_ratio(d), odd / even);
    }
}

TEST(Series, MultiplicationExamples)
{
    auto a = z_poly(6, {1, 1});
    auto b = z_poly(6, {1, -1});
    EXPECT_EQ(a * b, z_poly(6, {1, 0, -1}));
    auto one = z_poly(6, {1});
    EXPECT_EQ(one * a, a);

    std::vector<GaussRat> e, em;
    for (int k = 0; k < 10; ++k) {
        e.push_back(GaussRat(factorial(k).inverse()));
        em.push_back(GaussRat(sign_power(k) / factorial(k)));
    }
    EXPECT_EQ(z_poly(10, e) * z_poly(10, em), z_poly(10, {1}));
}

TEST(Series, CapMismatchIsRejected)
{
    EXPECT_THROW(z_poly(4, {1}) * z_poly(5, {1}), CapMismatch);
    EXPECT_THROW(z_poly(4, {1}) + z_poly(5, {1}), CapMismatch);
}

TEST(Series, TruncationDropsOnlyBeyondCaps)
{
    Caps caps{4, 2, 2, 3};
    TruncSeries s(caps);
    s.add(Monomial::analytic(4), q(1));
    s.add(Monomial(VarId::winding(Side::Top, 3), 1), q(1));
    s.add(Monomial(VarId::winding(Side::Top, 1), 3), q(1));
    s.add(Monomial(VarId::degree(DegreeName::q), 4), q(1));
    EXPECT_TRUE(s.is_zero());
    s.add(Monomial(VarId::winding(Side::Top, 2), 2), q(1));
    EXPECT_EQ(s.size(), 1u);
}

TEST(Series, InverseExamples)
{
    auto inv = z_poly(6, {1, -1}).inverse();
    EXPECT_EQ(inv, z_poly(6, {1, 1, 1, 1, 1, 1}));

    auto inv2 = z_poly(4, {2, GaussRat::i()}).inverse();
    EXPECT_EQ(inv2.coeff(0), q(1, 2));
    EXPECT_EQ(inv2.coeff(1), GaussRat(Rat(0), Rat(-1, 4)));
    EXPECT_EQ(inv2.coeff(2), q(-1, 8));

    EXPECT_EQ(z_poly(4, {1}).inverse(), z_poly(4, {1}));
    EXPECT_THROW(z_poly(4, {0, 1}).inverse(), NonUnitConstant);
}

TEST(Series, ExpLogDerivativePreconditions)
{
    EXPECT_THROW(z_poly(4, {1, 1}).exp(), NonUnitConstant);
    EXPECT_THROW(z_poly(4, {2, 1}).log(), NonUnitConstant);
    EXPECT_THROW(TruncSeries::constant(Caps{4, 0, 0, 2}, 1).euler_antiderive(DegreeName::q, Constant::at_zero()),
                 PreconditionError);
}

TEST(Special, ExpIz)
{
    auto e = special::exp_iz(5);
    // i^k / k! by direct powers of i.
    GaussRat ipow(1);
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(e.coeff(k), ipow * GaussRat(factorial(k).inverse()));
        ipow *= GaussRat::i();
    }
    EXPECT_EQ(e.coeff(3), GaussRat(Rat(0), Rat(-1, 6)));
    EXPECT_EQ(e.coeff(4), q(1, 24));
}

TEST(Special, LogSecAndTan)
{
    auto ls = special::log_sec_half(8);
    EXPECT_EQ(ls.coeff(2), q(1, 8));
    EXPECT_EQ(ls.coeff(4), q(1, 192));
    EXPECT_EQ(ls.coeff(1), q(0));
    // d/dz log sec(z/2) = tan(z/2)/2.
    auto half_tan = special::tan_half(8).filter([](const Monomial& m) { return m.analytic_exponent() < 7; });
    EXPECT_EQ(ls.derive(), half_tan * q(1, 2));

    auto t = (special::sec_pow(2, 8) * q(1, 2)).antiderive(Constant::at_zero());
    EXPECT_EQ(t.coeff(1), q(1, 2));
    EXPECT_EQ(t.coeff(3), q(1, 24));
    EXPECT_EQ(t, special::tan_half(8));
}

TEST(Special, SecPowers)
{
    auto s2 = special::sec_pow(2, 6);
    EXPECT_EQ(s2.coeff(0), q(1));
    EXPECT_EQ(s2.coeff(2), q(1, 4));
    EXPECT_EQ(s2.coeff(4), q(1, 24));
    EXPECT_EQ(special::sec_pow(0, 6), z_poly(6, {1}));
    EXPECT_EQ(special::sec_pow(4, 6).coeff(2), q(1, 2));
    EXPECT_EQ(special::sec_pow(4, 6), s2 * s2);
    // sec^2 cos^2 = 1.
    auto c = special::cos_half(10);
    EXPECT_EQ(special::sec_pow(2, 10) * c * c, z_poly(10, {1}));
    // sin^2 + cos^2 = 1.
    auto s = special::sin_half(10);
    EXPECT_EQ(s * s + c * c, z_poly(10, {1}));
}

TEST(Series, EulerOperatorRoundTrip)
{
    Caps caps{3, 0, 0, 5};
    Gen gen(5);
    for (int t = 0; t < 20; ++t) {
        TruncSeries s = gen.series(caps, 8).filter([](const Monomial& m) {
            return m.exponent(VarId::degree(DegreeName::q)) > 0;
        });
        EXPECT_EQ(s.euler(DegreeName::q).euler_antiderive(DegreeName::q, Constant::drop()), s);
    }
}

TEST(Series, RoundTripsOnRandomMultivariateSeries)
{
    Caps caps{7, 2, 2, 3};
    Gen gen(2024);
    for (int t = 0; t < 25; ++t) {
        TruncSeries s = gen.series(caps, 6);
        TruncSeries unit = s + TruncSeries::constant(caps, gen.nonzero_rat());
        if (unit.constant_term().is_zero())
            continue;
        EXPECT_EQ(unit * unit.inverse(), unit.one());
        EXPECT_EQ(unit.inverse() * unit, unit.one());

        TruncSeries nil = s - TruncSeries::constant(caps, s.constant_term());
        EXPECT_EQ(nil.exp().log(), nil);
        EXPECT_EQ((nil + nil.one()).log().exp(), nil + nil.one());
        TruncSeries lowered = nil.filter([&](const Monomial& m) { return m.analytic_exponent() < caps.order - 1; });
        EXPECT_EQ(lowered.antiderive(Constant::at_zero()).derive(), lowered);
    }
}

TEST(Json, CanonicalShape)
{
    Caps caps{4, 2, 2, 2};
    TruncSeries s(caps);
    s.add(Monomial::analytic(1) * Monomial(VarId::winding(Side::Orbifold, 1), 1), q(1, 4));
    s.add(Monomial(), GaussRat(Rat(0), Rat(-3, 2)));
    auto j = series_json(s);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_TRUE(j[0]["monomial"].empty());
    EXPECT_EQ(j[0]["re"], "0");
    EXPECT_EQ(j[0]["im"], "-3/2");
    EXPECT_EQ(j[1]["monomial"]["z"], 1);
    EXPECT_EQ(j[1]["monomial"]["w1"], 1);
    EXPECT_EQ(j[1]["re"], "1/4");
}

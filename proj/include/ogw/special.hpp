#pragma once

// Univariate special series in the analytic variable, under analytic-only caps.

#include "series.hpp"

namespace ogw::special {

/// cos(z/2) = sum (-1)^k z^{2k} / (4^k (2k)!).
inline TruncSeries cos_half(int order)
{
    require(order >= 1, "order must be positive");
    TruncSeries s(Caps::analytic_only(order));
    for (int k = 0; 2 * k < order; ++k)
        s.add(Monomial::analytic(2 * k), GaussRat(sign_power(k) / (Rat(4).pow(k) * factorial(2 * k))));
    return s;
}

inline TruncSeries sin_half(int order)
{
    require(order >= 1, "order must be positive");
    TruncSeries s(Caps::analytic_only(order));
    for (int k = 0; 2 * k + 1 < order; ++k)
        s.add(Monomial::analytic(2 * k + 1),
              GaussRat(sign_power(k) / (Rat(2).pow(2 * k + 1) * factorial(2 * k + 1))));
    return s;
}

/// sec^{power}(z/2), computed as the (-power)-th power of the cosine series.
inline TruncSeries sec_pow(int power, int order)
{
    require(power >= 0, "sec power must be non-negative");
    return cos_half(order).pow(-power);
}

inline TruncSeries tan_half(int order) { return sin_half(order) * cos_half(order).inverse(); }

inline TruncSeries log_sec_half(int order) { return -cos_half(order).log(); }

/// exp(c z) for a Gaussian rational c.
inline TruncSeries exp_linear(const GaussRat& c, int order)
{
    require(order >= 1, "order must be positive");
    TruncSeries s(Caps::analytic_only(order));
    for (int k = 0; k < order; ++k)
        s.add(Monomial::analytic(k), c.pow(k) * GaussRat(factorial(k).inverse()));
    return s;
}

inline TruncSeries exp_iz(int order) { return exp_linear(GaussRat::i(), order); }

/// S_d(z) = integral of sec^{2d}(t/2) from 0 to z.
inline TruncSeries sec_integral(int d, int order)
{
    return sec_pow(2 * d, order).antiderive(Constant::at_zero());
}

} // namespace ogw::special

#pragma once

// Closed forms in the variable Q = q e^x of the resolution side: polynomials,
// rational functions, the transcendental one-boundary symbols
//   A_d(Q) = sum_{k>=0} binom(k+2d-1, 2d-1)/(k+d) Q^{k+d},
// and finite sums of products of these with integer powers of Q.

#include <algorithm>
#include <vector>

#include "rational.hpp"

namespace ogw {

/// Polynomial in Q; entry k is the Q^k coefficient.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(Rat r) { return QPoly(std::vector<Rat>{std::move(r)}); }
    /// (1 - Q)^e.
    static QPoly one_minus_q_pow(int e)
    {
        std::vector<Rat> c(static_cast<std::size_t>(e) + 1);
        for (int k = 0; k <= e; ++k)
            c[k] = sign_power(k) * binomial(e, k);
        return QPoly(std::move(c));
    }
    static QPoly monomial(int k, Rat r = Rat(1))
    {
        std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
        c[k] = std::move(r);
        return QPoly(std::move(c));
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0); }

    Rat eval(const Rat& q) const
    {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * q + *it;
        return r;
    }

    /// Q d/dQ.
    QPoly euler() const
    {
        std::vector<Rat> c = c_;
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] *= Rat(static_cast<long>(k));
        return QPoly(std::move(c));
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b)
    {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k)
            c[k] += b.c_[k];
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + b * Rat(-1); }
    friend QPoly operator*(const QPoly& a, const Rat& r)
    {
        std::vector<Rat> c = a.c_;
        for (auto& x : c)
            x *= r;
        return QPoly(std::move(c));
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return QPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// First n power-series coefficients of this / den; den(0) must be nonzero.
    std::vector<Rat> series_over(const QPoly& den, int n) const
    {
        require(!den.coeff(0).is_zero(), "denominator must not vanish at Q = 0");
        std::vector<Rat> r(static_cast<std::size_t>(std::max(n, 0)), Rat(0));
        const Rat inv0 = den.coeff(0).inverse();
        for (int m = 0; m < n; ++m) {
            Rat s = coeff(m);
            for (int k = 1; k <= m && k <= den.degree(); ++k)
                s -= den.c_[k] * r[m - k];
            r[m] = s * inv0;
        }
        return r;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// num / den with den(0) != 0.
struct RatFuncQ {
    QPoly num;
    QPoly den = QPoly::constant(Rat(1));

    static RatFuncQ constant(Rat r) { return {QPoly::constant(std::move(r)), QPoly::constant(Rat(1))}; }

    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) { return {a.num * b.num, a.den * b.den}; }
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b)
    {
        if (a.den == b.den)
            return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }

    std::vector<Rat> series(int n) const { return num.series_over(den, n); }
};

/// Q^{-d} (Q d/dQ)^j (Q^d / (1-Q)^{2d}), returned as P(Q) / (1-Q)^{2d+j}.
inline RatFuncQ profile_kernel(int d, int j)
{
    require(d >= 1 && j >= 0, "kernel needs d >= 1, j >= 0");
    QPoly p = QPoly::constant(Rat(1));
    int e = 2 * d;
    const QPoly one_minus_q = QPoly::one_minus_q_pow(1);
    const QPoly q = QPoly::monomial(1);
    for (int step = 0; step < j; ++step) {
        // Q^d P (1-Q)^{-e}  ->  Q^d ((d P + Q P')(1 - Q) + e Q P) (1-Q)^{-e-1}
        p = (p * Rat(d) + p.euler()) * one_minus_q + q * p * Rat(e);
        ++e;
    }
    return {p, QPoly::one_minus_q_pow(e)};
}

/// Coefficients of Q^{-d} A_d(Q) = sum_k binom(k+2d-1, 2d-1)/(k+d) Q^k, for k < n.
inline std::vector<Rat> shifted_a_series(int d, int n)
{
    std::vector<Rat> r;
    for (int k = 0; k < n; ++k)
        r.push_back(binomial(k + 2 * d - 1, 2 * d - 1) / Rat(k + d));
    return r;
}

/// A_d(-1) = integral_0^{-1} u^{d-1} (1-u)^{-2d} du = (-1)^d / (2d binom(2d-1, d)).
inline Rat a_value_at_minus_one(int d)
{
    require(d >= 1, "d must be positive");
    return sign_power(d) / (Rat(2 * d) * binomial(2 * d - 1, d));
}

/// One product c Q^shift r(Q) prod A_{d_j}(Q).
struct QTerm {
    Rat c;
    int shift = 0;
    RatFuncQ r = RatFuncQ::constant(Rat(1));
    std::vector<int> a_symbols;
};

/// Finite sum of QTerms.
class QForm {
public:
    QForm() = default;
    explicit QForm(QTerm t) { add(std::move(t)); }
    static QForm constant(Rat c) { return QForm(QTerm{std::move(c), 0, RatFuncQ::constant(Rat(1)), {}}); }

    const std::vector<QTerm>& terms() const { return t_; }

    void add(QTerm t)
    {
        if (!t.c.is_zero())
            t_.push_back(std::move(t));
    }

    friend QForm operator+(QForm a, const QForm& b)
    {
        for (const auto& t : b.t_)
            a.add(t);
        return a;
    }

    friend QForm operator*(const QForm& a, const QForm& b)
    {
        QForm r;
        for (const auto& x : a.t_)
            for (const auto& y : b.t_) {
                QTerm t{x.c * y.c, x.shift + y.shift, x.r * y.r, x.a_symbols};
                t.a_symbols.insert(t.a_symbols.end(), y.a_symbols.begin(), y.a_symbols.end());
                std::sort(t.a_symbols.begin(), t.a_symbols.end());
                r.add(std::move(t));
            }
        return r;
    }

    friend QForm operator*(QForm a, const Rat& c)
    {
        for (auto& t : a.t_)
            t.c *= c;
        return a;
    }

    /// Power-series coefficients of Q^0..Q^{n-1}; every term must be a power
    /// series once the A symbols supply their leading Q^d.
    std::vector<Rat> expand(int n) const
    {
        std::vector<Rat> out(static_cast<std::size_t>(std::max(n, 0)), Rat(0));
        for (const auto& t : t_) {
            // A_d = Q^d (shifted series), so the net shift gains d per symbol.
            int shift = t.shift;
            for (int d : t.a_symbols)
                shift += d;
            require(shift >= 0, "closed form is not a power series in Q");
            int len = n - shift;
            if (len <= 0)
                continue;
            std::vector<Rat> s = t.r.series(len);
            for (int d : t.a_symbols)
                s = truncated_product(s, shifted_a_series(d, len), len);
            for (int k = 0; k < len; ++k)
                out[k + shift] += t.c * s[k];
        }
        return out;
    }

private:
    static std::vector<Rat> truncated_product(const std::vector<Rat>& a, const std::vector<Rat>& b, int n)
    {
        std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
        for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i) {
            if (a[i].is_zero())
                continue;
            for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    }

    std::vector<QTerm> t_;
};

} // namespace ogw

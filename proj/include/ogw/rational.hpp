#pragma once

// Exact rationals on top of GMP. Every value is kept canonical: lowest terms,
// positive denominator, zero stored as 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ogw {

class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(long n, long d)
    {
        if (d == 0)
            throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d)
    {
        if (d == 0)
            throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rat parse(std::string_view s)
    {
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw PreconditionError("not a rational literal: " + std::string(s));
        if (q.get_den() == 0)
            throw DivisionByZero();
        return Rat(std::move(q));
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const
    {
        if (is_zero())
            throw DivisionByZero();
        return Rat(mpq_class(1) / v_);
    }

    Rat pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rat(n, d);
    }

    /// Canonical text: "p" for integers, otherwise "p/q".
    std::string str() const { return v_.get_str(10); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero())
            throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rat sign_power(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

inline mpz_class binomial_z(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// binom(n, k); zero outside 0 <= k <= n.
inline Rat binomial(long n, long k) { return Rat(binomial_z(n, k)); }

inline Rat factorial(long n)
{
    require(n >= 0, "factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(r);
}

/// (2d-1)!!/(2d)!!, computed as binom(2d, d) / 4^d.
inline Rat double_factorial_ratio(long d)
{
    require(d >= 0, "double factorial ratio needs d >= 0");
    return binomial(2 * d, d) / Rat(4).pow(d);
}

} // namespace ogw

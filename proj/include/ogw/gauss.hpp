#pragma once

#include <ostream>
#include <string>

#include "rational.hpp"

namespace ogw {

/// Gaussian rational re + im*i.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat inverse() const
    {
        Rat n = norm();
        if (n.is_zero())
            throw DivisionByZero();
        return GaussRat(re_ / n, -im_ / n);
    }

    GaussRat pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        GaussRat result(1), base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o)
    {
        if (o.im_.is_zero()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rat r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

    std::string str() const
    {
        if (im_.is_zero())
            return re_.str();
        if (re_.is_zero())
            return im_.str() + "i";
        return re_.str() + (im_.sign() > 0 ? "+" : "") + im_.str() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

private:
    Rat re_;
    Rat im_;
};

} // namespace ogw

#pragma once

// Truncated multivariate power series over the Gaussian rationals.
//
// A series has one analytic variable (bounded by an exclusive order), any
// number of winding variables (bounded by their individual degree d and by the
// total winding degree, i.e. the number of boundary components) and degree
// variables (bounded per variable). Every operation re-truncates, so monomials
// beyond the caps can be lost but never created.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gauss.hpp"

namespace ogw {

enum class VarKind : std::uint8_t { Analytic, Winding, Degree };

/// Boundary side of a winding variable. The two tilde sides belong to the
/// second copy of the resolution potential glued in closed tree sums.
enum class Side : std::uint8_t { Top, Bottom, Orbifold, OrbifoldTilde, TildeTop, TildeBottom };

enum class DegreeName : std::uint8_t { q, P, U, W };

struct VarId {
    VarKind kind = VarKind::Analytic;
    std::uint8_t tag = 0; // Side or DegreeName
    int d = 0;            // winding degree, 0 otherwise

    static VarId analytic() { return {}; }
    static VarId winding(Side s, int d)
    {
        require(d >= 1, "winding variables need d >= 1");
        return {VarKind::Winding, static_cast<std::uint8_t>(s), d};
    }
    static VarId degree(DegreeName n) { return {VarKind::Degree, static_cast<std::uint8_t>(n), 0}; }

    Side side() const { return static_cast<Side>(tag); }
    DegreeName degree_name() const { return static_cast<DegreeName>(tag); }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name(const std::string& analytic_name = "z") const
    {
        switch (kind) {
        case VarKind::Analytic:
            return analytic_name;
        case VarKind::Winding: {
            static const char* prefix[] = {"yt", "yb", "w", "wt", "ytt", "ytb"};
            return prefix[tag] + std::to_string(d);
        }
        case VarKind::Degree: {
            static const char* names[] = {"q", "P", "U", "W"};
            return names[tag];
        }
        }
        return "?";
    }
};

/// Product of variable powers; stored sorted, zero exponents never stored.
class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    Monomial(VarId v, int e) { set(v, e); }

    static Monomial analytic(int e) { return Monomial(VarId::analytic(), e); }

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }

    int exponent(const VarId& v) const
    {
        auto it = find(v);
        return (it != e_.end() && it->first == v) ? it->second : 0;
    }
    int analytic_exponent() const { return exponent(VarId::analytic()); }

    void set(const VarId& v, int e)
    {
        require(e >= 0, "negative exponent");
        auto it = find(v);
        bool present = it != e_.end() && it->first == v;
        if (e == 0) {
            if (present)
                e_.erase(it);
        } else if (present) {
            it->second = e;
        } else {
            e_.insert(it, {v, e});
        }
    }

    Monomial with(const VarId& v, int e) const
    {
        Monomial m = *this;
        m.set(v, e);
        return m;
    }
    Monomial without(const VarId& v) const { return with(v, 0); }

    /// Sum of exponents of winding variables: the number of boundary components.
    int winding_total() const
    {
        int t = 0;
        for (const auto& [v, e] : e_)
            if (v.kind == VarKind::Winding)
                t += e;
        return t;
    }

    int max_winding_d() const
    {
        int m = 0;
        for (const auto& [v, e] : e_)
            if (v.kind == VarKind::Winding)
                m = std::max(m, v.d);
        return m;
    }

    int max_degree_exponent() const
    {
        int m = 0;
        for (const auto& [v, e] : e_)
            if (v.kind == VarKind::Degree)
                m = std::max(m, e);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        r.e_.reserve(a.e_.size() + b.e_.size());
        auto i = a.e_.begin(), j = b.e_.begin();
        while (i != a.e_.end() || j != b.e_.end()) {
            if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
                r.e_.push_back(*i++);
            else if (i == a.e_.end() || j->first < i->first)
                r.e_.push_back(*j++);
            else {
                r.e_.push_back({i->first, i->second + j->second});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str(const std::string& analytic_name = "z") const
    {
        if (e_.empty())
            return "1";
        std::string s;
        for (const auto& [v, e] : e_) {
            if (!s.empty())
                s += "*";
            s += v.name(analytic_name);
            if (e != 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Entry>::iterator find(const VarId& v)
    {
        return std::lower_bound(e_.begin(), e_.end(), v,
                                [](const Entry& x, const VarId& key) { return x.first < key; });
    }
    std::vector<Entry>::const_iterator find(const VarId& v) const
    {
        return std::lower_bound(e_.begin(), e_.end(), v,
                                [](const Entry& x, const VarId& key) { return x.first < key; });
    }

    std::vector<Entry> e_;
};

struct Caps {
    int order = 8;        // analytic exponent < order
    int max_winding = 0;  // every winding variable has d <= max_winding
    int max_boundary = 0; // number of boundary components <= max_boundary
    int max_degree = 0;   // every degree variable exponent <= max_degree

    static Caps analytic_only(int order) { return Caps{order, 0, 0, 0}; }

    bool admits(const Monomial& m) const
    {
        return m.analytic_exponent() < order && m.max_winding_d() <= max_winding
               && m.winding_total() <= max_boundary && m.max_degree_exponent() <= max_degree;
    }

    friend bool operator==(const Caps&, const Caps&) = default;
};

/// Constant-of-integration policy for antiderivatives.
struct Constant {
    enum class Kind { ValueAtZero, Drop } kind = Kind::Drop;
    GaussRat value;

    static Constant at_zero(GaussRat v = GaussRat(0)) { return {Kind::ValueAtZero, std::move(v)}; }
    static Constant drop() { return {Kind::Drop, GaussRat(0)}; }
};

class TruncSeries {
public:
    using Terms = std::map<Monomial, GaussRat>;

    explicit TruncSeries(Caps caps = Caps{}) : caps_(caps) {}

    static TruncSeries constant(const Caps& caps, const GaussRat& c)
    {
        TruncSeries s(caps);
        s.add(Monomial(), c);
        return s;
    }
    static TruncSeries variable(const Caps& caps, const VarId& v)
    {
        TruncSeries s(caps);
        s.add(Monomial(v, 1), GaussRat(1));
        return s;
    }
    static TruncSeries term(const Caps& caps, const Monomial& m, const GaussRat& c)
    {
        TruncSeries s(caps);
        s.add(m, c);
        return s;
    }
    /// Univariate series from coefficients of the analytic variable.
    static TruncSeries from_coeffs(const Caps& caps, const std::vector<GaussRat>& cs)
    {
        TruncSeries s(caps);
        for (std::size_t k = 0; k < cs.size(); ++k)
            s.add(Monomial::analytic(static_cast<int>(k)), cs[k]);
        return s;
    }

    const Caps& caps() const { return caps_; }
    int order() const { return caps_.order; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    GaussRat coeff(const Monomial& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? GaussRat(0) : it->second;
    }
    GaussRat coeff(int analytic_exp) const { return coeff(Monomial::analytic(analytic_exp)); }
    GaussRat constant_term() const { return coeff(Monomial()); }

    /// Adds c*m; ignored when m is outside the caps.
    void add(const Monomial& m, const GaussRat& c)
    {
        if (c.is_zero() || !caps_.admits(m))
            return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    /// Same terms under other caps; terms the new caps reject are dropped.
    TruncSeries recap(const Caps& caps) const
    {
        TruncSeries r(caps);
        for (const auto& [m, c] : t_)
            r.add(m, c);
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        check_caps(o);
        for (const auto& [m, c] : o.t_)
            add(m, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        check_caps(o);
        for (const auto& [m, c] : o.t_)
            add(m, -c);
        return *this;
    }
    TruncSeries& operator*=(const GaussRat& c)
    {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_)
            v *= c;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) { return a *= GaussRat(-1); }
    friend TruncSeries operator*(TruncSeries a, const GaussRat& c) { return a *= c; }
    friend TruncSeries operator*(const GaussRat& c, TruncSeries a) { return a *= c; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check_caps(b);
        TruncSeries r(a.caps_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add(ma * mb, ca * cb);
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.caps_ == b.caps_ && a.t_ == b.t_;
    }

    TruncSeries one() const { return constant(caps_, GaussRat(1)); }

    /// Two-sided inverse up to truncation; the constant term must be a unit.
    TruncSeries inverse() const
    {
        GaussRat c = constant_term();
        if (c.is_zero())
            throw NonUnitConstant("inverse of a series with zero constant term");
        GaussRat cinv = c.inverse();
        // s = c(1 + u) with u free of the constant monomial.
        TruncSeries u = *this * cinv - one();
        TruncSeries sum = one(), power = one();
        for (long k = 1;; ++k) {
            power = power * u;
            if (power.is_zero())
                break;
            if (k % 2)
                sum -= power;
            else
                sum += power;
        }
        return sum * cinv;
    }

    TruncSeries pow(long n) const
    {
        if (n < 0)
            return inverse().pow(-n);
        TruncSeries result = one(), base = *this;
        while (n > 0) {
            if (n & 1)
                result = result * base;
            n >>= 1;
            if (n > 0)
                base = base * base;
        }
        return result;
    }

    TruncSeries exp() const
    {
        if (!constant_term().is_zero())
            throw NonUnitConstant("exp needs a zero constant term");
        TruncSeries sum = one(), power = one();
        for (long k = 1;; ++k) {
            power = power * *this * GaussRat(Rat(1, k));
            if (power.is_zero())
                break;
            sum += power;
        }
        return sum;
    }

    TruncSeries log() const
    {
        if (!(constant_term() == GaussRat(1)))
            throw NonUnitConstant("log needs constant term 1");
        TruncSeries u = *this - one();
        TruncSeries sum(caps_), power = one();
        for (long k = 1;; ++k) {
            power = power * u;
            if (power.is_zero())
                break;
            sum += power * GaussRat(Rat(k % 2 ? 1 : -1, k));
        }
        return sum;
    }

    /// d/d(analytic variable).
    TruncSeries derive() const
    {
        TruncSeries r(caps_);
        const VarId a = VarId::analytic();
        for (const auto& [m, c] : t_) {
            int e = m.exponent(a);
            if (e > 0)
                r.add(m.with(a, e - 1), c * GaussRat(e));
        }
        return r;
    }

    /// Antiderivative in the analytic variable; the top degree falls off the order.
    TruncSeries antiderive(const Constant& policy) const
    {
        TruncSeries r(caps_);
        const VarId a = VarId::analytic();
        for (const auto& [m, c] : t_) {
            int e = m.exponent(a);
            r.add(m.with(a, e + 1), c * GaussRat(Rat(1, e + 1)));
        }
        if (policy.kind == Constant::Kind::ValueAtZero)
            r.add(Monomial(), policy.value);
        return r;
    }

    /// v * d/dv on a degree variable (the divisor-equation derivative in v = q e^x).
    TruncSeries euler(DegreeName n) const
    {
        TruncSeries r(caps_);
        const VarId v = VarId::degree(n);
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v);
            if (e > 0)
                r.add(m, c * GaussRat(e));
        }
        return r;
    }

    /// Inverse of euler(n) normalized to vanish as v -> 0. Terms free of v have
    /// no preimage; they are dropped under Drop and rejected otherwise.
    TruncSeries euler_antiderive(DegreeName n, const Constant& policy) const
    {
        TruncSeries r(caps_);
        const VarId v = VarId::degree(n);
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v);
            if (e == 0) {
                if (policy.kind != Constant::Kind::Drop)
                    throw PreconditionError("term free of the degree variable has no Euler preimage");
                continue;
            }
            r.add(m, c * GaussRat(Rat(1, e)));
        }
        return r;
    }

    /// Keeps only terms satisfying pred(monomial).
    template <class Pred>
    TruncSeries filter(Pred pred) const
    {
        TruncSeries r(caps_);
        for (const auto& [m, c] : t_)
            if (pred(m))
                r.t_.emplace(m, c);
        return r;
    }

    /// Coefficient of var^e as a series in the remaining variables.
    TruncSeries extract(const VarId& v, int e) const
    {
        TruncSeries r(caps_);
        for (const auto& [m, c] : t_)
            if (m.exponent(v) == e)
                r.add(m.without(v), c);
        return r;
    }

    std::string str(const std::string& analytic_name = "z") const
    {
        if (t_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty())
                s += " + ";
            s += "(" + c.str() + ")";
            if (!m.is_one())
                s += "*" + m.str(analytic_name);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

private:
    void check_caps(const TruncSeries& o) const
    {
        if (!(caps_ == o.caps_))
            throw CapMismatch();
    }

    Caps caps_;
    Terms t_;
};

} // namespace ogw

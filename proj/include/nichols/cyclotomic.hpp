#pragma once

#include "nichols/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

namespace detail {

/// Dense univariate polynomial over Q, coefficients ascending.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Division with remainder; divisor must be nonzero.
inline std::pair<QPoly, QPoly> qp_divmod(QPoly num, const QPoly& den)
{
    if (den.empty())
        throw DivisionByZero();
    QPoly quo;
    if (num.size() >= den.size())
        quo.assign(num.size() - den.size() + 1, Rational(0));
    const Rational& lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        // the top coefficient cancels exactly
        num.pop_back();
        trim(num);
    }
    trim(quo);
    return {quo, num};
}

inline unsigned euler_phi(unsigned n)
{
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

/// n-th cyclotomic polynomial, computed as (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline const QPoly& cyclotomic_poly(unsigned n)
{
    // node-stable map: references remain valid after unlocking
    static std::map<unsigned, QPoly> cache;
    static std::recursive_mutex mtx; // the divisor recursion re-enters
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    QPoly xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto [q, r] = qp_divmod(xn, cyclotomic_poly(d));
        if (!r.empty())
            throw AlgebraError("cyclotomic polynomial division not exact");
        xn = std::move(q);
    }
    return cache.emplace(n, std::move(xn)).first->second;
}

} // namespace detail

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power
/// basis 1, zeta, ..., zeta^{phi(n)-1} of Q[x]/Phi_n. Values are immutable
/// once constructed; arithmetic between different conductors embeds both
/// operands into Q(zeta_lcm).
class CycNum {
public:
    CycNum() : n_(1), c_(1, Rational(0)) {}

    explicit CycNum(const Rational& r) : n_(1), c_(1, r) {}
    explicit CycNum(long v) : n_(1), c_(1, Rational(v)) {}

    /// The class of x^k mod Phi_n, i.e. zeta_n^k (k may be negative).
    static CycNum root(unsigned n, long k)
    {
        if (n < 1)
            throw AlgebraError("conductor must be positive");
        long m = k % static_cast<long>(n);
        if (m < 0)
            m += n;
        detail::QPoly p(static_cast<std::size_t>(m) + 1, Rational(0));
        p.back() = 1;
        return CycNum(n, reduce(n, std::move(p)));
    }

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }

    bool is_one() const
    {
        if (c_[0] != 1)
            return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
    }

    /// True when the value lies in Q (no zeta component in the power basis).
    bool is_rational() const
    {
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
    }

    const Rational& rational_part() const { return c_[0]; }

    /// Embeds into Q(zeta_m); m must be a multiple of the conductor.
    CycNum embedded(unsigned m) const
    {
        if (m == n_)
            return *this;
        if (m % n_ != 0)
            throw AlgebraError("embedding target is not a multiple of the conductor");
        unsigned step = m / n_;
        detail::QPoly p;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            std::size_t e = i * step;
            if (p.size() <= e)
                p.resize(e + 1, Rational(0));
            p[e] += c_[i];
        }
        return CycNum(m, reduce(m, std::move(p)));
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b)
    {
        auto [x, y, n] = aligned(a, b);
        for (std::size_t i = 0; i < y.size(); ++i)
            x[i] += y[i];
        return CycNum(n, std::move(x));
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b)
    {
        auto [x, y, n] = aligned(a, b);
        for (std::size_t i = 0; i < y.size(); ++i)
            x[i] -= y[i];
        return CycNum(n, std::move(x));
    }

    CycNum operator-() const
    {
        std::vector<Rational> r(c_);
        for (auto& x : r)
            x = -x;
        return CycNum(n_, std::move(r));
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b)
    {
        // rational scalars act coefficient-wise; no convolution or reduction
        if (a.is_rational())
            return scaled(b, a.c_[0]);
        if (b.is_rational())
            return scaled(a, b.c_[0]);
        auto [x, y, n] = aligned(a, b);
        detail::QPoly p = detail::qp_mul(x, y);
        return CycNum(n, reduce(n, std::move(p)));
    }

    CycNum inverse() const
    {
        if (is_zero())
            throw DivisionByZero();
        // extended Euclid in Q[x] against Phi_n; Phi_n irreducible, so the
        // gcd is a nonzero constant.
        detail::QPoly r0 = detail::cyclotomic_poly(n_), r1 = c_;
        detail::trim(r1);
        detail::QPoly s0, s1{Rational(1)};
        while (true) {
            auto [q, rem] = detail::qp_divmod(r0, r1);
            detail::QPoly s2 = s0;
            detail::QPoly qs1 = detail::qp_mul(q, s1);
            if (s2.size() < qs1.size())
                s2.resize(qs1.size(), Rational(0));
            for (std::size_t i = 0; i < qs1.size(); ++i)
                s2[i] -= qs1[i];
            detail::trim(s2);
            if (rem.empty()) {
                // r1 is the gcd; must be constant
                if (r1.size() != 1)
                    throw AlgebraError("nonconstant gcd against an irreducible modulus");
                for (auto& x : s1)
                    x /= r1[0];
                return CycNum(n_, reduce(n_, std::move(s1)));
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        CycNum base = *this;
        CycNum acc(Rational(1));
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1)
                acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        if (a.n_ == b.n_)
            return a.c_ == b.c_;
        unsigned n = std::lcm(a.n_, b.n_);
        return a.embedded(n).c_ == b.embedded(n).c_;
    }

    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Total order usable as a map key (conductor-sensitive; equal values at
    /// equal conductors compare equal).
    friend bool operator<(const CycNum& a, const CycNum& b)
    {
        if (a.n_ != b.n_) {
            unsigned n = std::lcm(a.n_, b.n_);
            return a.embedded(n).c_ < b.embedded(n).c_;
        }
        return a.c_ < b.c_;
    }

    /// Least m >= 1 with a^m = 1, or nullopt when a is not a root of unity.
    /// Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
    std::optional<unsigned> order() const
    {
        if (is_zero())
            return std::nullopt;
        unsigned bound = std::lcm(2u, n_);
        std::vector<unsigned> divs;
        for (unsigned d = 1; d <= bound; ++d)
            if (bound % d == 0)
                divs.push_back(d);
        for (unsigned d : divs)
            if (pow(d).is_one())
                return d;
        return std::nullopt;
    }

private:
    CycNum(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c))
    {
        c_.resize(detail::euler_phi(n_), Rational(0));
    }

    static std::vector<Rational> reduce(unsigned n, detail::QPoly p)
    {
        unsigned phi = detail::euler_phi(n);
        detail::trim(p);
        if (p.size() > phi)
            p = detail::qp_divmod(std::move(p), detail::cyclotomic_poly(n)).second;
        p.resize(phi, Rational(0));
        return p;
    }

    static CycNum scaled(const CycNum& a, const Rational& r)
    {
        if (r == 0)
            return CycNum();
        if (r == 1)
            return a;
        std::vector<Rational> c(a.c_);
        for (auto& x : c)
            x *= r;
        return CycNum(a.n_, std::move(c));
    }

    static std::tuple<std::vector<Rational>, std::vector<Rational>, unsigned>
    aligned(const CycNum& a, const CycNum& b)
    {
        unsigned n = std::lcm(a.n_, b.n_);
        return {a.embedded(n).c_, b.embedded(n).c_, n};
    }

    unsigned n_;
    std::vector<Rational> c_;
};

inline CycNum operator*(const Rational& r, const CycNum& a) { return CycNum(r) * a; }

/// Prints in the case-file scalar syntax: rationals as p/q, roots as z<n>^k,
/// sums like "1 + z12^2 - 2/3*z12^3". Parsing this output reproduces the
/// value exactly.
inline std::string to_string(const CycNum& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        Rational v = c[i];
        if (out.empty()) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0)
                v = -v;
        }
        std::string mono;
        if (i >= 1) {
            mono = "z" + std::to_string(a.conductor());
            if (i > 1)
                mono += "^" + std::to_string(i);
        }
        if (mono.empty())
            out += to_string(v);
        else if (v == 1)
            out += mono;
        else
            out += to_string(v) + "*" + mono;
    }
    return out;
}

/// Parses the scalar syntax emitted by to_string(CycNum): signed sums of
/// terms, each a product of rationals `p/q` and roots `z<n>^<k>`. Mixed
/// conductors embed into the lcm field, so parse(to_string(a)) == a exactly.
inline CycNum parse_cyc(const std::string& src)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw AlgebraError("scalar parse error: " + msg + " at '" + src.substr(pos, 16) + "'");
    };
    auto integer = [&]() -> long {
        skip();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            v = v * 10 + (src[pos++] - '0');
        return v;
    };
    auto factor = [&]() -> CycNum {
        skip();
        if (pos < src.size() && src[pos] == 'z') {
            ++pos;
            long n = integer();
            long k = 1;
            skip();
            if (pos < src.size() && src[pos] == '^') {
                ++pos;
                k = integer();
            }
            if (n <= 0)
                fail("root conductor must be positive");
            return CycNum::root(static_cast<unsigned>(n), k);
        }
        long num = integer();
        skip();
        if (pos < src.size() && src[pos] == '/') {
            ++pos;
            long den = integer();
            if (den == 0)
                fail("division by zero");
            return CycNum(Rational(num) / Rational(den));
        }
        return CycNum(num);
    };
    auto term = [&]() -> CycNum {
        CycNum acc = factor();
        skip();
        while (pos < src.size() && src[pos] == '*') {
            ++pos;
            acc = acc * factor();
        }
        return acc;
    };
    skip();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
        neg = src[pos] == '-';
        ++pos;
    }
    CycNum acc = term();
    if (neg)
        acc = -acc;
    for (;;) {
        skip();
        if (pos >= src.size())
            return acc;
        if (src[pos] != '+' && src[pos] != '-')
            fail("expected '+' or '-'");
        bool sub = src[pos] == '-';
        ++pos;
        CycNum t = term();
        acc = sub ? acc - t : acc + t;
    }
}

} // namespace nichols

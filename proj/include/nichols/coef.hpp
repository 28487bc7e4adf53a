#pragma once

#include "nichols/cyclotomic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nichols {

/// Exponent vector of a monomial in the commuting deformation symbols.
/// At most kMaxLambda symbols are in play for any single case.
constexpr std::size_t kMaxLambda = 6;
using LambdaMono = std::array<std::uint8_t, kMaxLambda>;

constexpr LambdaMono lambda_one() { return LambdaMono{}; }

/// The commutative parameter ring Q(zeta)[lambda_*]: symbol names, the
/// Z^theta-degree assigned to each symbol (the degree of the relation it
/// deforms), and nilpotency constraints (products forced to vanish by
/// admissibility, e.g. lambda_1 lambda_2 = 0).
struct LambdaRing {
    std::vector<std::string> names;
    std::vector<std::vector<int>> degrees; // per symbol, Z^theta
    std::vector<std::pair<unsigned, unsigned>> zero_products;

    unsigned add(const std::string& name, std::vector<int> degree)
    {
        names.push_back(name);
        degrees.push_back(std::move(degree));
        if (names.size() > kMaxLambda)
            throw AlgebraError("too many deformation symbols");
        return static_cast<unsigned>(names.size() - 1);
    }

    int index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    bool killed(const LambdaMono& m) const
    {
        for (auto [i, j] : zero_products)
            if (m[i] > 0 && m[j] > 0)
                return true;
        return false;
    }

    std::vector<int> degree_of(const LambdaMono& m, std::size_t theta) const
    {
        std::vector<int> d(theta, 0);
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t t = 0; t < theta; ++t)
                d[t] += m[i] * degrees[i][t];
        return d;
    }
};

/// Polynomial in the lambda symbols with CycNum coefficients, in canonical
/// expanded form (no zero terms stored).
class Coef {
public:
    Coef() = default;
    explicit Coef(CycNum c)
    {
        if (!c.is_zero())
            terms_.emplace(lambda_one(), std::move(c));
    }
    explicit Coef(long v) : Coef(CycNum(v)) {}

    static Coef symbol(unsigned idx)
    {
        LambdaMono m{};
        m.at(idx) = 1;
        Coef r;
        r.terms_.emplace(m, CycNum(1L));
        return r;
    }

    static Coef term(const LambdaMono& m, CycNum c)
    {
        Coef r;
        if (!c.is_zero())
            r.terms_.emplace(m, std::move(c));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == lambda_one());
    }

    CycNum constant_part() const
    {
        auto it = terms_.find(lambda_one());
        return it == terms_.end() ? CycNum(0L) : it->second;
    }

    const std::map<LambdaMono, CycNum>& terms() const { return terms_; }

    Coef& operator+=(const Coef& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Coef& operator-=(const Coef& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Coef operator+(Coef a, const Coef& b) { return a += b; }
    friend Coef operator-(Coef a, const Coef& b) { return a -= b; }

    Coef operator-() const
    {
        Coef r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    friend Coef operator*(const Coef& a, const Coef& b)
    {
        if (a.is_constant())
            return a.constant_part() * b;
        if (b.is_constant())
            return b.constant_part() * a;
        Coef r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                LambdaMono m = ma;
                for (std::size_t i = 0; i < kMaxLambda; ++i)
                    m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend Coef operator*(const CycNum& s, const Coef& b)
    {
        if (s.is_one())
            return b;
        Coef r;
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, s * c);
        return r;
    }

    /// Drops monomials annihilated by the ring's zero-product constraints.
    void prune(const LambdaRing& ring)
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = ring.killed(it->first) ? terms_.erase(it) : std::next(it);
    }

    /// Substitutes concrete field values for the symbols.
    CycNum specialize(const std::vector<CycNum>& values) const
    {
        CycNum acc(0L);
        for (const auto& [m, c] : terms_) {
            CycNum t = c;
            for (std::size_t i = 0; i < kMaxLambda; ++i)
                for (unsigned e = 0; e < m[i]; ++e)
                    t = t * values.at(i);
            acc = acc + t;
        }
        return acc;
    }

    friend bool operator==(const Coef& a, const Coef& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

private:
    void add_term(const LambdaMono& m, CycNum c)
    {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    std::map<LambdaMono, CycNum> terms_;
};

inline std::string to_string(const Coef& c, const LambdaRing* ring = nullptr)
{
    if (c.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, v] : c.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < kMaxLambda; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring ? ring->names.at(i) : ("l" + std::to_string(i));
            if (m[i] > 1)
                mono += "^" + std::to_string(static_cast<int>(m[i]));
        }
        std::string cs = to_string(v);
        std::string piece;
        if (mono.empty())
            piece = cs;
        else if (cs == "1")
            piece = mono;
        else if (cs == "-1")
            piece = "-" + mono;
        else if (cs.find(' ') != std::string::npos)
            piece = "(" + cs + ")*" + mono;
        else
            piece = cs + "*" + mono;
        if (out.empty())
            out = piece;
        else if (!piece.empty() && piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

} // namespace nichols

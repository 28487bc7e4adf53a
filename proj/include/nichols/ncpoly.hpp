#pragma once

#include "nichols/coef.hpp"
#include "nichols/word.hpp"

#include <map>

namespace nichols {

/// Element of the free associative algebra on x_1..x_theta over
/// Q(zeta)[lambda_*]: finite map word -> coefficient, zero coefficients
/// never stored. Sorted by the ambient context's monomial order.
using NCPoly = std::map<Word, Coef, WordLess>;

/// Shared immutable context for one case: rank of the algebra, monomial
/// order and parameter ring.
struct FreeCtx {
    std::size_t theta = 2;
    WordOrder order = WordOrder::natural(2);
    LambdaRing lambdas;

    WordLess wless() const { return WordLess{&order}; }

    NCPoly zero() const { return NCPoly(wless()); }

    NCPoly mono(Word w, Coef c = Coef(1L)) const
    {
        NCPoly p(wless());
        c.prune(lambdas);
        if (!c.is_zero())
            p.emplace(std::move(w), std::move(c));
        return p;
    }

    NCPoly gen(unsigned i) const { return mono(Word{static_cast<std::uint8_t>(i)}); }

    NCPoly one() const { return mono(Word{}); }
};

inline void add_term(NCPoly& p, const Word& w, Coef c, const LambdaRing& ring)
{
    c.prune(ring);
    if (c.is_zero())
        return;
    auto [it, inserted] = p.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

inline void poly_add_scaled(NCPoly& p, const NCPoly& q, const Coef& s, const FreeCtx& ctx)
{
    for (const auto& [w, c] : q)
        add_term(p, w, s * c, ctx.lambdas);
}

inline NCPoly poly_add(const NCPoly& p, const NCPoly& q, const FreeCtx& ctx)
{
    NCPoly r(p);
    poly_add_scaled(r, q, Coef(1L), ctx);
    return r;
}

inline NCPoly poly_sub(const NCPoly& p, const NCPoly& q, const FreeCtx& ctx)
{
    NCPoly r(p);
    poly_add_scaled(r, q, Coef(-1L), ctx);
    return r;
}

inline NCPoly poly_scale(const NCPoly& p, const Coef& s, const FreeCtx& ctx)
{
    NCPoly r = ctx.zero();
    poly_add_scaled(r, p, s, ctx);
    return r;
}

inline NCPoly poly_mul(const NCPoly& p, const NCPoly& q, const FreeCtx& ctx)
{
    NCPoly r = ctx.zero();
    for (const auto& [wp, cp] : p)
        for (const auto& [wq, cq] : q)
            add_term(r, concat(wp, wq), cp * cq, ctx.lambdas);
    return r;
}

inline bool poly_is_zero(const NCPoly& p) { return p.empty(); }

inline const Word& leading_word(const NCPoly& p)
{
    if (p.empty())
        throw AlgebraError("leading word of the zero polynomial");
    return p.rbegin()->first;
}

inline const Coef& leading_coef(const NCPoly& p)
{
    if (p.empty())
        throw AlgebraError("leading coefficient of the zero polynomial");
    return p.rbegin()->second;
}

/// Common multidegree of all words, or nullopt for an inhomogeneous (or
/// zero) polynomial. Lambda symbols contribute their assigned degree, so
/// deformed relations stay homogeneous.
inline std::optional<MultiDegree> poly_multidegree(const NCPoly& p, const FreeCtx& ctx)
{
    std::optional<MultiDegree> deg;
    for (const auto& [w, c] : p) {
        MultiDegree base = multidegree(w, ctx.theta);
        for (const auto& [m, v] : c.terms()) {
            MultiDegree d = base + ctx.lambdas.degree_of(m, ctx.theta);
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
    }
    return deg;
}

inline std::string to_string(const NCPoly& p, const LambdaRing* ring = nullptr)
{
    if (p.empty())
        return "0";
    std::string out;
    // print leading term first
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::string cs = to_string(it->second, ring);
        std::string ws = to_string(it->first);
        std::string piece;
        if (it->first.empty())
            piece = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        else if (cs == "1")
            piece = ws;
        else if (cs == "-1")
            piece = "-" + ws;
        else if (cs.find(' ') != std::string::npos)
            piece = "(" + cs + ")*" + ws;
        else
            piece = cs + "*" + ws;
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

} // namespace nichols

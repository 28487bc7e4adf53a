#pragma once

#include "nichols/realization.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

/// Canonical monomial of T(V)#kGamma: x-word times group element, with the
/// group part collected to the right (g x_i = chi_i(g) x_i g).
using SmashKey = std::pair<Word, GrpElem>;

/// Order: x-word by the monomial order (degree first), ties by the group
/// exponent vector. The leading term of a smash polynomial is therefore
/// governed by its x-part, which is what the rewriting engine keys on.
struct SmashLess {
    const WordOrder* order = nullptr;
    bool operator()(const SmashKey& a, const SmashKey& b) const
    {
        if (order->less(a.first, b.first))
            return true;
        if (order->less(b.first, a.first))
            return false;
        return a.second < b.second;
    }
};

using SmashPoly = std::map<SmashKey, Coef, SmashLess>;

/// Shared context: braided structure plus the realization over Gamma.
struct SmashCtx {
    BraidCtx bc;
    Realization real;

    SmashPoly zero() const { return SmashPoly(SmashLess{&bc.fc.order}); }

    SmashPoly mono(SmashKey k, Coef c = Coef(1L)) const
    {
        SmashPoly p = zero();
        c.prune(bc.fc.lambdas);
        if (!c.is_zero())
            p.emplace(std::move(k), std::move(c));
        return p;
    }

    SmashPoly one() const { return mono({Word{}, grp_id(real.group_orders)}); }

    SmashPoly gen(unsigned i) const
    {
        return mono({Word{static_cast<std::uint8_t>(i)}, grp_id(real.group_orders)});
    }

    SmashPoly grp(const GrpElem& g) const { return mono({Word{}, g}); }

    /// Embed a pure x-polynomial.
    SmashPoly embed(const NCPoly& p) const
    {
        SmashPoly r = zero();
        for (const auto& [w, c] : p)
            r.emplace(SmashKey{w, grp_id(real.group_orders)}, c);
        return r;
    }
};

inline void smash_add_term(SmashPoly& p, SmashKey k, Coef c, const SmashCtx& ctx)
{
    c.prune(ctx.bc.fc.lambdas);
    if (c.is_zero())
        return;
    auto [it, inserted] = p.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

inline void smash_add_scaled(SmashPoly& p, const SmashPoly& q, const Coef& s, const SmashCtx& ctx)
{
    for (const auto& [k, c] : q)
        smash_add_term(p, k, s * c, ctx);
}

inline SmashPoly smash_add(const SmashPoly& p, const SmashPoly& q, const SmashCtx& ctx)
{
    SmashPoly r(p);
    smash_add_scaled(r, q, Coef(1L), ctx);
    return r;
}

inline SmashPoly smash_sub(const SmashPoly& p, const SmashPoly& q, const SmashCtx& ctx)
{
    SmashPoly r(p);
    smash_add_scaled(r, q, Coef(-1L), ctx);
    return r;
}

inline SmashPoly smash_scale(const SmashPoly& p, const Coef& s, const SmashCtx& ctx)
{
    SmashPoly r = ctx.zero();
    smash_add_scaled(r, p, s, ctx);
    return r;
}

/// (w1,g1)(w2,g2) = chi_{deg w2}(g1) (w1 w2, g1 g2).
inline SmashPoly smash_mul(const SmashPoly& p, const SmashPoly& q, const SmashCtx& ctx)
{
    SmashPoly r = ctx.zero();
    for (const auto& [kp, cp] : p)
        for (const auto& [kq, cq] : q) {
            CycNum tw = ctx.real.chi_deg(multidegree(kq.first, ctx.bc.fc.theta), kp.second);
            smash_add_term(r,
                           {concat(kp.first, kq.first),
                            grp_mul(kp.second, kq.second, ctx.real.group_orders)},
                           tw * (cp * cq), ctx);
        }
    return r;
}

inline const SmashKey& smash_leading_key(const SmashPoly& p)
{
    if (p.empty())
        throw AlgebraError("leading term of the zero element");
    return p.rbegin()->first;
}

inline Coef smash_counit(const SmashPoly& p)
{
    Coef r;
    for (const auto& [k, c] : p)
        if (k.first.empty())
            r += c;
    return r;
}

/// Antipode: S(g) = g^{-1}, S(x_i) = -g_i^{-1} x_i, antihomomorphism.
inline SmashPoly antipode(const SmashPoly& p, const SmashCtx& ctx)
{
    SmashPoly r = ctx.zero();
    for (const auto& [k, c] : p) {
        SmashPoly acc = ctx.grp(grp_inv(k.second, ctx.real.group_orders));
        for (auto it = k.first.rbegin(); it != k.first.rend(); ++it) {
            SmashPoly sgen =
                smash_scale(smash_mul(ctx.grp(grp_inv(ctx.real.grouplikes[*it],
                                                      ctx.real.group_orders)),
                                      ctx.gen(*it), ctx),
                            Coef(-1L), ctx);
            acc = smash_mul(acc, sgen, ctx);
        }
        smash_add_scaled(r, acc, c, ctx);
    }
    return r;
}

/// Tensor square of the smash algebra (ordinary tensor product of algebras,
/// no braiding twist): keys are pairs of smash monomials.
using SmashTensorKey = std::pair<SmashKey, SmashKey>;

struct SmashTensorLess {
    const WordOrder* order = nullptr;
    bool operator()(const SmashTensorKey& a, const SmashTensorKey& b) const
    {
        SmashLess l{order};
        if (l(a.first, b.first))
            return true;
        if (l(b.first, a.first))
            return false;
        return l(a.second, b.second);
    }
};

using SmashTensor = std::map<SmashTensorKey, Coef, SmashTensorLess>;

inline SmashTensor smash_tensor_zero(const SmashCtx& ctx)
{
    return SmashTensor(SmashTensorLess{&ctx.bc.fc.order});
}

inline void smash_tensor_add(SmashTensor& t, SmashTensorKey k, Coef c, const SmashCtx& ctx)
{
    c.prune(ctx.bc.fc.lambdas);
    if (c.is_zero())
        return;
    auto [it, inserted] = t.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t.erase(it);
    }
}

inline SmashTensor smash_tensor_of(const SmashPoly& a, const SmashPoly& b, const SmashCtx& ctx)
{
    SmashTensor t = smash_tensor_zero(ctx);
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            smash_tensor_add(t, {ka, kb}, ca * cb, ctx);
    return t;
}

inline SmashTensor smash_tensor_mul(const SmashTensor& s, const SmashTensor& t,
                                    const SmashCtx& ctx)
{
    SmashTensor r = smash_tensor_zero(ctx);
    for (const auto& [ks, cs] : s)
        for (const auto& [kt, ct] : t) {
            SmashPoly left = smash_mul(ctx.mono(ks.first), ctx.mono(kt.first), ctx);
            SmashPoly right = smash_mul(ctx.mono(ks.second), ctx.mono(kt.second), ctx);
            Coef c = cs * ct;
            for (const auto& [kl, cl] : left)
                for (const auto& [kr, cr] : right)
                    smash_tensor_add(r, {kl, kr}, c * (cl * cr), ctx);
        }
    return r;
}

/// Per-leg simplifier for reduce-as-you-go coproducts modulo an ideal.
using SmashLegReduce = std::function<SmashPoly(const SmashPoly&)>;

inline SmashTensor smash_tensor_reduce_legs(const SmashTensor& t, const SmashCtx& ctx,
                                            const SmashLegReduce& redl,
                                            const SmashLegReduce& redr)
{
    SmashTensor r = smash_tensor_zero(ctx);
    for (const auto& [k, c] : t) {
        SmashPoly left = redl ? redl(ctx.mono(k.first)) : ctx.mono(k.first);
        SmashPoly right = redr ? redr(ctx.mono(k.second)) : ctx.mono(k.second);
        for (const auto& [kl, cl] : left)
            for (const auto& [kr, cr] : right)
                smash_tensor_add(r, {kl, kr}, c * (cl * cr), ctx);
    }
    return r;
}

inline SmashTensor smash_tensor_reduce_legs(const SmashTensor& t, const SmashCtx& ctx,
                                            const SmashLegReduce& reduce)
{
    return smash_tensor_reduce_legs(t, ctx, reduce, reduce);
}

/// Full Hopf coproduct of T(V)#kGamma: Delta(x_i) = x_i(x)1 + g_i(x)x_i,
/// Delta(g) = g(x)g, extended as an algebra map (untwisted tensor square).
/// Legs are optionally reduced after each letter; the left and right legs
/// may use different reducers (e.g. the comodule algebra coaction, where the
/// two tensor factors live in different quotients).
inline SmashTensor hopf_coproduct(const SmashPoly& p, const SmashCtx& ctx,
                                  const SmashLegReduce& redl, const SmashLegReduce& redr)
{
    SmashTensor acc = smash_tensor_zero(ctx);
    const GrpElem e = grp_id(ctx.real.group_orders);
    for (const auto& [k, c] : p) {
        SmashTensor cur = smash_tensor_zero(ctx);
        smash_tensor_add(cur, {{Word{}, e}, {Word{}, e}}, Coef(1L), ctx);
        for (auto letter : k.first) {
            SmashTensor gen = smash_tensor_zero(ctx);
            smash_tensor_add(gen, {{Word{letter}, e}, {Word{}, e}}, Coef(1L), ctx);
            smash_tensor_add(gen, {{Word{}, ctx.real.grouplikes[letter]}, {Word{letter}, e}},
                             Coef(1L), ctx);
            cur = smash_tensor_mul(cur, gen, ctx);
            if (redl || redr)
                cur = smash_tensor_reduce_legs(cur, ctx, redl, redr);
        }
        SmashTensor grp = smash_tensor_zero(ctx);
        smash_tensor_add(grp, {{Word{}, k.second}, {Word{}, k.second}}, Coef(1L), ctx);
        cur = smash_tensor_mul(cur, grp, ctx);
        for (const auto& [kk, cc] : cur)
            smash_tensor_add(acc, kk, c * cc, ctx);
    }
    return acc;
}

inline SmashTensor hopf_coproduct(const SmashPoly& p, const SmashCtx& ctx,
                                  const SmashLegReduce& reduce = {})
{
    return hopf_coproduct(p, ctx, reduce, reduce);
}

inline std::string to_string(const SmashKey& k)
{
    std::string w = to_string(k.first);
    std::string g = grp_to_string(k.second);
    if (g == "1")
        return w;
    if (w == "1")
        return g;
    return w + "*" + g;
}

inline std::string to_string(const SmashPoly& p, const LambdaRing* ring = nullptr)
{
    if (p.empty())
        return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::string cs = to_string(it->second, ring);
        std::string ks = to_string(it->first);
        std::string piece;
        if (ks == "1")
            piece = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        else if (cs == "1")
            piece = ks;
        else if (cs == "-1")
            piece = "-" + ks;
        else if (cs.find(' ') != std::string::npos)
            piece = "(" + cs + ")*" + ks;
        else
            piece = cs + "*" + ks;
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

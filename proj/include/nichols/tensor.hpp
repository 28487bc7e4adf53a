#pragma once

#include "nichols/braiding.hpp"

#include <functional>

namespace nichols {

/// Element of T(V) (x) T(V) with the braided multiplication, used for the
/// braided coproduct of the tensor algebra.
using TensorKey = std::pair<Word, Word>;

struct TensorLess {
    const WordOrder* order = nullptr;
    bool operator()(const TensorKey& a, const TensorKey& b) const
    {
        if (order->less(a.first, b.first))
            return true;
        if (order->less(b.first, a.first))
            return false;
        return order->less(a.second, b.second);
    }
};

using TensorElem = std::map<TensorKey, Coef, TensorLess>;

inline TensorElem tensor_zero(const BraidCtx& ctx)
{
    return TensorElem(TensorLess{&ctx.fc.order});
}

inline void tensor_add_term(TensorElem& t, TensorKey k, Coef c, const LambdaRing& ring)
{
    c.prune(ring);
    if (c.is_zero())
        return;
    auto [it, inserted] = t.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t.erase(it);
    }
}

inline TensorElem tensor_of(const NCPoly& a, const NCPoly& b, const BraidCtx& ctx)
{
    TensorElem t = tensor_zero(ctx);
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            tensor_add_term(t, {wa, wb}, ca * cb, ctx.fc.lambdas);
    return t;
}

/// (a (x) b)(c (x) d) = chi(deg b, deg c) (ac (x) bd), extended bilinearly.
inline TensorElem braided_tensor_mul(const TensorElem& s, const TensorElem& t, const BraidCtx& ctx)
{
    TensorElem r = tensor_zero(ctx);
    for (const auto& [ks, cs] : s)
        for (const auto& [kt, ct] : t) {
            CycNum twist = ctx.braiding.bichar(multidegree(ks.second, ctx.fc.theta),
                                               multidegree(kt.first, ctx.fc.theta));
            tensor_add_term(r, {concat(ks.first, kt.first), concat(ks.second, kt.second)},
                            twist * (cs * ct), ctx.fc.lambdas);
        }
    return r;
}

/// Optional per-leg simplifier applied while building coproducts; used to
/// keep intermediate results reduced against an ideal.
using LegReduce = std::function<NCPoly(const NCPoly&)>;

inline TensorElem tensor_reduce_legs(const TensorElem& t, const BraidCtx& ctx,
                                     const LegReduce& reduce)
{
    TensorElem r = tensor_zero(ctx);
    for (const auto& [k, c] : t) {
        NCPoly left = reduce(ctx.fc.mono(k.first));
        NCPoly right = reduce(ctx.fc.mono(k.second));
        for (const auto& [wl, cl] : left)
            for (const auto& [wr, cr] : right)
                tensor_add_term(r, {wl, wr}, c * (cl * cr), ctx.fc.lambdas);
    }
    return r;
}

/// Braided coproduct of T(V): generators are primitive, extended as an
/// algebra map into the braided tensor square.
inline TensorElem coproduct(const NCPoly& p, const BraidCtx& ctx, const LegReduce& reduce = {})
{
    TensorElem acc = tensor_zero(ctx);
    for (const auto& [w, c] : p) {
        TensorElem cur = tensor_zero(ctx);
        tensor_add_term(cur, {Word{}, Word{}}, Coef(1L), ctx.fc.lambdas);
        for (auto letter : w) {
            TensorElem gen = tensor_zero(ctx);
            tensor_add_term(gen, {Word{letter}, Word{}}, Coef(1L), ctx.fc.lambdas);
            tensor_add_term(gen, {Word{}, Word{letter}}, Coef(1L), ctx.fc.lambdas);
            cur = braided_tensor_mul(cur, gen, ctx);
            if (reduce)
                cur = tensor_reduce_legs(cur, ctx, reduce);
        }
        for (const auto& [k, cc] : cur)
            tensor_add_term(acc, k, c * cc, ctx.fc.lambdas);
    }
    return acc;
}

/// Counit: coefficient of the empty word.
inline Coef counit(const NCPoly& p)
{
    auto it = p.find(Word{});
    return it == p.end() ? Coef() : it->second;
}

/// [u, v]_c = uv - chi(deg u, deg v) vu for homogeneous u, v.
inline NCPoly braided_commutator(const NCPoly& u, const NCPoly& v, const BraidCtx& ctx)
{
    auto du = poly_multidegree(u, ctx.fc);
    auto dv = poly_multidegree(v, ctx.fc);
    if (!du || !dv)
        throw AlgebraError("braided commutator of inhomogeneous input");
    NCPoly r = poly_mul(u, v, ctx.fc);
    NCPoly vu = poly_mul(v, u, ctx.fc);
    poly_add_scaled(r, vu, Coef(-ctx.braiding.bichar(*du, *dv)), ctx.fc);
    return r;
}

/// Root-vector shorthand: a name over the letters {1..theta}.
///
/// Expansion rule, pinned empirically by primitivity of the defining
/// relations (see tests): a leading repeated letter peels off on the left
/// (x_{iiw} = [x_i, x_{iw}]_c, so "221" = [x2,[x2,x1]_c]_c), otherwise a
/// trailing repeated letter brackets off on the right (x_{wjj} =
/// [x_{wj}, x_j]_c, so "122" = [[x1,x2]_c,x2]_c). For names without an
/// adjacent repeat the tie is broken by the convention flag: LeftNested
/// peels the first letter, RightIterated brackets off the last.
inline NCPoly root_vector(const std::string& name, const BraidCtx& ctx)
{
    if (name.empty())
        throw AlgebraError("empty root-vector name");
    std::vector<unsigned> letters;
    for (char ch : name) {
        if (ch < '1' || ch > '9')
            throw AlgebraError("malformed root-vector name: " + name);
        unsigned l = static_cast<unsigned>(ch - '1');
        if (l >= ctx.fc.theta)
            throw AlgebraError("root-vector letter out of range: " + name);
        letters.push_back(l);
    }
    if (letters.size() == 1)
        return ctx.fc.gen(letters[0]);
    auto left_peel = [&]() {
        NCPoly inner = root_vector(name.substr(1), ctx);
        return braided_commutator(ctx.fc.gen(letters.front()), inner, ctx);
    };
    auto right_bracket = [&]() {
        NCPoly inner = root_vector(name.substr(0, name.size() - 1), ctx);
        return braided_commutator(inner, ctx.fc.gen(letters.back()), ctx);
    };
    if (letters[0] == letters[1])
        return left_peel();
    if (letters[letters.size() - 1] == letters[letters.size() - 2])
        return right_bracket();
    return ctx.conv == RootConvention::LeftNested ? left_peel() : right_bracket();
}

} // namespace nichols

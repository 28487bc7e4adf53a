#pragma once

#include "nichols/smash.hpp"

#include <map>
#include <optional>

namespace nichols {

/// ---- group-algebra block inversion -------------------------------------
///
/// A "block" is an element of kGamma, stored as exponent-vector -> scalar.
/// Inversion is performed inside the subgroup generated by the support
/// (small in practice) by exact Gaussian elimination; an element is a unit
/// of kGamma iff it is a unit there.
using GroupBlock = std::map<GrpElem, CycNum>;

inline std::optional<GroupBlock> invert_group_block(const GroupBlock& C,
                                                    const std::vector<unsigned>& orders)
{
    if (C.empty())
        return std::nullopt;
    if (C.size() == 1) {
        const auto& [g, c] = *C.begin();
        if (c.is_zero())
            return std::nullopt;
        return GroupBlock{{grp_inv(g, orders), c.inverse()}};
    }
    // enumerate the subgroup H generated by the support
    std::vector<GrpElem> elems{grp_id(orders)};
    std::map<GrpElem, std::size_t> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& [s, c] : C) {
            (void)c;
            GrpElem n = grp_mul(elems[i], s, orders);
            if (index.emplace(n, elems.size()).second)
                elems.push_back(n);
        }
    const std::size_t n = elems.size();
    // solve C * X = 1 in kH: for each h, sum_b C(h b^{-1}) x_b = [h = e]
    std::vector<std::vector<CycNum>> m(n, std::vector<CycNum>(n + 1, CycNum(0L)));
    for (std::size_t hi = 0; hi < n; ++hi) {
        for (std::size_t bi = 0; bi < n; ++bi) {
            GrpElem a = grp_mul(elems[hi], grp_inv(elems[bi], orders), orders);
            auto it = C.find(a);
            if (it != C.end())
                m[hi][bi] = it->second;
        }
        m[hi][n] = hi == 0 ? CycNum(1L) : CycNum(0L);
    }
    // Gaussian elimination
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            continue;
        std::swap(m[piv], m[row]);
        CycNum inv = m[row][col].inverse();
        for (std::size_t j = col; j <= n; ++j)
            m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            CycNum f = m[i][col];
            for (std::size_t j = col; j <= n; ++j)
                m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
    }
    // read off solution; inconsistent rows => singular
    GroupBlock X;
    std::vector<CycNum> x(n, CycNum(0L));
    std::size_t r = 0;
    std::vector<bool> solved(n, false);
    for (std::size_t col = 0; col < n; ++col) {
        if (r < n && !m[r][col].is_zero()) {
            x[col] = m[r][n];
            solved[col] = true;
            ++r;
        }
    }
    for (std::size_t i = r; i < n; ++i)
        if (!m[i][n].is_zero())
            return std::nullopt;
    // verify (guards against free variables set to zero breaking C*X = 1)
    GroupBlock prod;
    for (const auto& [a, ca] : C)
        for (std::size_t bi = 0; bi < n; ++bi) {
            if (x[bi].is_zero())
                continue;
            GrpElem h = grp_mul(a, elems[bi], orders);
            auto [it, ins] = prod.try_emplace(h, ca * x[bi]);
            if (!ins)
                it->second = it->second + ca * x[bi];
        }
    for (const auto& [h, c] : prod) {
        bool ise = grp_is_id(h);
        if ((ise && !(c == CycNum(1L))) || (!ise && !c.is_zero()))
            return std::nullopt;
    }
    for (std::size_t bi = 0; bi < n; ++bi)
        if (!x[bi].is_zero())
            X.emplace(elems[bi], x[bi]);
    return X;
}

/// ---- Groebner basis over T(V)#kGamma -----------------------------------
///
/// Rules are normalized so the leading term is (w, e) with coefficient 1;
/// rewriting is keyed purely on the x-word w. This is sound for two-sided
/// ideals whose generators are conjugation-homogeneous (every term of a
/// generator has the same character gamma |-> chi_{deg w}(gamma)): then
/// gamma r gamma^{-1} is a scalar multiple of r, so left group factors in
/// ideal combinations can always be pushed to the right.
struct GBasis {
    const SmashCtx* ctx = nullptr;
    unsigned bound = 0;
    std::vector<SmashPoly> rules;   // monic, leading key (w, identity)
    std::vector<Word> leads;
    bool complete = false;
    std::vector<long> hilbert;      // irreducible x-word counts per degree

    std::optional<long> dimension() const
    {
        if (!complete)
            return std::nullopt;
        long d = 0;
        for (long h : hilbert)
            d += h;
        return d;
    }

    const std::vector<Word>& leading_word_set() const
    {
        if (!complete)
            throw AlgebraError("leading_word_set on an incomplete basis");
        return leads;
    }
};

namespace detail {

/// (s, e) * R * (t, delta), where R has arbitrary terms. The only scalar
/// produced is the commutation twist chi_{deg t}(gamma') per term.
inline SmashPoly sandwich(const Word& s, const SmashPoly& R, const Word& t,
                          const GrpElem& delta, const SmashCtx& ctx)
{
    SmashPoly r = ctx.zero();
    MultiDegree dt = multidegree(t, ctx.bc.fc.theta);
    for (const auto& [k, c] : R) {
        CycNum tw = ctx.real.chi_deg(dt, k.second);
        Word w;
        w.reserve(s.size() + k.first.size() + t.size());
        w.insert(w.end(), s.begin(), s.end());
        w.insert(w.end(), k.first.begin(), k.first.end());
        w.insert(w.end(), t.begin(), t.end());
        smash_add_term(r, {std::move(w), grp_mul(k.second, delta, ctx.real.group_orders)},
                       tw * c, ctx);
    }
    return r;
}

inline std::optional<std::size_t> find_reduction(const Word& u, const std::vector<Word>& leads,
                                                 const std::vector<bool>& alive,
                                                 std::size_t& pos_out)
{
    for (std::size_t i = 0; i < leads.size(); ++i) {
        if (!alive[i])
            continue;
        if (auto p = find_factor(u, leads[i])) {
            pos_out = *p;
            return i;
        }
    }
    return std::nullopt;
}

inline SmashPoly normal_form_impl(SmashPoly work, const std::vector<SmashPoly>& rules,
                                  const std::vector<Word>& leads,
                                  const std::vector<bool>& alive, const SmashCtx& ctx)
{
    SmashPoly out = ctx.zero();
    while (!work.empty()) {
        Word u = work.rbegin()->first.first;
        std::size_t pos = 0;
        auto ri = find_reduction(u, leads, alive, pos);
        // collect the whole block at x-word u
        std::vector<std::pair<GrpElem, Coef>> block;
        for (auto it = work.rbegin(); it != work.rend() && it->first.first == u; ++it)
            block.emplace_back(it->first.second, it->second);
        if (!ri) {
            for (auto& [g, c] : block) {
                out.emplace(SmashKey{u, g}, c);
                work.erase({u, std::move(g)});
            }
            continue;
        }
        const Word& w = leads[*ri];
        Word s(u.begin(), u.begin() + static_cast<long>(pos));
        Word t(u.begin() + static_cast<long>(pos + w.size()), u.end());
        for (const auto& [g, c] : block)
            smash_add_scaled(work, sandwich(s, rules[*ri], t, g, ctx), -c, ctx);
        // the (u, *) block cancels exactly: rule lead is (w, e) with coef 1
    }
    return out;
}

} // namespace detail

inline SmashPoly normal_form(const SmashPoly& p, const GBasis& G)
{
    std::vector<bool> alive(G.rules.size(), true);
    return detail::normal_form_impl(p, G.rules, G.leads, alive, *G.ctx);
}

/// Character of conjugation gamma . r . gamma^{-1} = chi_r(gamma) r, as its
/// values on the group generators; nullopt if r is not homogeneous for it.
inline std::optional<std::vector<CycNum>> conj_character(const SmashPoly& p, const SmashCtx& ctx)
{
    std::optional<std::vector<CycNum>> chi;
    for (const auto& [k, c] : p) {
        (void)c;
        MultiDegree d = multidegree(k.first, ctx.bc.fc.theta);
        std::vector<CycNum> v;
        for (std::size_t g = 0; g < ctx.real.rank(); ++g) {
            GrpElem gen(ctx.real.rank(), 0);
            gen[g] = 1;
            v.push_back(ctx.real.chi_deg(d, gen));
        }
        if (!chi)
            chi = std::move(v);
        else if (!(*chi == v))
            return std::nullopt;
    }
    return chi;
}

/// Truncated two-sided Buchberger over T(V)#kGamma (pure T(V) when the
/// realization has group rank 0). Deterministic: pending S-polynomials are
/// processed lowest degree first, ties by insertion order.
inline GBasis buchberger(const std::vector<SmashPoly>& gens, unsigned bound, const SmashCtx& ctx)
{
    if (ctx.real.rank() > 0)
        for (const auto& g : gens)
            if (!g.empty() && !conj_character(g, ctx))
                throw AlgebraError("generator is not conjugation-homogeneous: " +
                                   to_string(g, &ctx.bc.fc.lambdas));

    std::vector<SmashPoly> rules;
    std::vector<Word> leads;
    std::vector<bool> alive;

    // pending work: either a ready polynomial or a lazy S-pair descriptor
    // (i, j, s, t) meaning rules[i]*(t,e) - (s,e)*rules[j]
    struct Pending {
        SmashPoly poly;
        bool lazy = false;
        std::size_t i = 0, j = 0;
        Word s, t;
    };
    using QKey = std::pair<unsigned, unsigned long>; // (degree, sequence)
    std::map<QKey, Pending> pending;
    unsigned long seq = 0;
    auto enqueue = [&](SmashPoly p) {
        if (p.empty())
            return;
        unsigned d = static_cast<unsigned>(p.rbegin()->first.first.size());
        if (d > bound)
            return;
        pending.emplace(QKey{d, seq++}, Pending{std::move(p)});
    };
    auto enqueue_pair = [&](std::size_t i, std::size_t j, Word s, Word t, unsigned d) {
        if (d > bound)
            return;
        pending.emplace(QKey{d, seq++},
                        Pending{SmashPoly(SmashLess{&ctx.bc.fc.order}), true, i, j,
                                std::move(s), std::move(t)});
    };
    for (const auto& g : gens)
        enqueue(g);

    const GrpElem e = grp_id(ctx.real.group_orders);
    while (!pending.empty()) {
        auto it = pending.begin();
        Pending p = std::move(it->second);
        pending.erase(it);
        SmashPoly sp =
            p.lazy ? smash_sub(detail::sandwich(Word{}, rules[p.i], p.t, e, ctx),
                               detail::sandwich(p.s, rules[p.j], Word{}, e, ctx), ctx)
                   : std::move(p.poly);
        SmashPoly r = detail::normal_form_impl(std::move(sp), rules, leads, alive, ctx);
        if (r.empty())
            continue;
        // normalize: leading x-word block must be an invertible kGamma element
        Word w = r.rbegin()->first.first;
        GroupBlock C;
        for (auto bit = r.rbegin(); bit != r.rend() && bit->first.first == w; ++bit) {
            if (!bit->second.is_constant())
                throw AlgebraError("leading coefficient involves deformation parameters "
                                   "(obstruction): " + to_string(r, &ctx.bc.fc.lambdas));
            C.emplace(bit->first.second, bit->second.constant_part());
        }
        auto Cinv = invert_group_block(C, ctx.real.group_orders);
        if (!Cinv)
            throw AlgebraError("leading group-algebra block is a zero divisor: " +
                               to_string(r, &ctx.bc.fc.lambdas));
        SmashPoly R = ctx.zero();
        for (const auto& [k, c] : r)
            for (const auto& [d, x] : *Cinv)
                smash_add_term(R, {k.first, grp_mul(k.second, d, ctx.real.group_orders)},
                               c * Coef(x), ctx);
        // retire rules whose lead strictly contains the new lead; requeue them
        for (std::size_t j = 0; j < rules.size(); ++j)
            if (alive[j] && leads[j] != w && find_factor(leads[j], w)) {
                alive[j] = false;
                enqueue(rules[j]);
            }
        std::size_t idx = rules.size();
        rules.push_back(std::move(R));
        leads.push_back(w);
        alive.push_back(true);
        // enqueue overlap ambiguities with every alive rule (including self)
        for (std::size_t j = 0; j <= idx; ++j) {
            if (!alive[j])
                continue;
            for (int dir = 0; dir < 2; ++dir) {
                if (dir == 1 && j == idx)
                    break; // self-overlaps already covered at dir 0
                std::size_t i1 = dir == 0 ? idx : j;
                std::size_t i2r = dir == 0 ? j : idx;
                const Word& w1 = leads[i1];
                const Word& w2 = leads[i2r];
                std::size_t maxo = std::min(w1.size(), w2.size()) - 1;
                for (std::size_t o = 1; o <= maxo; ++o) {
                    bool match = true;
                    for (std::size_t i2 = 0; i2 < o; ++i2)
                        if (w1[w1.size() - o + i2] != w2[i2]) {
                            match = false;
                            break;
                        }
                    if (!match)
                        continue;
                    Word s(w1.begin(), w1.end() - static_cast<long>(o));
                    Word t(w2.begin() + static_cast<long>(o), w2.end());
                    unsigned d = static_cast<unsigned>(s.size() + w2.size());
                    enqueue_pair(i1, i2r, std::move(s), std::move(t), d);
                }
            }
        }
    }

    GBasis G;
    G.ctx = &ctx;
    G.bound = bound;
    for (std::size_t j = 0; j < rules.size(); ++j)
        if (alive[j]) {
            G.rules.push_back(std::move(rules[j]));
            G.leads.push_back(std::move(leads[j]));
        }

    // irreducible-x-word counts by prefix extension; a prefix of an
    // irreducible word is irreducible, so a zero count is final
    std::vector<Word> frontier{Word{}};
    G.hilbert.assign(1, 1);
    unsigned consecutive_zero = 0;
    for (unsigned d = 1; d <= bound && consecutive_zero < 2; ++d) {
        std::vector<Word> next;
        for (const auto& pw : frontier)
            for (std::uint8_t l = 0; l < ctx.bc.fc.theta; ++l) {
                Word w = pw;
                w.push_back(l);
                bool red = false;
                for (const auto& lw : G.leads) {
                    if (lw.size() > w.size())
                        continue;
                    // only suffix check needed: interior factors were checked
                    // when the prefix was accepted
                    bool suf = true;
                    for (std::size_t i2 = 0; i2 < lw.size(); ++i2)
                        if (w[w.size() - lw.size() + i2] != lw[i2]) {
                            suf = false;
                            break;
                        }
                    if (suf) {
                        red = true;
                        break;
                    }
                }
                if (!red)
                    next.push_back(std::move(w));
            }
        G.hilbert.push_back(static_cast<long>(next.size()));
        consecutive_zero = next.empty() ? consecutive_zero + 1 : 0;
        frontier = std::move(next);
    }
    G.complete = consecutive_zero >= 2;
    return G;
}

/// Raise the bound until the completion certificate holds or the cap is hit.
inline GBasis complete_basis(const std::vector<SmashPoly>& gens, const SmashCtx& ctx,
                             unsigned initial, unsigned cap = 60)
{
    unsigned b = initial;
    for (;;) {
        GBasis G = buchberger(gens, b, ctx);
        if (G.complete || b >= cap)
            return G;
        b = std::min(cap, b + std::max(4u, b / 2));
    }
}

/// ---- pure-x (braided side) convenience ----------------------------------

/// Realization with trivial group, for Groebner runs inside T(V) itself.
/// Not a valid principal realization (chi_j(g_i) = q_ij cannot hold), so it
/// must not be fed to Hopf-level operations.
inline SmashCtx pure_smash_ctx(const BraidCtx& bc)
{
    SmashCtx ctx;
    ctx.bc = bc;
    ctx.real.braiding = bc.braiding;
    ctx.real.group_orders = {};
    ctx.real.grouplikes.assign(bc.fc.theta, GrpElem{});
    ctx.real.char_values.assign(bc.fc.theta, {});
    return ctx;
}

inline SmashPoly smash_of_nc(const NCPoly& p, const SmashCtx& ctx) { return ctx.embed(p); }

inline NCPoly nc_of_smash(const SmashPoly& p, const SmashCtx& ctx)
{
    NCPoly r = ctx.bc.fc.zero();
    for (const auto& [k, c] : p) {
        if (!grp_is_id(k.second))
            throw AlgebraError("smash element has nontrivial group part");
        add_term(r, k.first, c, ctx.bc.fc.lambdas);
    }
    return r;
}

inline NCPoly normal_form(const NCPoly& p, const GBasis& G)
{
    return nc_of_smash(normal_form(G.ctx->embed(p), G), *G.ctx);
}

/// Braided-primitivity test: Delta(p) - p(x)1 - 1(x)p = 0 modulo
/// I (x) T + T (x) I, with each leg reduced by the basis G of I.
inline bool is_primitive_mod(const NCPoly& p, const GBasis& G)
{
    const BraidCtx& bc = G.ctx->bc;
    LegReduce red = [&](const NCPoly& q) { return normal_form(q, G); };
    NCPoly r = red(p);
    TensorElem d = coproduct(r, bc, red);
    for (const auto& [w, c] : r) {
        tensor_add_term(d, {w, Word{}}, -c, bc.fc.lambdas);
        tensor_add_term(d, {Word{}, w}, -c, bc.fc.lambdas);
    }
    return d.empty();
}

} // namespace nichols

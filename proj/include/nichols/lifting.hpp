#pragma once

#include "nichols/linsolve.hpp"
#include "nichols/ncgb.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

namespace nichols {

/// One defining relation of the Nichols algebra, kept in factored form
/// base^power so that high powers (e.g. x12^12) are only ever expanded
/// under normal-form reduction.
struct CaseRelation {
    std::string name;        // display name, e.g. "x1^3"
    std::string lambda_name; // parameter symbol if the relation is deformable
    NCPoly base;
    unsigned power = 1;
    unsigned stratum = 0;

    std::vector<int> degree(std::size_t theta) const
    {
        MultiDegree d = multidegree(leading_word(base), theta);
        std::vector<int> r(d.begin(), d.end());
        for (auto& x : r)
            x *= static_cast<int>(power);
        return r;
    }
};

/// A braiding together with a concrete realization and a stratified relation
/// set; the lambda ring of ctx.bc.fc holds one symbol per relation that is
/// admissible (chi_r = eps and g_r != 1) in this realization.
struct LiftingCase {
    std::string id;
    SmashCtx ctx;
    std::vector<CaseRelation> rels; // sorted by stratum
    std::vector<int> lambda_of;     // per relation: symbol index or -1 (locked)
    unsigned gb_bound = 24;

    unsigned nstrata() const
    {
        unsigned n = 0;
        for (const auto& r : rels)
            n = std::max(n, r.stratum + 1);
        return n;
    }
};

/// chi_r as its values on the group generators.
inline std::vector<CycNum> chi_values(const Realization& real, const std::vector<int>& deg)
{
    std::vector<CycNum> v;
    MultiDegree d(deg.begin(), deg.end());
    for (std::size_t k = 0; k < real.rank(); ++k) {
        GrpElem gen(real.rank(), 0);
        gen[k] = 1;
        v.push_back(real.chi_deg(d, gen));
    }
    return v;
}

inline bool chi_is_trivial(const std::vector<CycNum>& v)
{
    return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_one(); });
}

/// Fills lambda_of and the lambda ring: relation i gets a symbol iff
/// chi_{r_i} = eps and g_{r_i} != 1 in the case's realization (eqn:mu and
/// eqn:mu2). Must be called once, before solving.
inline void configure_lambdas(LiftingCase& lc)
{
    if (!lc.ctx.bc.fc.lambdas.names.empty())
        throw AlgebraError("lambda ring already configured");
    lc.lambda_of.assign(lc.rels.size(), -1);
    for (std::size_t i = 0; i < lc.rels.size(); ++i) {
        const auto& r = lc.rels[i];
        if (r.lambda_name.empty())
            continue;
        std::vector<int> deg = r.degree(lc.ctx.bc.fc.theta);
        MultiDegree d(deg.begin(), deg.end());
        bool eps = chi_is_trivial(chi_values(lc.ctx.real, deg));
        bool gnt = !grp_is_id(lc.ctx.real.grouplike_of(d));
        if (eps && gnt)
            lc.lambda_of[i] = static_cast<int>(lc.ctx.bc.fc.lambdas.add(r.lambda_name, deg));
    }
}

/// ---- admissibility analysis ----------------------------------------------

/// Existence of a root of unity u with u^{k_i} = v_i for all i, decided by
/// exact arithmetic: with g = gcd(k_i) = sum s_i k_i and w = prod v_i^{s_i},
/// the system is solvable iff w^{k_i/g} = v_i for all i (then any g-th root
/// of w works).
inline bool power_system_solvable(const std::vector<long>& k, const std::vector<CycNum>& v)
{
    if (k.size() != v.size())
        throw AlgebraError("power system shape mismatch");
    long g = 0;
    CycNum w(1L);
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) {
            if (!v[i].is_one())
                return false;
            continue;
        }
        if (g == 0) {
            g = std::abs(k[i]);
            w = k[i] > 0 ? v[i] : v[i].inverse();
            continue;
        }
        // extended gcd of (g, k[i]) with Bezout tracking on (w, v[i])
        long a = g, b = std::abs(k[i]);
        long sa = 1, ta = 0, sb = 0, tb = 1;
        while (b != 0) {
            long q = a / b;
            long a2 = a - q * b;
            long sa2 = sa - q * sb, ta2 = ta - q * tb;
            a = b; sa = sb; ta = tb;
            b = a2; sb = sa2; tb = ta2;
        }
        CycNum vi = k[i] > 0 ? v[i] : v[i].inverse();
        w = w.pow(sa) * vi.pow(ta);
        g = a;
    }
    if (g == 0)
        return true;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != 0 && !(w.pow(k[i] / g) == v[i]))
            return false;
    return true;
}

struct AdmissibilityEntry {
    std::string relation;
    std::vector<int> degree;
    // conditions for chi_r = eps, as textual power conditions on q12/q21
    std::vector<std::string> conditions;
    bool chi_trivial = false;  // in the case's realization
    bool g_nontrivial = false; // in the case's realization
    bool enabled = false;      // both, i.e. lambda_of != -1
    bool realizable = false;   // some q12/q21 split of the braiding admits it
};

struct AdmissibilityReport {
    std::vector<AdmissibilityEntry> entries;
    // pairwise joint realizability over all splits (indices into entries)
    std::vector<std::tuple<std::size_t, std::size_t, bool>> joint;
};

/// Solvability of chi_r = eps over all splits q12*q21 = E with the diagonal
/// entries fixed: unknown u = q21 must satisfy u^{a1} = q22^{-a2} and
/// u^{a2} = E^{a2} q11^{a1} for each relation degree (a1, a2).
inline void chi_conditions(const BraidingMatrix& b, const std::vector<int>& deg,
                           std::vector<long>& k, std::vector<CycNum>& v)
{
    if (deg.size() != 2)
        throw AlgebraError("admissibility analysis requires rank 2");
    CycNum E = b.q[0][1] * b.q[1][0];
    k.push_back(deg[0]);
    v.push_back(b.q[1][1].pow(-deg[1]));
    k.push_back(deg[1]);
    v.push_back(E.pow(deg[1]) * b.q[0][0].pow(deg[0]));
}

inline AdmissibilityReport admissibility(const LiftingCase& lc)
{
    AdmissibilityReport rep;
    const auto& real = lc.ctx.real;
    for (std::size_t i = 0; i < lc.rels.size(); ++i) {
        const auto& r = lc.rels[i];
        AdmissibilityEntry e;
        e.relation = r.name;
        e.degree = r.degree(lc.ctx.bc.fc.theta);
        MultiDegree d(e.degree.begin(), e.degree.end());
        e.chi_trivial = chi_is_trivial(chi_values(real, e.degree));
        e.g_nontrivial = !grp_is_id(real.grouplike_of(d));
        e.enabled = lc.lambda_of[i] >= 0;
        std::vector<long> k;
        std::vector<CycNum> v;
        chi_conditions(real.braiding, e.degree, k, v);
        e.realizable = power_system_solvable(k, v);
        e.conditions.push_back("q21^" + std::to_string(e.degree[0]) + " = " + to_string(v[0]));
        e.conditions.push_back("q12^" + std::to_string(e.degree[1]) + " = " +
                               to_string(real.braiding.q[0][0].pow(-e.degree[0])));
        rep.entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < lc.rels.size(); ++i)
        for (std::size_t j = i + 1; j < lc.rels.size(); ++j) {
            if (!rep.entries[i].realizable || !rep.entries[j].realizable) {
                rep.joint.emplace_back(i, j, false);
                continue;
            }
            std::vector<long> k;
            std::vector<CycNum> v;
            chi_conditions(lc.ctx.real.braiding, rep.entries[i].degree, k, v);
            chi_conditions(lc.ctx.real.braiding, rep.entries[j].degree, k, v);
            rep.joint.emplace_back(i, j, power_system_solvable(k, v));
        }
    return rep;
}

/// ---- solving ---------------------------------------------------------------

namespace detail {

/// Incremental, globally memoized normal forms. Every input polynomial is
/// assumed reduced already, so when a single generator is appended any new
/// redex must end at the last letter; the rewrite cascade recurses through
/// the same memo table, sharing all intermediate reductions across calls.
/// Requires a rule set confluent up to the degrees encountered.
struct NFMemo {
    const GBasis* G; // nullptr = no reduction
    const SmashCtx* ctx;

    struct KeyLess {
        SmashLess kl;
        bool operator()(const std::pair<SmashKey, unsigned>& a,
                        const std::pair<SmashKey, unsigned>& b) const
        {
            if (kl(a.first, b.first))
                return true;
            if (kl(b.first, a.first))
                return false;
            return a.second < b.second;
        }
    };
    std::map<std::pair<SmashKey, unsigned>, SmashPoly, KeyLess> memo;

    NFMemo(const GBasis* g, const SmashCtx& c)
        : G(g), ctx(&c), memo(KeyLess{SmashLess{&c.bc.fc.order}})
    {
    }

    /// NF(mono(k) * x_letter) for a normal key k.
    const SmashPoly& mul_gen(const SmashKey& k, unsigned letter)
    {
        auto mk = std::make_pair(k, letter);
        auto it = memo.find(mk);
        if (it != memo.end())
            return it->second;

        Word u = k.first;
        u.push_back(letter);
        MultiDegree d(ctx->bc.fc.theta, 0);
        d[static_cast<std::size_t>(letter)] = 1;
        Coef c0(ctx->real.chi_deg(d, k.second));

        SmashPoly res = ctx->zero();
        std::size_t hit = G->leads.size();
        for (std::size_t i = 0; i < G->leads.size(); ++i) {
            const Word& w = G->leads[i];
            if (w.size() <= u.size() &&
                std::equal(w.begin(), w.end(), u.end() - static_cast<long>(w.size()))) {
                hit = i;
                break;
            }
        }
        if (hit == G->leads.size()) {
            smash_add_term(res, {std::move(u), k.second}, c0, *ctx);
        } else {
            const Word& w = G->leads[hit];
            Word s(u.begin(), u.end() - static_cast<long>(w.size()));
            const GrpElem e = grp_id(ctx->real.group_orders);
            for (const auto& [rk, rc] : G->rules[hit]) {
                if (rk.first == w) // monic leading term (w, e)
                    continue;
                SmashPoly q = ctx->zero();
                smash_add_term(q, {s, e}, Coef(CycNum(1L)), *ctx);
                for (unsigned ell : rk.first)
                    q = mul_poly_gen(q, ell);
                GrpElem delta = grp_mul(rk.second, k.second, ctx->real.group_orders);
                for (const auto& [qk, qc] : q)
                    smash_add_term(res,
                                   {qk.first,
                                    grp_mul(qk.second, delta, ctx->real.group_orders)},
                                   -(rc * qc) * c0, *ctx);
            }
        }
        return memo.emplace(std::move(mk), std::move(res)).first->second;
    }

    SmashPoly mul_poly_gen(const SmashPoly& p, unsigned letter)
    {
        SmashPoly r = ctx->zero();
        for (const auto& [k, c] : p)
            smash_add_scaled(r, mul_gen(k, letter), c, *ctx);
        return r;
    }

    /// NF(p * mono(kb)) for normal p, folding the word of kb letterwise.
    SmashPoly mul_key(const SmashPoly& p, const SmashKey& kb)
    {
        if (!G)
            return smash_mul(p, ctx->mono(kb), *ctx);
        SmashPoly q = p;
        for (unsigned ell : kb.first)
            q = mul_poly_gen(q, ell);
        if (kb.second != grp_id(ctx->real.group_orders)) {
            SmashPoly r = ctx->zero();
            for (const auto& [k, c] : q)
                smash_add_term(r, {k.first, grp_mul(k.second, kb.second,
                                                    ctx->real.group_orders)},
                               c, *ctx);
            return r;
        }
        return q;
    }
};

} // namespace detail

/// (NF_L (x) NF_R)(Delta(p)) computed letter by letter with incremental
/// memoized leg normal forms; equivalent to hopf_coproduct with per-leg
/// reducers, but rewrite cascades are shared across the whole expansion.
/// A null basis pointer leaves that leg unreduced.
inline SmashTensor hopf_coproduct_nf(const SmashPoly& p, const SmashCtx& ctx, const GBasis* GL,
                                     const GBasis* GR)
{
    detail::NFMemo lmemo(GL, ctx), rmemo(GR, ctx);
    const GrpElem e = grp_id(ctx.real.group_orders);
    auto append_letter = [&](const SmashKey& k, unsigned letter, const GBasis* G,
                             detail::NFMemo& memo) -> SmashPoly {
        if (G)
            return memo.mul_gen(k, letter);
        MultiDegree d(ctx.bc.fc.theta, 0);
        d[static_cast<std::size_t>(letter)] = 1;
        Word w = k.first;
        w.push_back(letter);
        SmashPoly r = ctx.zero();
        smash_add_term(r, {std::move(w), k.second}, Coef(ctx.real.chi_deg(d, k.second)), ctx);
        return r;
    };
    SmashTensor acc = smash_tensor_zero(ctx);
    for (const auto& [k, c] : p) {
        SmashTensor cur = smash_tensor_zero(ctx);
        smash_tensor_add(cur, {{Word{}, e}, {Word{}, e}}, Coef(CycNum(1L)), ctx);
        for (auto letter : k.first) {
            const GrpElem& gl = ctx.real.grouplikes[letter];
            SmashTensor nxt = smash_tensor_zero(ctx);
            for (const auto& [kk, cc] : cur) {
                // x_letter (x) 1 branch
                SmashPoly left = append_letter(kk.first, letter, GL, lmemo);
                for (const auto& [lk, lc] : left)
                    smash_tensor_add(nxt, {lk, kk.second}, cc * lc, ctx);
                // g_letter (x) x_letter branch: group append on the left leg
                // carries no twist, the right leg picks one up in the memo
                SmashKey lg{kk.first.first,
                            grp_mul(kk.first.second, gl, ctx.real.group_orders)};
                SmashPoly right = append_letter(kk.second, letter, GR, rmemo);
                for (const auto& [rk, rc] : right)
                    smash_tensor_add(nxt, {lg, rk}, cc * rc, ctx);
            }
            cur = std::move(nxt);
        }
        for (const auto& [kk, cc] : cur) {
            SmashTensorKey kg{{kk.first.first,
                               grp_mul(kk.first.second, k.second, ctx.real.group_orders)},
                              {kk.second.first,
                               grp_mul(kk.second.second, k.second, ctx.real.group_orders)}};
            smash_tensor_add(acc, kg, c * cc, ctx);
        }
    }
    return acc;
}

/// base^k with intermediate reduction modulo G (degrees stay bounded by the
/// normal form instead of blowing up in the free algebra); rewrite cascades
/// are shared through an incremental memo.
inline SmashPoly smash_nf_pow(const NCPoly& base, unsigned k, const GBasis& G)
{
    const SmashCtx& ctx = *G.ctx;
    detail::NFMemo memo(&G, ctx);
    SmashPoly b = ctx.embed(base);
    SmashPoly p = ctx.one();
    for (unsigned i = 0; i < k; ++i) {
        SmashPoly r = ctx.zero();
        for (const auto& [kb, cb] : b) {
            SmashPoly t = p;
            for (unsigned ell : kb.first)
                t = memo.mul_poly_gen(t, ell);
            smash_add_scaled(r, t, cb, ctx);
        }
        p = std::move(r);
    }
    return p;
}

/// (NF_L (x) NF_R)(Delta(base^k)), computed by powering the leg-reduced
/// coproduct tensor of base instead of expanding base^k first. This agrees
/// with reducing Delta of the expanded power whenever every generator g of
/// the two leg ideals satisfies (NF_L (x) NF_R)(Delta(g)) = 0 -- which holds
/// by construction for the cleft/Nichols leg pair, and for the lifting/cleft
/// pair as long as all previously solved cleft corrections vanish. A null
/// basis pointer leaves that leg unreduced.
inline SmashTensor nf_coproduct_pow(const NCPoly& base, unsigned k, const SmashCtx& ctx,
                                    const GBasis* GL, const GBasis* GR)
{
    SmashLegReduce redl =
        GL ? SmashLegReduce([GL](const SmashPoly& q) { return normal_form(q, *GL); })
           : SmashLegReduce{};
    SmashLegReduce redr =
        GR ? SmashLegReduce([GR](const SmashPoly& q) { return normal_form(q, *GR); })
           : SmashLegReduce{};
    SmashTensor b = hopf_coproduct(ctx.embed(base), ctx, redl, redr);
    const GrpElem e = grp_id(ctx.real.group_orders);
    SmashTensor p = smash_tensor_zero(ctx);
    smash_tensor_add(p, {{Word{}, e}, {Word{}, e}}, Coef(CycNum(1L)), ctx);
    const bool trace = std::getenv("NICHOLS_TRACE") != nullptr;

    // fused multiply-reduce: incremental memoized normal forms share every
    // rewrite cascade across all leg products of the whole powering
    detail::NFMemo lmemo(GL, ctx), rmemo(GR, ctx);
    std::map<SmashKey, SmashPoly, SmashLess> lcache{SmashLess{&ctx.bc.fc.order}};
    std::map<SmashKey, SmashPoly, SmashLess> rcache{SmashLess{&ctx.bc.fc.order}};
    // the twist depends on the (x, y) split, so the cache holds the twist-free
    // normal form of the product monomial and the twist is returned separately
    auto reduced_prod = [&](std::map<SmashKey, SmashPoly, SmashLess>& cache,
                            detail::NFMemo& memo, const SmashKey& x, const SmashKey& y,
                            CycNum& twist) -> const SmashPoly& {
        SmashPoly prod = smash_mul(ctx.mono(x), ctx.mono(y), ctx);
        if (prod.size() != 1)
            throw AlgebraError("monomial product is not a monomial");
        const SmashKey& key = prod.begin()->first;
        twist = ctx.real.chi_deg(multidegree(y.first, ctx.bc.fc.theta), x.second);
        auto it = cache.find(key);
        if (it == cache.end()) {
            SmashPoly nf = memo.mul_key(ctx.mono(x), y);
            if (!(twist == CycNum(1L))) {
                CycNum inv = CycNum(1L) / twist;
                SmashPoly scaled = ctx.zero();
                smash_add_scaled(scaled, nf, Coef(inv), ctx);
                nf = std::move(scaled);
            }
            it = cache.emplace(key, std::move(nf)).first;
        }
        return it->second;
    };

    for (unsigned i = 0; i < k; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        SmashTensor r = smash_tensor_zero(ctx);
        for (const auto& [kp, cp] : p)
            for (const auto& [kb, cb] : b) {
                CycNum tl, tr;
                const SmashPoly& left = reduced_prod(lcache, lmemo, kp.first, kb.first, tl);
                const SmashPoly& right = reduced_prod(rcache, rmemo, kp.second, kb.second, tr);
                Coef c = (cp * cb) * Coef(tl * tr);
                for (const auto& [kl, cl] : left)
                    for (const auto& [kr, cr] : right)
                        smash_tensor_add(r, {kl, kr}, c * (cl * cr), ctx);
            }
        p = std::move(r);
        if (trace)
            std::cerr << "[trace]     pow step " << (i + 1) << "/" << k << ": " << p.size()
                      << " terms, "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count()
                      << " s\n";
    }
    return p;
}

/// Irreducible words (no leading word of G as a factor) with componentwise
/// multidegree bound and total degree bound, by prefix extension.
inline std::vector<Word> irreducible_words_bounded(const GBasis& G, const std::vector<int>& dmax,
                                                   unsigned total_max)
{
    const SmashCtx& ctx = *G.ctx;
    std::vector<Word> out, frontier{Word{}};
    out.push_back(Word{});
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            if (w.size() >= total_max)
                continue;
            for (std::uint8_t l = 0; l < ctx.bc.fc.theta; ++l) {
                Word u = w;
                u.push_back(l);
                MultiDegree d = multidegree(u, ctx.bc.fc.theta);
                bool ok = true;
                for (std::size_t t = 0; t < d.size(); ++t)
                    if (d[t] > dmax[t])
                        ok = false;
                if (!ok)
                    continue;
                bool red = false;
                for (const auto& lead : G.leads)
                    if (find_factor(u, lead)) {
                        red = true;
                        break;
                    }
                if (red)
                    continue;
                next.push_back(u);
                out.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// Lambda monomials over the given symbols with exact Z^theta degree target.
inline std::vector<LambdaMono> lambda_monos_of_degree(const LambdaRing& ring,
                                                      const std::vector<int>& target)
{
    std::vector<LambdaMono> out;
    LambdaMono cur{};
    std::vector<int> rem = target;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
            if (!ring.killed(cur))
                out.push_back(cur);
            // keep exploring: later symbols must stay zero for exact match
        }
        if (i >= ring.names.size())
            return;
        rec(i + 1);
        // use symbol i one more time if it fits
        bool fits = true;
        for (std::size_t t = 0; t < rem.size(); ++t)
            if (ring.degrees[i][t] > rem[t])
                fits = false;
        if (fits && cur[i] < 255) {
            for (std::size_t t = 0; t < rem.size(); ++t)
                rem[t] -= ring.degrees[i][t];
            ++cur[i];
            rec(i);
            --cur[i];
            for (std::size_t t = 0; t < rem.size(); ++t)
                rem[t] += ring.degrees[i][t];
        }
    };
    rec(0);
    // dedupe (the recursion can revisit the zero-remainder state)
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Result of processing one relation.
struct RelationResult {
    std::string name;
    int lambda = -1;
    SmashPoly cleft_rel;        // r' - lambda_r, generator of the cleft ideal
    SmashPoly cleft_correction; // r' - r (zero for most relations)
    SmashPoly lift_rel;         // rtilde - lambda_r(1 - g_r), generator of M
    SmashPoly lift_correction;  // s_r = rtilde - NF_M(r)
};

struct CaseRun {
    AdmissibilityReport adm;
    std::vector<RelationResult> results;
    std::vector<SmashPoly> cleft_gens;   // final cleft ideal generators
    std::vector<SmashPoly> lift_gens;    // final lifting ideal generators
    std::vector<SmashPoly> nichols_gens; // undeformed ideal generators
};

namespace detail {

/// Stage timing to stderr when NICHOLS_TRACE is set in the environment.
struct Trace {
    const char* label;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    explicit Trace(const char* l) : label(l) {}
    ~Trace()
    {
        if (std::getenv("NICHOLS_TRACE"))
            std::cerr << "[trace] " << label << ": "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count()
                      << " s\n";
    }
};

/// The coaction defect of the cleft side for a candidate p against a target
/// right column: (NF_C (x) NF_N)(Delta(p)) - NF_C(p)(x)1 - g_r(x)target.
/// For the relation itself the target is the lambda-free image of r in the
/// undeformed quotient; for ansatz monomials it is zero.
inline SmashTensor cleft_defect(const SmashPoly& p, const SmashPoly& target, const GrpElem& gr,
                                const GBasis& C, const GBasis& N, const SmashCtx& ctx)
{
    SmashTensor t = hopf_coproduct_nf(p, ctx, &C, &N);
    const GrpElem e = grp_id(ctx.real.group_orders);
    for (const auto& [k, c] : normal_form(p, C))
        smash_tensor_add(t, {k, {Word{}, e}}, -c, ctx);
    for (const auto& [k, c] : target)
        smash_tensor_add(t, {{Word{}, gr}, k}, -c, ctx);
    return t;
}

} // namespace detail

/// Step (1) of the algorithm for one relation: find the section image
/// r' = r + correction with (id (x) pi) Delta(r') = r' (x) 1 + g_r (x) r,
/// by undetermined coefficients over irreducible words of matching
/// chi-character and lambda-monomials of complementary degree.
inline SmashPoly cleft_correction_for(const LiftingCase& lc, std::size_t ri, const GBasis& C,
                                      const GBasis& N, const SmashPoly& rhat_c)
{
    const SmashCtx& ctx = lc.ctx;
    const LambdaRing& ring = ctx.bc.fc.lambdas;
    const CaseRelation& rel = lc.rels[ri];
    std::vector<int> deg = rel.degree(ctx.bc.fc.theta);
    MultiDegree dmd(deg.begin(), deg.end());
    GrpElem gr = ctx.real.grouplike_of(dmd);

    SmashPoly rhat_n = smash_nf_pow(rel.base, rel.power, N);
    SmashTensor rhs = nf_coproduct_pow(rel.base, rel.power, ctx, &C, &N);
    const GrpElem id = grp_id(ctx.real.group_orders);
    for (const auto& [k, c] : rhat_c)
        smash_tensor_add(rhs, {k, {Word{}, id}}, -c, ctx);
    for (const auto& [k, c] : rhat_n)
        smash_tensor_add(rhs, {{Word{}, gr}, k}, -c, ctx);
    if (rhs.empty())
        return ctx.zero();

    // ansatz: (word w, lambda monomial mu) with deg w + deg mu = deg r,
    // |w| < |deg r|, chi_w = chi_r
    std::vector<CycNum> chir = chi_values(ctx.real, deg);
    unsigned total = static_cast<unsigned>(std::accumulate(deg.begin(), deg.end(), 0));
    std::vector<std::pair<Word, LambdaMono>> ansatz;
    for (const auto& w : irreducible_words_bounded(N, deg, total - 1)) {
        MultiDegree dw = multidegree(w, ctx.bc.fc.theta);
        if (!(chi_values(ctx.real, std::vector<int>(dw.begin(), dw.end())) == chir))
            continue;
        std::vector<int> gap(deg.size());
        bool nz = false;
        for (std::size_t t = 0; t < deg.size(); ++t) {
            gap[t] = deg[t] - dw[t];
            if (gap[t] != 0)
                nz = true;
        }
        if (!nz)
            continue; // mu would be 1: that is the relation itself
        for (const auto& mu : lambda_monos_of_degree(ring, gap))
            ansatz.emplace_back(w, mu);
    }

    // assemble the linear system: rows indexed by (tensor key, lambda mono)
    struct RowKeyLess {
        const WordOrder* order;
        bool operator()(const std::pair<SmashTensorKey, LambdaMono>& a,
                        const std::pair<SmashTensorKey, LambdaMono>& b) const
        {
            SmashTensorLess l{order};
            if (l(a.first, b.first))
                return true;
            if (l(b.first, a.first))
                return false;
            return a.second < b.second;
        }
    };
    std::map<std::pair<SmashTensorKey, LambdaMono>, std::size_t, RowKeyLess> rowof(
        RowKeyLess{&ctx.bc.fc.order});
    std::vector<LinRow> rows;
    std::vector<CycNum> rhsv;
    auto row_index = [&](const SmashTensorKey& k, const LambdaMono& m) {
        auto [it, inserted] = rowof.try_emplace({k, m}, rows.size());
        if (inserted) {
            rows.emplace_back();
            rhsv.emplace_back(0L);
        }
        return it->second;
    };
    for (const auto& [k, c] : rhs)
        for (const auto& [m, v] : c.terms())
            rhsv[row_index(k, m)] = -v;

    const GrpElem e = grp_id(ctx.real.group_orders);
    for (std::size_t col = 0; col < ansatz.size(); ++col) {
        const auto& [w, mu] = ansatz[col];
        SmashPoly pw = ctx.mono({w, e});
        SmashTensor dw = detail::cleft_defect(pw, ctx.zero(), gr, C, N, ctx);
        for (const auto& [k, c] : dw)
            for (const auto& [m, v] : c.terms()) {
                LambdaMono mm = m;
                for (std::size_t t = 0; t < kMaxLambda; ++t)
                    mm[t] = static_cast<std::uint8_t>(mm[t] + mu[t]);
                if (ring.killed(mm))
                    continue;
                std::size_t r0 = row_index(k, mm);
                auto [it, ins] = rows[r0].try_emplace(col, v);
                if (!ins)
                    it->second = it->second + v;
            }
    }

    auto sol = solve_linear(rows, rhsv, ansatz.size());
    if (!sol)
        throw AlgebraError("no cleft correction in the ansatz space for " + rel.name);
    SmashPoly corr = ctx.zero();
    for (std::size_t col = 0; col < ansatz.size(); ++col) {
        if ((*sol)[col].is_zero())
            continue;
        const auto& [w, mu] = ansatz[col];
        smash_add_term(corr, {w, e}, Coef::term(mu, (*sol)[col]), ctx);
    }
    return corr;
}

/// Step (2): read off rtilde from rtilde (x) 1 = delta_i(r') - g_r (x) r',
/// with the left tensor legs reduced modulo the lifting ideal M_i and the
/// right legs modulo the cleft ideal C_i.
inline SmashPoly lift_relation_for(const LiftingCase& lc, std::size_t ri, const GBasis& M,
                                   const GBasis& C, const SmashPoly& rprime, bool can_power)
{
    const SmashCtx& ctx = lc.ctx;
    const CaseRelation& rel = lc.rels[ri];
    std::vector<int> deg = rel.degree(ctx.bc.fc.theta);
    MultiDegree dmd(deg.begin(), deg.end());
    GrpElem gr = ctx.real.grouplike_of(dmd);

    // powering the reduced coproduct is only exact when all solved cleft
    // corrections vanish (see nf_coproduct_pow)
    SmashTensor t = can_power ? nf_coproduct_pow(rel.base, rel.power, ctx, &M, &C)
                              : hopf_coproduct_nf(rprime, ctx, &M, &C);
    for (const auto& [k, c] : normal_form(rprime, C))
        smash_tensor_add(t, {{Word{}, gr}, k}, -c, ctx);

    SmashPoly rtilde = ctx.zero();
    const GrpElem e = grp_id(ctx.real.group_orders);
    for (const auto& [k, c] : t) {
        if (k.second.first.empty() && grp_is_id(k.second.second)) {
            smash_add_term(rtilde, k.first, c, ctx);
            continue;
        }
        throw AlgebraError("lifting readout for " + rel.name +
                           " left a nontrivial right tensor leg: " + to_string(k.second));
    }
    return rtilde;
}

/// Runs the full stratified algorithm for a case, producing the cleft and
/// lifting ideal generators with symbolic lambda coefficients.
inline CaseRun run_case(const LiftingCase& lc)
{
    const SmashCtx& ctx = lc.ctx;
    const GrpElem e = grp_id(ctx.real.group_orders);
    CaseRun out;
    out.adm = admissibility(lc);

    bool corrections_zero = true;
    unsigned maxdeg = 0;
    for (const auto& r : lc.rels) {
        std::vector<int> d = r.degree(ctx.bc.fc.theta);
        maxdeg = std::max(maxdeg,
                          static_cast<unsigned>(std::accumulate(d.begin(), d.end(), 0)));
    }

    auto partial_basis = [&](const std::vector<SmashPoly>& gens) {
        if (gens.empty()) {
            GBasis G;
            G.ctx = &lc.ctx;
            G.bound = maxdeg;
            return G;
        }
        return buchberger(gens, maxdeg, ctx);
    };

    for (unsigned st = 0; st < lc.nstrata(); ++st) {
        detail::Trace tstr("stratum");
        GBasis N, C, M;
        {
            detail::Trace t("  partial bases");
            N = partial_basis(out.nichols_gens);
            C = partial_basis(out.cleft_gens);
            M = partial_basis(out.lift_gens);
        }
        for (std::size_t ri = 0; ri < lc.rels.size(); ++ri) {
            const CaseRelation& rel = lc.rels[ri];
            if (rel.stratum != st)
                continue;
            RelationResult rr;
            rr.name = rel.name;
            rr.lambda = lc.lambda_of[ri];
            Coef lam = rr.lambda >= 0 ? Coef::symbol(static_cast<unsigned>(rr.lambda)) : Coef();
            std::vector<int> deg = rel.degree(ctx.bc.fc.theta);
            MultiDegree dmd(deg.begin(), deg.end());
            GrpElem gr = ctx.real.grouplike_of(dmd);

            SmashPoly rhat_c, rprime, rhat_m;
            {
                detail::Trace t("  cleft step");
                rhat_c = smash_nf_pow(rel.base, rel.power, C);
                rr.cleft_correction = cleft_correction_for(lc, ri, C, N, rhat_c);
                rprime = smash_add(rhat_c, rr.cleft_correction, ctx);
                rr.cleft_rel = rprime;
                smash_add_term(rr.cleft_rel, {Word{}, e}, -lam, ctx);
            }
            {
                detail::Trace t("  lift step");
                rr.lift_rel = lift_relation_for(
                    lc, ri, M, C, rprime, corrections_zero && rr.cleft_correction.empty());
            }
            if (!rr.cleft_correction.empty())
                corrections_zero = false;
            {
                detail::Trace t("  rhat_m");
                rhat_m = smash_nf_pow(rel.base, rel.power, M);
            }
            rr.lift_correction = smash_sub(rr.lift_rel, rhat_m, ctx);
            smash_add_term(rr.lift_rel, {Word{}, e}, -lam, ctx);
            smash_add_term(rr.lift_rel, {Word{}, gr}, lam, ctx);

            out.results.push_back(std::move(rr));
            out.cleft_gens.push_back(out.results.back().cleft_rel);
            out.lift_gens.push_back(out.results.back().lift_rel);
            out.nichols_gens.push_back(smash_nf_pow(rel.base, rel.power, N));
        }
    }
    return out;
}

/// Generators of the undeformed (Nichols) ideal in the smash product,
/// stratum by stratum: each power relation is normal-formed against the
/// partial basis of the earlier strata so high powers never expand freely.
inline std::vector<SmashPoly> nichols_generators(const LiftingCase& lc)
{
    const SmashCtx& ctx = lc.ctx;
    unsigned maxdeg = 0;
    for (const auto& r : lc.rels) {
        std::vector<int> d = r.degree(ctx.bc.fc.theta);
        maxdeg = std::max(maxdeg,
                          static_cast<unsigned>(std::accumulate(d.begin(), d.end(), 0)));
    }
    std::vector<SmashPoly> gens;
    for (unsigned st = 0; st < lc.nstrata(); ++st) {
        GBasis N;
        if (gens.empty()) {
            N.ctx = &lc.ctx;
            N.bound = maxdeg;
        } else {
            N = buchberger(gens, maxdeg, ctx);
        }
        for (const auto& rel : lc.rels)
            if (rel.stratum == st)
                gens.push_back(smash_nf_pow(rel.base, rel.power, N));
    }
    return gens;
}

/// Specializes the lambda symbols of every generator to field values.
inline std::vector<SmashPoly> specialize_gens(const std::vector<SmashPoly>& gens,
                                              const std::vector<CycNum>& values,
                                              const SmashCtx& ctx)
{
    std::vector<SmashPoly> out;
    for (const auto& g : gens) {
        SmashPoly p = ctx.zero();
        for (const auto& [k, c] : g) {
            CycNum v = c.specialize(values);
            if (!v.is_zero())
                smash_add_term(p, k, Coef(v), ctx);
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Flatness: the specialized quotient has the same dimension and the same
/// leading-word set as the undeformed one.
inline bool flatness_check(const std::vector<SmashPoly>& specialized, const GBasis& undeformed,
                           const SmashCtx& ctx, unsigned cap = 60)
{
    if (!undeformed.complete)
        throw AlgebraError("flatness_check needs a complete undeformed basis");
    GBasis G = complete_basis(specialized, ctx, undeformed.bound, cap);
    if (!G.complete)
        return false;
    if (G.dimension() != undeformed.dimension())
        return false;
    std::vector<Word> a = G.leads, b = undeformed.leads;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// Hopf-ideal verification: every generator m of the (specialized) ideal
/// satisfies (pi (x) pi)(Delta(m)) = 0 and S(m) -> 0 modulo the complete
/// basis G of the ideal.
inline bool hopf_ideal_check(const std::vector<SmashPoly>& gens, const GBasis& G)
{
    if (!G.complete)
        throw AlgebraError("hopf_ideal_check needs a complete basis");
    const SmashCtx& ctx = *G.ctx;
    for (const auto& m : gens) {
        if (!hopf_coproduct_nf(m, ctx, &G, &G).empty())
            return false;
        if (!normal_form(antipode(m, ctx), G).empty())
            return false;
    }
    return true;
}

} // namespace nichols

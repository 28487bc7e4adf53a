#include "nichols/lifting.hpp"
#include <iostream>

using namespace nichols;

static BraidCtx make_bc(CycNum q11, CycNum q12, CycNum q21, CycNum q22)
{
    BraidCtx bc;
    bc.fc.theta = 2;
    bc.fc.order = WordOrder::natural(2);
    bc.braiding.theta = 2;
    bc.braiding.q = {{q11, q12}, {q21, q22}};
    bc.braiding.validate();
    return bc;
}

static Realization make_real(const BraidingMatrix& b, unsigned m1, unsigned m2)
{
    Realization r;
    r.braiding = b;
    r.group_orders = {m1, m2};
    r.grouplikes = {{1, 0}, {0, 1}};
    r.char_values = {{b.q[0][0], b.q[1][0]}, {b.q[0][1], b.q[1][1]}};
    r.validate();
    return r;
}

static NCPoly power(const NCPoly& p, unsigned n, const FreeCtx& fc)
{
    NCPoly r = fc.one();
    for (unsigned i = 0; i < n; ++i)
        r = poly_mul(r, p, fc);
    return r;
}

int main()
{
    // ufo7b setup
    CycNum z = CycNum::root(12, 1);
    BraidCtx bc = make_bc(z.pow(4), CycNum(1L), z.pow(11), CycNum(-1L));
    LiftingCase lc;
    lc.ctx.bc = bc;
    lc.ctx.real = make_real(bc.braiding, 12, 12);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    lc.rels = {{"x1^3", "l1", x1, 3, 0}, {"x2^2", "l2", x2, 2, 0}};
    configure_lambdas(lc);
    const SmashCtx& ctx = lc.ctx;
    const LambdaRing* ring = &ctx.bc.fc.lambdas;
    const GrpElem e = grp_id(ctx.real.group_orders);

    int l1 = ring->index_of("l1"), l2 = ring->index_of("l2");
    SmashPoly c1 = ctx.embed(power(x1, 3, bc.fc));
    if (l1 >= 0) {
        GrpElem g3 = ctx.real.grouplike_of(MultiDegree{3, 0});
        smash_add_term(c1, {Word{}, e}, -Coef::symbol((unsigned)l1), ctx);
    }
    SmashPoly c2 = ctx.embed(power(x2, 2, bc.fc));
    if (l2 >= 0)
        smash_add_term(c2, {Word{}, e}, -Coef::symbol((unsigned)l2), ctx);
    GBasis C = buchberger({c1, c2}, 12, ctx);
    std::cout << "C rules: " << C.rules.size() << " (l1=" << l1 << ", l2=" << l2 << ")\n";

    detail::NFMemo memo(&C, ctx);
    // random-ish words: products of generator monomials
    std::vector<Word> tests = {
        {0}, {1}, {0, 0}, {0, 0, 0}, {1, 1}, {0, 1, 0, 1}, {0, 0, 1, 0, 0, 1},
        {1, 0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 0, 1, 0, 0}, {0, 1, 1, 0, 0, 0, 1}};
    std::vector<GrpElem> grps = {e, GrpElem{1, 0}, GrpElem{2, 3}};
    int bad = 0;
    for (const auto& w : tests)
        for (const auto& g : grps) {
            // build up NF incrementally: start with (prefix via memo) per letter
            SmashPoly inc = ctx.one();
            for (unsigned ell : w)
                inc = memo.mul_poly_gen(inc, ell);
            // append group
            inc = memo.mul_key(inc, {Word{}, g});
            SmashPoly ref = normal_form(ctx.mono({w, g}), C);
            SmashPoly d = smash_sub(inc, ref, ctx);
            if (!d.empty()) {
                ++bad;
                std::cout << "MISMATCH word";
                for (auto ell : w)
                    std::cout << " " << ell;
                std::cout << " grp (" << g[0] << "," << g[1]
                          << ")\n  inc = " << to_string(inc, ring)
                          << "\n  ref = " << to_string(ref, ring) << "\n";
            }
        }
    std::cout << (bad ? "FAILURES: " : "all ok ") << bad << "\n";
    return 0;
}

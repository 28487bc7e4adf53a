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
    CycNum z = CycNum::root(12, 1);
    BraidCtx bc = make_bc(z.pow(4), CycNum(1L), z.pow(11), CycNum(-1L));
    LiftingCase lc;
    lc.ctx.bc = bc;
    lc.ctx.real = make_real(bc.braiding, 12, 12);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    NCPoly br = braided_commutator(
        braided_commutator(root_vector("112", bc), root_vector("12", bc), bc),
        root_vector("12", bc), bc);
    lc.rels = {{"x1^3", "l1", x1, 3, 0},
               {"x2^2", "l2", x2, 2, 0},
               {"br", "l3", br, 1, 1}};
    configure_lambdas(lc);
    const SmashCtx& ctx = lc.ctx;
    const LambdaRing* ring = &ctx.bc.fc.lambdas;
    std::cout << "lambda_of: " << lc.lambda_of[0] << " " << lc.lambda_of[1] << " "
              << lc.lambda_of[2] << "\n";

    // stratum-0 ideals
    int l2 = ring->index_of("l2");
    const GrpElem e = grp_id(ctx.real.group_orders);
    SmashPoly c1 = ctx.embed(power(x1, 3, bc.fc)); // l1 locked
    SmashPoly c2 = ctx.embed(power(x2, 2, bc.fc));
    smash_add_term(c2, {Word{}, e}, -Coef::symbol(static_cast<unsigned>(l2)), ctx);
    GBasis C = buchberger({c1, c2}, 9, ctx);
    GBasis N = buchberger({ctx.embed(power(x1, 3, bc.fc)), ctx.embed(power(x2, 2, bc.fc))}, 9,
                          ctx);

    SmashPoly rhat = normal_form(ctx.embed(br), C);
    std::cout << "NF_C(br) = " << to_string(rhat, ring) << "\n";

    GrpElem gr = ctx.real.grouplike_of(MultiDegree{4, 3});
    SmashTensor d = detail::cleft_defect(rhat, gr, C, N, ctx);
    std::cout << "defect terms: " << d.size() << "\n";
    for (const auto& [k, c] : d)
        std::cout << "  (" << to_string(k.first) << ") (x) (" << to_string(k.second)
                  << ") : " << to_string(c, ring) << "\n";
    return 0;
}

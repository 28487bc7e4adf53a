#include "nichols/ncgb.hpp"
#include <chrono>
#include <iostream>

using namespace nichols;

int main()
{
    CycNum z = CycNum::root(12, 1);
    BraidCtx bc;
    bc.fc.theta = 2;
    bc.fc.order = WordOrder::natural(2);
    bc.braiding.theta = 2;
    bc.braiding.q = {{z.pow(8), z}, {CycNum(1L), z.pow(8)}};

    auto t0 = std::chrono::steady_clock::now();
    SmashCtx ctx = pure_smash_ctx(bc);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    NCPoly x12 = root_vector("12", bc);
    CycNum mu = (CycNum(1L) + z + z.pow(2)) * z.pow(4) * bc.braiding.q[0][1];
    NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                         poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc), bc.fc);
    auto cube = [&](const NCPoly& p) { return poly_mul(p, poly_mul(p, p, bc.fc), bc.fc); };
    std::vector<SmashPoly> g0 = {ctx.embed(cube(x1)), ctx.embed(cube(x2)), ctx.embed(br)};
    GBasis G0 = complete_basis(g0, ctx, 10, 60);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "stratum0: complete=" << G0.complete << " dim=" << G0.dimension().value_or(-1)
              << " (" << std::chrono::duration<double, std::milli>(t1 - t0).count() << " ms)\n";

    // x12^12 with reduce-as-you-go
    NCPoly p = bc.fc.one();
    for (int i = 0; i < 12; ++i)
        p = normal_form(poly_mul(p, x12, bc.fc), G0);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << "x12^12 nf terms=" << p.size() << " ("
              << std::chrono::duration<double, std::milli>(t2 - t1).count() << " ms)\n";

    std::vector<SmashPoly> g1 = g0;
    g1.push_back(ctx.embed(p));
    GBasis G1 = complete_basis(g1, ctx, 34, 60);
    auto t3 = std::chrono::steady_clock::now();
    std::cout << "full: complete=" << G1.complete << " dim=" << G1.dimension().value_or(-1)
              << " bound=" << G1.bound << " ("
              << std::chrono::duration<double, std::milli>(t3 - t2).count() << " ms)\n";
    return 0;
}

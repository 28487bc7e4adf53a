#include "nichols/lifting.hpp"
#include <chrono>
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

int main()
{
    CycNum zeta = CycNum::root(3, 1);
    CycNum q = CycNum::root(4, 1);
    BraidCtx bc = make_bc(zeta, q.pow(3), CycNum(1L), q);
    LiftingCase lc;
    lc.ctx.bc = bc;
    lc.ctx.real = make_real(bc.braiding, 12, 8);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    NCPoly x112 = root_vector("112", bc);
    lc.rels = {{"x1^3", "l1", x1, 3, 0},
               {"x2^4", "l2", x2, 4, 0},
               {"x221", "l3", root_vector("221", bc), 1, 0},
               {"x112^12", "l112", x112, 12, 1}};
    configure_lambdas(lc);
    CaseRun run = run_case(lc);
    const auto& ring = lc.ctx.bc.fc.lambdas;
    std::cout << "lambdas:";
    for (int v : lc.lambda_of)
        std::cout << " " << v;
    std::cout << "\nnsyms=" << ring.names.size() << "\n";
    std::cout << "s112 = " << to_string(run.results[3].lift_correction, &ring) << "\n";

    GBasis N0 = complete_basis(run.nichols_gens, lc.ctx, 38, 60);
    std::cout << "undeformed complete=" << N0.complete << " dim=" << N0.dimension().value_or(-1) << "\n";

    // joint specialization l1 = l2 = l112 = 1
    std::vector<CycNum> vals(ring.names.size(), CycNum(1L));
    auto t0 = std::chrono::steady_clock::now();
    auto sp = specialize_gens(run.lift_gens, vals, lc.ctx);
    bool flat = flatness_check(sp, N0, lc.ctx, 60);
    std::cout << "with s-term: flat=" << flat << " ("
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s)\n";

    // the same generators but with the s-term removed from x112^12
    auto gens2 = run.lift_gens;
    gens2.back() = smash_sub(gens2.back(), run.results[3].lift_correction, lc.ctx);
    auto sp2 = specialize_gens(gens2, vals, lc.ctx);
    bool flat2 = flatness_check(sp2, N0, lc.ctx, 60);
    std::cout << "without s-term: flat=" << flat2 << "\n";

    // hopf ideal check at the same specialization
    GBasis D = complete_basis(sp, lc.ctx, 38, 60);
    std::cout << "deformed dim=" << D.dimension().value_or(-1) << " complete=" << D.complete << "\n";
    std::cout << "hopf_ideal_check(with s) = " << hopf_ideal_check(sp, D) << "\n";
    return 0;
}

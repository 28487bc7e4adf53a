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

static NCPoly power(const NCPoly& p, unsigned n, const FreeCtx& fc)
{
    NCPoly r = fc.one();
    for (unsigned i = 0; i < n; ++i)
        r = poly_mul(r, p, fc);
    return r;
}

static void show(const CaseRun& run, const LiftingCase& lc)
{
    const LambdaRing* ring = &lc.ctx.bc.fc.lambdas;
    for (const auto& e : run.adm.entries)
        std::cout << "  adm " << e.relation << ": chi=" << e.chi_trivial
                  << " g=" << e.g_nontrivial << " enabled=" << e.enabled
                  << " realizable=" << e.realizable << "\n";
    for (const auto& rr : run.results) {
        std::cout << "  [" << rr.name << "] lambda=" << rr.lambda << "\n";
        std::cout << "    cleft: " << to_string(rr.cleft_rel, ring) << "\n";
        if (!rr.cleft_correction.empty())
            std::cout << "    cleft corr: " << to_string(rr.cleft_correction, ring) << "\n";
        std::cout << "    lift:  " << to_string(rr.lift_rel, ring) << "\n";
        std::cout << "    s_r:   " << to_string(rr.lift_correction, ring) << "\n";
    }
}

int main(int argc, char** argv)
{
    CycNum z = CycNum::root(12, 1);
    std::string which = argc > 1 ? argv[1] : "all";

    if (which == "all" || which == "ufo7b") {
        // lambda2-enabling split: q12 = 1, q21 = z^11
        BraidCtx bc = make_bc(z.pow(4), CycNum(1L), z.pow(11), CycNum(-1L));
        LiftingCase lc;
        lc.id = "ufo7b";
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
        auto t0 = std::chrono::steady_clock::now();
        CaseRun run = run_case(lc);
        auto t1 = std::chrono::steady_clock::now();
        std::cout << "ufo7b ("
                  << std::chrono::duration<double>(t1 - t0).count() << " s)\n";
        show(run, lc);

        // golden: [[a112,a12],a12] = l2*q12*(1+z^7) a112 a1^2 g2^2, q12 = 1
        int l2 = lc.ctx.bc.fc.lambdas.index_of("l2");
        SmashPoly golden = lc.ctx.embed(br);
        SmashPoly tail = smash_mul(lc.ctx.embed(poly_mul(root_vector("112", bc),
                                                         power(x1, 2, bc.fc), bc.fc)),
                                   lc.ctx.grp({0, 2}), lc.ctx);
        Coef cf = Coef::symbol(static_cast<unsigned>(l2)) * Coef(CycNum(1L) + z.pow(7));
        smash_add_scaled(golden, tail, -cf, lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1]}, 9, lc.ctx);
        SmashPoly diff = normal_form(smash_sub(run.results[2].lift_rel, golden, lc.ctx), M0);
        std::cout << "  golden match: " << (diff.empty() ? "YES" : "NO") << "\n";
        if (!diff.empty())
            std::cout << "  diff = " << to_string(diff, &lc.ctx.bc.fc.lambdas) << "\n";
    }

    if (which == "all" || which == "ufo7c") {
        // lambda2-enabling split: q12 = 1, q21 = z
        BraidCtx bc = make_bc(z.pow(9), CycNum(1L), z, CycNum(-1L));
        LiftingCase lc;
        lc.id = "ufo7c";
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 12, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly br = braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
        lc.rels = {{"x1^4", "l1", x1, 4, 0},
                   {"x2^2", "l2", x2, 2, 0},
                   {"br", "l3", br, 1, 1}};
        configure_lambdas(lc);
        auto t0 = std::chrono::steady_clock::now();
        CaseRun run = run_case(lc);
        auto t1 = std::chrono::steady_clock::now();
        std::cout << "ufo7c ("
                  << std::chrono::duration<double>(t1 - t0).count() << " s)\n";
        show(run, lc);

        // golden: [a112,a12] = l2*q12*(-2z^7+2z^8-z^11) g2^2 a1^3, q12 = 1
        int l2 = lc.ctx.bc.fc.lambdas.index_of("l2");
        SmashPoly golden = lc.ctx.embed(br);
        SmashPoly tail = smash_mul(lc.ctx.grp({0, 2}), lc.ctx.embed(power(x1, 3, bc.fc)),
                                   lc.ctx);
        CycNum co = CycNum(-2L) * z.pow(7) + CycNum(2L) * z.pow(8) - z.pow(11);
        Coef cf = Coef::symbol(static_cast<unsigned>(l2)) * Coef(co);
        smash_add_scaled(golden, tail, -cf, lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1]}, 8, lc.ctx);
        SmashPoly diff = normal_form(smash_sub(run.results[2].lift_rel, golden, lc.ctx), M0);
        std::cout << "  golden match: " << (diff.empty() ? "YES" : "NO") << "\n";
        if (!diff.empty())
            std::cout << "  diff = " << to_string(diff, &lc.ctx.bc.fc.lambdas) << "\n";
    }
    return 0;
}

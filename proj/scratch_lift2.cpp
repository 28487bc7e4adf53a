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
    for (const auto& rr : run.results) {
        std::cout << "  [" << rr.name << "] lambda="
                  << (rr.lambda >= 0 ? ring->names[rr.lambda] : "locked") << "\n";
        if (!rr.cleft_correction.empty())
            std::cout << "    cleft corr: " << to_string(rr.cleft_correction, ring) << "\n";
        if (!rr.lift_correction.empty())
            std::cout << "    s_r: " << to_string(rr.lift_correction, ring) << "\n";
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int main(int argc, char** argv)
{
    CycNum z = CycNum::root(12, 1);
    CycNum zeta = CycNum::root(3, 1);
    std::string which = argc > 1 ? argv[1] : "all";
    auto want = [&](const std::string& s) { return which == "all" || which == s; };

    if (want("ufo7a")) {
        // lambda2 regime: q12 = 1, q21 = z^9
        BraidCtx bc = make_bc(z.pow(4), CycNum(1L), z.pow(9), z.pow(8));
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 12, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x12 = root_vector("12", bc);
        CycNum mu = z.pow(4) * (CycNum(1L) + z) * bc.braiding.q[0][1] / (CycNum(1L) + z.pow(3));
        NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                             poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc), bc.fc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^3", "l2", x2, 3, 0},
                   {"br", "l22", br, 1, 0}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "ufo7a (" << t.s() << " s)\n";
        show(run, lc);
        bool ok = true;
        for (const auto& rr : run.results)
            ok = ok && rr.cleft_correction.empty() && rr.lift_correction.empty();
        std::cout << "  zero corrections: " << (ok ? "YES" : "NO") << "\n";
        std::cout << "  (2,2) locked: "
                  << (lc.lambda_of[2] == -1 && !run.adm.entries[2].realizable ? "YES" : "NO")
                  << "\n";
        std::cout << "  l1 enabled=" << (lc.lambda_of[0] >= 0)
                  << " l2 enabled=" << (lc.lambda_of[1] >= 0) << "\n";
    }

    if (want("ufo8a")) {
        // lambda2 regime: q12 = 1, q21 = z
        BraidCtx bc = make_bc(z.pow(8), CycNum(1L), z, z.pow(8));
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 24, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x12 = root_vector("12", bc);
        CycNum mu = (CycNum(1L) + z + z.pow(2)) * z.pow(4) * bc.braiding.q[0][1];
        NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                             poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc), bc.fc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^3", "l2", x2, 3, 0},
                   {"br", "l22", br, 1, 0},
                   {"x12^12", "l12", x12, 12, 1}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "ufo8a (" << t.s() << " s)\n";
        show(run, lc);
        bool ok = true;
        for (const auto& rr : run.results)
            ok = ok && rr.cleft_correction.empty() && rr.lift_correction.empty();
        std::cout << "  zero corrections: " << (ok ? "YES" : "NO") << "\n";
        // lift rel for x12^12 must be NF(r) - l12(1 - g1^12 g2^12)
        std::cout << "  l12 enabled=" << (lc.lambda_of[3] >= 0) << "\n";
    }

    if (want("ufo8b")) {
        // lambda2 regime: q12 = 1, q21 = z^3
        BraidCtx bc = make_bc(z.pow(8), CycNum(1L), z.pow(3), CycNum(-1L));
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 24, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x12 = root_vector("12", bc);
        NCPoly br = braided_commutator(braided_commutator(root_vector("112", bc), x12, bc),
                                       x12, bc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^2", "l2", x2, 2, 0},
                   {"br", "l43", br, 1, 1},
                   {"x12^12", "l12", x12, 12, 2}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "ufo8b (" << t.s() << " s)\n";
        show(run, lc);
        // golden bracket: [[a112,a12],a12] = -2 q12 l2 (1+z^3) g2^2 a112 a1^2, q12 = 1
        int l2 = lc.ctx.bc.fc.lambdas.index_of("l2");
        SmashPoly golden = lc.ctx.embed(br);
        SmashPoly tail = smash_mul(lc.ctx.grp({0, 2}),
                                   lc.ctx.embed(poly_mul(root_vector("112", bc),
                                                         power(x1, 2, bc.fc), bc.fc)),
                                   lc.ctx);
        Coef cf = Coef::symbol(static_cast<unsigned>(l2)) *
                  Coef(CycNum(-2L) * (CycNum(1L) + z.pow(3)));
        smash_add_scaled(golden, tail, -cf, lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1]}, 9, lc.ctx);
        SmashPoly diff = normal_form(smash_sub(run.results[2].lift_rel, golden, lc.ctx), M0);
        std::cout << "  bracket golden match: " << (diff.empty() ? "YES" : "NO") << "\n";
        std::cout << "  x12^12 corrections zero: "
                  << (run.results[3].cleft_correction.empty() &&
                              run.results[3].lift_correction.empty()
                          ? "YES"
                          : "NO")
                  << "\n";
    }

    if (want("ufo8c")) {
        // joint regime: q12 = 1, q21 = z^9
        BraidCtx bc = make_bc(z.pow(5), CycNum(1L), z.pow(9), CycNum(-1L));
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 24, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly br = braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
        lc.rels = {{"x1^12", "l1", x1, 12, 0},
                   {"x2^2", "l2", x2, 2, 0},
                   {"x11112", "l41", root_vector("11112", bc), 1, 0},
                   {"br", "l32", br, 1, 1}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "ufo8c (" << t.s() << " s)\n";
        show(run, lc);
        std::cout << "  l1,l2 both enabled: "
                  << (lc.lambda_of[0] >= 0 && lc.lambda_of[1] >= 0 ? "YES" : "NO") << "\n";
        // golden bracket: [a112,a12] = 2 q12 l2 g2^2 a1^3, q12 = 1
        int l2 = lc.ctx.bc.fc.lambdas.index_of("l2");
        SmashPoly golden = lc.ctx.embed(br);
        SmashPoly tail = smash_mul(lc.ctx.grp({0, 2}), lc.ctx.embed(power(x1, 3, bc.fc)),
                                   lc.ctx);
        Coef cf = Coef::symbol(static_cast<unsigned>(l2)) * Coef(CycNum(2L));
        smash_add_scaled(golden, tail, -cf, lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1], run.lift_gens[2]}, 14,
                               lc.ctx);
        SmashPoly diff = normal_form(smash_sub(run.results[3].lift_rel, golden, lc.ctx), M0);
        std::cout << "  bracket golden match: " << (diff.empty() ? "YES" : "NO") << "\n";
    }

    if (want("br2a-q-zeta")) {
        // full regime: q-matrix (zeta, -zeta; zeta, -zeta)
        CycNum q = CycNum(-1L) * zeta;
        BraidCtx bc = make_bc(zeta, CycNum(-1L) * zeta, zeta, q);
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 12, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x112 = root_vector("112", bc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^6", "l2", x2, 6, 0},
                   {"x221", "l3", root_vector("221", bc), 1, 0},
                   {"x112^2", "l112", x112, 2, 1}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "br2a-q-zeta (" << t.s() << " s)\n";
        show(run, lc);
        std::cout << "  all four lambdas enabled: "
                  << (lc.lambda_of[0] >= 0 && lc.lambda_of[1] >= 0 && lc.lambda_of[2] >= 0 &&
                              lc.lambda_of[3] >= 0
                          ? "YES"
                          : "NO")
                  << "\n";
        const auto& ring = lc.ctx.bc.fc.lambdas;
        int l1 = ring.index_of("l1"), l3 = ring.index_of("l3");
        CycNum q21 = bc.braiding.q[1][0];
        // golden cleft corr: +4 q21 zeta l1 y2 y12
        SmashPoly gc = lc.ctx.zero();
        smash_add_scaled(gc,
                         lc.ctx.embed(poly_mul(x2, root_vector("12", bc), bc.fc)),
                         Coef::symbol(static_cast<unsigned>(l1)) *
                             Coef(CycNum(4L) * q21 * zeta),
                         lc.ctx);
        GBasis C0 = buchberger({run.cleft_gens[0], run.cleft_gens[1], run.cleft_gens[2]}, 12,
                               lc.ctx);
        SmashPoly dc = normal_form(smash_sub(run.results[3].cleft_correction, gc, lc.ctx), C0);
        std::cout << "  cleft corr golden match: " << (dc.empty() ? "YES" : "NO") << "\n";
        if (!dc.empty())
            std::cout << "    diff = " << to_string(dc, &ring) << "\n";
        // golden s112 = 4 zeta q21 l1 a2 a12 - 4 zeta l1 l3 g122 (1 - g1^3)
        // lifting rel: a112^2 - l112 (1 - g112^2) + s112
        SmashPoly gs = lc.ctx.zero();
        smash_add_scaled(gs, lc.ctx.embed(poly_mul(x2, root_vector("12", bc), bc.fc)),
                         Coef::symbol(static_cast<unsigned>(l1)) *
                             Coef(CycNum(4L) * zeta * q21),
                         lc.ctx);
        Coef c13 = Coef::symbol(static_cast<unsigned>(l1)) *
                   Coef::symbol(static_cast<unsigned>(l3)) * Coef(CycNum(-4L) * zeta);
        smash_add_term(gs, {Word{}, {1, 2}}, c13, lc.ctx);
        smash_add_term(gs, {Word{}, {4, 2}}, -c13, lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1], run.lift_gens[2]}, 12,
                               lc.ctx);
        SmashPoly ds =
            normal_form(smash_sub(run.results[3].lift_correction, gs, lc.ctx), M0);
        std::cout << "  s112 golden match: " << (ds.empty() ? "YES" : "NO") << "\n";
        if (!ds.empty())
            std::cout << "    diff = " << to_string(ds, &ring) << "\n";
    }

    if (want("br2a-N6")) {
        // q = z6; split q21 = 1, q12 = z6^5
        CycNum q = CycNum::root(6, 1);
        BraidCtx bc = make_bc(zeta, q.pow(5), CycNum(1L), q);
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 24, 12);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x112 = root_vector("112", bc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^6", "l2", x2, 6, 0},
                   {"x221", "l3", root_vector("221", bc), 1, 0},
                   {"x112^6", "l112", x112, 6, 1}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "br2a-N6 (" << t.s() << " s)\n";
        show(run, lc);
        const auto& ring = lc.ctx.bc.fc.lambdas;
        int l1 = ring.index_of("l1"), l2 = ring.index_of("l2");
        // golden s112 = l1^4 l2 g2^6 (1 - g1^12)
        LambdaMono m{};
        m[static_cast<unsigned>(l1)] = 4;
        m[static_cast<unsigned>(l2)] = 1;
        SmashPoly gs = lc.ctx.zero();
        smash_add_term(gs, {Word{}, {0, 6}}, Coef::term(m, CycNum(1L)), lc.ctx);
        smash_add_term(gs, {Word{}, {12, 6}}, Coef::term(m, CycNum(-1L)), lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1], run.lift_gens[2]}, 18,
                               lc.ctx);
        SmashPoly ds = normal_form(smash_sub(run.results[3].lift_correction, gs, lc.ctx), M0);
        std::cout << "  s112 golden match: " << (ds.empty() ? "YES" : "NO") << "\n";
        if (!ds.empty())
            std::cout << "    diff = " << to_string(ds, &ring) << "\n";
        std::cout << "  cleft corr zero: " << (run.results[3].cleft_correction.empty() ? "YES" : "NO")
                  << "\n";
    }

    if (want("br2a-N12")) {
        // q = z12; split q21 = zeta = z^4, q12 = z^7
        BraidCtx bc = make_bc(zeta, z.pow(7), z.pow(4), z);
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 12, 24);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x112 = root_vector("112", bc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^12", "l2", x2, 12, 0},
                   {"x221", "l3", root_vector("221", bc), 1, 0},
                   {"x112^4", "l112", x112, 4, 1}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "br2a-N12 (" << t.s() << " s)\n";
        show(run, lc);
        const auto& ring = lc.ctx.bc.fc.lambdas;
        int l1 = ring.index_of("l1");
        CycNum q = z, q21 = bc.braiding.q[1][0];
        // golden cleft corr: -(4q^4+8q^7-4q^8+8q^11) q^2 q21 l1^2 y2^2 y12^2
        // (cleft rel: y112^4 - s112 = l112)
        CycNum cc = (CycNum(4L) * q.pow(4) + CycNum(8L) * q.pow(7) - CycNum(4L) * q.pow(8) +
                     CycNum(8L) * q.pow(11)) *
                    q.pow(2) * q21;
        LambdaMono m{};
        m[static_cast<unsigned>(l1)] = 2;
        NCPoly y2y12 = poly_mul(power(x2, 2, bc.fc),
                                power(root_vector("12", bc), 2, bc.fc), bc.fc);
        SmashPoly gc = lc.ctx.zero();
        smash_add_scaled(gc, lc.ctx.embed(y2y12), Coef::term(m, -cc), lc.ctx);
        GBasis C0 = buchberger({run.cleft_gens[0], run.cleft_gens[1], run.cleft_gens[2]}, 14,
                               lc.ctx);
        SmashPoly dc = normal_form(smash_sub(run.results[3].cleft_correction, gc, lc.ctx), C0);
        std::cout << "  cleft corr golden match: " << (dc.empty() ? "YES" : "NO") << "\n";
        if (!dc.empty())
            std::cout << "    diff = " << to_string(dc, &ring) << "\n";
        // golden s112 = -4 q^4 (2 + q^4 + 2 q^7) l1^2 q21 a2^2 a12^2
        CycNum cs = CycNum(-4L) * q.pow(4) * (CycNum(2L) + q.pow(4) + CycNum(2L) * q.pow(7)) *
                    q21;
        SmashPoly gs = lc.ctx.zero();
        smash_add_scaled(gs, lc.ctx.embed(y2y12), Coef::term(m, cs), lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1], run.lift_gens[2]}, 14,
                               lc.ctx);
        SmashPoly ds = normal_form(smash_sub(run.results[3].lift_correction, gs, lc.ctx), M0);
        std::cout << "  s112 golden match: " << (ds.empty() ? "YES" : "NO") << "\n";
        if (!ds.empty())
            std::cout << "    diff = " << to_string(ds, &ring) << "\n";
    }

    if (want("br2a-N4")) {
        // q = i; split q21 = 1, q12 = -i
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
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "br2a-N4 (" << t.s() << " s)\n";
        show(run, lc);
        bool ok = true;
        for (const auto& rr : run.results)
            ok = ok && rr.cleft_correction.empty() && rr.lift_correction.empty();
        std::cout << "  zero corrections: " << (ok ? "YES" : "NO") << "\n";
    }

    if (want("br2a-q-1")) {
        // q = -1; regime (zeta, -1; 1, -1)
        BraidCtx bc = make_bc(zeta, CycNum(-1L), CycNum(1L), CycNum(-1L));
        LiftingCase lc;
        lc.ctx.bc = bc;
        lc.ctx.real = make_real(bc.braiding, 36, 36);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x112 = root_vector("112", bc);
        NCPoly br = braided_commutator(x112, root_vector("12", bc), bc);
        lc.rels = {{"x1^3", "l1", x1, 3, 0},
                   {"x2^2", "l2", x2, 2, 0},
                   {"br", "l3", br, 1, 1},
                   {"x112^6", "l112", x112, 6, 2}};
        configure_lambdas(lc);
        Timer t;
        CaseRun run = run_case(lc);
        std::cout << "br2a-q-1 (" << t.s() << " s)\n";
        show(run, lc);
        const auto& ring = lc.ctx.bc.fc.lambdas;
        int l1 = ring.index_of("l1"), l2 = ring.index_of("l2");
        // golden bracket: [a112,a12] = l3(1-g1^3 g2^2) - 4 l1 l2 g2^2 (1-g1^3)
        LambdaMono m12{};
        m12[static_cast<unsigned>(l1)] = 1;
        m12[static_cast<unsigned>(l2)] = 1;
        SmashPoly gs = lc.ctx.zero();
        smash_add_term(gs, {Word{}, {0, 2}}, Coef::term(m12, CycNum(4L)), lc.ctx);
        smash_add_term(gs, {Word{}, {3, 2}}, Coef::term(m12, CycNum(-4L)), lc.ctx);
        GBasis M0 = buchberger({run.lift_gens[0], run.lift_gens[1]}, 18, lc.ctx);
        SmashPoly ds = normal_form(smash_sub(run.results[2].lift_correction, gs, lc.ctx), M0);
        std::cout << "  bracket s golden match: " << (ds.empty() ? "YES" : "NO") << "\n";
        if (!ds.empty())
            std::cout << "    diff = " << to_string(ds, &ring) << "\n";

        // full golden s112(a) + s112(g), with omega = zeta^2 - zeta and
        // lambda123 = 4 l1 l2 - l3; g11212 = g1^3 g2^2
        int l3 = ring.index_of("l3");
        Coef L1 = Coef::symbol(static_cast<unsigned>(l1));
        Coef L2 = Coef::symbol(static_cast<unsigned>(l2));
        Coef L3 = Coef::symbol(static_cast<unsigned>(l3));
        Coef W = Coef((zeta.pow(2) - zeta) * CycNum(2L));
        Coef L123 = Coef(CycNum(4L)) * L1 * L2 - L3;
        auto C = [](long n) { return Coef(CycNum(n)); };
        NCPoly x12 = root_vector("12", bc);
        NCPoly a12_2a112_2 = poly_mul(power(x12, 2, bc.fc), power(x112, 2, bc.fc), bc.fc);
        NCPoly a2a112_3 = poly_mul(x2, power(x112, 3, bc.fc), bc.fc);
        NCPoly a12a112 = poly_mul(x12, x112, bc.fc);
        SmashPoly g112s = lc.ctx.zero();
        auto add = [&](GrpElem g, const NCPoly* word, Coef c) {
            SmashPoly t = word ? smash_mul(lc.ctx.grp(g), lc.ctx.embed(*word), lc.ctx)
                               : lc.ctx.grp(g);
            smash_add_scaled(g112s, t, c, lc.ctx);
        };
        add({3, 2}, &a12_2a112_2, C(2) * L1 * L123 * W);
        add({3, 2}, &a2a112_3, C(-2) * L1 * L123 * W);
        add({3, 4}, &a12a112, C(8) * L1 * L1 * L2 * L123 * W);
        add({6, 4}, &a12a112, C(-2) * L1 * L123 * L123 * W);
        add({3, 2}, &a12a112, C(-2) * L1 * L3 * L123 * W);
        add({0, 2}, nullptr,
            C(8) * L1 * L1 * L2 *
                (C(8) * L1 * L1 * L2 * L2 - C(8) * L1 * L2 * L3 + C(3) * L3 * L3));
        add({0, 4}, nullptr, C(64) * L1 * L1 * L1 * L2 * L2 * (L1 * L2 - L3));
        add({0, 6}, nullptr, C(64) * L1 * L1 * L1 * L1 * L2 * L2 * L2);
        add({3, 2}, nullptr, L1 * L3 * L3 * L123 * W);
        add({3, 4}, nullptr, C(-8) * L1 * L1 * L2 * L3 * L123 * W);
        add({3, 6}, nullptr, C(16) * L1 * L1 * L1 * L2 * L2 * L123 * W);
        add({6, 6}, nullptr, C(-20) * L1 * L1 * L2 * L123 * L123);
        add({6, 4}, nullptr,
            C(4) * L1 *
                (C(16) * L1 * L1 * L1 * L2 * L2 * L2 + C(8) * L1 * L1 * L2 * L2 * L3 -
                 C(7) * L1 * L2 * L3 * L3 + L3 * L3 * L3));
        add({12, 6}, nullptr,
            C(4) * L1 *
                (C(16) * L1 * L1 * L1 * L2 * L2 * L2 - C(16) * L1 * L1 * L2 * L2 * L3 +
                 C(6) * L1 * L2 * L3 * L3 - L3 * L3 * L3));
        add({9, 6}, nullptr,
            L1 * W *
                (C(-64) * L1 * L1 * L1 * L2 * L2 * L2 + C(48) * L1 * L1 * L2 * L2 * L3 -
                 C(12) * L1 * L2 * L3 * L3 + L3 * L3 * L3));
        GBasis M1 = buchberger(
            {run.lift_gens[0], run.lift_gens[1], run.lift_gens[2]}, 20, lc.ctx);
        SmashPoly d112 =
            normal_form(smash_sub(run.results[3].lift_correction, g112s, lc.ctx), M1);
        std::cout << "  s112 golden match: " << (d112.empty() ? "YES" : "NO") << "\n";
        if (!d112.empty())
            std::cout << "    diff = " << to_string(d112, &ring) << "\n";
        std::cout << "  x112^6 cleft corr zero: "
                  << (run.results[3].cleft_correction.empty() ? "YES" : "NO") << "\n";
    }
    return 0;
}

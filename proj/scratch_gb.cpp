#include "nichols/ncgb.hpp"
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

static void run(const std::string& name, const BraidCtx& bc,
                const std::vector<NCPoly>& rels, unsigned start = 10)
{
    auto t0 = std::chrono::steady_clock::now();
    SmashCtx ctx = pure_smash_ctx(bc);
    std::vector<SmashPoly> gens;
    for (const auto& r : rels)
        gens.push_back(ctx.embed(r));
    GBasis G = complete_basis(gens, ctx, start, 60);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << name << ": complete=" << G.complete << " bound=" << G.bound
              << " rules=" << G.rules.size();
    if (auto d = G.dimension())
        std::cout << " dim=" << *d;
    std::cout << "  hilbert=";
    for (long h : G.hilbert)
        std::cout << h << ",";
    std::cout << "  (" << ms << " ms)\n";
}

static NCPoly power(const NCPoly& p, unsigned n, const FreeCtx& fc)
{
    NCPoly r = fc.one();
    for (unsigned i = 0; i < n; ++i)
        r = poly_mul(r, p, fc);
    return r;
}

int main(int argc, char** argv)
{
    CycNum z = CycNum::root(12, 1);
    std::string which = argc > 1 ? argv[1] : "all";

    if (which == "all" || which == "ufo7") {
        { // ufo7a
            BraidCtx bc = make_bc(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly x12 = root_vector("12", bc);
            CycNum mu = z.pow(4) * (CycNum(1L) + z) * bc.braiding.q[0][1] /
                        (CycNum(1L) + z.pow(3));
            NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                                 poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc), bc.fc);
            run("ufo7a", bc, {power(x1, 3, bc.fc), power(x2, 3, bc.fc), br});
        }
        { // ufo7b
            BraidCtx bc = make_bc(z.pow(4), z.pow(11), CycNum(1L), CycNum(-1L));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly br = braided_commutator(
                braided_commutator(root_vector("112", bc), root_vector("12", bc), bc),
                root_vector("12", bc), bc);
            run("ufo7b", bc, {power(x1, 3, bc.fc), power(x2, 2, bc.fc), br});
        }
        { // ufo7c
            BraidCtx bc = make_bc(z.pow(9), z, CycNum(1L), CycNum(-1L));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly br = braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
            run("ufo7c", bc, {power(x1, 4, bc.fc), power(x2, 2, bc.fc), br});
        }
    }
    if (which == "all" || which == "ufo8") {
        { // ufo8a (both strata)
            BraidCtx bc = make_bc(z.pow(8), z, CycNum(1L), z.pow(8));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly x12 = root_vector("12", bc);
            CycNum mu = (CycNum(1L) + z + z.pow(2)) * z.pow(4) * bc.braiding.q[0][1];
            NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                                 poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc), bc.fc);
            run("ufo8a", bc,
                {power(x1, 3, bc.fc), power(x2, 3, bc.fc), br, power(x12, 12, bc.fc)}, 26);
        }
        { // ufo8b
            BraidCtx bc = make_bc(z.pow(8), z.pow(3), CycNum(1L), CycNum(-1L));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly x12 = root_vector("12", bc);
            NCPoly br = braided_commutator(
                braided_commutator(root_vector("112", bc), x12, bc), x12, bc);
            run("ufo8b", bc,
                {power(x1, 3, bc.fc), power(x2, 2, bc.fc), br, power(x12, 12, bc.fc)}, 26);
        }
        { // ufo8c
            BraidCtx bc = make_bc(z.pow(5), z.pow(9), CycNum(1L), CycNum(-1L));
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            NCPoly br = braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
            run("ufo8c", bc,
                {power(x1, 12, bc.fc), power(x2, 2, bc.fc), root_vector("11112", bc), br}, 26);
        }
    }
    if (which == "all" || which == "br2a") {
        CycNum zeta = CycNum::root(3, 1);
        struct Case { const char* name; CycNum q; unsigned N, M; };
        std::vector<Case> cases = {
            {"br2a-q-1", CycNum(-1L), 2, 6},
            {"br2a-q-zeta", CycNum(-1L) * zeta, 6, 2},
            {"br2a-N4", CycNum::root(4, 1), 4, 12},
            {"br2a-N6", CycNum::root(6, 1), 6, 6},
            {"br2a-N12", CycNum::root(12, 1), 12, 4},
        };
        for (const auto& c : cases) {
            BraidCtx bc = make_bc(zeta, c.q.inverse(), CycNum(1L), c.q);
            NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
            std::vector<NCPoly> rels{power(x1, 3, bc.fc), power(x2, c.N, bc.fc)};
            if (c.N == 2)
                rels.push_back(braided_commutator(root_vector("112", bc),
                                                  root_vector("12", bc), bc));
            else
                rels.push_back(root_vector("221", bc));
            rels.push_back(power(root_vector("112", bc), c.M, bc.fc));
            run(c.name, bc, rels, 3 * 2 + 3 * c.M / 2);
        }
    }
    return 0;
}

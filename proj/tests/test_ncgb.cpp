#include "nichols/ncgb.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace nichols;

namespace {

BraidCtx make_bc(CycNum q11, CycNum q12, CycNum q21, CycNum q22)
{
    BraidCtx bc;
    bc.fc.theta = 2;
    bc.fc.order = WordOrder::natural(2);
    bc.braiding.theta = 2;
    bc.braiding.q = {{q11, q12}, {q21, q22}};
    bc.braiding.validate();
    return bc;
}

NCPoly power(const NCPoly& p, unsigned n, const FreeCtx& fc)
{
    NCPoly r = fc.one();
    for (unsigned i = 0; i < n; ++i)
        r = poly_mul(r, p, fc);
    return r;
}

GBasis run_gb(const std::vector<NCPoly>& rels, unsigned bound, const SmashCtx& ctx)
{
    std::vector<SmashPoly> gens;
    for (const auto& r : rels)
        gens.push_back(ctx.embed(r));
    return buchberger(gens, bound, ctx);
}

bool same_lead_set(const std::vector<Word>& a, std::vector<Word> b)
{
    std::vector<Word> x(a);
    std::sort(x.begin(), x.end());
    std::sort(b.begin(), b.end());
    return x == b;
}

} // namespace

TEST_CASE("quantum plane")
{
    CycNum q = CycNum::root(12, 1);
    BraidCtx bc = make_bc(q, q, CycNum(1L), q);
    SmashCtx ctx = pure_smash_ctx(bc);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    NCPoly rel = poly_sub(poly_mul(x1, x2, bc.fc),
                          poly_scale(poly_mul(x2, x1, bc.fc), Coef(q), bc.fc), bc.fc);

    SECTION("single relation: no self-overlap, infinite quotient")
    {
        GBasis G = run_gb({rel}, 6, ctx);
        CHECK(G.rules.size() == 1);
        CHECK_FALSE(G.complete);
        CHECK_FALSE(G.dimension().has_value());
        CHECK_THROWS_AS(G.leading_word_set(), AlgebraError);
        // irreducible words avoid the factor x1x2: x2^a x1^b, so d+1 per degree
        REQUIRE(G.hilbert.size() >= 7);
        for (int d = 0; d <= 6; ++d)
            CHECK(G.hilbert[d] == d + 1);
        // x2x1 is already a normal form
        CHECK(normal_form(poly_mul(x2, x1, bc.fc), G) == poly_mul(x2, x1, bc.fc));
        // x1x2 rewrites to q x2x1
        CHECK(normal_form(poly_mul(x1, x2, bc.fc), G) ==
              poly_scale(poly_mul(x2, x1, bc.fc), Coef(q), bc.fc));
    }

    SECTION("truncated quantum plane: dimension 4")
    {
        std::vector<NCPoly> rels = {power(x1, 2, bc.fc), power(x2, 2, bc.fc), rel};
        GBasis G = run_gb(rels, 6, ctx);
        REQUIRE(G.complete);
        CHECK(G.dimension() == 4);
        REQUIRE(G.hilbert.size() >= 4);
        CHECK(G.hilbert[0] == 1);
        CHECK(G.hilbert[1] == 2);
        CHECK(G.hilbert[2] == 1); // the basis word x2x1
        CHECK(G.hilbert[3] == 0);
        CHECK(same_lead_set(G.leading_word_set(),
                            {Word{0, 0}, Word{1, 1}, Word{0, 1}}));
        for (const auto& g : rels)
            CHECK(normal_form(g, G).empty());
        CHECK(normal_form(poly_mul(x2, x1, bc.fc), G) == poly_mul(x2, x1, bc.fc));
        // x1x2x1x2 -> q x2 x1^2 x2 -> 0
        NCPoly w = poly_mul(poly_mul(x1, x2, bc.fc), poly_mul(x1, x2, bc.fc), bc.fc);
        CHECK(normal_form(w, G).empty());
    }

    SECTION("zero ideal: free algebra Hilbert series")
    {
        GBasis G = run_gb({}, 4, ctx);
        CHECK_FALSE(G.complete);
        REQUIRE(G.hilbert.size() >= 5);
        CHECK(G.hilbert[0] == 1);
        CHECK(G.hilbert[1] == 2);
        CHECK(G.hilbert[2] == 4);
        CHECK(G.hilbert[3] == 8);
        CHECK(G.hilbert[4] == 16);
    }
}

TEST_CASE("normal form properties randomized")
{
    CycNum q = CycNum::root(12, 5);
    BraidCtx bc = make_bc(q, q, CycNum(1L), q);
    SmashCtx ctx = pure_smash_ctx(bc);
    NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
    std::vector<NCPoly> rels = {
        power(x1, 2, bc.fc), power(x2, 2, bc.fc),
        poly_sub(poly_mul(x1, x2, bc.fc),
                 poly_scale(poly_mul(x2, x1, bc.fc), Coef(q), bc.fc), bc.fc)};
    GBasis G = run_gb(rels, 8, ctx);
    REQUIRE(G.complete);

    std::mt19937 rng(20240811);
    auto random_word = [&](unsigned maxlen) {
        Word w;
        unsigned len = rng() % (maxlen + 1);
        for (unsigned i = 0; i < len; ++i)
            w.push_back(rng() % 2);
        return w;
    };
    auto random_poly = [&]() {
        NCPoly p = bc.fc.zero();
        for (int t = 0; t < 3; ++t)
            add_term(p, random_word(4), Coef(CycNum(static_cast<long>(rng() % 5) - 2)),
                     bc.fc.lambdas);
        return p;
    };

    for (int trial = 0; trial < 40; ++trial) {
        // ideal membership: s g t reduces to zero
        const NCPoly& g = rels[rng() % rels.size()];
        NCPoly sgt = poly_mul(poly_mul(bc.fc.mono(random_word(3)), g, bc.fc),
                              bc.fc.mono(random_word(3)), bc.fc);
        CHECK(normal_form(sgt, G).empty());

        NCPoly a = random_poly(), b = random_poly();
        // idempotence and linearity
        NCPoly na = normal_form(a, G);
        CHECK(normal_form(na, G) == na);
        CHECK(normal_form(poly_add(a, b, bc.fc), G) ==
              poly_add(na, normal_form(b, G), bc.fc));
    }

    SECTION("confluence: reduction is independent of rule ordering")
    {
        GBasis G2 = G;
        std::reverse(G2.rules.begin(), G2.rules.end());
        std::reverse(G2.leads.begin(), G2.leads.end());
        for (int trial = 0; trial < 20; ++trial) {
            NCPoly a = random_poly();
            CHECK(normal_form(a, G) == normal_form(a, G2));
        }
    }
}

TEST_CASE("golden dimensions: rank-two Nichols algebras of modular type")
{
    CycNum z = CycNum::root(12, 1);

    SECTION("first modular family, diagram a")
    {
        BraidCtx bc = make_bc(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
        SmashCtx ctx = pure_smash_ctx(bc);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        NCPoly x12 = root_vector("12", bc);
        CycNum mu =
            z.pow(4) * (CycNum(1L) + z) * bc.braiding.q[0][1] / (CycNum(1L) + z.pow(3));
        NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                             poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc),
                             bc.fc);
        std::vector<SmashPoly> gens = {ctx.embed(power(x1, 3, bc.fc)),
                                       ctx.embed(power(x2, 3, bc.fc)), ctx.embed(br)};
        GBasis G = complete_basis(gens, ctx, 6);
        REQUIRE(G.complete);
        CHECK(G.bound > 6); // the bound auto-raise kicked in
        CHECK(G.dimension() == 144);
        std::vector<long> expect{1, 2, 4, 6, 9, 12, 14, 16, 16, 16, 14, 12, 9, 6, 4, 2, 1};
        REQUIRE(G.hilbert.size() >= expect.size());
        for (std::size_t d = 0; d < expect.size(); ++d)
            CHECK(G.hilbert[d] == expect[d]);
        for (std::size_t d = expect.size(); d < G.hilbert.size(); ++d)
            CHECK(G.hilbert[d] == 0);

        SECTION("dimension is precedence independent")
        {
            BraidCtx bc2 = bc;
            bc2.fc.order.rank = {1, 0}; // precedence x2 < x1
            SmashCtx ctx2 = pure_smash_ctx(bc2);
            NCPoly y1 = bc2.fc.gen(0), y2 = bc2.fc.gen(1);
            NCPoly y12 = root_vector("12", bc2);
            NCPoly br2 = poly_sub(braided_commutator(y1, root_vector("122", bc2), bc2),
                                  poly_scale(poly_mul(y12, y12, bc2.fc), Coef(mu),
                                             bc2.fc),
                                  bc2.fc);
            std::vector<SmashPoly> g2 = {ctx2.embed(power(y1, 3, bc2.fc)),
                                         ctx2.embed(power(y2, 3, bc2.fc)),
                                         ctx2.embed(br2)};
            GBasis H = complete_basis(g2, ctx2, 10);
            REQUIRE(H.complete);
            CHECK(H.dimension() == 144);
        }
    }

    SECTION("first modular family, diagrams b and c")
    {
        {
            BraidCtx bc = make_bc(z.pow(4), z.pow(11), CycNum(1L), CycNum(-1L));
            SmashCtx ctx = pure_smash_ctx(bc);
            NCPoly br = braided_commutator(
                braided_commutator(root_vector("112", bc), root_vector("12", bc), bc),
                root_vector("12", bc), bc);
            GBasis G = run_gb({power(bc.fc.gen(0), 3, bc.fc),
                               power(bc.fc.gen(1), 2, bc.fc), br},
                              22, ctx);
            REQUIRE(G.complete);
            CHECK(G.dimension() == 144);
        }
        {
            BraidCtx bc = make_bc(z.pow(9), z, CycNum(1L), CycNum(-1L));
            SmashCtx ctx = pure_smash_ctx(bc);
            NCPoly br =
                braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
            GBasis G = run_gb({power(bc.fc.gen(0), 4, bc.fc),
                               power(bc.fc.gen(1), 2, bc.fc), br},
                              22, ctx);
            REQUIRE(G.complete);
            CHECK(G.dimension() == 144);
        }
    }

    SECTION("second modular family, diagrams b and c")
    {
        {
            BraidCtx bc = make_bc(z.pow(8), z.pow(3), CycNum(1L), CycNum(-1L));
            SmashCtx ctx = pure_smash_ctx(bc);
            NCPoly x12 = root_vector("12", bc);
            NCPoly br = braided_commutator(
                braided_commutator(root_vector("112", bc), x12, bc), x12, bc);
            GBasis G = run_gb({power(bc.fc.gen(0), 3, bc.fc),
                               power(bc.fc.gen(1), 2, bc.fc), br,
                               power(x12, 12, bc.fc)},
                              39, ctx);
            REQUIRE(G.complete);
            CHECK(G.dimension() == 432);
        }
        {
            BraidCtx bc = make_bc(z.pow(5), z.pow(9), CycNum(1L), CycNum(-1L));
            SmashCtx ctx = pure_smash_ctx(bc);
            NCPoly br =
                braided_commutator(root_vector("112", bc), root_vector("12", bc), bc);
            GBasis G = run_gb({power(bc.fc.gen(0), 12, bc.fc),
                               power(bc.fc.gen(1), 2, bc.fc),
                               root_vector("11112", bc), br},
                              39, ctx);
            REQUIRE(G.complete);
            CHECK(G.dimension() == 432);
        }
    }
}

TEST_CASE("golden dimensions: standard B2 family cross-checked against PBW heights")
{
    CycNum zeta = CycNum::root(3, 1);
    struct Case {
        CycNum q;
        unsigned start;
        long expect;
    };
    std::vector<Case> cases = {
        {CycNum(-1L), 24, 108},               // q of order 2, M = 6
        {CycNum(-1L) * zeta, 12, 108},        // q of order 6, M = 2
        {CycNum::root(6, 1), 24, 324},        // (N, M) = (6, 6)
        {CycNum::root(12, 1), 24, 432},       // (N, M) = (12, 4)
    };
    for (const auto& c : cases) {
        BraidCtx bc = make_bc(zeta, c.q.inverse(), CycNum(1L), c.q);
        SmashCtx ctx = pure_smash_ctx(bc);
        unsigned N = *c.q.order();
        unsigned M = *(zeta * c.q.inverse()).order();
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        std::vector<NCPoly> rels{power(x1, 3, bc.fc), power(x2, N, bc.fc)};
        if (N == 2)
            rels.push_back(braided_commutator(root_vector("112", bc),
                                              root_vector("12", bc), bc));
        else
            rels.push_back(root_vector("221", bc));
        rels.push_back(power(root_vector("112", bc), M, bc.fc));
        std::vector<SmashPoly> gens;
        for (const auto& r : rels)
            gens.push_back(ctx.embed(r));
        GBasis G = complete_basis(gens, ctx, c.start);
        REQUIRE(G.complete);
        // PBW basis x1^a x112^b x12^c x2^d with heights 3, M, 3, N
        CHECK(G.dimension() == 3L * M * 3L * N);
        CHECK(G.dimension() == c.expect);
    }
}

TEST_CASE("group algebra block inversion")
{
    std::vector<unsigned> orders{3};
    GrpElem e{0}, g{1}, g2{2};

    SECTION("unit: 2 - g is invertible in k(Z/3)")
    {
        GroupBlock C{{e, CycNum(2L)}, {g, CycNum(-1L)}};
        auto X = invert_group_block(C, orders);
        REQUIRE(X.has_value());
        // (2 - g)(4 + 2g + g^2) = 8 - g^3 = 7
        GroupBlock expect{{e, CycNum(Rational(4, 7))},
                          {g, CycNum(Rational(2, 7))},
                          {g2, CycNum(Rational(1, 7))}};
        CHECK(*X == expect);
    }

    SECTION("zero divisor: 1 - g is singular")
    {
        GroupBlock C{{e, CycNum(1L)}, {g, CycNum(-1L)}};
        CHECK_FALSE(invert_group_block(C, orders).has_value());
    }

    SECTION("single term inverts by group inversion")
    {
        GroupBlock C{{g, CycNum(3L)}};
        auto X = invert_group_block(C, orders);
        REQUIRE(X.has_value());
        CHECK(*X == GroupBlock{{g2, CycNum(Rational(1, 3))}});
    }
}

TEST_CASE("rewriting over the smash product")
{
    // rank one, q11 a primitive cube root, group Z/9 so that g1^3 != e
    CycNum z3 = CycNum::root(3, 1);
    BraidCtx bc;
    bc.fc.theta = 1;
    bc.fc.order = WordOrder::natural(1);
    bc.braiding.theta = 1;
    bc.braiding.q = {{z3}};
    SmashCtx ctx;
    ctx.bc = bc;
    ctx.real.braiding = bc.braiding;
    ctx.real.group_orders = {9};
    ctx.real.grouplikes = {GrpElem{1}};
    ctx.real.char_values = {{z3}};
    REQUIRE_NOTHROW(ctx.real.validate());

    SmashPoly a1 = ctx.gen(0);
    GrpElem e{0}, g3{3};

    SECTION("deformed cubic relation a1^3 = 1 - g1^3")
    {
        SmashPoly r = smash_mul(a1, smash_mul(a1, a1, ctx), ctx);
        r = smash_sub(r, ctx.one(), ctx);
        r = smash_add(r, ctx.grp(g3), ctx);
        GBasis G = buchberger({r}, 8, ctx);
        REQUIRE(G.complete);
        CHECK(G.dimension() == 3); // x-words 1, a1, a1^2
        CHECK(same_lead_set(G.leading_word_set(), {Word{0, 0, 0}}));
        // a1^6 reduces to (1 - g1^3)^2
        SmashPoly a6 = ctx.one();
        for (int i = 0; i < 6; ++i)
            a6 = smash_mul(a6, a1, ctx);
        SmashPoly expect = ctx.one();
        smash_add_term(expect, {Word{}, g3}, Coef(-2L), ctx);
        smash_add_term(expect, {Word{}, GrpElem{6}}, Coef(1L), ctx);
        CHECK(normal_form(a6, G) == expect);
    }

    SECTION("conjugation-inhomogeneous generator is rejected")
    {
        SmashPoly bad = smash_sub(a1, ctx.grp(GrpElem{1}), ctx);
        CHECK_THROWS_AS(buchberger({bad}, 6, ctx), AlgebraError);
    }

    SECTION("zero-divisor leading block is an obstruction")
    {
        SmashPoly bad = ctx.mono({Word{0}, e});
        smash_add_term(bad, {Word{0}, GrpElem{1}}, Coef(-1L), ctx);
        CHECK_THROWS_WITH(buchberger({bad}, 6, ctx),
                          Catch::Matchers::ContainsSubstring("zero divisor"));
    }
}

TEST_CASE("non-constant leading coefficient is an obstruction")
{
    CycNum q = CycNum::root(12, 1);
    BraidCtx bc = make_bc(q, q, CycNum(1L), q);
    bc.fc.lambdas.add("l1", {2, 0});
    SmashCtx ctx = pure_smash_ctx(bc);
    NCPoly p = bc.fc.mono(Word{0, 0}, Coef::symbol(0));
    add_term(p, Word{1}, Coef(1L), bc.fc.lambdas);
    CHECK_THROWS_WITH(buchberger({ctx.embed(p)}, 6, ctx),
                      Catch::Matchers::ContainsSubstring("deformation parameters"));
}

TEST_CASE("primitivity modulo an ideal")
{
    CycNum z = CycNum::root(12, 1);

    SECTION("zero ideal")
    {
        BraidCtx bc = make_bc(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
        SmashCtx ctx = pure_smash_ctx(bc);
        GBasis Z = run_gb({}, 6, ctx);
        CHECK(is_primitive_mod(bc.fc.gen(0), Z));
        CHECK_FALSE(is_primitive_mod(poly_mul(bc.fc.gen(0), bc.fc.gen(1), bc.fc), Z));
    }

    SECTION("deformed bracket relation is primitive modulo the cube ideal")
    {
        BraidCtx bc = make_bc(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
        SmashCtx ctx = pure_smash_ctx(bc);
        NCPoly x1 = bc.fc.gen(0), x2 = bc.fc.gen(1);
        GBasis G = run_gb({power(x1, 3, bc.fc), power(x2, 3, bc.fc)}, 10, ctx);
        NCPoly x12 = root_vector("12", bc);
        CycNum mu =
            z.pow(4) * (CycNum(1L) + z) * bc.braiding.q[0][1] / (CycNum(1L) + z.pow(3));
        NCPoly br = poly_sub(braided_commutator(x1, root_vector("122", bc), bc),
                             poly_scale(poly_mul(x12, x12, bc.fc), Coef(mu), bc.fc),
                             bc.fc);
        CHECK(is_primitive_mod(br, G));
        CHECK_FALSE(is_primitive_mod(poly_mul(x12, x12, bc.fc), G));
    }

    SECTION("top power of a root vector is primitive in the last stratum")
    {
        BraidCtx bc = make_bc(z.pow(8), z.pow(3), CycNum(1L), CycNum(-1L));
        SmashCtx ctx = pure_smash_ctx(bc);
        NCPoly x12 = root_vector("12", bc);
        NCPoly br = braided_commutator(
            braided_commutator(root_vector("112", bc), x12, bc), x12, bc);
        GBasis G = run_gb({power(bc.fc.gen(0), 3, bc.fc),
                           power(bc.fc.gen(1), 2, bc.fc), br},
                          26, ctx);
        NCPoly p = bc.fc.one();
        for (int i = 0; i < 12; ++i)
            p = normal_form(poly_mul(p, x12, bc.fc), G);
        CHECK(is_primitive_mod(p, G));
    }
}

#include "nichols/smash.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nichols;

namespace {

SmashCtx make_ctx()
{
    // q11 in G'_3, the other entries in {1,-1}; principal realization over
    // Gamma = (Z/6)^2
    BraidCtx bc;
    bc.fc.theta = 2;
    bc.fc.order = WordOrder::natural(2);
    bc.braiding.theta = 2;
    bc.braiding.q = {{CycNum::root(3, 1), CycNum(-1L)}, {CycNum(1L), CycNum(-1L)}};
    SmashCtx ctx;
    ctx.bc = bc;
    ctx.real = Realization::principal(bc.braiding);
    return ctx;
}

} // namespace

TEST_CASE("group arithmetic")
{
    std::vector<unsigned> orders{6, 4};
    GrpElem a{5, 3}, b{2, 2};
    CHECK(grp_mul(a, b, orders) == GrpElem{1, 1});
    CHECK(grp_inv(a, orders) == GrpElem{1, 1});
    CHECK(grp_pow(a, 3, orders) == GrpElem{3, 1});
    CHECK(grp_is_id(grp_mul(a, grp_inv(a, orders), orders)));
    CHECK(grp_to_string(GrpElem{2, 1}) == "g1^2*g2");
    CHECK(grp_to_string(grp_id(orders)) == "1");
}

TEST_CASE("realization validation")
{
    SmashCtx ctx = make_ctx();
    CHECK(ctx.real.group_orders == std::vector<unsigned>{6, 6});
    CHECK(ctx.real.chi(0, ctx.real.grouplikes[0]) == ctx.bc.braiding.q[0][0]);
    CHECK(ctx.real.chi(1, ctx.real.grouplikes[0]) == ctx.bc.braiding.q[0][1]);

    // g_r and chi_r composites for r of degree (2,1)
    MultiDegree d{2, 1};
    CHECK(ctx.real.grouplike_of(d) == GrpElem{2, 1});
    CHECK(ctx.real.chi_deg(d, GrpElem{1, 0}) ==
          ctx.bc.braiding.q[0][0].pow(2) * ctx.bc.braiding.q[0][1]);

    Realization bad = ctx.real;
    bad.char_values[0][0] = CycNum::root(3, 2); // breaks chi_1(g_1) = q_11
    CHECK_THROWS_AS(bad.validate(), AlgebraError);

    Realization bad2 = ctx.real;
    bad2.group_orders = {2, 6}; // chi_1(gen 1) has order 3, does not divide 2
    CHECK_THROWS_AS(bad2.validate(), AlgebraError);
}

TEST_CASE("smash multiplication")
{
    SmashCtx ctx = make_ctx();
    const CycNum q11 = ctx.bc.braiding.q[0][0];
    const CycNum q12 = ctx.bc.braiding.q[0][1];
    SmashPoly g1 = ctx.grp(ctx.real.grouplikes[0]);
    SmashPoly x1 = ctx.gen(0), x2 = ctx.gen(1);

    SmashPoly p = smash_mul(g1, x1, ctx);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first == SmashKey{Word{0}, GrpElem{1, 0}});
    CHECK(p.begin()->second == Coef(q11));

    SmashPoly p2 = smash_mul(g1, x2, ctx);
    CHECK(p2.begin()->second == Coef(q12));

    // (x1 g1)(x1 g2) = q11 x1^2 g1g2
    SmashPoly a = smash_mul(x1, g1, ctx);
    SmashPoly b = smash_mul(x2, ctx.grp(ctx.real.grouplikes[1]), ctx);
    SmashPoly x1g1_x1g2 =
        smash_mul(a, smash_mul(x1, ctx.grp(ctx.real.grouplikes[1]), ctx), ctx);
    REQUIRE(x1g1_x1g2.size() == 1);
    CHECK(x1g1_x1g2.begin()->first == SmashKey{Word{0, 0}, GrpElem{1, 1}});
    CHECK(x1g1_x1g2.begin()->second == Coef(q11));
    (void)b;

    CHECK(smash_mul(ctx.one(), a, ctx) == a);
    CHECK(smash_mul(a, ctx.one(), ctx) == a);
}

TEST_CASE("hopf coproduct")
{
    SmashCtx ctx = make_ctx();
    SmashPoly x1 = ctx.gen(0);
    const GrpElem e = grp_id(ctx.real.group_orders);
    const GrpElem g1 = ctx.real.grouplikes[0];

    SmashTensor d = hopf_coproduct(x1, ctx);
    REQUIRE(d.size() == 2);
    CHECK(d.at({{Word{0}, e}, {Word{}, e}}) == Coef(1L));
    CHECK(d.at({{Word{}, g1}, {Word{0}, e}}) == Coef(1L));

    GrpElem g1g2 = grp_mul(g1, ctx.real.grouplikes[1], ctx.real.group_orders);
    SmashTensor dg = hopf_coproduct(ctx.grp(g1g2), ctx);
    REQUIRE(dg.size() == 1);
    CHECK(dg.at({{Word{}, g1g2}, {Word{}, g1g2}}) == Coef(1L));

    // q11 in G'_3: the mixed terms of Delta(x1^3) cancel (q-binomial)
    SmashPoly x1cube = smash_mul(x1, smash_mul(x1, x1, ctx), ctx);
    SmashTensor dc = hopf_coproduct(x1cube, ctx);
    GrpElem g1cube = grp_pow(g1, 3, ctx.real.group_orders);
    REQUIRE(dc.size() == 2);
    CHECK(dc.at({{Word{0, 0, 0}, e}, {Word{}, e}}) == Coef(1L));
    CHECK(dc.at({{Word{}, g1cube}, {Word{0, 0, 0}, e}}) == Coef(1L));

    CHECK(smash_counit(x1).is_zero());
    CHECK(smash_counit(ctx.grp(g1g2)) == Coef(1L));
}

TEST_CASE("antipode")
{
    SmashCtx ctx = make_ctx();
    const CycNum q11 = ctx.bc.braiding.q[0][0];
    const GrpElem g1 = ctx.real.grouplikes[0];

    SmashPoly sg = antipode(ctx.grp(g1), ctx);
    REQUIRE(sg.size() == 1);
    CHECK(sg.begin()->first == SmashKey{Word{}, grp_inv(g1, ctx.real.group_orders)});

    // S(x1) = -g1^{-1} x1 = -q11^{-1} x1 g1^{-1}
    SmashPoly sx = antipode(ctx.gen(0), ctx);
    REQUIRE(sx.size() == 1);
    CHECK(sx.begin()->first == SmashKey{Word{0}, grp_inv(g1, ctx.real.group_orders)});
    CHECK(sx.begin()->second == Coef(-q11.inverse()));
}

TEST_CASE("hopf axioms randomized")
{
    SmashCtx ctx = make_ctx();
    std::mt19937 rng(20240811);
    auto random_elem = [&]() {
        SmashPoly p = ctx.zero();
        for (int t = 0; t < 3; ++t) {
            Word w;
            std::size_t len = rng() % 4;
            for (std::size_t i = 0; i < len; ++i)
                w.push_back(rng() % 2);
            GrpElem g{static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)};
            smash_add_term(p, {w, g}, Coef(CycNum(static_cast<long>(rng() % 5) - 2)), ctx);
        }
        return p;
    };

    for (int trial = 0; trial < 15; ++trial) {
        SmashPoly a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(smash_mul(a, smash_mul(b, c, ctx), ctx) ==
              smash_mul(smash_mul(a, b, ctx), c, ctx));
        CHECK(hopf_coproduct(smash_mul(a, b, ctx), ctx) ==
              smash_tensor_mul(hopf_coproduct(a, ctx), hopf_coproduct(b, ctx), ctx));

        // antipode axioms m(S(x)id)Delta = u eps = m(id(x)S)Delta
        SmashTensor da = hopf_coproduct(a, ctx);
        SmashPoly left = ctx.zero(), right = ctx.zero();
        for (const auto& [k, cc] : da) {
            smash_add_scaled(left,
                             smash_mul(antipode(ctx.mono(k.first), ctx), ctx.mono(k.second), ctx),
                             cc, ctx);
            smash_add_scaled(right,
                             smash_mul(ctx.mono(k.first), antipode(ctx.mono(k.second), ctx), ctx),
                             cc, ctx);
        }
        SmashPoly expect = smash_scale(ctx.one(), smash_counit(a), ctx);
        CHECK(left == expect);
        CHECK(right == expect);

        // counit axioms
        SmashPoly lc = ctx.zero(), rc = ctx.zero();
        for (const auto& [k, cc] : da) {
            if (k.first.first.empty())
                smash_add_scaled(rc, ctx.mono(k.second), cc, ctx);
            if (k.second.first.empty()) {
                // eps of (w,g) with w empty is 1
                smash_add_scaled(lc, ctx.mono(k.first), cc, ctx);
            }
        }
        CHECK(lc == a);
        CHECK(rc == a);
    }
}

#include "nichols/tensor.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <tuple>

using namespace nichols;

namespace {

BraidCtx make_ctx(CycNum q11, CycNum q12, CycNum q21, CycNum q22)
{
    BraidCtx ctx;
    ctx.fc.theta = 2;
    ctx.fc.order = WordOrder::natural(2);
    ctx.braiding.theta = 2;
    ctx.braiding.q = {{q11, q12}, {q21, q22}};
    ctx.braiding.validate();
    return ctx;
}

// Delta(p) - p(x)1 - 1(x)p with both tensor legs reduced by `red`.
TensorElem primitivity_defect(const NCPoly& p, const BraidCtx& ctx, const LegReduce& red)
{
    NCPoly r = red(p);
    TensorElem d = coproduct(r, ctx, red);
    for (const auto& [w, c] : r) {
        tensor_add_term(d, {w, Word{}}, -c, ctx.fc.lambdas);
        tensor_add_term(d, {Word{}, w}, -c, ctx.fc.lambdas);
    }
    return d;
}

LegReduce cube_ideal_reducer(const BraidCtx& ctx)
{
    return [&ctx](const NCPoly& p) {
        NCPoly r = ctx.fc.zero();
        for (const auto& [w, c] : p) {
            if (find_factor(w, Word{0, 0, 0}) || find_factor(w, Word{1, 1, 1}))
                continue;
            add_term(r, w, c, ctx.fc.lambdas);
        }
        return r;
    };
}

} // namespace

TEST_CASE("braided tensor multiplication twist")
{
    CycNum z = CycNum::root(12, 1);
    BraidCtx ctx = make_ctx(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
    NCPoly x1 = ctx.fc.gen(0), x2 = ctx.fc.gen(1);

    TensorElem a = tensor_of(ctx.fc.one(), x1, ctx);   // 1 (x) x1
    TensorElem b = tensor_of(x2, ctx.fc.one(), ctx);   // x2 (x) 1
    TensorElem ab = braided_tensor_mul(a, b, ctx);
    REQUIRE(ab.size() == 1);
    CHECK(ab.begin()->first == TensorKey{Word{1}, Word{0}});
    CHECK(ab.begin()->second == Coef(z.pow(9))); // q12 twist

    TensorElem c = braided_tensor_mul(tensor_of(x1, ctx.fc.one(), ctx), b, ctx);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == TensorKey{Word{0, 1}, Word{}});
    CHECK(c.begin()->second == Coef(1L)); // left factors never twist

    TensorElem d = braided_tensor_mul(a, tensor_of(ctx.fc.one(), x1, ctx), ctx);
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == TensorKey{Word{}, Word{0, 0}});
}

TEST_CASE("coproduct basics")
{
    CycNum z = CycNum::root(12, 1);
    BraidCtx ctx = make_ctx(z.pow(4), z.pow(9), CycNum(1L), z.pow(8));
    NCPoly x1 = ctx.fc.gen(0), x2 = ctx.fc.gen(1);

    TensorElem d1 = coproduct(x1, ctx);
    REQUIRE(d1.size() == 2);
    CHECK(d1.at({Word{0}, Word{}}) == Coef(1L));
    CHECK(d1.at({Word{}, Word{0}}) == Coef(1L));

    TensorElem d12 = coproduct(poly_mul(x1, x2, ctx.fc), ctx);
    REQUIRE(d12.size() == 4);
    CHECK(d12.at({Word{0, 1}, Word{}}) == Coef(1L));
    CHECK(d12.at({Word{0}, Word{1}}) == Coef(1L));
    CHECK(d12.at({Word{1}, Word{0}}) == Coef(z.pow(9))); // q12 x2 (x) x1
    CHECK(d12.at({Word{}, Word{0, 1}}) == Coef(1L));

    CHECK(counit(ctx.fc.one()) == Coef(1L));
    CHECK(counit(x1).is_zero());
}

TEST_CASE("braided commutator and root vectors")
{
    CycNum z = CycNum::root(24, 1);
    CycNum q11 = z.pow(3), q12 = z.pow(7), q21 = z.pow(5), q22 = z.pow(9);
    BraidCtx ctx = make_ctx(q11, q12, q21, q22);
    NCPoly x1 = ctx.fc.gen(0), x2 = ctx.fc.gen(1);

    NCPoly c12 = braided_commutator(x1, x2, ctx);
    REQUIRE(c12.size() == 2);
    CHECK(c12.at(Word{0, 1}) == Coef(1L));
    CHECK(c12.at(Word{1, 0}) == Coef(-q12));
    CHECK(root_vector("12", ctx) == c12);

    NCPoly c11 = braided_commutator(x1, x1, ctx);
    REQUIRE(c11.size() == 1);
    CHECK(c11.at(Word{0, 0}) == Coef(CycNum(1L) - q11));

    // x221 = [x2,[x2,x1]_c]_c = x2^2 x1 - q21(1+q22) x2x1x2 + q21^2 q22 x1x2^2
    NCPoly c221 = root_vector("221", ctx);
    REQUIRE(c221.size() == 3);
    CHECK(c221.at(Word{1, 1, 0}) == Coef(1L));
    CHECK(c221.at(Word{1, 0, 1}) == Coef(-q21 * (CycNum(1L) + q22)));
    CHECK(c221.at(Word{0, 1, 1}) == Coef(q21 * q21 * q22));
    CHECK(c221 == braided_commutator(x2, braided_commutator(x2, x1, ctx), ctx));

    // x112 peels the leading repeat; x122 brackets the trailing repeat
    CHECK(root_vector("112", ctx) ==
          braided_commutator(x1, braided_commutator(x1, x2, ctx), ctx));
    CHECK(root_vector("122", ctx) ==
          braided_commutator(braided_commutator(x1, x2, ctx), x2, ctx));
    CHECK(root_vector("11112", ctx) ==
          braided_commutator(x1, braided_commutator(x1, root_vector("112", ctx), ctx), ctx));

    CHECK(*poly_multidegree(root_vector("11212", ctx), ctx.fc) == MultiDegree{3, 2});
    CHECK(*poly_multidegree(root_vector("11112", ctx), ctx.fc) == MultiDegree{4, 1});

    CHECK_THROWS_AS(root_vector("", ctx), AlgebraError);
    CHECK_THROWS_AS(root_vector("1a2", ctx), AlgebraError);
    CHECK_THROWS_AS(root_vector("13", ctx), AlgebraError);
    CHECK_THROWS_AS(braided_commutator(poly_add(x1, poly_mul(x1, x2, ctx.fc), ctx.fc), x2, ctx),
                    AlgebraError);
}

TEST_CASE("coproduct is coassociative counital algebra map")
{
    // mixed conductors: q11 in G'_3, the rest in G'_2
    BraidCtx ctx = make_ctx(CycNum::root(3, 1), CycNum(-1L), CycNum(1L), CycNum(-1L));
    std::mt19937 rng(20240811);

    auto random_word = [&](std::size_t maxlen) {
        Word w;
        std::size_t len = rng() % (maxlen + 1);
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(rng() % 2);
        return w;
    };
    auto random_poly = [&]() {
        NCPoly p = ctx.fc.zero();
        for (int t = 0; t < 3; ++t)
            add_term(p, random_word(4), Coef(CycNum(static_cast<long>(rng() % 5) - 2)),
                     ctx.fc.lambdas);
        return p;
    };

    using Triple = std::map<std::tuple<Word, Word, Word>, CycNum>;
    auto add3 = [](Triple& t, std::tuple<Word, Word, Word> k, CycNum c) {
        auto [it, ins] = t.try_emplace(std::move(k), c);
        if (!ins) {
            it->second = it->second + c;
            if (it->second.is_zero())
                t.erase(it);
        }
    };

    for (int trial = 0; trial < 20; ++trial) {
        // coassociativity on a random word of degree <= 5
        Word w = random_word(5);
        TensorElem d = coproduct(ctx.fc.mono(w), ctx);
        Triple left, right;
        for (const auto& [k, c] : d) {
            for (const auto& [kk, cc] : coproduct(ctx.fc.mono(k.first), ctx))
                add3(left, {kk.first, kk.second, k.second},
                     c.constant_part() * cc.constant_part());
            for (const auto& [kk, cc] : coproduct(ctx.fc.mono(k.second), ctx))
                add3(right, {k.first, kk.first, kk.second},
                     c.constant_part() * cc.constant_part());
        }
        CHECK(left == right);

        // counit axioms and multiplicativity on random polynomials
        NCPoly p = random_poly(), q = random_poly();
        TensorElem dp = coproduct(p, ctx);
        NCPoly lp = ctx.fc.zero(), rp = ctx.fc.zero();
        for (const auto& [k, c] : dp) {
            if (k.first.empty())
                add_term(lp, k.second, c, ctx.fc.lambdas);
            if (k.second.empty())
                add_term(rp, k.first, c, ctx.fc.lambdas);
        }
        CHECK(lp == p);
        CHECK(rp == p);

        CHECK(coproduct(poly_mul(p, q, ctx.fc), ctx) ==
              braided_tensor_mul(dp, coproduct(q, ctx), ctx));
    }
}

TEST_CASE("bracket relation primitivity pins the conventions")
{
    CycNum z = CycNum::root(12, 1);
    CycNum m1(-1L);

    SECTION("second diagram family: paper coefficient reproduced exactly")
    {
        // q11 = q22 = -z^2, q12 q21 = z; relation
        // [x1,x122]_c - (1+z+z^2) z^4 q12 x12^2 is primitive mod <x1^3,x2^3>.
        CycNum q21 = z.pow(5), q12 = z / q21;
        BraidCtx ctx = make_ctx(m1 * z.pow(2), q12, q21, m1 * z.pow(2));
        LegReduce red = cube_ideal_reducer(ctx);
        NCPoly x12 = root_vector("12", ctx);
        CycNum mu = (CycNum(1L) + z + z.pow(2)) * z.pow(4) * q12;
        NCPoly r = poly_sub(braided_commutator(ctx.fc.gen(0), root_vector("122", ctx), ctx),
                            poly_scale(poly_mul(x12, x12, ctx.fc), Coef(mu), ctx.fc), ctx.fc);
        CHECK(primitivity_defect(r, ctx, red).empty());
    }

    SECTION("first diagram family: primitive coefficient is q11(1+z)q12/(1+z^3)")
    {
        // q11 = -conj(z)^2 = z^4, q12 q21 = -z^3 = z^9, q22 = -z^2 = z^8.
        CycNum q21 = z.pow(2), q12 = z.pow(9) / q21;
        BraidCtx ctx = make_ctx(z.pow(4), q12, q21, z.pow(8));
        LegReduce red = cube_ideal_reducer(ctx);
        NCPoly x12 = root_vector("12", ctx);
        NCPoly bracket = braided_commutator(ctx.fc.gen(0), root_vector("122", ctx), ctx);
        NCPoly sq = poly_mul(x12, x12, ctx.fc);

        CycNum mu = z.pow(4) * (CycNum(1L) + z) * q12 / (CycNum(1L) + z.pow(3));
        NCPoly r = poly_sub(bracket, poly_scale(sq, Coef(mu), ctx.fc), ctx.fc);
        CHECK(primitivity_defect(r, ctx, red).empty());

        // the opposite sign (z^10 = -z^4 in place of z^4) is NOT primitive
        NCPoly bad = poly_add(bracket, poly_scale(sq, Coef(mu), ctx.fc), ctx.fc);
        CHECK_FALSE(primitivity_defect(bad, ctx, red).empty());
    }

    SECTION("naive left-peel expansion of 122 admits no primitive combination")
    {
        CycNum q21 = z.pow(2), q12 = z.pow(9) / q21;
        BraidCtx ctx = make_ctx(z.pow(4), q12, q21, z.pow(8));
        LegReduce red = cube_ideal_reducer(ctx);
        NCPoly x12 = root_vector("12", ctx);
        NCPoly x122_peel = braided_commutator(
            ctx.fc.gen(0), braided_commutator(ctx.fc.gen(1), ctx.fc.gen(1), ctx), ctx);
        TensorElem db = primitivity_defect(
            braided_commutator(ctx.fc.gen(0), x122_peel, ctx), ctx, red);
        TensorElem dsq = primitivity_defect(poly_mul(x12, x12, ctx.fc), ctx, red);
        REQUIRE_FALSE(db.empty());
        REQUIRE_FALSE(dsq.empty());
        bool proportional = db.size() == dsq.size();
        if (proportional) {
            CycNum ratio = db.begin()->second.constant_part() /
                           dsq.at(db.begin()->first).constant_part();
            for (const auto& [k, v] : db) {
                auto it = dsq.find(k);
                if (it == dsq.end() ||
                    !(v.constant_part() == ratio * it->second.constant_part())) {
                    proportional = false;
                    break;
                }
            }
        }
        CHECK_FALSE(proportional);
    }
}

#include "nichols/ncpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nichols;

static FreeCtx ctx2()
{
    FreeCtx c;
    c.theta = 2;
    c.order = WordOrder::natural(2);
    return c;
}

TEST_CASE("polynomial ring basics")
{
    FreeCtx c = ctx2();
    NCPoly x1 = c.gen(0), x2 = c.gen(1);

    NCPoly p = poly_mul(x1, x2, c);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first == Word{0, 1});

    NCPoly q = poly_mul(poly_add(x1, x2, c), x1, c);
    REQUIRE(q.size() == 2);
    CHECK(q.count(Word{0, 0}) == 1);
    CHECK(q.count(Word{1, 0}) == 1);

    // (x1x2 - q12 x2x1) x2 with q12 = zeta_12
    CycNum z12 = CycNum::root(12, 1);
    NCPoly rel = poly_sub(poly_mul(x1, x2, c),
                          poly_scale(poly_mul(x2, x1, c), Coef(z12), c), c);
    NCPoly r = poly_mul(rel, x2, c);
    CHECK(r.at(Word{0, 1, 1}) == Coef(1L));
    CHECK(r.at(Word{1, 0, 1}) == Coef(-z12));
}

TEST_CASE("leading word and multidegree")
{
    FreeCtx c = ctx2();
    // equal degree: the dictionary-earlier word (precedence x1 < x2) leads
    NCPoly p = c.mono(Word{0, 1});
    add_term(p, Word{1, 0}, Coef(1L), c.lambdas);
    CHECK(leading_word(p) == Word{0, 1});

    NCPoly q = c.mono(Word{0, 0, 0});
    add_term(q, Word{0, 1}, Coef(1L), c.lambdas);
    CHECK(leading_word(q) == Word{0, 0, 0}); // degree first

    CHECK(*poly_multidegree(c.mono(Word{0, 0, 0}), c) == MultiDegree{3, 0});
    CHECK_FALSE(poly_multidegree(poly_add(c.gen(0), c.gen(1), c), c).has_value());

    CHECK_THROWS_AS(leading_word(c.zero()), AlgebraError);
}

TEST_CASE("free algebra properties randomized")
{
    FreeCtx c = ctx2();
    std::mt19937 rng(7);
    auto random_poly = [&]() {
        NCPoly p = c.zero();
        for (int t = 0; t < 3; ++t) {
            Word w;
            unsigned len = rng() % 5;
            for (unsigned i = 0; i < len; ++i)
                w.push_back(rng() % 2);
            add_term(p, w, Coef(CycNum(static_cast<long>(rng() % 7) - 3)), c.lambdas);
        }
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        NCPoly a = random_poly(), b = random_poly(), d = random_poly();
        CHECK(poly_mul(a, poly_mul(b, d, c), c) == poly_mul(poly_mul(a, b, c), d, c));
        CHECK(poly_mul(a, c.one(), c) == a);
        CHECK(poly_mul(c.one(), a, c) == a);
        // deg(pq) = deg p + deg q and leading-word multiplicativity
        if (!a.empty() && !b.empty()) {
            NCPoly la = c.mono(leading_word(a)), lb = c.mono(leading_word(b));
            CHECK(leading_word(poly_mul(a, b, c)) ==
                  leading_word(poly_mul(la, lb, c)));
        }
        auto da = poly_multidegree(a, c), db = poly_multidegree(b, c);
        if (da && db && !a.empty() && !b.empty()) {
            auto dab = poly_multidegree(poly_mul(a, b, c), c);
            if (dab)
                CHECK(*dab == *da + *db);
        }
    }
}

TEST_CASE("lambda coefficients")
{
    FreeCtx c = ctx2();
    unsigned l1 = c.lambdas.add("l1", {3, 0});
    unsigned l2 = c.lambdas.add("l2", {0, 2});
    c.lambdas.zero_products.push_back({l1, l2});

    Coef a = Coef::symbol(l1), b = Coef::symbol(l2);
    Coef prod = a * b;
    prod.prune(c.lambdas);
    CHECK(prod.is_zero());

    // deformed relation x1^3 - l1 is homogeneous thanks to the lambda grading
    NCPoly rel = c.mono(Word{0, 0, 0});
    add_term(rel, Word{}, -a, c.lambdas);
    CHECK(*poly_multidegree(rel, c) == MultiDegree{3, 0});

    Coef s = a * a + Coef(CycNum(2L)) * Coef(1L);
    CHECK(s.specialize({CycNum(3L), CycNum(0L)}) == CycNum(11L));
}

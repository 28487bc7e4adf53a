#include "nichols/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using nichols::CycNum;
using nichols::Rational;

static CycNum z(unsigned n, long k = 1) { return CycNum::root(n, k); }

TEST_CASE("roots of unity in the power basis")
{
    CHECK(z(12, 0).is_one());
    CHECK(z(12, 6) == -CycNum(1L));

    // x^4 mod Phi_12 = x^2 - 1
    CycNum a = z(12, 4);
    CHECK(a.coeffs() == std::vector<Rational>{-1, 0, 1, 0});
}

TEST_CASE("field arithmetic")
{
    CHECK(z(12, 6) * z(12, 6) == CycNum(1L));
    CHECK(z(12, 1).inverse() == z(12, 11));
    CHECK(z(12, 4) + CycNum(1L) == z(12, 2));

    CHECK_THROWS_AS(CycNum(0L).inverse(), nichols::DivisionByZero);
}

TEST_CASE("order of roots")
{
    CHECK(z(12).order() == 12u);
    CHECK(z(12, 4).order() == 3u);

    // zeta in G'_3 realized inside Q(zeta_12), q in G'_4: ord(zeta q^{-1}) = 12
    CycNum zeta = z(12, 4), q = z(12, 3);
    CHECK((zeta * q.inverse()).order() == 12u);

    CHECK_FALSE((z(12) + CycNum(1L)).order().has_value());

    for (unsigned n = 2; n <= 24; ++n)
        for (unsigned k = 1; k < n; ++k)
            REQUIRE(z(n, k).order() == n / std::gcd(n, k));
}

TEST_CASE("field axioms and cross-conductor embedding on random values")
{
    std::mt19937 rng(20240811);
    auto random_value = [&](unsigned n) {
        CycNum v(0L);
        for (int i = 0; i < 3; ++i) {
            long num = static_cast<long>(rng() % 11) - 5;
            v = v + CycNum(Rational(num, 1 + rng() % 4)) * z(n, rng() % n);
        }
        return v;
    };
    const unsigned conductors[] = {3, 4, 8, 9, 12, 24};
    for (int trial = 0; trial < 40; ++trial) {
        unsigned m = conductors[rng() % 6], n = conductors[rng() % 6];
        CycNum a = random_value(m), b = random_value(n), c = random_value(m);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero())
            CHECK(a * a.inverse() == CycNum(1L));
        // embedding into the lcm field is a ring homomorphism
        unsigned l = std::lcm(m, n) * 2;
        CHECK((a * b).embedded(std::lcm((a * b).conductor(), l)) ==
              a.embedded(l) * b.embedded(l));
        CHECK((a + b).embedded(std::lcm((a + b).conductor(), l)) ==
              a.embedded(l) + b.embedded(l));
    }
}

TEST_CASE("printing")
{
    CHECK(nichols::to_string(z(12, 4)) == "-1 + z12^2");
    CHECK(nichols::to_string(CycNum(Rational(-2, 3))) == "-2/3");
    CHECK(nichols::to_string(CycNum(0L)) == "0");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourdescent/rational.hpp"

using namespace fourdescent;

TEST_CASE("valuation basics") {
    CHECK(*valuation(Int(243), Int(3)) == 5);
    CHECK(!valuation(Rat(0), Int(7)).has_value());  // infinity
    CHECK(*valuation(Rat(9, 4), Int(2)) == -2);
    CHECK(*valuation(Rat(9, 4), Int(3)) == 2);
    CHECK_THROWS_AS(valuation(Rat(1), Int(6)), std::invalid_argument);
}

TEST_CASE("valuation additivity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-500, 500);
    const Int p(5);
    int done = 0;
    while (done < 150) {
        Rat a(d(rng), 1 + std::abs(d(rng)));
        Rat b(d(rng), 1 + std::abs(d(rng)));
        if (a == 0 || b == 0) continue;
        a.canonicalize();
        b.canonicalize();
        CHECK(*valuation(a * b, p) == *valuation(a, p) + *valuation(b, p));
        if (a + b != 0 && *valuation(a, p) != *valuation(b, p))
            CHECK(*valuation(a + b, p) == std::min(*valuation(a, p), *valuation(b, p)));
        ++done;
    }
}

TEST_CASE("square_class examples") {
    CHECK(square_class(Rat(81)).representative == 1);
    CHECK(square_class(Rat(243)).representative == 3);  // 243 = 3 * 9^2
    CHECK(square_class(Rat(-12)).representative == -3);
    CHECK(square_class(Rat(1, 2)).representative == 2);
    CHECK_THROWS_AS(square_class(Rat(0)), std::invalid_argument);
}

TEST_CASE("square_class is square-invariant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-300, 300);
    int done = 0;
    while (done < 150) {
        long rn = d(rng), rd = 1 + std::abs(d(rng)) % 40;
        long sn = d(rng), sd = 1 + std::abs(d(rng)) % 40;
        if (rn == 0 || sn == 0) continue;
        Rat r(rn, rd), s(sn, sd);
        r.canonicalize();
        s.canonicalize();
        CHECK(square_class(r * s * s) == square_class(r));
        ++done;
    }
}

TEST_CASE("prime_divisors") {
    auto pd = prime_divisors(Int(1221));
    CHECK(pd == std::vector<Int>{3, 11, 37});
    CHECK(prime_divisors(Int(1)).empty());
    CHECK(prime_divisors(Int(64)) == std::vector<Int>{2});
    CHECK(prime_divisors(Int(-30)) == std::vector<Int>{2, 3, 5});
    CHECK_THROWS_AS(prime_divisors(Int(0)), std::invalid_argument);
}

TEST_CASE("factorize handles large semiprime cofactors") {
    Int p("1000003"), q("1000033");
    auto f = factorize(p * q);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == p);
    CHECK(f[1].first == q);
}

TEST_CASE("primality") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(37)));
    CHECK(is_prime(Int("1000000007")));
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(1221)));
    // strong pseudoprime to several small bases
    CHECK(!is_prime(Int("3215031751")));
}

TEST_CASE("square and root helpers") {
    CHECK(is_rational_square(Rat(9, 4)));
    CHECK(!is_rational_square(Rat(2)));
    CHECK(is_rational_square(Rat(0)));
    CHECK(!is_rational_square(Rat(-4)));
    CHECK(rational_sqrt(Rat(9, 4)) == Rat(3, 2));
    CHECK(*rational_nth_root(Rat(531441), 6) == 9);  // 3^12
    CHECK(!rational_nth_root(Rat(2), 6).has_value());
    CHECK(*rational_nth_root(Rat(-8, 27), 3) == Rat(-2, 3));
}

TEST_CASE("parse and print") {
    CHECK(parse_rat("-1/3") == Rat(-1, 3));
    CHECK(parse_rat("42") == 42);
    CHECK(rat_to_string(Rat(-5, 7)) == "-5/7");
    CHECK(rat_to_string(parse_rat("4/2")) == "2");
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("height") {
    CHECK(height(Rat(3, 7)) == 7);
    CHECK(height(Rat(-50)) == 50);
    CHECK(height(Rat(0)) == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fourdescent/poly.hpp"

using namespace fourdescent;

namespace {

Poly from_ints(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

Poly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    int n = dd(rng);
    std::vector<Rat> c(n + 1);
    for (auto& x : c) x = Rat(dc(rng));
    if (c.back() == 0) c.back() = 1;
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("resultant examples") {
    CHECK(resultant(from_ints({1, 0, 1}), from_ints({2, 0, 1})) == 1);
    Poly f = from_ints({-1221, 0, 0, 1});
    CHECK(resultant(f, f) == 0);
    CHECK(resultant(from_ints({-2, 1}), from_ints({-5, 1})) == -3);
    CHECK(resultant(Poly::constant(Rat(3)), from_ints({1, 1})) == 3);
    CHECK_THROWS_AS(resultant(Poly(), Poly()), std::invalid_argument);
}

TEST_CASE("resultant symmetry: Res(f,g) = (-1)^(mn) Res(g,f)") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 120) {
        Poly f = random_poly(rng, 4, 8), g = random_poly(rng, 4, 8);
        if (f.is_zero() || g.is_zero()) continue;
        Rat lhs = resultant(f, g), rhs = resultant(g, f);
        if ((f.degree() * g.degree()) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("resultant multiplicativity on a product") {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 50; ++i) {
        Poly f = random_poly(rng, 3, 5), g = random_poly(rng, 3, 5), h = random_poly(rng, 2, 5);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(from_ints({1, 0, 1})) == -4);
    CHECK(discriminant(from_ints({-1221, 0, 0, 1})) == Rat(-40252707));
    // the monic quartic of the built-in instance; value frozen from an
    // independent resultant-formula evaluation
    Poly monic = from_ints({-243, -117, -54, 0, 1});
    CHECK(discriminant(monic) == Rat(Int("-29344223403")));
    CHECK(discriminant(from_ints({1, 0, 0, 0, 1})) == 256);
    CHECK_THROWS_AS(discriminant(from_ints({1, 1})), std::invalid_argument);
}

TEST_CASE("discriminant scaling: disc(c f) = c^(2n-2) disc(f)") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> dc(1, 9);
    int done = 0;
    while (done < 100) {
        Poly f = random_poly(rng, 4, 6);
        if (f.degree() < 2) continue;
        Rat c(dc(rng), dc(rng));
        c.canonicalize();
        Rat scale(1);
        for (int i = 0; i < 2 * f.degree() - 2; ++i) scale *= c;
        CHECK(discriminant(f * c) == scale * discriminant(f));
        ++done;
    }
}

TEST_CASE("rational_roots examples") {
    CHECK(rational_roots(from_ints({-1221, 0, 0, 1})).empty());
    auto r = rational_roots(from_ints({-1, 0, 1}));
    CHECK(r == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(rational_roots(from_ints({-243, -117, -54, 0, 1})).empty());
    CHECK(rational_roots(from_ints({-729, -351, -162, 0, 3})).empty());
    // multiplicity and non-integral roots: (2x-1)^2 (x+3)
    Poly f = from_ints({-1, 2}) * from_ints({-1, 2}) * from_ints({3, 1});
    auto rr = rational_roots(f);
    CHECK(rr == std::vector<Rat>{Rat(-3), Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("rational_roots exhaustive on factored products") {
    std::mt19937_64 rng(104);
    std::uniform_int_distribution<long> dn(-6, 6), dd(1, 4);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> expect;
        Poly f = Poly::constant(Rat(1 + (i % 3)));
        for (int j = 0; j < 3; ++j) {
            Rat root(dn(rng), dd(rng));
            root.canonicalize();
            expect.push_back(root);
            f = f * Poly({-root, Rat(1)});
        }
        std::sort(expect.begin(), expect.end());
        CHECK(rational_roots(f) == expect);
        for (const Rat& r : expect) CHECK(f(r) == 0);
    }
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible_deg_le_4(from_ints({-243, -117, -54, 0, 1})));
    CHECK(is_irreducible_deg_le_4(from_ints({-729, -351, -162, 0, 3})));
    CHECK(!is_irreducible_deg_le_4(from_ints({-1, 0, 0, 0, 1})));  // x^4 - 1
    CHECK(is_irreducible_deg_le_4(from_ints({-1221, 0, 0, 1})));
    CHECK(is_irreducible_deg_le_4(from_ints({1, 0, 1})));
    CHECK(!is_irreducible_deg_le_4(from_ints({4, 0, -4, 0, 1})));   // (x^2-2)^2
    CHECK(is_irreducible_deg_le_4(from_ints({1, 0, 0, 0, 1})));     // x^4 + 1
    CHECK(!is_irreducible_deg_le_4(from_ints({1, 2, 3, 2, 1})));    // (x^2+x+1)^2
    CHECK(is_irreducible_deg_le_4(from_ints({2, 0, 0, 1})));
    CHECK_THROWS_AS(is_irreducible_deg_le_4(Poly::constant(Rat(2))), std::invalid_argument);
}

TEST_CASE("irreducibility vs constructed factorizations") {
    std::mt19937_64 rng(105);
    std::uniform_int_distribution<long> dc(-5, 5);
    int done = 0;
    while (done < 60) {
        // a product of two integer quadratics must be detected as reducible
        Poly a = from_ints({dc(rng), dc(rng), 1 + std::abs(dc(rng))});
        Poly b = from_ints({dc(rng), dc(rng), 1 + std::abs(dc(rng))});
        Poly f = a * b;
        if (f.degree() != 4) continue;
        CHECK(!is_irreducible_deg_le_4(f));
        ++done;
    }
}

TEST_CASE("real root counting and isolation") {
    CHECK(count_real_roots(from_ints({-2, 0, 1})) == 2);
    CHECK(count_real_roots(from_ints({1, 0, 1})) == 0);
    CHECK(count_real_roots(from_ints({-243, -117, -54, 0, 1})) == 2);
    CHECK(count_real_roots(from_ints({0, -1, 0, 1})) == 3);  // x^3 - x... roots -1,0,1
    auto iv = isolate_real_roots(from_ints({-2, 0, 1}));
    REQUIRE(iv.size() == 2);
    for (const auto& seg : iv) {
        CHECK(!seg.exact);
        CHECK(seg.lo < seg.hi);
    }
    auto iv2 = isolate_real_roots(from_ints({0, -1, 0, 1}));
    REQUIRE(iv2.size() == 3);
    CHECK(iv2[0].exact);  // all three roots rational
    CHECK(iv2[1].lo == 0);
    CHECK(iv2[2].hi == 1);
}

TEST_CASE("divmod round trip") {
    std::mt19937_64 rng(106);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(rng, 6, 9), g = random_poly(rng, 3, 9);
        if (g.is_zero()) continue;
        auto [q, r] = f.divmod(g);
        CHECK(f == q * g + r);
        CHECK((r.is_zero() || r.degree() < g.degree()));
    }
}

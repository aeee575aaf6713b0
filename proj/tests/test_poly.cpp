#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "taujac/ratpoly.hpp"
#include "taujac/sturm.hpp"
#include "testutil.hpp"

using namespace taujac;
using testutil::poly_from_roots;
using testutil::rand_poly;
using testutil::rand_rational;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("rational basics and parsing") {
    CHECK(Rational(6, -4) == R(-3, 2));
    CHECK(Rational::parse("3/4") == R(3, 4));
    CHECK(Rational::parse("-4/5") == R(-4, 5));
    CHECK(Rational::parse("12") == R(12));
    CHECK(Rational::parse("0.25") == R(1, 4));
    CHECK(Rational::parse("1e-8") == Rational(1) / R(100000000));
    CHECK(Rational::parse("-4.25e2") == R(-425));
    CHECK(Rational::parse("2/6") == R(1, 3));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
    CHECK(R(3, 2).pow(3) == R(27, 8));
    CHECK(R(-3).abs() == R(3));
    CHECK(R(7).str() == "7");
    CHECK(R(-7, 3).str() == "-7/3");
}

TEST_CASE("polynomial arithmetic examples") {
    const RatPoly a{R(1), R(2)};   // 1 + 2mu
    const RatPoly b{R(3), R(-2)};  // 3 - 2mu
    CHECK(a + b == RatPoly{R(4)});
    CHECK(a + RatPoly{} == a);
    CHECK(RatPoly{R(0), R(1)} + RatPoly{R(0), R(1)} == RatPoly{R(0), R(2)});

    CHECK(RatPoly{R(1), R(1)} * RatPoly{R(1), R(-1)} == RatPoly{R(1), R(0), R(-1)});
    CHECK(Rational(0) * RatPoly{R(1), R(1)} == RatPoly{});
    CHECK(shift_mul_x(RatPoly{R(1), R(1)}, 1) == RatPoly{R(0), R(1), R(1)});

    CHECK(RatPoly{R(1), R(45), R(105)}.derivative() == RatPoly{R(45), R(210)});
    CHECK(RatPoly{R(5)}.derivative() == RatPoly{});
    CHECK(RatPoly{R(0), R(0), R(0), R(1)}.derivative() == RatPoly{R(0), R(0), R(3)});

    CHECK(RatPoly{R(1), R(2), R(3)}.degree() == 2);
    CHECK(RatPoly{}.degree() == -1);
    CHECK(RatPoly{R(1), R(1), R(0)}.degree() == 1);  // canonical stripping
}

TEST_CASE("gcd examples") {
    const RatPoly p12 = poly_from_roots({R(-1), R(-2)});
    const RatPoly p1 = poly_from_roots({R(-1)});
    CHECK(gcd(p12, p1) == p1);
    CHECK(gcd(RatPoly{R(1), R(0), R(1)}, RatPoly{R(2), R(0), R(1)}) == RatPoly{R(1)});

    // (mu+1)^2 (mu+3) = mu^3 + 5 mu^2 + 7 mu + 3; the double root shows up
    // in gcd(p, p').
    const RatPoly p{R(3), R(7), R(5), R(1)};
    CHECK(p == poly_from_roots({R(-1), R(-1), R(-3)}));
    CHECK(gcd(p, p.derivative()) == p1);
    CHECK_THROWS_AS(gcd(RatPoly{}, RatPoly{}), std::domain_error);
}

TEST_CASE("divmod and exact division") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 50; ++t) {
        const RatPoly a = rand_poly(rng, 7);
        RatPoly b = rand_poly(rng, 4);
        if (b.is_zero()) b = RatPoly{R(1), R(2)};
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(exact_div(RatPoly{R(1), R(1)}, RatPoly{R(1), R(0), R(1)}), std::domain_error);
}

TEST_CASE("sturm chain examples") {
    const RatPoly p{R(2), R(3), R(1)};  // mu^2 + 3mu + 2
    const auto chain = sturm_chain(p);
    REQUIRE(chain.size() == 3);
    CHECK(chain.back().degree() == 0);
    CHECK(chain.back().leading().sign() > 0);

    const RatPoly lin{R(5), R(2)};
    const auto chain2 = sturm_chain(lin);
    REQUIRE(chain2.size() == 2);
    CHECK(chain2[1].degree() == 0);

    CHECK(count_real_roots(RatPoly{R(1), R(0), R(1)}) == 0);
}

TEST_CASE("count_real_roots examples") {
    const RatPoly p{R(2), R(3), R(1)};
    CHECK(count_real_roots(p, R(-3), R(0)) == 2);
    CHECK(count_real_roots(p) == 2);
    CHECK(count_real_roots(RatPoly{R(1), R(45), R(105)}, R(-1), R(0)) == 2);
    // half-open convention: a root sitting at an endpoint belongs to the
    // interval that has it as its upper end
    CHECK(count_real_roots(p, R(-2), R(-1)) == 1);
    CHECK(count_real_roots(p, R(-1), R(0)) == 0);
    CHECK(count_real_roots(p, R(-3), R(-2)) == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const RatPoly a = rand_poly(rng, 5), b = rand_poly(rng, 5), c = rand_poly(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("product rule on random polynomials") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        const RatPoly a = rand_poly(rng, 5), b = rand_poly(rng, 5);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        RatPoly a = rand_poly(rng, 5), b = rand_poly(rng, 5);
        if (a.is_zero() && b.is_zero()) continue;
        // plant a known common factor now and then
        if (t % 2 == 0) {
            const RatPoly f{rand_rational(rng, -4, 4, 2), R(1)};
            a = a * f;
            b = b * f;
        }
        if (a.is_zero() && b.is_zero()) continue;
        const RatPoly g = gcd(a, b);
        if (!a.is_zero()) CHECK(divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(divmod(b, g).second.is_zero());
    }
}

TEST_CASE("root counts on hand-built factored instances") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        const auto roots = testutil::rand_distinct_negatives(rng, 1 + t % 5);
        RatPoly p = poly_from_roots(roots);
        // attach a complex pair per parity
        int complex_pairs = 0;
        if (t % 3 == 0) {
            p = p * RatPoly{R(1), R(1), R(1)};  // z^2 + z + 1, complex pair
            complex_pairs = 1;
        }
        CHECK(count_real_roots(p) == p.degree() - 2 * complex_pairs);
    }
}

TEST_CASE("sturm count equals distinct roots of the squarefree part") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto base = testutil::rand_distinct_negatives(rng, 3);
        // every root doubled once in a while
        std::vector<Rational> with_mult = base;
        if (t % 2 == 0) with_mult.push_back(base[0]);
        const RatPoly p = poly_from_roots(with_mult);
        const RatPoly sf = squarefree_part(p);
        CHECK(count_real_roots(p) == count_real_roots(sf));
        CHECK(count_real_roots(p) == 3);
    }
}

TEST_CASE("content and primitive part") {
    const RatPoly p{R(2, 3), R(4, 3), R(2)};
    CHECK(content(p) == R(2, 3));
    CHECK(primitive_part(p) == RatPoly{R(1), R(2), R(3)});
    CHECK(primitive_part(p) * content(p) == p);
}

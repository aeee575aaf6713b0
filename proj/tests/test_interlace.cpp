#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "taujac/interlace.hpp"
#include "taujac/jacobi.hpp"
#include "taujac/stability.hpp"
#include "testutil.hpp"

using namespace taujac;
using testutil::interlacing_pair;
using testutil::poly_from_roots;
using testutil::rand_distinct_negatives;
using testutil::rand_rational;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("interlace_check examples") {
    CHECK(interlace_check(poly_from_roots({R(-1), R(-3)}), poly_from_roots({R(-2)})).verdict ==
          InterlaceVerdict::Strict);

    // phi_4 and phi_3 at Legendre parameters: -0.405 < -1/15 < -0.0235
    const auto res = interlace_check(phi(4, R(0), R(0)), phi(3, R(0), R(0)));
    CHECK(res.verdict == InterlaceVerdict::Strict);
    REQUIRE(res.sequence.size() == 3);
    CHECK(res.sequence[0].owner == 'p');
    CHECK(res.sequence[1].owner == 'q');
    CHECK(res.sequence[2].owner == 'p');

    CHECK(interlace_check(poly_from_roots({R(-1), R(-2)}), poly_from_roots({R(-1)})).verdict ==
          InterlaceVerdict::NonStrict);

    CHECK_THROWS_AS(interlace_check(RatPoly{}, RatPoly{R(1)}), std::invalid_argument);
}

TEST_CASE("interlace_check failures carry a reason") {
    const auto r1 = interlace_check(poly_from_roots({R(-1), R(-2), R(-3)}),
                                    poly_from_roots({R(-5)}));
    CHECK(r1.verdict == InterlaceVerdict::Fail);
    CHECK(!r1.violation.empty());

    const auto r2 = interlace_check(RatPoly{R(1), R(0), R(1)}, poly_from_roots({R(-1)}));
    CHECK(r2.verdict == InterlaceVerdict::Fail);
    CHECK(r2.violation == "p has non-real zeros");

    const auto r3 = interlace_check(poly_from_roots({R(-1), R(-1)}), poly_from_roots({R(-2)}));
    CHECK(r3.verdict == InterlaceVerdict::Fail);
    CHECK(r3.violation == "p has a multiple zero");
}

TEST_CASE("degenerate sizes follow the documented convention") {
    CHECK(interlace_check(RatPoly{R(2)}, poly_from_roots({R(-1)})).verdict ==
          InterlaceVerdict::Strict);
    CHECK(interlace_check(RatPoly{R(2)}, RatPoly{R(5)}).verdict == InterlaceVerdict::Strict);
    CHECK(interlace_check(RatPoly{R(2)}, poly_from_roots({R(-1), R(-2)})).verdict ==
          InterlaceVerdict::Fail);
    // shared factor, quotients constant/linear
    CHECK(interlace_check(poly_from_roots({R(-1), R(-2)}), poly_from_roots({R(-1)})).verdict ==
          InterlaceVerdict::NonStrict);
    CHECK(interlace_check(poly_from_roots({R(-1), R(-1), R(-2)}),
                          poly_from_roots({R(-1)})).verdict == InterlaceVerdict::Fail);
}

TEST_CASE("symmetry and scale invariance") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        const auto [p, q] = interlacing_pair(rng, 5);
        const auto c = rand_rational(rng, 1, 9, 3);
        CHECK(interlace_check(p, q).verdict == interlace_check(q, p).verdict);
        CHECK(interlace_check(c * p, q).verdict == interlace_check(p, q).verdict);
        CHECK(interlace_check(p, c * q).verdict == interlace_check(p, q).verdict);
    }
}

TEST_CASE("hb_compose examples") {
    CHECK(hb_compose(RatPoly{R(1), R(1)}, RatPoly{R(1)}) == RatPoly{R(1), R(1), R(1)});
    CHECK(hb_compose(RatPoly{R(1)}, RatPoly{}) == RatPoly{R(1)});

    // reversed phi_4 and its derivative: stability via Rolle interlacing
    const RatPoly rev{R(105), R(45), R(1)};
    const RatPoly f = hb_compose(rev, rev.derivative());
    CHECK(routh_hurwitz(f).stable);
}

TEST_CASE("hb_check examples") {
    CHECK(hb_check(RatPoly{R(1), R(1)}, RatPoly{R(1)}));
    CHECK_FALSE(hb_check(RatPoly{R(-1), R(1)}, RatPoly{R(1)}));
    // scaled phi_4 / phi_3 pair
    CHECK(hb_check(phi(4, R(0), R(0)), phi(3, R(0), R(0))));
}

TEST_CASE("three-way Hermite-Biehler agreement") {
    std::mt19937_64 rng(42);
    int interlacing_seen = 0, failing_seen = 0;
    for (int t = 0; t < 60; ++t) {
        RatPoly p, q;
        if (t % 2 == 0) {
            std::tie(p, q) = interlacing_pair(rng, 3 + t % 5);
        } else {
            p = poly_from_roots(rand_distinct_negatives(rng, 2 + t % 3));
            q = poly_from_roots(rand_distinct_negatives(rng, 2 + t % 3));
        }
        const bool by_interlace =
            interlace_check(p, q.mul_x(1)).verdict == InterlaceVerdict::Strict;
        const bool by_hb = hb_check(p, q);
        const bool by_routh = routh_hurwitz(hb_compose(p, q)).stable;
        CHECK(by_interlace == by_hb);
        CHECK(by_hb == by_routh);
        (by_hb ? interlacing_seen : failing_seen)++;
    }
    CHECK(interlacing_seen > 10);
    CHECK(failing_seen > 10);
}

TEST_CASE("even_odd_split") {
    const auto [e, o] = even_odd_split(RatPoly{R(1), R(2), R(3)});
    CHECK(e == RatPoly{R(1), R(3)});
    CHECK(o == RatPoly{R(2)});

    const auto [e2, o2] = even_odd_split(RatPoly{R(4), R(0), R(7)});
    CHECK(o2.is_zero());
    CHECK(e2 == RatPoly{R(4), R(7)});

    std::mt19937_64 rng(43);
    for (int t = 0; t < 25; ++t) {
        const RatPoly h = testutil::rand_poly(rng, 9);
        const auto [ev, od] = even_odd_split(h);
        RatPoly recomposed;
        for (int k = 0; k <= ev.degree(); ++k)
            recomposed = recomposed + RatPoly::monomial(ev.coeff(k), 2 * k);
        for (int k = 0; k <= od.degree(); ++k)
            recomposed = recomposed + RatPoly::monomial(od.coeff(k), 2 * k + 1);
        CHECK(recomposed == h);
    }
}

TEST_CASE("even/odd split of f and g reproduces the phi combinations") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<int> nd(4, 9);
        const int n = nd(rng);
        const Rational a = rand_rational(rng, -15, 23, 8);
        const Rational b = rand_rational(rng, -15, 23, 8);
        const Rational A = rand_rational(rng, -9, 9, 4);
        const Rational nab = Rational(n) + a + b;
        const Rational half(1, 2);

        const auto [fe, fo] = even_odd_split(f_poly({n, a, b}, A));
        CHECK(fe == A * phi(n, a, b) + (nab * half) * phi(n - 2, a + R(1), b + R(1)).mul_x(1));
        CHECK(fo == (A * (nab + R(1)) * half) * phi(n - 1, a + R(1), b + R(1)) +
                        phi(n - 1, a, b));

        const auto [ge, go] = even_odd_split(g_poly({n, a, b}, A));
        CHECK(ge == ((nab + R(1)) * half) * phi(n - 1, a + R(1), b + R(1)).mul_x(1) +
                        A * phi(n - 1, a, b));
        CHECK(go == phi(n, a, b) + (A * nab * half) * phi(n - 2, a + R(1), b + R(1)));
    }
}

TEST_CASE("real_pair_probe") {
    const std::vector<std::pair<Rational, Rational>> ones{{R(1), R(1)}};
    CHECK(real_pair_probe(poly_from_roots({R(-1), R(-3)}), poly_from_roots({R(-2)}), ones));

    // (x+1)(x+2) against (x+4): not a real pair. The x-weighted combination
    // A p + B x q stays real-rooted for every positive A, B (its
    // discriminant is A^2 + 16AB + 16B^2), so the falsifier lives on the
    // plain combination: p + q = x^2 + 4x + 6 has discriminant -8.
    const RatPoly p = poly_from_roots({R(-1), R(-2)});
    const RatPoly q = poly_from_roots({R(-4)});
    CHECK((R(1) * p + R(1) * q) == RatPoly{R(6), R(4), R(1)});
    CHECK_FALSE(real_pair_probe(p, q, ones));

    CHECK(real_pair_probe(poly_from_roots({R(-1), R(-2)}), RatPoly{}, ones));
    CHECK_FALSE(real_pair_probe(RatPoly{R(1), R(0), R(1)}, RatPoly{}, ones));
    CHECK_THROWS_AS(real_pair_probe(p, q, {}), std::invalid_argument);
}

TEST_CASE("probe agrees with the certified decision on random pairs") {
    std::mt19937_64 rng(45);
    std::vector<std::pair<Rational, Rational>> samples;
    for (int s = 0; s < 100; ++s)
        samples.emplace_back(rand_rational(rng, 1, 24, 4), rand_rational(rng, 1, 24, 4));

    int fails_without_falsifier = 0;
    for (int t = 0; t < 25; ++t) {
        RatPoly p, q;
        if (t % 2 == 0) {
            std::tie(p, q) = interlacing_pair(rng, 5);
        } else {
            p = poly_from_roots(rand_distinct_negatives(rng, 3));
            q = poly_from_roots(rand_distinct_negatives(rng, 2));
        }
        const bool strict = interlace_check(p, q.mul_x(1)).verdict == InterlaceVerdict::Strict;
        const bool probe = real_pair_probe(p, q, samples);
        if (strict) CHECK(probe);          // necessary direction, always
        if (!strict && probe) ++fails_without_falsifier;  // probe is only a sampler
    }
    // the dense sample grid should falsify most non-pairs
    CHECK(fails_without_falsifier <= 3);
}

TEST_CASE("rolle: real-rooted polynomials interlace their derivative") {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 15; ++t) {
        const RatPoly p = poly_from_roots(rand_distinct_negatives(rng, 2 + t % 4));
        CHECK(interlace_check(p, p.derivative()).verdict != InterlaceVerdict::Fail);
    }
}

TEST_CASE("phi_n interlaces mu phi_{n-1} on the corollary region") {
    // -1<alpha<1 with beta>0, or 1<=alpha<2 with beta>1
    for (const auto& [a, b] : {std::pair<Rational, Rational>{R(-1, 2), R(1, 2)},
                               {R(1, 2), R(3)},
                               {R(3, 2), R(5, 4)}}) {
        for (int n : {4, 6, 9, 13}) {
            CAPTURE(n);
            CHECK(interlace_check(phi(n, a, b), phi(n - 1, a, b).mul_x(1)).verdict ==
                  InterlaceVerdict::Strict);
        }
    }
}

TEST_CASE("ccw interlacing route: phi_n against the shifted phi_{n-1}") {
    for (const auto& [a, b] : {std::pair<Rational, Rational>{R(-1, 2), R(1, 2)},
                               {R(1, 2), R(4)},
                               {R(7, 8), R(-1, 2)}}) {
        for (int n : {4, 7, 12, 25}) {
            CAPTURE(n);
            CHECK(interlace_check(phi(n, a, b), phi(n - 1, a + R(1), b + R(1))).verdict ==
                  InterlaceVerdict::Strict);
        }
    }
}

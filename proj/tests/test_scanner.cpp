#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "taujac/interlace.hpp"
#include "taujac/jacobi.hpp"
#include "taujac/realroots.hpp"
#include "taujac/scanner.hpp"
#include "taujac/stability.hpp"

using namespace taujac;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

GridSpec small_grid(std::vector<Rational> alphas, std::vector<Rational> betas, int n_lo, int n_hi) {
    GridSpec g;
    g.alphas = std::move(alphas);
    g.betas = std::move(betas);
    g.n_lo = n_lo;
    g.n_hi = n_hi;
    g.jobs = 2;
    return g;
}

}  // namespace

TEST_CASE("rational_range") {
    const auto r = rational_range(R(-7, 8), R(7, 8), R(1, 8));
    CHECK(r.size() == 15);
    CHECK(r.front() == R(-7, 8));
    CHECK(r.back() == R(7, 8));
    CHECK_THROWS(rational_range(R(0), R(1), R(0)));
}

TEST_CASE("conjA scan on a small proved-region grid") {
    const auto reports = scan_conjecture_a(small_grid({R(-1, 2), R(1, 2)}, {R(1, 2), R(2)}, 4, 8));
    CHECK(reports.size() == 2 * 2 * 5);
    for (const auto& r : reports) {
        CAPTURE(r.point.n);
        CHECK(r.verdict == ScanVerdict::Holds);
        CHECK(r.expected_ok);
        CHECK(r.region == "cond_conjA");
    }
}

TEST_CASE("conjA spot value n=4 Legendre-ish point") {
    const auto reports = scan_conjecture_a(small_grid({R(1, 8)}, {R(1, 8)}, 4, 4));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == ScanVerdict::Holds);
}

TEST_CASE("conjB scan holds on the theorem region and fails in the pocket") {
    SUBCASE("theorem region") {
        const auto reports = scan_conjecture_b(small_grid({R(-1, 2)}, {R(1), R(3)}, 5, 9));
        for (const auto& r : reports) {
            CHECK(r.verdict == ScanVerdict::Holds);
            CHECK(r.region == "thm_cb_main_2");
            CHECK(r.expected_ok);
        }
    }
    SUBCASE("failure pocket carries witnesses") {
        const auto reports = scan_conjecture_b(small_grid({R(29, 32)}, {R(-1, 8)}, 5, 5));
        bool found_fail = false;
        for (const auto& r : reports) {
            CHECK(r.region == "failure_pocket");
            CHECK(r.expected_ok);  // failures there break no claim
            if (r.verdict == ScanVerdict::Fails) {
                found_fail = true;
                CHECK_FALSE(r.witness.is_null());
                CHECK(reverify(r));
                CHECK(reverify_witness(r.witness));
            }
        }
        CHECK(found_fail);
    }
}

TEST_CASE("ccw scan on a small grid") {
    const auto reports = scan_ccw(small_grid({R(-7, 8), R(0), R(7, 8)}, {R(-7, 8), R(4)}, 2, 10));
    for (const auto& r : reports) {
        CHECK(r.verdict == ScanVerdict::Holds);
        CHECK(r.region == "ccw_base");
    }
}

TEST_CASE("ccw extension regions") {
    // 1 <= alpha < 2 with beta > 0
    for (const auto& r : scan_ccw(small_grid({R(3, 2)}, {R(1, 2), R(2)}, 2, 12))) {
        CHECK(r.verdict == ScanVerdict::Holds);
        CHECK(r.region == "ccw_ext_high_alpha");
    }
    // -1 < alpha < 0 with -2 < beta <= -1
    for (const auto& r : scan_ccw(small_grid({R(-1, 2)}, {R(-3, 2), R(-1)}, 2, 12))) {
        CHECK(r.verdict == ScanVerdict::Holds);
        CHECK(r.region == "ccw_ext_low_beta");
    }
}

TEST_CASE("conjA still holds inside the conjB failure pocket") {
    const auto reports =
        scan_conjecture_a(small_grid({R(29, 32), R(31, 32)}, {R(-1, 2), R(-7, 8)}, 4, 12));
    for (const auto& r : reports) {
        CAPTURE(r.point.n);
        CHECK(r.verdict == ScanVerdict::Holds);
        CHECK(r.region == "remark_pocket");
        CHECK(r.expected_ok);  // observed, not claimed
    }
}

TEST_CASE("ccw eventually fails for alpha = 7/2") {
    // the coefficient-ratio limit sits below 2 there, so large n must break
    GridSpec g = small_grid({R(7, 2)}, {R(0)}, 4, 24);
    const auto reports = scan_ccw(g);
    bool found = false;
    int first_fail_n = 0;
    for (const auto& r : reports)
        if (r.verdict == ScanVerdict::Fails && !found) {
            found = true;
            first_fail_n = r.point.n;
            CHECK(r.region == "unclaimed");
            CHECK(r.expected_ok);
        }
    CHECK(found);
    // necessary_ratio already dips below 2m/(m-1) at n = 9
    CHECK(first_fail_n <= 12);
    const RatPoly p9 = phi(9, R(7, 2), R(0));
    CHECK(necessary_ratio(p9) < R(2) * R(4) / R(3));
}

TEST_CASE("lemma-derivs scan") {
    const auto reports =
        check_section2_lemma(small_grid({R(0), R(3, 2)}, {R(1, 2)}, 4, 8));
    for (const auto& r : reports) {
        CAPTURE(r.point.n);
        CAPTURE(r.point.alpha.str());
        CHECK(r.verdict == ScanVerdict::Holds);
    }
    // n = 4 exercises the constant-derivative edge
    const auto edge = check_section2_lemma(small_grid({R(0)}, {R(1, 2)}, 4, 4));
    REQUIRE(edge.size() == 1);
    CHECK(edge[0].verdict == ScanVerdict::Holds);
}

TEST_CASE("chain inequalities on the theorem region") {
    GridSpec g = small_grid({R(-1, 2)}, {R(1)}, 5, 7);
    g.a_samples = {R(1, 2), R(1), R(3)};
    const auto reports = check_chains(g);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CAPTURE(r.point.n);
        CHECK(r.verdict == ScanVerdict::Holds);
    }
    // out-of-region points come back undefined, not failed
    const auto outside = check_chains(small_grid({R(1, 2)}, {R(1)}, 5, 5));
    REQUIRE(outside.size() == 1);
    CHECK(outside[0].verdict == ScanVerdict::Undefined);
}

TEST_CASE("section 5 implications") {
    const auto reports = check_section5(small_grid({R(-1, 2)}, {R(3, 2)}, 6, 8));
    int holds = 0;
    for (const auto& r : reports) {
        CHECK(r.verdict != ScanVerdict::Fails);
        if (r.verdict == ScanVerdict::Holds) ++holds;
    }
    CHECK(holds > 0);
}

TEST_CASE("threshold bisection matches the published onsets") {
    const Rational tol = R(1, 100000);
    const Rational a1 = find_threshold_thm4(12, R(-4, 5), {R(9, 10), R(1)}, tol);
    CHECK(std::abs(a1.to_double() - 0.97842) < 5e-4);
    const Rational a2 = find_threshold_thm4(12, R(-9, 10), {R(9, 10), R(1)}, tol);
    CHECK(std::abs(a2.to_double() - 0.97140) < 5e-4);
    CHECK(a2 < a1);  // onset moves down as beta decreases

    CHECK_THROWS_AS(find_threshold_thm4(12, R(-4, 5), {R(1, 2), R(3, 4)}, tol),
                    std::domain_error);
}

TEST_CASE("vieta sums") {
    const auto sums = vieta_asymptotics(8, R(0), R(0));
    REQUIRE(sums.size() == 5);
    CHECK(sums[0] == std::pair<int, Rational>{4, R(-3, 7)});
    // the n=3 sum is -1/15 (single root); below the n>=4 range but easy to confirm
    const RatPoly p3 = phi(3, R(0), R(0));
    CHECK(-(p3.coeff(0) / p3.coeff(1)) == R(-1, 15));
    CHECK_THROWS(vieta_asymptotics(3, R(0), R(0)));
}

TEST_CASE("scan determinism") {
    GridSpec g = small_grid({R(-1, 2), R(1, 4)}, {R(1, 2)}, 4, 6);
    const auto r1 = scan_conjecture_a(g);
    const auto r2 = scan_conjecture_a(g);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].point.n == r2[i].point.n);
        CHECK(r1[i].point.alpha == r2[i].point.alpha);
        CHECK(r1[i].verdict == r2[i].verdict);
        CHECK(r1[i].witness == r2[i].witness);
    }
}

TEST_CASE("report serialization round-trips") {
    const auto reports = scan_conjecture_b(small_grid({R(29, 32)}, {R(-1, 8)}, 5, 6));
    SUBCASE("json") {
        for (const auto& r : reports) {
            const ScanReport back = report_from_json(report_to_json(r));
            CHECK(back.check_id == r.check_id);
            CHECK(back.point.n == r.point.n);
            CHECK(back.point.alpha == r.point.alpha);
            CHECK(back.point.extra == r.point.extra);
            CHECK(back.verdict == r.verdict);
            CHECK(back.witness == r.witness);
            CHECK(reverify(back) == true);
        }
    }
    SUBCASE("csv") {
        std::stringstream ss;
        write_csv(ss, reports);
        const auto back = read_csv(ss);
        REQUIRE(back.size() == reports.size());
        for (size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].point.alpha == reports[i].point.alpha);
            CHECK(back[i].verdict == reports[i].verdict);
            CHECK(back[i].witness == reports[i].witness);
        }
    }
}

TEST_CASE("summary and expectation flags") {
    const auto reports = scan_conjecture_b(small_grid({R(29, 32)}, {R(-1, 8)}, 5, 5));
    const auto j = summary_json(reports);
    CHECK(j["total"].get<size_t>() == reports.size());
    CHECK(j["fails"].get<size_t>() > 0);
    CHECK(j["unexpected_failures"].get<size_t>() == 0);
    CHECK_FALSE(has_unexpected_failure(reports));
}

TEST_CASE("lem:main equivalence on sampled points") {
    // real-rootedness of phi_n^(a,b-1) vs strict interlacing of the pair,
    // plus the zr_1 ordering; checked across regular and pocket parameters
    for (const auto& [a, b] : {std::pair<Rational, Rational>{R(-1, 2), R(2)},
                               {R(1, 2), R(1, 2)},
                               {R(29, 32), R(7, 8)},   // beta - 1 lands in the pocket
                               {R(31, 32), R(1, 2)}}) {
        for (int n : {5, 8, 11}) {
            CAPTURE(n);
            CAPTURE(a.str());
            CAPTURE(b.str());
            const bool simple_real =
                all_negative_simple(phi(n, a, b - R(1))) == RootVerdict::NegativeSimple;
            const bool strict =
                interlace_check(phi(n, a, b), phi(n - 1, a, b)).verdict ==
                InterlaceVerdict::Strict;
            CHECK(simple_real == strict);
            if (simple_real) {
                RootList ln = isolate(phi(n, a, b));
                RootList ln1 = isolate(phi(n - 1, a, b));
                // zr_1(phi_{n-1}) <= zr_1(phi_n)
                CHECK(compare_root_values(ln1, 0, ln, 0) <= 0);
            }
        }
    }
}

#include "taujac/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "taujac/interlace.hpp"
#include "taujac/jacobi.hpp"
#include "taujac/realroots.hpp"
#include "taujac/stability.hpp"

namespace taujac {

using nlohmann::json;

std::vector<Rational> rational_range(const Rational& lo, const Rational& hi,
                                     const Rational& step) {
    if (!(step > Rational(0))) throw std::invalid_argument("rational_range: step must be > 0");
    std::vector<Rational> out;
    for (Rational x = lo; !(hi < x); x += step) out.push_back(x);
    return out;
}

const char* to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::Holds: return "holds";
        case ScanVerdict::Fails: return "fails";
        case ScanVerdict::Undefined: return "undefined";
    }
    return "?";
}

namespace {

ScanVerdict verdict_from_string(const std::string& s) {
    if (s == "holds") return ScanVerdict::Holds;
    if (s == "fails") return ScanVerdict::Fails;
    if (s == "undefined") return ScanVerdict::Undefined;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

// ---------------------------------------------------------------- regions

bool in_cond_conjA(const Rational& a, const Rational& b) {
    const Rational m1(-1), z(0), one(1), two(2);
    return (m1 < a && a < z && m1 < b) || (!(a < z) && a < one && z < b) ||
           (!(a < one) && a < two && one < b);
}

bool in_failure_pocket(const Rational& a, const Rational& b) {
    return Rational(-1) < b && b < Rational(0) && Rational(0) < a && a < Rational(1);
}

// ------------------------------------------------------------- utilities

json interval_json(const RootRec& r) { return json::array({r.lo.str(), r.hi.str()}); }

json sequence_json(const std::vector<InterlaceEntry>& seq) {
    json arr = json::array();
    for (const auto& e : seq)
        arr.push_back(json::array({std::string(1, e.owner), e.lo.str(), e.hi.str()}));
    return arr;
}

json base_witness(const std::string& check, const GridPoint& pt) {
    json w;
    w["check"] = check;
    w["n"] = pt.n;
    w["alpha"] = pt.alpha.str();
    w["beta"] = pt.beta.str();
    if (!pt.extra.empty()) w["extra"] = pt.extra;
    return w;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

ScanReport finish(const std::string& check, GridPoint pt, std::string region, ScanVerdict v,
                  bool claimed, json witness, const Timer& timer) {
    ScanReport r;
    r.check_id = check;
    r.point = std::move(pt);
    r.region = std::move(region);
    r.verdict = v;
    r.expected_ok = !(claimed && v == ScanVerdict::Fails);
    r.witness = std::move(witness);
    r.elapsed_ms = timer.ms();
    return r;
}

// Root comparison with the zr conventions: index 0 is the exact value 0;
// an index past the last root is the -infinity sentinel. A comparison with
// -infinity on the left is satisfied; -infinity on the right fails; both
// infinite is vacuously satisfied (no roots left to constrain).
struct ZrRef {
    RootList* rl;
    int i;
    bool finite() const { return i == 0 || static_cast<size_t>(i) <= rl->roots.size(); }
};

bool zr_strictly_less(const ZrRef& x, const ZrRef& y) {
    if (!x.finite()) return true;
    if (!y.finite()) return false;
    if (x.i == 0 && y.i == 0) return false;
    if (x.i == 0) return compare_root_to_value(*y.rl, static_cast<size_t>(y.i - 1), Rational(0)) > 0;
    if (y.i == 0) return compare_root_to_value(*x.rl, static_cast<size_t>(x.i - 1), Rational(0)) < 0;
    return compare_root_values(*x.rl, static_cast<size_t>(x.i - 1), *y.rl,
                               static_cast<size_t>(y.i - 1)) < 0;
}

// --------------------------------------------------------- point checks

std::vector<ScanReport> eval_conjA(const GridPoint& pt) {
    Timer t;
    const std::string region = in_cond_conjA(pt.alpha, pt.beta) ? "cond_conjA"
                               : in_failure_pocket(pt.alpha, pt.beta) ? "remark_pocket"
                                                                      : "unclaimed";
    const bool claimed = region == "cond_conjA";
    if (pt.n < 4)
        return {finish("conjA", pt, "n_below_4", ScanVerdict::Undefined, false, nullptr, t)};
    const InterlaceResult res =
        interlace_check(phi(pt.n, pt.alpha, pt.beta), phi(pt.n - 1, pt.alpha, pt.beta));
    json w;
    if (res.verdict != InterlaceVerdict::Strict) {
        w = base_witness("conjA", pt);
        w["kind"] = "interlace_fail";
        w["pair"] = "phi:n,n-1";
        w["verdict"] = to_string(res.verdict);
        w["violation"] = res.violation;
        w["sequence"] = sequence_json(res.sequence);
    }
    const ScanVerdict v =
        res.verdict == InterlaceVerdict::Strict ? ScanVerdict::Holds : ScanVerdict::Fails;
    return {finish("conjA", pt, region, v, claimed, w, t)};
}

std::vector<ScanReport> eval_conjB(const GridPoint& pt) {
    const Rational m1(-1), z(0), one(1);
    std::string region;
    if (m1 < pt.alpha && pt.alpha < z && z < pt.beta)
        region = "thm_cb_main_2";
    else if (z < pt.alpha && pt.alpha < one && one < pt.beta)
        region = "conjB_shifted_range";
    else if (in_failure_pocket(pt.alpha, pt.beta))
        region = "failure_pocket";
    else
        region = "unclaimed";

    std::vector<ScanReport> out;
    for (const char* pair : {"base", "shifted"}) {
        // The shifted family is claimed only on -1<alpha<0<beta; on the
        // 0<alpha<1<beta range its effective parameters leave the proved
        // window and counterexamples exist.
        const bool claimed = region == "thm_cb_main_2" ||
                             (region == "conjB_shifted_range" && std::string(pair) == "base");
        Timer t;
        GridPoint p = pt;
        p.extra["pair"] = pair;
        if (pt.n < 5) {
            out.push_back(
                finish("conjB", p, "n_below_5", ScanVerdict::Undefined, false, nullptr, t));
            continue;
        }
        const bool shifted = std::string(pair) == "shifted";
        const Rational a = shifted ? pt.alpha + one : pt.alpha;
        const Rational b = shifted ? pt.beta + one : pt.beta;
        const InterlaceResult res = interlace_check(phi(pt.n, a, b), phi(pt.n - 2, a, b));
        json w;
        if (res.verdict != InterlaceVerdict::Strict) {
            w = base_witness("conjB", p);
            w["kind"] = "interlace_fail";
            w["pair"] = "phi:n,n-2";
            w["family"] = pair;
            w["verdict"] = to_string(res.verdict);
            w["violation"] = res.violation;
            w["sequence"] = sequence_json(res.sequence);
        }
        const ScanVerdict v =
            res.verdict == InterlaceVerdict::Strict ? ScanVerdict::Holds : ScanVerdict::Fails;
        out.push_back(finish("conjB", p, region, v, claimed, w, t));
    }
    return out;
}

std::vector<ScanReport> eval_ccw(const GridPoint& pt) {
    Timer t;
    const Rational m2(-2), m1(-1), z(0), one(1), two(2);
    const Rational &a = pt.alpha, &b = pt.beta;
    std::string region;
    if (m1 < a && a < one && m1 < b)
        region = "ccw_base";
    else if (!(a < one) && a < two && z < b)
        region = "ccw_ext_high_alpha";
    else if (m1 < a && a < z && m2 < b && !(m1 < b))
        region = "ccw_ext_low_beta";
    else
        region = "unclaimed";
    const bool claimed = region != "unclaimed";
    if (pt.n < 2)
        return {finish("ccw", pt, "n_below_2", ScanVerdict::Undefined, false, nullptr, t)};
    const RootVerdict rv = all_negative_simple(phi(pt.n, a, b));
    json w;
    if (rv != RootVerdict::NegativeSimple) {
        w = base_witness("ccw", pt);
        w["kind"] = "rootverdict_fail";
        w["verdict"] = to_string(rv);
    }
    const ScanVerdict v =
        rv == RootVerdict::NegativeSimple ? ScanVerdict::Holds : ScanVerdict::Fails;
    return {finish("ccw", pt, region, v, claimed, w, t)};
}

std::vector<ScanReport> eval_lemma_derivs(const GridPoint& pt) {
    Timer t;
    const Rational m1(-1), z(0), one(1), two(2);
    const Rational &a = pt.alpha, &b = pt.beta;
    const bool in_region = (m1 < a && a < one && m1 < b) || (!(a < one) && a < two && z < b);
    if (!in_region)
        return {finish("lemma_derivs", pt, "outside_precondition", ScanVerdict::Undefined, false,
                       nullptr, t)};
    if (pt.n < 3)
        return {finish("lemma_derivs", pt, "n_below_3", ScanVerdict::Undefined, false, nullptr, t)};

    const RatPoly d1 = phi(pt.n, a, b).derivative();
    const RatPoly d2 = phi(pt.n - 1, a, b).derivative();
    const RatPoly d3 = phi(pt.n, a, b - one).derivative();
    const std::pair<const char*, std::pair<const RatPoly*, const RatPoly*>> pairs[] = {
        {"(phi_n)',(phi_{n-1})'", {&d1, &d2}},
        {"(phi_n)',(phi_n^{b-1})'", {&d1, &d3}},
        {"(phi_{n-1})',(phi_n^{b-1})'", {&d2, &d3}},
    };
    for (const auto& [name, pq] : pairs) {
        const InterlaceResult res = interlace_check(*pq.first, *pq.second);
        if (res.verdict != InterlaceVerdict::Strict) {
            json w = base_witness("lemma_derivs", pt);
            w["kind"] = "interlace_fail";
            w["pair"] = name;
            w["verdict"] = to_string(res.verdict);
            w["violation"] = res.violation;
            return {finish("lemma_derivs", pt, "lemma_region", ScanVerdict::Fails, true, w, t)};
        }
    }
    return {finish("lemma_derivs", pt, "lemma_region", ScanVerdict::Holds, true, nullptr, t)};
}

std::vector<Rational> parse_a_samples(const GridPoint& pt) {
    std::vector<Rational> out;
    auto it = pt.extra.find("A_samples");
    if (it == pt.extra.end()) return {Rational(1, 2), Rational(1), Rational(3)};
    std::istringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(tok));
    if (out.empty()) throw std::invalid_argument("chains: empty A_samples");
    return out;
}

std::vector<ScanReport> eval_chains(const GridPoint& pt) {
    Timer t;
    const Rational m1(-1), z(0), one(1), two(2);
    const Rational &a = pt.alpha, &b = pt.beta;
    if (!(m1 < a && a < z && z < b))
        return {finish("thmB_chain", pt, "outside_precondition", ScanVerdict::Undefined, false,
                       nullptr, t)};
    if (pt.n < 5)
        return {finish("thmB_chain", pt, "n_below_5", ScanVerdict::Undefined, false, nullptr, t)};

    const int n = pt.n;
    const Rational ap = a + one, bp = b + one;
    const RatPoly pn = phi(n, a, b);
    const RatPoly pn_1 = phi(n - 1, a, b);
    const RatPoly pn_p = phi(n, ap, bp);
    const RatPoly pn1_p = phi(n - 1, ap, bp);
    const RatPoly pn2_p = phi(n - 2, ap, bp);

    auto fail = [&](const std::string& what) {
        json w = base_witness("thmB_chain", pt);
        w["kind"] = "chain_fail";
        w["violation"] = what;
        return std::vector<ScanReport>{
            finish("thmB_chain", pt, "thm_cb_main_2", ScanVerdict::Fails, true, w, t)};
    };

    RootList Lm2 = isolate(pn2_p);
    RootList Lm1 = isolate(pn1_p);
    RootList Lnp = isolate(pn_p);
    RootList Ln = isolate(pn);
    auto ref = [](RootList& rl, int i) { return ZrRef{&rl, i}; };

    for (int i = 1; 2 * i <= n; ++i) {
        struct Ineq {
            const char* name;
            ZrRef lhs, rhs;
        };
        const Ineq ineqs[] = {
            {"z_rel0: zr_i(phi_{n-2}^+) < zr_i(phi_{n-1}^+)", ref(Lm2, i), ref(Lm1, i)},
            {"z_rel0: zr_i(phi_{n-1}^+) < zr_{i-1}(phi_{n-2}^+)", ref(Lm1, i), ref(Lm2, i - 1)},
            {"z_rel0: zr_i(phi_{n-1}^+) < zr_i(phi_n^+)", ref(Lm1, i), ref(Lnp, i)},
            {"z_rel0: zr_i(phi_n^+) < zr_{i-1}(phi_{n-1}^+)", ref(Lnp, i), ref(Lm1, i - 1)},
            {"cz_rel3: zr_i(phi_{n-2}^+) < zr_i(phi_n)", ref(Lm2, i), ref(Ln, i)},
            {"cz_rel3: zr_i(phi_n) < zr_{i-1}(phi_{n-2}^+)", ref(Ln, i), ref(Lm2, i - 1)},
            {"cz_rel5: zr_i(phi_n^+) < zr_i(phi_n)", ref(Lnp, i), ref(Ln, i)},
            {"cz_rel5: zr_i(phi_n) < zr_{i-1}(phi_n^+)", ref(Ln, i), ref(Lnp, i - 1)},
            {"z_rel1: zr_i(phi_n^+) < zr_i(phi_n)", ref(Lnp, i), ref(Ln, i)},
        };
        for (const auto& q : ineqs)
            if (!zr_strictly_less(q.lhs, q.rhs))
                return fail(std::string(q.name) + " at i=" + std::to_string(i));
    }

    // Interlacing with the mu-shifted companions.
    if (interlace_check(pn, pn2_p.mul_x(1)).verdict != InterlaceVerdict::Strict)
        return fail("cr_interl_2: (phi_n, mu phi_{n-2}^+) not strict");
    if (interlace_check(pn, pn_p.mul_x(1)).verdict != InterlaceVerdict::Strict)
        return fail("cr_interl_2: (phi_n, mu phi_n^+) not strict");

    // Combination pairs for each sampled A > 0.
    const Rational nab = Rational(n) + a + b;
    for (const Rational& A : parse_a_samples(pt)) {
        const RatPoly r2a = (two * A) * pn + nab * pn2_p.mul_x(1);
        const RatPoly r2b = (A * (nab + one)) * pn1_p + two * pn_1;
        if (interlace_check(r2a, r2b).verdict != InterlaceVerdict::Strict)
            return fail("cr_main_2: r_comb_2 pair not strict at A=" + A.str());
        const RatPoly r3a = (nab + one) * pn1_p.mul_x(1) + (two * A) * pn_1;
        const RatPoly r3b = two * pn + (A * nab) * pn2_p;
        if (interlace_check(r3a, r3b).verdict != InterlaceVerdict::Strict)
            return fail("cr_main_2: r_comb_3 pair not strict at A=" + A.str());
    }
    return {finish("thmB_chain", pt, "thm_cb_main_2", ScanVerdict::Holds, true, nullptr, t)};
}

std::vector<ScanReport> eval_sec5(const GridPoint& pt) {
    const Rational one(1);
    const int n = pt.n;
    std::vector<ScanReport> out;

    auto emit = [&](const char* lemma, ScanVerdict v, json w, const Timer& t) {
        GridPoint p = pt;
        p.extra["lemma"] = lemma;
        out.push_back(finish("sec5_implications", std::move(p),
                             v == ScanVerdict::Undefined ? "hypothesis_false" : "implication",
                             v, true, std::move(w), t));
    };

    {
        Timer t;
        if (n < 4) {
            emit("instr1", ScanVerdict::Undefined, nullptr, t);
        } else {
            const RatPoly pn = phi(n, pt.alpha, pt.beta);
            const RatPoly p1 = phi(n - 1, pt.alpha, pt.beta);
            const RatPoly p2 = phi(n - 2, pt.alpha, pt.beta);
            bool hyp = interlace_check(pn, p1).verdict == InterlaceVerdict::Strict &&
                       interlace_check(pn, p2).verdict == InterlaceVerdict::Strict &&
                       interlace_check(p1, p2).verdict == InterlaceVerdict::Strict;
            if (hyp) {
                RootList Ln = isolate(pn), L1 = isolate(p1), L2 = isolate(p2);
                hyp = zr_strictly_less({&L2, 1}, {&L1, 1}) && zr_strictly_less({&L1, 1}, {&Ln, 1});
            }
            if (!hyp) {
                emit("instr1", ScanVerdict::Undefined, nullptr, t);
            } else {
                const bool concl =
                    interlace_check(phi(n, pt.alpha, pt.beta - one),
                                    phi(n - 1, pt.alpha, pt.beta - one)).verdict ==
                    InterlaceVerdict::Strict;
                json w;
                if (!concl) {
                    w = base_witness("sec5_implications", pt);
                    w["kind"] = "implication_fail";
                    w["lemma"] = "instr1";
                }
                emit("instr1", concl ? ScanVerdict::Holds : ScanVerdict::Fails, w, t);
            }
        }
    }
    {
        Timer t;
        if (n < 4) {
            emit("final", ScanVerdict::Undefined, nullptr, t);
        } else {
            const Rational ap = pt.alpha + one, bp = pt.beta + one;
            const RatPoly pn = phi(n, pt.alpha, pt.beta);
            const RatPoly qn = phi(n, ap, bp);
            const RatPoly qn1 = phi(n - 1, ap, bp);
            bool hyp = interlace_check(pn, qn).verdict == InterlaceVerdict::Strict &&
                       interlace_check(pn, qn1).verdict == InterlaceVerdict::Strict;
            if (hyp) {
                RootList Ln = isolate(pn), Lq = isolate(qn), Lq1 = isolate(qn1);
                hyp = zr_strictly_less({&Lq1, 1}, {&Ln, 1}) && zr_strictly_less({&Lq, 1}, {&Ln, 1});
            }
            if (!hyp) {
                emit("final", ScanVerdict::Undefined, nullptr, t);
            } else {
                const bool concl =
                    interlace_check(phi(n, ap, pt.beta), phi(n - 1, ap, pt.beta)).verdict ==
                    InterlaceVerdict::Strict;
                json w;
                if (!concl) {
                    w = base_witness("sec5_implications", pt);
                    w["kind"] = "implication_fail";
                    w["lemma"] = "final";
                }
                emit("final", concl ? ScanVerdict::Holds : ScanVerdict::Fails, w, t);
            }
        }
    }
    return out;
}

std::vector<ScanReport> eval_point(const std::string& check, const GridPoint& pt) {
    if (check == "conjA") return eval_conjA(pt);
    if (check == "conjB") return eval_conjB(pt);
    if (check == "ccw") return eval_ccw(pt);
    if (check == "lemma_derivs") return eval_lemma_derivs(pt);
    if (check == "thmB_chain") return eval_chains(pt);
    if (check == "sec5_implications") return eval_sec5(pt);
    throw std::invalid_argument("unknown check '" + check + "'");
}

// ------------------------------------------------------------- parallel

std::vector<ScanReport> run_parallel(const std::vector<GridPoint>& pts, const std::string& check,
                                     int jobs) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    jobs = std::min(jobs, static_cast<int>(std::max<size_t>(pts.size(), 1)));

    std::vector<std::vector<ScanReport>> slots(pts.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= pts.size() || failed.load()) return;
            try {
                slots[i] = eval_point(check, pts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int k = 0; k < jobs; ++k) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);

    std::vector<ScanReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

void canonical_sort(std::vector<ScanReport>& reports) {
    auto key_less = [](const ScanReport& x, const ScanReport& y) {
        if (x.check_id != y.check_id) return x.check_id < y.check_id;
        if (x.point.n != y.point.n) return x.point.n < y.point.n;
        if (!(x.point.alpha == y.point.alpha)) return x.point.alpha < y.point.alpha;
        if (!(x.point.beta == y.point.beta)) return x.point.beta < y.point.beta;
        return x.point.extra < y.point.extra;
    };
    std::stable_sort(reports.begin(), reports.end(), key_less);
}

std::vector<GridPoint> expand(const GridSpec& grid, int n_min,
                              const std::map<std::string, std::string>& extra = {}) {
    std::vector<GridPoint> pts;
    for (int n = std::max(grid.n_lo, n_min); n <= grid.n_hi; ++n)
        for (const Rational& a : grid.alphas)
            for (const Rational& b : grid.betas) pts.push_back(GridPoint{n, a, b, extra});
    return pts;
}

}  // namespace

std::vector<ScanReport> scan_conjecture_a(const GridSpec& grid) {
    auto reports = run_parallel(expand(grid, 4), "conjA", grid.jobs);
    canonical_sort(reports);
    return reports;
}

std::vector<ScanReport> scan_conjecture_b(const GridSpec& grid) {
    auto reports = run_parallel(expand(grid, 5), "conjB", grid.jobs);

    // Sharpen hold/fail boundaries in alpha: on a verdict flip between
    // neighbouring cells the straddling cell is subdivided twice.
    std::vector<Rational> alphas = grid.alphas;
    std::sort(alphas.begin(), alphas.end());
    auto find_report = [&](const std::string& pair, int n, const Rational& a, const Rational& b)
        -> const ScanReport* {
        for (const auto& r : reports)
            if (r.point.n == n && r.point.alpha == a && r.point.beta == b &&
                r.point.extra.at("pair") == pair)
                return &r;
        return nullptr;
    };
    std::vector<GridPoint> probes;
    for (const char* pair : {"base", "shifted"}) {
        for (int n = std::max(grid.n_lo, 5); n <= grid.n_hi; ++n) {
            for (const Rational& b : grid.betas) {
                for (size_t k = 0; k + 1 < alphas.size(); ++k) {
                    const ScanReport* r1 = find_report(pair, n, alphas[k], b);
                    const ScanReport* r2 = find_report(pair, n, alphas[k + 1], b);
                    if (!r1 || !r2) continue;
                    const bool flip = (r1->verdict == ScanVerdict::Holds &&
                                       r2->verdict == ScanVerdict::Fails) ||
                                      (r1->verdict == ScanVerdict::Fails &&
                                       r2->verdict == ScanVerdict::Holds);
                    if (!flip) continue;
                    const Rational m1 = (alphas[k] + alphas[k + 1]) / Rational(2);
                    const Rational m2 = (alphas[k] + m1) / Rational(2);
                    const Rational m3 = (m1 + alphas[k + 1]) / Rational(2);
                    for (const Rational& a : {m1, m2, m3})
                        probes.push_back(GridPoint{n, a, b, {{"refined", "1"}}});
                }
            }
        }
    }
    if (!probes.empty()) {
        auto extra = run_parallel(probes, "conjB", grid.jobs);
        for (auto& r : extra) reports.push_back(std::move(r));
    }
    canonical_sort(reports);
    return reports;
}

std::vector<ScanReport> scan_ccw(const GridSpec& grid) {
    auto reports = run_parallel(expand(grid, 2), "ccw", grid.jobs);
    canonical_sort(reports);
    return reports;
}

std::vector<ScanReport> check_section2_lemma(const GridSpec& grid) {
    auto reports = run_parallel(expand(grid, 3), "lemma_derivs", grid.jobs);
    canonical_sort(reports);
    return reports;
}

std::vector<ScanReport> check_chains(const GridSpec& grid) {
    std::string joined;
    for (const Rational& A : grid.a_samples) {
        if (!joined.empty()) joined += ",";
        joined += A.str();
    }
    auto reports = run_parallel(expand(grid, 5, {{"A_samples", joined}}), "thmB_chain", grid.jobs);
    canonical_sort(reports);
    return reports;
}

std::vector<ScanReport> check_section5(const GridSpec& grid) {
    auto reports = run_parallel(expand(grid, 4), "sec5_implications", grid.jobs);
    canonical_sort(reports);
    return reports;
}

Rational find_threshold_thm4(int n, const Rational& beta,
                             std::pair<Rational, Rational> bracket, const Rational& tol) {
    if (!(tol > Rational(0))) throw std::invalid_argument("find_threshold_thm4: tol must be > 0");
    Rational lo = bracket.first, hi = bracket.second;
    if (hi < lo) std::swap(lo, hi);
    bool slo = stability_of_theorem4(n, lo, beta).stable;
    const bool shi = stability_of_theorem4(n, hi, beta).stable;
    if (slo == shi) throw std::domain_error("find_threshold_thm4: bracket does not straddle");
    while (!(hi - lo < tol)) {
        const Rational mid = (lo + hi) / Rational(2);
        if (stability_of_theorem4(n, mid, beta).stable == slo)
            lo = mid;
        else
            hi = mid;
    }
    // Return the unstable-onset end.
    return slo ? hi : lo;
}

std::vector<std::pair<int, Rational>> vieta_asymptotics(int n_max, const Rational& alpha,
                                                        const Rational& beta) {
    if (n_max < 4) throw std::invalid_argument("vieta_asymptotics: n_max must be >= 4");
    std::vector<std::pair<int, Rational>> out;
    out.reserve(static_cast<size_t>(n_max) - 3);
    for (int n = 4; n <= n_max; ++n) {
        const RatPoly p = phi(n, alpha, beta);
        const int m = p.degree();
        out.emplace_back(n, -(p.coeff(m - 1) / p.coeff(m)));
    }
    return out;
}

bool reverify(const ScanReport& report) {
    GridPoint pt = report.point;
    pt.extra.erase("pair");
    pt.extra.erase("lemma");
    pt.extra.erase("refined");
    const auto fresh = eval_point(report.check_id, pt);
    for (const auto& r : fresh) {
        auto matches = [&](const char* key) {
            const auto a = report.point.extra.find(key);
            const auto b = r.point.extra.find(key);
            return (a == report.point.extra.end()) == (b == r.point.extra.end()) &&
                   (a == report.point.extra.end() || a->second == b->second);
        };
        if (matches("pair") && matches("lemma")) return r.verdict == report.verdict;
    }
    return false;
}

bool reverify_witness(const json& w) {
    ScanReport r;
    r.check_id = w.at("check").get<std::string>();
    r.point.n = w.at("n").get<int>();
    r.point.alpha = Rational::parse(w.at("alpha").get<std::string>());
    r.point.beta = Rational::parse(w.at("beta").get<std::string>());
    if (w.contains("extra"))
        r.point.extra = w.at("extra").get<std::map<std::string, std::string>>();
    if (w.contains("family")) r.point.extra["pair"] = w.at("family").get<std::string>();
    if (w.contains("lemma")) r.point.extra["lemma"] = w.at("lemma").get<std::string>();
    r.verdict = ScanVerdict::Fails;  // witnesses are only attached to failures
    return reverify(r);
}

json report_to_json(const ScanReport& r) {
    json j;
    j["check"] = r.check_id;
    j["n"] = r.point.n;
    j["alpha"] = r.point.alpha.str();
    j["beta"] = r.point.beta.str();
    j["extra"] = r.point.extra;
    j["region"] = r.region;
    j["verdict"] = to_string(r.verdict);
    j["expected_ok"] = r.expected_ok;
    j["witness"] = r.witness;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

ScanReport report_from_json(const json& j) {
    ScanReport r;
    r.check_id = j.at("check").get<std::string>();
    r.point.n = j.at("n").get<int>();
    r.point.alpha = Rational::parse(j.at("alpha").get<std::string>());
    r.point.beta = Rational::parse(j.at("beta").get<std::string>());
    r.point.extra = j.at("extra").get<std::map<std::string, std::string>>();
    r.region = j.at("region").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.expected_ok = j.at("expected_ok").get<bool>();
    r.witness = j.at("witness");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

namespace {

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

std::string extra_encode(const std::map<std::string, std::string>& m) {
    std::string s;
    for (const auto& [k, v] : m) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

std::map<std::string, std::string> extra_decode(const std::string& s) {
    std::map<std::string, std::string> m;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto eq = item.find('=');
        if (eq != std::string::npos) m[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return m;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ScanReport>& reports) {
    os << "check_id,n,alpha,beta,extra,region,verdict,expected_ok,elapsed_ms,witness\n";
    for (const auto& r : reports) {
        os << r.check_id << "," << r.point.n << "," << r.point.alpha.str() << ","
           << r.point.beta.str() << "," << csv_escape(extra_encode(r.point.extra)) << ","
           << r.region << "," << to_string(r.verdict) << "," << (r.expected_ok ? 1 : 0) << ","
           << r.elapsed_ms << "," << csv_escape(r.witness.is_null() ? "" : r.witness.dump())
           << "\n";
    }
}

std::vector<ScanReport> read_csv(std::istream& is) {
    std::vector<ScanReport> out;
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        const auto f = csv_split(line);
        if (f.size() != 10) throw std::invalid_argument("read_csv: malformed row");
        ScanReport r;
        r.check_id = f[0];
        r.point.n = std::stoi(f[1]);
        r.point.alpha = Rational::parse(f[2]);
        r.point.beta = Rational::parse(f[3]);
        r.point.extra = extra_decode(f[4]);
        r.region = f[5];
        r.verdict = verdict_from_string(f[6]);
        r.expected_ok = f[7] == "1";
        r.elapsed_ms = std::stod(f[8]);
        r.witness = f[9].empty() ? json(nullptr) : json::parse(f[9]);
        out.push_back(std::move(r));
    }
    return out;
}

json summary_json(const std::vector<ScanReport>& reports) {
    size_t holds = 0, fails = 0, undefined = 0, unexpected = 0;
    json failures = json::array();
    for (const auto& r : reports) {
        switch (r.verdict) {
            case ScanVerdict::Holds: ++holds; break;
            case ScanVerdict::Fails: ++fails; break;
            case ScanVerdict::Undefined: ++undefined; break;
        }
        if (!r.expected_ok) ++unexpected;
        if (r.verdict == ScanVerdict::Fails && failures.size() < 50)
            failures.push_back(report_to_json(r));
    }
    json j;
    j["total"] = reports.size();
    j["holds"] = holds;
    j["fails"] = fails;
    j["undefined"] = undefined;
    j["unexpected_failures"] = unexpected;
    j["failures"] = failures;
    return j;
}

bool has_unexpected_failure(const std::vector<ScanReport>& reports) {
    for (const auto& r : reports)
        if (!r.expected_ok) return true;
    return false;
}

}  // namespace taujac

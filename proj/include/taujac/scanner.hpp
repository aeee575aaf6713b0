#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taujac/rational.hpp"

namespace taujac {

/// Parameter grid for a scan. Region constraints of individual checks are
/// applied per point; out-of-precondition points come back "undefined".
struct GridSpec {
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    int n_lo = 4;
    int n_hi = 20;
    /// positive combination weights used by the A-dependent checks
    std::vector<Rational> a_samples{Rational(1, 2), Rational(1), Rational(3)};
    int jobs = 0;  // 0: hardware concurrency
};

/// Inclusive arithmetic progression lo, lo+step, ... <= hi.
std::vector<Rational> rational_range(const Rational& lo, const Rational& hi, const Rational& step);

enum class ScanVerdict { Holds, Fails, Undefined };
const char* to_string(ScanVerdict v);

struct GridPoint {
    int n = 0;
    Rational alpha;
    Rational beta;
    std::map<std::string, std::string> extra;
};

struct ScanReport {
    std::string check_id;
    GridPoint point;
    std::string region;     // claim-region tag, or "unclaimed"
    ScanVerdict verdict = ScanVerdict::Undefined;
    bool expected_ok = true;  // false iff the region carries a claim and the verdict broke it
    nlohmann::json witness;   // reproducible payload; non-null iff verdict == Fails
    double elapsed_ms = 0.0;
};

// Grid scans. Reports come back canonically sorted (check id, n, alpha,
// beta, extra) regardless of worker scheduling.
std::vector<ScanReport> scan_conjecture_a(const GridSpec& grid);
std::vector<ScanReport> scan_conjecture_b(const GridSpec& grid);
std::vector<ScanReport> scan_ccw(const GridSpec& grid);
std::vector<ScanReport> check_section2_lemma(const GridSpec& grid);
std::vector<ScanReport> check_chains(const GridSpec& grid);
std::vector<ScanReport> check_section5(const GridSpec& grid);

/// Bisection for the stability onset of Phi_n(1; mu) in alpha. The bracket
/// ends must carry different verdicts; plain rational midpoints; returns
/// the unstable end of the final bracket (width < tol).
Rational find_threshold_thm4(int n, const Rational& beta,
                             std::pair<Rational, Rational> bracket, const Rational& tol);

/// Exact root sums -b_{m-1}/b_m of phi_n for n = 4..n_max.
std::vector<std::pair<int, Rational>> vieta_asymptotics(int n_max, const Rational& alpha,
                                                        const Rational& beta);

/// Re-runs the single point of a report and confirms the recorded verdict.
bool reverify(const ScanReport& report);
/// Same, but starting from a serialized witness payload alone.
bool reverify_witness(const nlohmann::json& witness);

nlohmann::json report_to_json(const ScanReport& r);
ScanReport report_from_json(const nlohmann::json& j);

void write_csv(std::ostream& os, const std::vector<ScanReport>& reports);
std::vector<ScanReport> read_csv(std::istream& is);

/// Aggregate counts plus the list of failures (capped).
nlohmann::json summary_json(const std::vector<ScanReport>& reports);
/// True iff some claimed region point failed its claim.
bool has_unexpected_failure(const std::vector<ScanReport>& reports);

}  // namespace taujac

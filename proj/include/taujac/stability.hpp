#pragma once

#include <optional>

#include "taujac/jacobi.hpp"
#include "taujac/ratpoly.hpp"

namespace taujac {

/// First failing Routh pivot: `stage` is the 0-based row of the table whose
/// leading entry is nonpositive, `quantity` that entry (0 for a vanished
/// pivot, which counts as unstable under the strict definition).
struct StabilityWitness {
    int stage = 0;
    Rational quantity;
};

struct StabilityVerdict {
    bool stable = false;
    std::optional<StabilityWitness> failure_witness;
};

/// Exact Routh table over the rationals. Stable iff, after normalizing the
/// leading coefficient positive, every row pivot is positive. Degree 0 is
/// trivially stable (no zeros); the zero polynomial is an error.
StabilityVerdict routh_hurwitz(const RatPoly& p);

/// b1^2 / (b0 b2) for p = sum b_k mu^k; the caller compares against
/// 2m/(m-1), m = deg p. Throws std::domain_error when b0 b2 = 0 or deg < 2.
Rational necessary_ratio(const RatPoly& p);

/// The same necessary condition as the literal 3x3 determinant
/// | m b0  (m-1) b1  (m-2) b2 ; b0 b1 b2 ; 0  m b0  (m-1) b1 |,
/// which equals b0 ((m-1) b1^2 - 2 m b0 b2).
Rational necessary_condition_determinant(const RatPoly& p);

/// True iff 2 alpha^2 - 2 alpha - 16 >= 0, i.e. alpha lies outside the
/// window ((1-sqrt(33))/2, (1+sqrt(33))/2) where the large-n limit of the
/// coefficient ratio stays above 2. Decided by the exact sign of the
/// quadratic; no radicals materialize. alpha in {-1, -2} is a pole.
bool alpha_window_violation(const Rational& alpha);

/// Routh test of Phi_n(1; mu) (full derivative tower at (alpha, beta-1)).
StabilityVerdict stability_of_theorem4(int n, const Rational& alpha, const Rational& beta);

enum class FG { F, G };
/// Routh test of f(1; mu) or g(1; mu). Requires n > 3 and A > 0.
StabilityVerdict stability_of_fg(FG which, int n, const Rational& alpha, const Rational& beta,
                                 const Rational& A);

}  // namespace taujac

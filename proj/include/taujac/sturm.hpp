#pragma once

#include <optional>
#include <vector>

#include "taujac/ratpoly.hpp"

namespace taujac {

/// Sign-variation endpoint: a rational value, or the infinite end of the
/// line. std::nullopt stands for -inf when used as a lower bound and +inf
/// when used as an upper bound.
using ExtBound = std::optional<Rational>;

/// Canonical Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
/// stopping when the remainder vanishes (at a constant for squarefree
/// input). Every member is normalized by its positive content, which keeps
/// all signs and brings the coefficients to integers.
std::vector<RatPoly> sturm_chain(const RatPoly& p);

/// Exact sign of a polynomial with integer coefficients at a rational
/// point, evaluated homogeneously in bignum integers.
int sign_at_int(const RatPoly& integer_poly, const Rational& x);

/// Number of sign variations of the chain at x (zeros dropped). With the
/// dropped-zero convention this equals the variation count just to the
/// right of x, which is what makes half-open (lo, hi] interval counting
/// exact even at root endpoints.
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);
int sign_variations_at_neg_inf(const std::vector<RatPoly>& chain);
int sign_variations_at_pos_inf(const std::vector<RatPoly>& chain);

/// Distinct real roots of p in the half-open interval (lo, hi]. The input
/// is reduced to its squarefree part internally, so the result counts
/// distinct roots regardless of multiplicities.
int count_real_roots(const RatPoly& p, const ExtBound& lo, const ExtBound& hi);
int count_real_roots(const RatPoly& p);

/// Same, but against a precomputed chain of a squarefree polynomial.
int count_in_chain(const std::vector<RatPoly>& chain, const ExtBound& lo, const ExtBound& hi);

/// Cauchy bound B: every complex root has |z| < B. Returns 1 for constants.
Rational cauchy_root_bound(const RatPoly& p);

}  // namespace taujac

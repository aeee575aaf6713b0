#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taujac/ratpoly.hpp"
#include "taujac/realroots.hpp"

namespace taujac {

enum class InterlaceVerdict { Strict, NonStrict, Fail };
const char* to_string(InterlaceVerdict v);

struct InterlaceEntry {
    char owner;       // 'p' or 'q'
    Rational lo, hi;  // isolating interval hull; lo == hi marks an exact root
};

/// Verdict plus certificate: on success, the merged root sequence in
/// ascending value order (for the non-strict case, of the gcd quotients);
/// on failure, a description of the first violation.
struct InterlaceResult {
    InterlaceVerdict verdict = InterlaceVerdict::Fail;
    std::vector<InterlaceEntry> sequence;
    std::string violation;
};

/// Strict: both zero sets real and simple, polynomials coprime, zeros
/// alternate. NonStrict: the gcd quotients strictly interlace and both
/// inputs are real-rooted. Adjudicated by exact interval separation and
/// gcd-based equality tests; no floating point anywhere.
///
/// Convention for degenerate sizes: a polynomial with no zeros (nonzero
/// constant) interlaces anything with at most one zero; two or more zeros
/// on the other side fail the "exactly one between" clause.
InterlaceResult interlace_check(const RatPoly& p, const RatPoly& q);

/// f(z) = p(z^2) + z q(z^2), exact.
RatPoly hb_compose(const RatPoly& p, const RatPoly& q);

/// Hermite-Biehler test on the root side: p(0) q(0) > 0 and the zeros of p
/// and z q(z) are nonpositive and strictly interlacing. Equivalent to
/// Hurwitz stability of hb_compose(p, q).
bool hb_check(const RatPoly& p, const RatPoly& q);

/// h(mu) = even(mu^2) + mu * odd_div(mu^2).
std::pair<RatPoly, RatPoly> even_odd_split(const RatPoly& h);

/// Necessary-condition sampler for the real-pair property: true iff for
/// every sample (A, B) both A p + B x q and A p + B q have only real zeros.
/// A falsifier disproves the pair; passing samples prove nothing. The
/// certified decision is interlace_check.
bool real_pair_probe(const RatPoly& p, const RatPoly& q,
                     const std::vector<std::pair<Rational, Rational>>& samples);

}  // namespace taujac

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "taujac/ratpoly.hpp"

namespace testutil {

using taujac::RatPoly;
using taujac::Rational;

inline Rational rand_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi = 8) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rational(num(rng), den(rng));
}

/// Uniform rational in (lo, hi) on a denominator-bounded grid, endpoints excluded.
inline Rational rand_rational_in(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                                 int den = 16) {
    std::uniform_int_distribution<int> pick(1, den * 4 - 1);
    return lo + (hi - lo) * Rational(pick(rng), den * 4);
}

inline RatPoly rand_poly(std::mt19937_64& rng, int max_deg, int coeff_range = 6) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    const int d = degd(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(rand_rational(rng, -coeff_range, coeff_range, 4));
    return RatPoly(std::move(c));  // trailing zeros may strip it lower; fine
}

inline RatPoly poly_from_roots(const std::vector<Rational>& roots) {
    RatPoly p = RatPoly::constant(Rational(1));
    for (const Rational& r : roots) p = p * RatPoly{-r, Rational(1)};
    return p;
}

inline std::vector<Rational> rand_distinct_negatives(std::mt19937_64& rng, int count,
                                                     int den = 8) {
    std::set<Rational> seen;
    std::uniform_int_distribution<int> num(1, 40 * den);
    while (static_cast<int>(seen.size()) < count) seen.insert(Rational(-num(rng), den));
    return {seen.begin(), seen.end()};
}

/// Strictly interlacing negative root sets: sorted distinct values are dealt
/// out alternately, p taking the outermost.
inline std::pair<RatPoly, RatPoly> interlacing_pair(std::mt19937_64& rng, int total) {
    std::vector<Rational> all = rand_distinct_negatives(rng, total);
    std::sort(all.begin(), all.end());
    std::vector<Rational> rp, rq;
    for (size_t i = 0; i < all.size(); ++i) ((all.size() - i) % 2 == 1 ? rp : rq).push_back(all[i]);
    return {poly_from_roots(rp), poly_from_roots(rq)};
}

}  // namespace testutil

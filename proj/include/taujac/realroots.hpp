#pragma once

#include <vector>

#include "taujac/ratpoly.hpp"
#include "taujac/sturm.hpp"

namespace taujac {

/// One isolated real root. The closed hull [lo, hi] of the isolating
/// interval is stored; the root lies strictly inside and the endpoints are
/// never roots, except that lo == hi marks an exact rational root.
struct RootRec {
    Rational lo, hi;
    Rational mid;
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Isolated real roots of a polynomial, ordered by distance from the
/// origin (ties broken by value, ascending). Distinct roots only; the
/// multiplicity of each lives in its record. Keeps the squarefree part and
/// its Sturm chain so intervals can be refined after the fact.
struct RootList {
    RatPoly poly;
    RatPoly squarefree;           // of the zero-root-stripped input; primitive, positive lead
    std::vector<RatPoly> chain;   // Sturm chain of `squarefree`
    std::vector<RootRec> roots;
    bool all_real = false;        // real count with multiplicity == degree
    int negative_count = 0;       // distinct roots < 0
};

/// Sturm-bisection isolation. Every interval is refined below `precision`.
/// Throws std::domain_error on the zero polynomial.
RootList isolate(const RatPoly& p, const Rational& precision);
RootList isolate(const RatPoly& p);  // default precision 1e-8

/// One bisection step on roots[i] (no-op for exact roots).
void refine_root(RootList& rl, size_t i);
void refine_to_width(RootList& rl, size_t i, const Rational& width);

/// Exact order of the values of two isolated roots, possibly from
/// different polynomials: -1, 0, +1. Refines intervals as needed; equality
/// is decided through gcd, never through midpoints.
int compare_root_values(RootList& a, size_t i, RootList& b, size_t j);

/// Exact order of an isolated root value against a rational constant.
int compare_root_to_value(RootList& rl, size_t i, const Rational& v);

/// i-th distinct zero by distance from the origin. finite == false is the
/// -infinity sentinel used when fewer than i distinct roots exist; i == 0
/// returns the exact value 0.
struct ZrValue {
    bool finite = false;
    RootRec root;
};
ZrValue zr(const RootList& rl, int i);

enum class RootVerdict {
    NegativeSimple,
    NegativeWithMultiplicity,
    HasNonnegativeOrComplex,
};
const char* to_string(RootVerdict v);

/// Three-way verdict on the full zero set; decided by Sturm counts alone
/// (no isolation), so it is cheap on large parameter grids.
RootVerdict all_negative_simple(const RatPoly& p);

}  // namespace taujac

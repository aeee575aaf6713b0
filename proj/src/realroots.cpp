#include "taujac/realroots.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace taujac {

namespace {

const Rational kDefaultPrecision = Rational(1) / Rational(100000000L);  // 1e-8

struct Segment {
    Rational lo, hi;
    int vlo, vhi;  // sign variations at the endpoints
};

// Isolating intervals for all real roots of the squarefree `sf`. Interval
// endpoints are never roots; rational roots are returned as point
// intervals. The hard invariant downstream code relies on: each interval
// contains exactly one root of `sf` strictly inside.
std::vector<RootRec> isolate_squarefree(const RatPoly& sf, const std::vector<RatPoly>& chain) {
    std::vector<RootRec> out;
    if (sf.degree() == 0) return out;
    const Rational bound = cauchy_root_bound(sf);
    const Rational two(2);
    std::vector<Segment> work;
    {
        Segment s{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)};
        if (s.vlo - s.vhi > 0) work.push_back(std::move(s));
    }
    while (!work.empty()) {
        Segment s = work.back();
        work.pop_back();
        const int count = s.vlo - s.vhi;
        if (count == 0) continue;
        if (count == 1) {
            out.push_back(RootRec{s.lo, s.hi, (s.lo + s.hi) / two, 1});
            continue;
        }
        const Rational mid = (s.lo + s.hi) / two;
        if (sign_at_int(sf, mid) == 0) {
            // Rational root at the midpoint: record exactly and carve out a
            // punctured neighbourhood containing no other root.
            out.push_back(RootRec{mid, mid, mid, 1});
            Rational delta = (s.hi - s.lo) / Rational(4);
            int vl, vr;
            for (;;) {
                if (sign_at_int(sf, mid - delta) != 0 && sign_at_int(sf, mid + delta) != 0) {
                    vl = sign_variations(chain, mid - delta);
                    vr = sign_variations(chain, mid + delta);
                    if (vl - vr == 1) break;
                }
                delta /= two;
            }
            work.push_back(Segment{s.lo, mid - delta, s.vlo, vl});
            work.push_back(Segment{mid + delta, s.hi, vr, s.vhi});
            continue;
        }
        const int vmid = sign_variations(chain, mid);
        work.push_back(Segment{s.lo, mid, s.vlo, vmid});
        work.push_back(Segment{mid, s.hi, vmid, s.vhi});
    }
    return out;
}

// Bisection step; valid because the interval holds exactly one simple root
// of sf, so the sign changes across it.
void refine_interval(const RatPoly& sf, RootRec& r) {
    if (r.exact()) return;
    const Rational mid = (r.lo + r.hi) / Rational(2);
    const int smid = sign_at_int(sf, mid);
    if (smid == 0) {
        r.lo = r.hi = r.mid = mid;
        return;
    }
    if (smid == sign_at_int(sf, r.lo))
        r.lo = mid;
    else
        r.hi = mid;
    r.mid = (r.lo + r.hi) / Rational(2);
}

void refine_below(const RatPoly& sf, RootRec& r, const Rational& width) {
    while (!r.exact() && !(r.width() < width)) refine_interval(sf, r);
}

// Sign of the isolated root value; terminates because stripped inputs have
// no root at the origin.
int root_sign(const RatPoly& sf, RootRec& r) {
    if (r.exact()) return r.lo.sign();
    while (r.lo.sign() < 0 && r.hi.sign() > 0) refine_interval(sf, r);
    if (r.exact()) return r.lo.sign();
    return r.hi.sign() <= 0 ? -1 : 1;
}

// Multiplicity of the root isolated by `r` in q, via the derivative-gcd
// tower g1 = gcd(q, q'), g2 = gcd(g1, g1'), ...
int multiplicity_of(const RatPoly& q, const RootRec& r) {
    int m = 1;
    RatPoly cur = gcd(q, q.derivative());
    while (cur.degree() > 0) {
        bool present;
        if (r.exact())
            present = cur.eval(r.lo).is_zero();
        else
            present = count_real_roots(cur, r.lo, r.hi) == 1;
        if (!present) break;
        ++m;
        cur = gcd(cur, cur.derivative());
    }
    return m;
}

// |neg| vs |pos| for two distinct roots of the same squarefree sf, neg < 0 <
// pos. A tie (pos == -neg) is genuine and detected exactly.
int compare_abs_mixed(const RatPoly& sf, RootRec& neg, RootRec& pos) {
    if (neg.exact() && pos.exact()) {
        const Rational a = -neg.lo;
        return a == pos.lo ? 0 : (a < pos.lo ? -1 : 1);
    }
    if (neg.exact()) {
        const Rational v = -neg.lo;  // |neg|
        for (;;) {
            if (!(pos.lo < v)) return -1;
            if (!(v < pos.hi)) return 1;
            if (sign_at_int(sf, v) == 0) return 0;  // v is pos's unique root
            refine_interval(sf, pos);
            if (pos.exact()) return compare_abs_mixed(sf, neg, pos);
        }
    }
    if (pos.exact()) {
        const Rational v = -pos.lo;  // mirror of |pos| on the negative side
        for (;;) {
            if (!(v < neg.hi)) return 1;   // neg.hi <= v: |neg| >= ... strictly |neg| > |pos|
            if (!(neg.lo < v)) return -1;  // v <= neg.lo: |neg| < |pos|
            if (sign_at_int(sf, v) == 0) return 0;
            refine_interval(sf, neg);
            if (neg.exact()) return compare_abs_mixed(sf, neg, pos);
        }
    }
    std::optional<RatPoly> sym;  // gcd(sf(x), sf(-x)), lazily built
    for (;;) {
        const Rational na_lo = -neg.hi, na_hi = -neg.lo;  // range of |neg|
        if (na_hi < pos.lo || na_hi == pos.lo) return -1;
        if (pos.hi < na_lo || pos.hi == na_lo) return 1;
        if (!sym) {
            std::vector<Rational> flipped(sf.coeffs());
            for (size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
            sym = gcd(sf, RatPoly(std::move(flipped)));
        }
        if (sym->degree() >= 1) {
            const Rational lo = max(na_lo, pos.lo), hi = min(na_hi, pos.hi);
            if (lo < hi && count_real_roots(*sym, lo, hi) == 1) return 0;
        }
        refine_interval(sf, neg);
        refine_interval(sf, pos);
        if (neg.exact() || pos.exact()) return compare_abs_mixed(sf, neg, pos);
    }
}

}  // namespace

const char* to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::NegativeSimple: return "negative_simple";
        case RootVerdict::NegativeWithMultiplicity: return "negative_with_multiplicity";
        case RootVerdict::HasNonnegativeOrComplex: return "has_nonnegative_or_complex";
    }
    return "?";
}

RootList isolate(const RatPoly& p, const Rational& precision) {
    if (p.is_zero()) throw std::domain_error("isolate: zero polynomial");
    if (!(precision > Rational(0))) throw std::invalid_argument("isolate: precision must be > 0");

    RootList rl;
    rl.poly = p;

    // Strip an exact root at the origin first; all remaining roots are then
    // nonzero, so distance ordering and sign classification terminate.
    int zero_mult = 0;
    while (p.coeff(zero_mult).is_zero()) ++zero_mult;
    RatPoly q = p;
    if (zero_mult > 0) {
        std::vector<Rational> c(p.coeffs().begin() + zero_mult, p.coeffs().end());
        q = RatPoly(std::move(c));
    }

    if (q.degree() == 0) {
        rl.squarefree = RatPoly::constant(Rational(1));
        rl.chain = sturm_chain(rl.squarefree);
        if (zero_mult > 0) {
            rl.roots.push_back(RootRec{Rational(0), Rational(0), Rational(0), zero_mult});
            rl.all_real = true;
        } else {
            rl.all_real = true;  // constant: no zeros at all
        }
        return rl;
    }

    rl.squarefree = squarefree_part(q);
    rl.chain = sturm_chain(rl.squarefree);
    std::vector<RootRec> found = isolate_squarefree(rl.squarefree, rl.chain);

    int real_with_mult = zero_mult;
    for (RootRec& r : found) {
        refine_below(rl.squarefree, r, precision);
        r.multiplicity = multiplicity_of(q, r);
        real_with_mult += r.multiplicity;
    }
    rl.all_real = real_with_mult == p.degree();

    // Order by distance from the origin: merge the negative roots (value
    // descending) with the positive ones (value ascending).
    std::vector<RootRec> neg, pos;
    for (RootRec& r : found) {
        if (root_sign(rl.squarefree, r) < 0)
            neg.push_back(std::move(r));
        else
            pos.push_back(std::move(r));
    }
    std::sort(neg.begin(), neg.end(),
              [](const RootRec& x, const RootRec& y) { return y.hi < x.hi; });
    std::sort(pos.begin(), pos.end(),
              [](const RootRec& x, const RootRec& y) { return x.hi < y.hi; });
    rl.negative_count = static_cast<int>(neg.size());

    if (zero_mult > 0)
        rl.roots.push_back(RootRec{Rational(0), Rational(0), Rational(0), zero_mult});
    size_t i = 0, j = 0;
    while (i < neg.size() || j < pos.size()) {
        if (i == neg.size()) {
            rl.roots.push_back(std::move(pos[j++]));
        } else if (j == pos.size()) {
            rl.roots.push_back(std::move(neg[i++]));
        } else {
            const int c = compare_abs_mixed(rl.squarefree, neg[i], pos[j]);
            if (c <= 0)
                rl.roots.push_back(std::move(neg[i++]));  // tie: negative value first
            else
                rl.roots.push_back(std::move(pos[j++]));
        }
    }
    return rl;
}

RootList isolate(const RatPoly& p) { return isolate(p, kDefaultPrecision); }

void refine_root(RootList& rl, size_t i) { refine_interval(rl.squarefree, rl.roots.at(i)); }

void refine_to_width(RootList& rl, size_t i, const Rational& width) {
    refine_below(rl.squarefree, rl.roots.at(i), width);
}

int compare_root_values(RootList& a, size_t i, RootList& b, size_t j) {
    RootRec& ra = a.roots.at(i);
    RootRec& rb = b.roots.at(j);
    if (&a == &b && i == j) return 0;
    std::optional<RatPoly> common;  // gcd of the two squarefree parts
    for (;;) {
        if (ra.exact() && rb.exact()) return ra.lo == rb.lo ? 0 : (ra.lo < rb.lo ? -1 : 1);
        if (ra.exact()) {
            if (!(rb.lo < ra.lo)) return -1;  // value <= rb.lo < root_b
            if (!(ra.lo < rb.hi)) return 1;
            if (sign_at_int(b.squarefree, ra.lo) == 0) return 0;
            refine_interval(b.squarefree, rb);
            continue;
        }
        if (rb.exact()) return -compare_root_values(b, j, a, i);
        if (!(rb.lo < ra.hi)) return -1;  // ra.hi <= rb.lo separates them
        if (!(ra.lo < rb.hi)) return 1;
        if (!common) common = gcd(a.squarefree, b.squarefree);
        if (common->degree() >= 1) {
            const Rational lo = max(ra.lo, rb.lo), hi = min(ra.hi, rb.hi);
            if (lo < hi && count_real_roots(*common, lo, hi) == 1) return 0;
        }
        refine_interval(a.squarefree, ra);
        refine_interval(b.squarefree, rb);
    }
}

int compare_root_to_value(RootList& rl, size_t i, const Rational& v) {
    RootRec& r = rl.roots.at(i);
    for (;;) {
        if (r.exact()) return r.lo == v ? 0 : (r.lo < v ? -1 : 1);
        if (!(r.lo < v)) return 1;  // v <= lo < root
        if (!(v < r.hi)) return -1;
        if (sign_at_int(rl.squarefree, v) == 0) return 0;  // v is the unique root inside
        refine_interval(rl.squarefree, r);
    }
}

ZrValue zr(const RootList& rl, int i) {
    if (i < 0) throw std::invalid_argument("zr: negative index");
    if (i == 0) return {true, RootRec{Rational(0), Rational(0), Rational(0), 1}};
    if (static_cast<size_t>(i) > rl.roots.size()) return {false, {}};
    return {true, rl.roots[static_cast<size_t>(i) - 1]};
}

RootVerdict all_negative_simple(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("all_negative_simple: zero polynomial");
    if (p.degree() == 0) return RootVerdict::NegativeSimple;  // no zeros at all
    const RatPoly g = gcd(p, p.derivative());
    const RatPoly sf = squarefree_part(p);
    const auto chain = sturm_chain(sf);
    const int total = count_in_chain(chain, std::nullopt, std::nullopt);
    const bool all_real = total == sf.degree();
    const bool all_negative = all_real && sign_at_int(sf, Rational(0)) != 0 &&
                              count_in_chain(chain, std::nullopt, Rational(0)) == total;
    if (!all_real || !all_negative) return RootVerdict::HasNonnegativeOrComplex;
    return g.degree() == 0 ? RootVerdict::NegativeSimple
                           : RootVerdict::NegativeWithMultiplicity;
}

}  // namespace taujac

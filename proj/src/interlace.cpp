#include "taujac/interlace.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace taujac {

const char* to_string(InterlaceVerdict v) {
    switch (v) {
        case InterlaceVerdict::Strict: return "strict";
        case InterlaceVerdict::NonStrict: return "nonstrict";
        case InterlaceVerdict::Fail: return "fail";
    }
    return "?";
}

namespace {

bool real_rooted(const RatPoly& r) {
    if (r.is_zero() || r.degree() == 0) return true;
    const RatPoly sf = squarefree_part(r);
    return count_real_roots(sf, std::nullopt, std::nullopt) == sf.degree();
}

InterlaceEntry entry_of(char owner, const RootRec& r) { return {owner, r.lo, r.hi}; }

// p and q coprime. Strict interlacing or the first violation.
InterlaceResult strict_check(const RatPoly& p, const RatPoly& q) {
    InterlaceResult res;
    if (gcd(p, p.derivative()).degree() > 0) {
        res.violation = "p has a multiple zero";
        return res;
    }
    if (gcd(q, q.derivative()).degree() > 0) {
        res.violation = "q has a multiple zero";
        return res;
    }
    if (count_real_roots(p, std::nullopt, std::nullopt) != p.degree()) {
        res.violation = "p has non-real zeros";
        return res;
    }
    if (count_real_roots(q, std::nullopt, std::nullopt) != q.degree()) {
        res.violation = "q has non-real zeros";
        return res;
    }

    RootList rp = isolate(p);
    RootList rq = isolate(q);

    // Value-ascending index order within each list (records are pairwise
    // disjoint there, so this only reorders the distance sort).
    auto value_order = [](RootList& rl) {
        std::vector<size_t> idx(rl.roots.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&rl](size_t a, size_t b) {
            return compare_root_values(rl, a, rl, b) < 0;
        });
        return idx;
    };
    const std::vector<size_t> ip = value_order(rp);
    const std::vector<size_t> iq = value_order(rq);

    // Merge by exact value comparison. Coprimality rules equality out.
    size_t a = 0, b = 0;
    std::vector<char> owners;
    while (a < ip.size() || b < iq.size()) {
        bool take_p;
        if (a == ip.size())
            take_p = false;
        else if (b == iq.size())
            take_p = true;
        else {
            const int c = compare_root_values(rp, ip[a], rq, iq[b]);
            assert(c != 0);
            take_p = c < 0;
        }
        if (take_p) {
            res.sequence.push_back(entry_of('p', rp.roots[ip[a++]]));
            owners.push_back('p');
        } else {
            res.sequence.push_back(entry_of('q', rq.roots[iq[b++]]));
            owners.push_back('q');
        }
    }

    for (size_t k = 1; k < owners.size(); ++k) {
        if (owners[k] == owners[k - 1]) {
            res.violation = std::string("two consecutive zeros of '") + owners[k] +
                            "' with no zero of the other polynomial between (positions " +
                            std::to_string(k - 1) + "," + std::to_string(k) + ")";
            return res;
        }
    }
    res.verdict = InterlaceVerdict::Strict;
    return res;
}

}  // namespace

InterlaceResult interlace_check(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("interlace_check: zero polynomial");
    const RatPoly g = gcd(p, q);
    if (g.degree() == 0) return strict_check(p, q);

    // Shared factor: non-strict at best.
    InterlaceResult res;
    if (!real_rooted(p)) {
        res.violation = "p has non-real zeros";
        return res;
    }
    if (!real_rooted(q)) {
        res.violation = "q has non-real zeros";
        return res;
    }
    InterlaceResult sub = strict_check(exact_div(p, g), exact_div(q, g));
    if (sub.verdict != InterlaceVerdict::Strict) {
        sub.verdict = InterlaceVerdict::Fail;
        sub.violation = "after gcd removal: " + sub.violation;
        return sub;
    }
    sub.verdict = InterlaceVerdict::NonStrict;
    return sub;
}

RatPoly hb_compose(const RatPoly& p, const RatPoly& q) {
    std::vector<Rational> c;
    c.resize(2 * static_cast<size_t>(std::max(p.degree(), 0)) +
                 2 * static_cast<size_t>(std::max(q.degree(), 0)) + 2,
             Rational(0));
    for (int i = 0; i <= p.degree(); ++i) c[2 * static_cast<size_t>(i)] += p.coeff(i);
    for (int i = 0; i <= q.degree(); ++i) c[2 * static_cast<size_t>(i) + 1] += q.coeff(i);
    return RatPoly(std::move(c));
}

bool hb_check(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return false;
    if (!((p.coeff(0) * q.coeff(0)).sign() > 0)) return false;
    if (interlace_check(p, q.mul_x(1)).verdict != InterlaceVerdict::Strict) return false;
    // Interlacing alone permits positive zeros; nonpositivity is separate.
    if (p.degree() > 0 && count_real_roots(p, Rational(0), std::nullopt) > 0) return false;
    if (q.degree() > 0 && count_real_roots(q, Rational(0), std::nullopt) > 0) return false;
    return true;
}

std::pair<RatPoly, RatPoly> even_odd_split(const RatPoly& h) {
    std::vector<Rational> even, odd;
    for (int k = 0; k <= h.degree(); ++k) {
        if (k % 2 == 0)
            even.push_back(h.coeff(k));
        else
            odd.push_back(h.coeff(k));
    }
    return {RatPoly(std::move(even)), RatPoly(std::move(odd))};
}

bool real_pair_probe(const RatPoly& p, const RatPoly& q,
                     const std::vector<std::pair<Rational, Rational>>& samples) {
    if (samples.empty()) throw std::invalid_argument("real_pair_probe: empty sample list");
    for (const auto& [A, B] : samples) {
        const RatPoly r1 = A * p + B * q.mul_x(1);
        const RatPoly r2 = A * p + B * q;
        if (!real_rooted(r1) || !real_rooted(r2)) return false;
    }
    return true;
}

}  // namespace taujac

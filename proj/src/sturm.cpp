#include "taujac/sturm.hpp"

#include <cassert>
#include <stdexcept>

namespace taujac {

// Evaluates homogeneously at u/v (v > 0) in mpz, so no rational
// arithmetic is needed on the hot path.
int sign_at_int(const RatPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    const mpz_class& u = x.num();
    const mpz_class& v = x.den();
    mpz_class acc = 0, vp = 1;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        assert(c.den() == 1);
        acc = acc * u + c.num() * vp;
        if (i > 0) vp *= v;
    }
    return sgn(acc);
}

namespace {

int sign_at_inf(const RatPoly& p, bool positive_end) {
    if (p.is_zero()) return 0;
    int s = p.leading().sign();
    if (!positive_end && p.degree() % 2 == 1) s = -s;
    return s;
}

}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
    std::vector<RatPoly> chain;
    chain.push_back(primitive_part(p));
    if (p.degree() == 0) return chain;
    chain.push_back(primitive_part(p.derivative()));
    while (chain.back().degree() > 0) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(primitive_part(-r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const RatPoly& m : chain) {
        const int s = sign_at_int(m, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sign_variations_at_neg_inf(const std::vector<RatPoly>& chain) {
    int var = 0, prev = 0;
    for (const RatPoly& m : chain) {
        const int s = sign_at_inf(m, false);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sign_variations_at_pos_inf(const std::vector<RatPoly>& chain) {
    int var = 0, prev = 0;
    for (const RatPoly& m : chain) {
        const int s = sign_at_inf(m, true);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int count_in_chain(const std::vector<RatPoly>& chain, const ExtBound& lo, const ExtBound& hi) {
    const int vlo = lo ? sign_variations(chain, *lo) : sign_variations_at_neg_inf(chain);
    const int vhi = hi ? sign_variations(chain, *hi) : sign_variations_at_pos_inf(chain);
    assert(vlo >= vhi);
    return vlo - vhi;
}

int count_real_roots(const RatPoly& p, const ExtBound& lo, const ExtBound& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo && hi && !(*lo < *hi)) return 0;
    return count_in_chain(sturm_chain(squarefree_part(p)), lo, hi);
}

int count_real_roots(const RatPoly& p) { return count_real_roots(p, std::nullopt, std::nullopt); }

Rational cauchy_root_bound(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) m = max(m, p.coeff(i).abs() / lead);
    return Rational(1) + m;
}

}  // namespace taujac

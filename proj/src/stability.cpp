#include "taujac/stability.hpp"

#include <stdexcept>
#include <vector>

namespace taujac {

StabilityVerdict routh_hurwitz(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("routh_hurwitz: zero polynomial");
    const int m = p.degree();
    if (m == 0) return {true, std::nullopt};

    // Descending coefficients, leading one positive.
    const int flip = p.leading().sign() < 0 ? -1 : 1;
    std::vector<Rational> a(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) a[static_cast<size_t>(m - k)] = Rational(flip) * p.coeff(k);

    std::vector<Rational> prev, cur;
    for (size_t i = 0; i < a.size(); i += 2) prev.push_back(a[i]);
    for (size_t i = 1; i < a.size(); i += 2) cur.push_back(a[i]);

    for (int stage = 1; stage <= m; ++stage) {
        if (cur.empty() || cur[0].is_zero())
            return {false, StabilityWitness{stage, Rational(0)}};
        if (cur[0].sign() < 0) return {false, StabilityWitness{stage, cur[0]}};
        if (stage == m) break;
        std::vector<Rational> next;
        const size_t len = std::max(prev.size(), cur.size());
        for (size_t j = 0; j + 1 < len; ++j) {
            const Rational x2 = j + 1 < prev.size() ? prev[j + 1] : Rational(0);
            const Rational x1 = j + 1 < cur.size() ? cur[j + 1] : Rational(0);
            next.push_back((cur[0] * x2 - prev[0] * x1) / cur[0]);
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {true, std::nullopt};
}

Rational necessary_ratio(const RatPoly& p) {
    if (p.degree() < 2) throw std::domain_error("necessary_ratio: degree below 2");
    const Rational denom = p.coeff(0) * p.coeff(2);
    if (denom.is_zero()) throw std::domain_error("necessary_ratio: b0*b2 = 0");
    return p.coeff(1) * p.coeff(1) / denom;
}

Rational necessary_condition_determinant(const RatPoly& p) {
    if (p.degree() < 2) throw std::domain_error("necessary_condition_determinant: degree below 2");
    const Rational m(p.degree());
    const Rational b0 = p.coeff(0), b1 = p.coeff(1), b2 = p.coeff(2);
    const Rational one(1), two(2);
    // rows: [m b0, (m-1) b1, (m-2) b2], [b0, b1, b2], [0, m b0, (m-1) b1]
    const Rational a11 = m * b0, a12 = (m - one) * b1, a13 = (m - two) * b2;
    const Rational a21 = b0, a22 = b1, a23 = b2;
    const Rational a32 = m * b0, a33 = (m - one) * b1;
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33) + a13 * (a21 * a32);
}

bool alpha_window_violation(const Rational& alpha) {
    if (alpha == Rational(-1) || alpha == Rational(-2))
        throw std::domain_error("alpha_window_violation: pole at alpha = -1 or -2");
    const Rational q = Rational(2) * alpha * alpha - Rational(2) * alpha - Rational(16);
    return q.sign() >= 0;
}

StabilityVerdict stability_of_theorem4(int n, const Rational& alpha, const Rational& beta) {
    if (n < 4) throw std::invalid_argument("stability_of_theorem4: requires n >= 4");
    return routh_hurwitz(phi_full(JacobiParams{n, alpha, beta}, /*beta_shift_for_Phi=*/true));
}

StabilityVerdict stability_of_fg(FG which, int n, const Rational& alpha, const Rational& beta,
                                 const Rational& A) {
    if (n <= 3) throw std::invalid_argument("stability_of_fg: requires n > 3");
    if (!(A > Rational(0))) throw std::invalid_argument("stability_of_fg: requires A > 0");
    const JacobiParams p{n, alpha, beta};
    return routh_hurwitz(which == FG::F ? f_poly(p, A) : g_poly(p, A));
}

}  // namespace taujac

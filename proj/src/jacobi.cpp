#include "taujac/jacobi.hpp"

#include <cassert>
#include <stdexcept>

namespace taujac {

Rational pochhammer(const Rational& x, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative index");
    Rational r(1);
    Rational t = x;
    for (int i = 0; i < k; ++i) {
        r *= t;
        t += Rational(1);
    }
    return r;
}

namespace {

Rational factorial(int k) { return pochhammer(Rational(1), k); }

}  // namespace

DerivTower deriv_tower(const JacobiParams& p) {
    if (p.n < 0) throw std::invalid_argument("deriv_tower: negative n");
    DerivTower t{p, {}};
    t.values.reserve(static_cast<size_t>(p.n) + 1);
    const Rational half(1, 2);
    for (int k = 0; k <= p.n; ++k) {
        Rational v = half.pow(static_cast<unsigned>(k));
        v *= pochhammer(Rational(p.n) + p.alpha + p.beta + Rational(1), k);
        v *= pochhammer(p.alpha + Rational(k + 1), p.n - k);
        v /= factorial(p.n - k);
        t.values.push_back(std::move(v));
    }
#ifndef NDEBUG
    // The series route is undefined where (alpha+1)_k vanishes.
    if (!(p.alpha.is_integer() && Rational(-p.n) <= p.alpha && p.alpha <= Rational(-1)))
        assert(t.values == deriv_tower_series(p));
#endif
    return t;
}

std::vector<Rational> deriv_tower_series(const JacobiParams& p) {
    // P_n = sum_j c_j ((1-x)/2)^j with
    // c_j = (alpha+1)_n/n! * (-n)_j (n+alpha+beta+1)_j / (j! (alpha+1)_j),
    // so d^k P_n(1) = c_k * k! * (-1/2)^k. The normalized series form has a
    // genuine 0/0 at integer alpha in [-n, -1]; callers must avoid those.
    if (p.alpha.is_integer() && Rational(-p.n) <= p.alpha && p.alpha <= Rational(-1))
        throw std::domain_error("deriv_tower_series: (alpha+1)_k vanishes at this alpha");
    std::vector<Rational> vals;
    vals.reserve(static_cast<size_t>(p.n) + 1);
    const Rational lead = pochhammer(p.alpha + Rational(1), p.n) / factorial(p.n);
    for (int k = 0; k <= p.n; ++k) {
        Rational c = lead * pochhammer(Rational(-p.n), k) *
                     pochhammer(Rational(p.n) + p.alpha + p.beta + Rational(1), k) /
                     (factorial(k) * pochhammer(p.alpha + Rational(1), k));
        Rational v = c * factorial(k) * Rational(-1, 2).pow(static_cast<unsigned>(k));
        vals.push_back(std::move(v));
    }
    return vals;
}

RatPoly phi(const JacobiParams& p) {
    const DerivTower t = deriv_tower(p);
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.n / 2) + 1);
    for (int k = 0; 2 * k <= p.n; ++k) c.push_back(t.values[static_cast<size_t>(2 * k)]);
    return RatPoly(std::move(c));
}

RatPoly phi(int n, const Rational& alpha, const Rational& beta) {
    return phi(JacobiParams{n, alpha, beta});
}

RatPoly phi_full(const JacobiParams& p, bool beta_shift_for_Phi) {
    JacobiParams q = p;
    if (beta_shift_for_Phi) q.beta -= Rational(1);
    return RatPoly(deriv_tower(q).values);
}

RatPoly f_poly(const JacobiParams& p, const Rational& A) {
    if (p.n <= 3) throw std::invalid_argument("f_poly: requires n > 3");
    const DerivTower tn = deriv_tower(p);
    const DerivTower tn1 = deriv_tower({p.n - 1, p.alpha, p.beta});
    std::vector<Rational> c(static_cast<size_t>(p.n) + 2);
    for (int k = 0; k <= p.n; ++k) {
        c[static_cast<size_t>(k)] += A * tn.values[static_cast<size_t>(k)];
        if (k <= p.n - 1) c[static_cast<size_t>(k) + 1] += tn1.values[static_cast<size_t>(k)];
    }
    return RatPoly(std::move(c));
}

RatPoly g_poly(const JacobiParams& p, const Rational& A) {
    if (p.n <= 3) throw std::invalid_argument("g_poly: requires n > 3");
    const DerivTower tn = deriv_tower(p);
    const DerivTower tn1 = deriv_tower({p.n - 1, p.alpha, p.beta});
    std::vector<Rational> c(static_cast<size_t>(p.n) + 2);
    for (int k = 0; k <= p.n; ++k) {
        c[static_cast<size_t>(k) + 1] += tn.values[static_cast<size_t>(k)];
        if (k <= p.n - 1) c[static_cast<size_t>(k)] += A * tn1.values[static_cast<size_t>(k)];
    }
    return RatPoly(std::move(c));
}

const char* identity_name(IdentityTag id) {
    switch (id) {
        case IdentityTag::FlSumm1: return "fl_summ1";
        case IdentityTag::FlSumm2: return "fl_summ2";
        case IdentityTag::FlSumm3: return "fl_summ3";
        case IdentityTag::FlSumm4: return "fl_summ4";
        case IdentityTag::FlDiff1: return "fl_diff1";
        case IdentityTag::FlDiff2: return "fl_diff2";
        case IdentityTag::FlDiff3: return "fl_diff3";
        case IdentityTag::FlDiff4: return "fl_diff4";
        case IdentityTag::FlDiff5: return "fl_diff5";
        case IdentityTag::ChainRel1: return "chain_rel_1";
        case IdentityTag::ChainRel2: return "chain_rel_2";
        case IdentityTag::MainRel: return "main_rel";
        case IdentityTag::PhiDiff: return "phi_diff";
    }
    return "?";
}

namespace {

void require_nonzero(const Rational& denom, const char* what) {
    if (denom.is_zero())
        throw std::domain_error(std::string("identity undefined at parameters: ") + what + " = 0");
}

}  // namespace

bool verify_identity(IdentityTag id, const JacobiParams& p, const std::optional<Rational>& A) {
    const int n = p.n;
    if (n < 1) throw std::invalid_argument("verify_identity: requires n >= 1");
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const Rational rn(n);
    const Rational two(2);

    switch (id) {
        case IdentityTag::FlSumm1:
            return (rn + rn + a + b) * phi(n, a, b - Rational(1)) ==
                   (rn + a + b) * phi(n, a, b) + (rn + a) * phi(n - 1, a, b);
        case IdentityTag::FlSumm2:
            return (rn + rn + a + b) * phi(n, a - Rational(1), b) ==
                   (rn + a + b) * phi(n, a, b) - (rn + b) * phi(n - 1, a, b);
        case IdentityTag::FlSumm3:
            return (rn + a + b) * phi(n, a, b) ==
                   (rn + b) * phi(n, a, b - Rational(1)) + (rn + a) * phi(n, a - Rational(1), b);
        case IdentityTag::FlSumm4:
            return phi(n - 1, a, b) == phi(n, a, b - Rational(1)) - phi(n, a - Rational(1), b);
        case IdentityTag::FlDiff1: {
            const RatPoly pn = phi(n, a, b);
            return (rn + a) * phi(n - 1, a, b + Rational(1)) ==
                   rn * pn - (two * pn.derivative()).mul_x(1);
        }
        case IdentityTag::FlDiff2: {
            const RatPoly pn = phi(n, a, b);
            return (rn + a + b + Rational(1)) * phi(n, a, b + Rational(1)) ==
                   (rn + a + b + Rational(1)) * pn + (two * pn.derivative()).mul_x(1);
        }
        case IdentityTag::FlDiff3: {
            const RatPoly pn = phi(n, a, b);
            return (rn + a) * phi(n, a - Rational(1), b + Rational(1)) ==
                   a * pn + (two * pn.derivative()).mul_x(1);
        }
        case IdentityTag::FlDiff4: {
            require_nonzero(rn + a + b, "n+alpha+beta");
            const RatPoly dm = phi(n, a, b - Rational(1)).derivative();
            return ((rn + b) / (rn + a + b)) * (two * dm).mul_x(1) ==
                   (rn + a) * phi(n, a - Rational(1), b) - a * phi(n, a, b);
        }
        case IdentityTag::FlDiff5: {
            const RatPoly dm = phi(n, a, b - Rational(1)).derivative();
            return (two * dm).mul_x(1) ==
                   rn * phi(n, a - Rational(1), b) - a * phi(n - 1, a, b);
        }
        case IdentityTag::ChainRel1: {
            require_nonzero(rn + a + b, "n+alpha+beta");
            const RatPoly pn = phi(n, a, b);
            const RatPoly pm = phi(n - 1, a, b);
            const RatPoly e1 = rn * pn - (two * pn.derivative()).mul_x(1);
            const RatPoly e2 = (rn + a) * phi(n - 1, a, b + Rational(1));
            const RatPoly e3 =
                (rn + a) * pm + ((rn + a) / (rn + a + b)) * (two * pm.derivative()).mul_x(1);
            return e1 == e2 && e2 == e3;
        }
        case IdentityTag::ChainRel2: {
            require_nonzero(rn + a + b, "n+alpha+beta");
            const RatPoly pn = phi(n, a, b);
            const RatPoly pm = phi(n - 1, a, b);
            const RatPoly e1 = rn * pn - (rn + a) * pm;
            const RatPoly e2 = ((rn + rn + a + b) / (rn + a + b)) *
                               (two * phi(n, a, b - Rational(1)).derivative()).mul_x(1);
            const RatPoly e3 = (two * pn.derivative()).mul_x(1) +
                               ((rn + a) / (rn + a + b)) * (two * pm.derivative()).mul_x(1);
            return e1 == e2 && e2 == e3;
        }
        case IdentityTag::MainRel: {
            if (!A) throw std::invalid_argument("verify_identity: main_rel requires A");
            require_nonzero(rn + a, "n+alpha");
            const RatPoly ps = phi(n, a, b - Rational(1));
            const RatPoly lhs = ((rn + a + b) / (rn + a)) * phi(n, a, b) + *A * phi(n - 1, a, b);
            const RatPoly rhs =
                (((Rational(1) + *A) * rn + a + b) / (rn + a)) * ps +
                ((Rational(1) - *A) / (rn + a)) * (two * ps.derivative()).mul_x(1);
            return lhs == rhs;
        }
        case IdentityTag::PhiDiff: {
            if (n < 2) throw std::invalid_argument("verify_identity: phi_diff requires n >= 2");
            const RatPoly pn = phi(n, a, b);
            const RatPoly lhs = pn - RatPoly::constant(pn.coeff(0));
            const RatPoly rhs =
                (Rational(1, 4) * pochhammer(rn + a + b + Rational(1), 2)) *
                phi(n - 2, a + Rational(2), b + Rational(2)).mul_x(1);
            return lhs == rhs;
        }
    }
    throw std::logic_error("verify_identity: unknown tag");
}

}  // namespace taujac

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "taujac/rational.hpp"

namespace taujac {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree. Canonical form: no trailing zero coefficients; the
/// zero polynomial has an empty coefficient list and degree() == -1.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static RatPoly constant(Rational v) { return RatPoly({std::move(v)}); }
    /// c * x^k
    static RatPoly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const Rational& leading() const;  // requires nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }

    RatPoly derivative() const;
    /// Multiply by x^k, k >= 0.
    RatPoly mul_x(int k) const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& c, const RatPoly& p);
    friend RatPoly operator*(const RatPoly& p, const Rational& c) { return c * p; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "mu") const;

private:
    void strip();
    std::vector<Rational> c_;
};

inline RatPoly shift_mul_x(const RatPoly& p, int k) { return p.mul_x(k); }

/// Quotient and remainder, exact: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Exact quotient; throws if the division leaves a remainder.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);

/// Monic gcd by the Euclidean remainder sequence (primitive-part
/// normalization between steps). Throws std::domain_error if both are zero.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
RatPoly squarefree_part(const RatPoly& p);

/// Positive content: gcd of numerators / lcm of denominators.
Rational content(const RatPoly& p);
/// p / content(p): integer coefficients, sign pattern preserved.
RatPoly primitive_part(const RatPoly& p);

}  // namespace taujac

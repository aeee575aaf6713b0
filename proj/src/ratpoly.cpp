#include "taujac/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace taujac {

namespace {
const Rational kZero{};
}

void RatPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("RatPoly::monomial: negative exponent");
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = c;
    return RatPoly(std::move(v));
}

const Rational& RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("RatPoly::leading: zero polynomial");
    return c_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::mul_x(int k) const {
    if (k < 0) throw std::invalid_argument("RatPoly::mul_x: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(c_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(k)] = c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& c, const RatPoly& p) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(p.c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c * p.c_[i];
    return RatPoly(std::move(v));
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        const Rational mag = a.abs();
        if (k == 0 || !(mag == Rational(1))) os << mag.str();
        if (k > 0) {
            if (!(mag == Rational(1))) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
    const Rational lb_inv = b.leading().inv();
    for (int k = a.degree(); k >= db; --k) {
        const Rational q = rem[static_cast<size_t>(k)] * lb_inv;
        if (q.is_zero()) continue;
        quo[static_cast<size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= q * b.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

Rational content(const RatPoly& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        g = gcd(g, c.num());
        l = lcm(l, c.den());
    }
    return Rational(mpz_class(::abs(g))) / Rational(l);
}

RatPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    return content(p).inv() * p;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    RatPoly u = primitive_part(a), v = primitive_part(b);
    if (u.is_zero()) std::swap(u, v);
    while (!v.is_zero()) {
        RatPoly r = divmod(u, v).second;
        u = std::move(v);
        v = r.is_zero() ? RatPoly{} : primitive_part(r);
    }
    return u.leading().inv() * u;  // monic
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return RatPoly::constant(Rational(1));
    const RatPoly g = gcd(p, p.derivative());
    RatPoly sf = g.degree() == 0 ? p : exact_div(p, g);
    sf = primitive_part(sf);
    if (sf.leading().sign() < 0) sf = -sf;
    return sf;
}

}  // namespace taujac

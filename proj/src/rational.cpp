#include "taujac/rational.hpp"

#include <cctype>
#include <ostream>

namespace taujac {

Rational::Rational(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(n);
    r /= mpq_class(d);
    return Rational(std::move(r));
}

namespace {

// Exact decimal/scientific parse: [-+]digits[.digits][(e|E)[-+]digits]
Rational parse_decimal(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_len = 0, exp10 = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_len;
        }
    }
    if (digits.empty()) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) throw std::invalid_argument("Rational::parse: bad exponent in '" + s + "'");
        long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
        exp10 = eneg ? -e : e;
    }
    if (i != s.size()) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");

    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    const long shift = exp10 - frac_len;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class q;
    if (shift >= 0)
        q = mpq_class(mant * p10);
    else
        q = mpq_class(mant) / mpq_class(p10);
    return Rational(std::move(q));
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (s.find('.') != std::string::npos ||
        (s.find_first_of("eE") != std::string::npos && s.find('/') == std::string::npos))
        return parse_decimal(s);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace taujac

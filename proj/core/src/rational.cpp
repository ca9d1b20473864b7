#include "sextic/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sextic {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_decimal_integer(s)) throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, 1) / mpq_class(den, 1);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned e) const {
    Rational out(1);
    Rational base = *this;
    while (e != 0) {
        if (e & 1U) out *= base;
        base *= base;
        e >>= 1U;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& r) {
    q_ += r.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    q_ -= r.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    q_ *= r.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= r.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sextic

#include "sextic/cycnum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sextic {

namespace {

constexpr std::array<int, 8> kUnits = {1, 5, 7, 11, 13, 17, 19, 23};

// z^8 = z^4 - 1, applied from the top down on a length-15 product buffer.
template <class Buffer>
void reduce_in_place(Buffer& buf, std::size_t top) {
    for (std::size_t k = top; k >= 8; --k) {
        if (buf[k].is_zero()) continue;
        buf[k - 4] += buf[k];
        buf[k - 8] -= buf[k];
        buf[k] = Rational(0);
    }
}

const std::array<CycNum, 24>& power_table() {
    static const std::array<CycNum, 24> table = [] {
        std::array<CycNum, 24> t;
        for (int k = 0; k < 24; ++k) {
            std::array<Rational, 24> buf{};
            buf[static_cast<std::size_t>(k)] = Rational(1);
            reduce_in_place(buf, 23);
            CycNum::Coords c{};
            for (std::size_t j = 0; j < 8; ++j) c[j] = buf[j];
            t[static_cast<std::size_t>(k)] = CycNum(c);
        }
        return t;
    }();
    return table;
}

}  // namespace

CycNum CycNum::zeta(int k) {
    const int r = ((k % kOrder) + kOrder) % kOrder;
    return power_table()[static_cast<std::size_t>(r)];
}

CycNum CycNum::sqrt2() { return zeta(3) + zeta(21); }
CycNum CycNum::sqrt3() { return zeta(2) + zeta(22); }
CycNum CycNum::sqrt6() { return sqrt2() * sqrt3(); }
CycNum CycNum::sqrt_m2() { return zeta(3) + zeta(9); }
CycNum CycNum::sqrt_m3() { return CycNum(2) * omega() + CycNum(1); }
CycNum CycNum::sqrt_m6() { return sqrt6() * imag_unit(); }
CycNum CycNum::eta() { return (sqrt6() + sqrt2()) * CycNum(Rational(1, 2)); }

bool CycNum::is_zero() const {
    for (const auto& r : c_) {
        if (!r.is_zero()) return false;
    }
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return false;
    }
    return true;
}

CycNum CycNum::galois(int k) const {
    if (std::gcd(((k % kOrder) + kOrder) % kOrder, kOrder) != 1) {
        throw std::invalid_argument("galois exponent must be a unit mod 24");
    }
    CycNum out;
    for (int j = 0; j < kDegree; ++j) {
        const Rational& cj = c_[static_cast<std::size_t>(j)];
        if (cj.is_zero()) continue;
        const CycNum& zk = zeta(j * k);
        for (std::size_t m = 0; m < 8; ++m) out.c_[m] += cj * zk.c_[m];
    }
    return out;
}

Rational CycNum::norm() const {
    CycNum prod = *this;
    for (std::size_t u = 1; u < kUnits.size(); ++u) prod *= galois(kUnits[u]);
    return prod.c_[0];
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    if (is_rational()) return CycNum(c_[0].inverse());
    CycNum others(1);
    for (std::size_t u = 1; u < kUnits.size(); ++u) others *= galois(kUnits[u]);
    const CycNum n = *this * others;
    // n lies in Q because it is fixed by every automorphism.
    const Rational inv_n = n.c_[0].inverse();
    for (auto& r : others.c_) r *= inv_n;
    return others;
}

CycNum CycNum::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum out(1);
    CycNum base = *this;
    while (e != 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::complex<double> CycNum::embed() const {
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < kDegree; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / kOrder;
        acc += c_[static_cast<std::size_t>(k)].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

CycNum CycNum::operator-() const {
    CycNum out;
    for (std::size_t k = 0; k < 8; ++k) out.c_[k] = -c_[k];
    return out;
}

CycNum& CycNum::operator+=(const CycNum& b) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] += b.c_[k];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] -= b.c_[k];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.is_rational()) {
        CycNum out = b;
        for (auto& r : out.c_) r *= a.c_[0];
        return out;
    }
    if (b.is_rational()) {
        CycNum out = a;
        for (auto& r : out.c_) r *= b.c_[0];
        return out;
    }
    std::array<Rational, 15> buf{};
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b.c_[j].is_zero()) continue;
            buf[i + j] += a.c_[i] * b.c_[j];
        }
    }
    reduce_in_place(buf, 14);
    CycNum out;
    for (std::size_t k = 0; k < 8; ++k) out.c_[k] = std::move(buf[k]);
    return out;
}

CycNum& CycNum::operator*=(const CycNum& b) {
    *this = *this * b;
    return *this;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < kDegree; ++k) {
        const Rational& ck = c_[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        if (!first) os << (ck.sign() < 0 ? " - " : " + ");
        else if (ck.sign() < 0) os << "-";
        const Rational mag = ck.sign() < 0 ? -ck : ck;
        if (k == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) os << mag << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.to_string(); }

}  // namespace sextic

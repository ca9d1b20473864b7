#ifndef SEXTIC_CYCNUM_HPP
#define SEXTIC_CYCNUM_HPP

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "sextic/rational.hpp"

namespace sextic {

/// Exact element of the cyclotomic field Q(zeta_24).
///
/// Stored as c0 + c1*z + ... + c7*z^7 where z = exp(2*pi*i/24) and the
/// representation is reduced modulo the minimal polynomial z^8 - z^4 + 1, so
/// every element has exactly one coordinate vector. All the algebraic
/// constants needed by the sextic identities live here: omega, i, zeta_8,
/// zeta_12, sqrt(+-2), sqrt(+-3), sqrt(+-6) and eta = (sqrt6 + sqrt2)/2.
class CycNum {
   public:
    static constexpr int kDegree = 8;
    static constexpr int kOrder = 24;
    using Coords = std::array<Rational, kDegree>;

    CycNum() = default;
    CycNum(const Rational& r) { c_[0] = r; }  // NOLINT(google-explicit-constructor)
    CycNum(long n) { c_[0] = Rational(n); }   // NOLINT(google-explicit-constructor)
    explicit CycNum(const Coords& coords) : c_(coords) {}

    /// z^k for any integer k (reduced).
    static CycNum zeta(int k);
    static CycNum omega() { return zeta(8); }
    static CycNum imag_unit() { return zeta(6); }
    static CycNum zeta8() { return zeta(3); }
    static CycNum zeta12() { return zeta(2); }
    static CycNum sqrt2();
    static CycNum sqrt3();
    static CycNum sqrt6();
    static CycNum sqrt_m1() { return imag_unit(); }
    static CycNum sqrt_m2();
    static CycNum sqrt_m3();
    static CycNum sqrt_m6();
    static CycNum eta();

    const Coords& coords() const { return c_; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    const Rational& rational_part() const { return c_[0]; }

    /// Image under the Galois automorphism z -> z^k, gcd(k, 24) = 1.
    CycNum galois(int k) const;
    /// Throws std::domain_error for zero.
    CycNum inverse() const;
    CycNum pow(int e) const;
    /// Field norm down to Q (product of the 8 conjugates).
    Rational norm() const;

    /// Numeric embedding sum c_k exp(2*pi*i*k/24).
    std::complex<double> embed() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b);
    CycNum& operator/=(const CycNum& b) { return *this *= b.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }

    std::string to_string() const;

   private:
    Coords c_{};
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

}  // namespace sextic

#endif  // SEXTIC_CYCNUM_HPP

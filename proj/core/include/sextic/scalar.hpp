#ifndef SEXTIC_SCALAR_HPP
#define SEXTIC_SCALAR_HPP

#include <cmath>
#include <complex>
#include <type_traits>

#include "sextic/cycnum.hpp"
#include "sextic/param_poly.hpp"
#include "sextic/rational.hpp"

namespace sextic {

using Complex = std::complex<double>;

/// Relative tolerance of the floating kernel. A value a counts as zero when
/// |a| <= eps * scale, scale being a caller-supplied magnitude reference.
struct Tolerance {
    double eps = 1e-9;
};

/// Per-scalar behaviour used by the generic form code. Exact kernels ignore
/// scale and tolerance and compare coefficients exactly.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool has_omega = false;
    static bool is_zero(const Rational& a, double /*scale*/ = 0.0, double /*eps*/ = 0.0) { return a.is_zero(); }
    static double magnitude(const Rational& a) { return std::abs(a.to_double()); }
    static Complex to_complex(const Rational& a) { return {a.to_double(), 0.0}; }
};

template <>
struct ScalarTraits<CycNum> {
    static constexpr bool exact = true;
    static constexpr bool has_omega = true;
    static bool is_zero(const CycNum& a, double = 0.0, double = 0.0) { return a.is_zero(); }
    static double magnitude(const CycNum& a) { return std::abs(a.embed()); }
    static Complex to_complex(const CycNum& a) { return a.embed(); }
    static CycNum omega() { return CycNum::omega(); }
    static CycNum sqrt_m3() { return CycNum::sqrt_m3(); }
};

template <class C>
struct ScalarTraits<UniPoly<C>> {
    static constexpr bool exact = true;
    static constexpr bool has_omega = ScalarTraits<C>::has_omega;
    static bool is_zero(const UniPoly<C>& a, double = 0.0, double = 0.0) { return a.is_zero(); }
    static double magnitude(const UniPoly<C>& a) { return a.is_zero() ? 0.0 : 1.0; }
    static UniPoly<C> omega() { return UniPoly<C>(ScalarTraits<C>::omega()); }
    static UniPoly<C> sqrt_m3() { return UniPoly<C>(ScalarTraits<C>::sqrt_m3()); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr bool has_omega = true;
    static bool is_zero(const Complex& a, double scale, double eps) {
        return a == Complex(0.0, 0.0) || std::abs(a) <= eps * scale;
    }
    static double magnitude(const Complex& a) { return std::abs(a); }
    static Complex to_complex(const Complex& a) { return a; }
    static Complex omega() { return {-0.5, std::sqrt(3.0) / 2.0}; }
    static Complex sqrt_m3() { return {0.0, std::sqrt(3.0)}; }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Principal cube root (complex floating only).
inline Complex principal_cbrt(const Complex& z) {
    if (z == Complex(0.0, 0.0)) return z;
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace sextic

#endif  // SEXTIC_SCALAR_HPP

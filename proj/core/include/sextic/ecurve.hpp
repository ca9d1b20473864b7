#ifndef SEXTIC_ECURVE_HPP
#define SEXTIC_ECURVE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "sextic/binary_form.hpp"

namespace sextic {

/// Homogeneous rational function num/den of two binary forms over an exact
/// field (Rational or CycNum). Kept reduced: the gcd is divided out after
/// every operation and the first nonzero coefficient of den is 1.
template <class T>
class RationalFunction {
    static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, CycNum>,
                  "rational functions need an exact coefficient field");

   public:
    RationalFunction() : num_(BinaryForm<T>::constant(T(0))), den_(BinaryForm<T>::constant(T(1))) {}
    RationalFunction(long c) : RationalFunction(BinaryForm<T>::constant(T(c))) {}  // NOLINT
    RationalFunction(const T& c) : RationalFunction(BinaryForm<T>::constant(c)) {}  // NOLINT
    RationalFunction(BinaryForm<T> num) : num_(std::move(num)), den_(BinaryForm<T>::constant(T(1))) {  // NOLINT
        reduce();
    }
    /// Throws std::domain_error for a zero denominator.
    RationalFunction(BinaryForm<T> num, BinaryForm<T> den) : num_(std::move(num)), den_(std::move(den)) {
        if (is_zero_form(den_)) throw std::domain_error("rational function with zero denominator");
        reduce();
    }

    const BinaryForm<T>& num() const { return num_; }
    const BinaryForm<T>& den() const { return den_; }
    bool is_zero() const { return is_zero_form(num_); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Homogeneous degree deg(num) - deg(den); 0 for the zero function.
    int degree() const { return num_.degree() - den_.degree(); }

    /// The numerator when the denominator is a constant; throws otherwise.
    BinaryForm<T> as_form() const {
        if (!is_polynomial()) throw std::domain_error("rational function has a nonconstant denominator");
        return num_ * (T(1) / den_[0]);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree() != b.degree()) throw std::invalid_argument("adding rational functions of different degree");
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        if (a.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (is_polynomial()) return as_form().to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

   private:
    struct Reduced {};
    RationalFunction(BinaryForm<T> num, BinaryForm<T> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (is_zero_form(num_)) {
            num_ = BinaryForm<T>::constant(T(0));
            den_ = BinaryForm<T>::constant(T(1));
            return;
        }
        const BinaryForm<T> g = form_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        int k = 0;
        while (den_[k].is_zero()) ++k;
        const T inv = T(1) / den_[k];
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    BinaryForm<T> num_;
    BinaryForm<T> den_;
};

namespace ec_detail {

template <class S>
bool negligible(const S& v, double scale) {
    if constexpr (std::is_same_v<S, Complex>) {
        return std::abs(v) <= 1e-12 * std::max(scale, 1.0);
    } else {
        return v.is_zero();
    }
}

template <class S>
double magnitude(const S& v) {
    if constexpr (std::is_same_v<S, Complex>) {
        return std::abs(v);
    } else if constexpr (std::is_same_v<S, Rational> || std::is_same_v<S, CycNum>) {
        return ScalarTraits<S>::magnitude(v);
    } else {
        return 1.0;
    }
}

template <class S>
bool same(const S& a, const S& b, double rel) {
    if constexpr (std::is_same_v<S, Complex>) {
        return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1.0});
    } else {
        return a == b;
    }
}

}  // namespace ec_detail

/// Dishonest quadruple detected by eb_inverse.
class NotHonestError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Euler-Binet parameters. S is a scalar (Rational, CycNum, Complex), a formal
/// polynomial ring (forward map only) or RationalFunction for form inputs.
template <class S>
struct EBParams {
    S a;
    S b;
    S mu;
};

template <class S>
struct EBQuadruple {
    std::array<S, 4> f;
    /// f1^3 + f2^3
    S p;
    /// b = 0, so p vanishes.
    bool degenerate = false;
};

/// f1 = mu(1 - (a - 3b)q), f2 = mu((a + 3b)q - 1), f3 = mu((a + 3b) - q^2),
/// f4 = mu(q^2 - (a - 3b)) with q = a^2 + 3b^2, and
/// p = 18 mu^3 b q (1 - (a + b)^3 - (a - b)^3 + q^3).
template <class S>
EBQuadruple<S> eb_forward(const EBParams<S>& e) {
    const S one(1);
    const S three(3);
    const S q = e.a * e.a + three * e.b * e.b;
    const S am = e.a - three * e.b;
    const S ap = e.a + three * e.b;
    EBQuadruple<S> out;
    out.f = {e.mu * (one - am * q), e.mu * (ap * q - one), e.mu * (ap - q * q), e.mu * (q * q - am)};
    const S s = e.a + e.b;
    const S d = e.a - e.b;
    out.p = S(18) * e.mu * e.mu * e.mu * e.b * q * (one - s * s * s - d * d * d + q * q * q);
    if constexpr (std::is_same_v<S, Complex>) {
        out.degenerate = std::abs(e.b) == 0.0;
    } else {
        out.degenerate = e.b.is_zero();
    }
    return out;
}

/// Recover (a, b, mu) from a quadruple with f1^3 + f2^3 = f3^3 + f4^3, using
/// g1 = (f1 + f2)/2, g2 = (f2 - f1)/2, g3 = (f3 + f4)/2, g4 = (f4 - f3)/2.
/// Throws std::invalid_argument if the cube sums differ, std::domain_error if
/// g1^2 + 3g2^2 = 0 and NotHonestError when the quadruple is dishonest.
template <class S>
EBParams<S> eb_inverse(const std::array<S, 4>& f) {
    using ec_detail::negligible;
    const S half = S(1) / S(2);
    const S three(3);
    double scale = 0.0;
    for (const auto& v : f) scale = std::max(scale, ec_detail::magnitude(v));
    const S lhs = f[0] * f[0] * f[0] + f[1] * f[1] * f[1];
    const S rhs = f[2] * f[2] * f[2] + f[3] * f[3] * f[3];
    if (!ec_detail::same(lhs, rhs, 1e-9)) throw std::invalid_argument("quadruple does not have equal sums of cubes");
    const S g1 = (f[0] + f[1]) * half;
    const S g2 = (f[1] - f[0]) * half;
    const S g3 = (f[2] + f[3]) * half;
    const S g4 = (f[3] - f[2]) * half;
    const S n = g1 * g1 + three * g2 * g2;
    if (negligible(n, scale * scale)) throw std::domain_error("g1^2 + 3 g2^2 vanishes");
    EBParams<S> out;
    out.a = (g1 * g3 + three * g2 * g4) / n;
    out.b = (g1 * g4 - g3 * g2) / n;
    const S q = out.a * out.a + three * out.b * out.b;
    const S c = out.a * q - S(1);
    const S d = three * out.b * q;
    const bool d_zero = negligible(d, 1.0);
    if (d_zero && negligible(c, 1.0)) throw NotHonestError("quadruple is not honest");
    out.mu = d_zero ? g2 / c : g1 / d;
    return out;
}

/// (h1, h2) with h1^3 - h2^3 = f1^3 - f4^3: h1 = mu(1 + 2aq), h2 = mu(2a + q^2).
template <class S>
std::array<S, 2> curve_third_rep(const EBParams<S>& e) {
    const S q = e.a * e.a + S(3) * e.b * e.b;
    return {e.mu * (S(1) + S(2) * e.a * q), e.mu * (S(2) * e.a + q * q)};
}

template <class S>
struct CurvePoint {
    S X;
    S Y;
};

/// Third intersection of the chord through P1, P2 with X^3 + Y^3 = A.
/// Throws std::domain_error when (X1^2 X2 + Y1^2 Y2) - (X1 X2^2 + Y1 Y2^2)
/// vanishes (tangent or degenerate chord).
template <class S>
CurvePoint<S> curve_add(const CurvePoint<S>& p1, const CurvePoint<S>& p2, const S& A) {
    const S& X1 = p1.X;
    const S& Y1 = p1.Y;
    const S& X2 = p2.X;
    const S& Y2 = p2.Y;
    const S D = (X1 * X1 * X2 + Y1 * Y1 * Y2) - (X1 * X2 * X2 + Y1 * Y2 * Y2);
    double scale = 0.0;
    for (const S* v : {&X1, &Y1, &X2, &Y2}) scale = std::max(scale, ec_detail::magnitude(*v));
    if (ec_detail::negligible(D, scale * scale * scale)) throw std::domain_error("chord denominator vanishes");
    const S cross = X2 * Y1 - X1 * Y2;
    return {(A * (X1 - X2) + Y1 * Y2 * cross) / D, (A * (Y1 - Y2) - X1 * X2 * cross) / D};
}

/// Form-valued wrapper: curve_add on forms through rational functions.
template <class T>
CurvePoint<RationalFunction<T>> curve_add_forms(const std::array<BinaryForm<T>, 2>& p1,
                                                const std::array<BinaryForm<T>, 2>& p2, const BinaryForm<T>& A) {
    using RF = RationalFunction<T>;
    return curve_add<RF>({RF(p1[0]), RF(p1[1])}, {RF(p2[0]), RF(p2[1])}, RF(A));
}

extern template class RationalFunction<Rational>;
extern template class RationalFunction<CycNum>;

}  // namespace sextic

#endif  // SEXTIC_ECURVE_HPP

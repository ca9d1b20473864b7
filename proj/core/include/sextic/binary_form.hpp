#ifndef SEXTIC_BINARY_FORM_HPP
#define SEXTIC_BINARY_FORM_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

/// Homogeneous form c_0 x^d + c_1 x^{d-1} y + ... + c_d y^d over a scalar
/// kernel T. The declared degree is kept even for the zero form, so that
/// "the degree-6 zero form" is a meaningful result of an identity check.
template <class T>
class BinaryForm {
   public:
    BinaryForm() : degree_(0), coeffs_{T(0)} {}
    explicit BinaryForm(int degree) : degree_(check_degree(degree)), coeffs_(static_cast<std::size_t>(degree) + 1, T(0)) {}
    BinaryForm(int degree, std::vector<T> coeffs) : degree_(check_degree(degree)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1) {
            throw std::invalid_argument("binary form of degree " + std::to_string(degree_) + " needs " +
                                        std::to_string(degree_ + 1) + " coefficients");
        }
    }
    /// Degree is inferred from the number of coefficients.
    BinaryForm(std::initializer_list<T> coeffs)
        : degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(coeffs) {
        if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
    }
    explicit BinaryForm(std::vector<T> coeffs)
        : degree_(check_degree(static_cast<int>(coeffs.size()) - 1)), coeffs_(std::move(coeffs)) {}

    static BinaryForm constant(const T& c) { return BinaryForm(0, {c}); }
    static BinaryForm x() { return BinaryForm(1, {T(1), T(0)}); }
    static BinaryForm y() { return BinaryForm(1, {T(0), T(1)}); }
    /// c * x^i * y^j
    static BinaryForm monomial(const T& c, int i, int j) {
        BinaryForm out(i + j);
        out.coeffs_[static_cast<std::size_t>(j)] = c;
        return out;
    }
    /// a*x + b*y
    static BinaryForm linear(const T& a, const T& b) { return BinaryForm(1, {a, b}); }
    /// a*x^2 + b*x*y + c*y^2
    static BinaryForm quadratic(const T& a, const T& b, const T& c) { return BinaryForm(2, {a, b, c}); }

    int degree() const { return degree_; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    /// Coefficient of x^{d-k} y^k.
    const T& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    T& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    T eval(const T& xv, const T& yv) const {
        // Horner in x with y powers accumulated alongside.
        T acc(0);
        T ypow(1);
        std::vector<T> xpows(coeffs_.size(), T(1));
        for (std::size_t k = 1; k < xpows.size(); ++k) xpows[k] = xpows[k - 1] * xv;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            acc += coeffs_[k] * xpows[coeffs_.size() - 1 - k] * ypow;
            ypow *= yv;
        }
        return acc;
    }

    BinaryForm operator-() const {
        BinaryForm out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    BinaryForm& operator+=(const BinaryForm& g) {
        require_same_degree(g, "add");
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += g.coeffs_[k];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& g) {
        require_same_degree(g, "subtract");
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= g.coeffs_[k];
        return *this;
    }
    BinaryForm& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend BinaryForm operator+(BinaryForm f, const BinaryForm& g) { return f += g; }
    friend BinaryForm operator-(BinaryForm f, const BinaryForm& g) { return f -= g; }
    friend BinaryForm operator*(BinaryForm f, const T& s) { return f *= s; }
    friend BinaryForm operator*(const T& s, BinaryForm f) { return f *= s; }
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        BinaryForm out(f.degree_ + g.degree_);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (ScalarTraits<T>::is_zero(f.coeffs_[i], 0.0, 0.0)) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return out;
    }
    /// Exact coefficient-wise equality (use forms_equal for the floating kernel).
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
    }

    template <class Fn>
    auto map(Fn&& fn) const {
        using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return BinaryForm<U>(degree_, std::move(out));
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= degree_; ++k) {
            const T& c = coeffs_[static_cast<std::size_t>(k)];
            if (is_exact_v<T> && ScalarTraits<T>::is_zero(c, 0.0, 0.0)) continue;
            if (!first) os << " + ";
            os << "(" << c << ")";
            const int xe = degree_ - k;
            if (xe > 0) os << "*x" << (xe > 1 ? "^" + std::to_string(xe) : "");
            if (k > 0) os << "*y" << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

   private:
    static int check_degree(int d) {
        if (d < 0) throw std::invalid_argument("binary form degree must be non-negative");
        return d;
    }
    void require_same_degree(const BinaryForm& g, const char* op) const {
        if (g.degree_ != degree_) {
            throw std::invalid_argument(std::string("cannot ") + op + " binary forms of degree " +
                                        std::to_string(degree_) + " and " + std::to_string(g.degree_));
        }
    }

    int degree_;
    std::vector<T> coeffs_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const BinaryForm<T>& f) {
    return os << f.to_string();
}

template <class T>
BinaryForm<T> pow(const BinaryForm<T>& f, unsigned e) {
    BinaryForm<T> out = BinaryForm<T>::constant(T(1));
    BinaryForm<T> base = f;
    while (e != 0) {
        if (e & 1U) out = out * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return out;
}

template <class T>
BinaryForm<T> cube(const BinaryForm<T>& f) {
    return f * f * f;
}

/// Largest coefficient magnitude, the default scale for tolerance tests.
template <class T>
double max_magnitude(const BinaryForm<T>& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs()) m = std::max(m, ScalarTraits<T>::magnitude(c));
    return m;
}

template <class T>
double norm2(const BinaryForm<T>& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs()) {
        const double m = ScalarTraits<T>::magnitude(c);
        s += m * m;
    }
    return std::sqrt(s);
}

/// Zero test. Exact kernels compare exactly; the floating kernel uses
/// |c_k| <= eps * scale with scale defaulting to 1.
template <class T>
bool is_zero_form(const BinaryForm<T>& f, Tolerance tol = {}, double scale = 1.0) {
    for (const auto& c : f.coeffs()) {
        if (!ScalarTraits<T>::is_zero(c, scale, tol.eps)) return false;
    }
    return true;
}

/// Coefficient-wise equality of f and g; the floating kernel uses the larger
/// coefficient magnitude of the two operands as scale.
template <class T>
bool forms_equal(const BinaryForm<T>& f, const BinaryForm<T>& g, Tolerance tol = {}) {
    if (f.degree() != g.degree()) return false;
    if constexpr (is_exact_v<T>) {
        return f == g;
    } else {
        const double scale = std::max({max_magnitude(f), max_magnitude(g), 1e-300});
        return is_zero_form(f - g, tol, scale);
    }
}

/// Relative coefficient residual ||f - g|| / max(||f||, ||g||).
template <class T>
double relative_residual(const BinaryForm<T>& f, const BinaryForm<T>& g) {
    const double scale = std::max(norm2(f), norm2(g));
    if (scale == 0.0) return 0.0;
    return norm2(f - g) / scale;
}

/// True when f and g are proportional (including either being zero): all
/// 2x2 minors f_i g_j - f_j g_i vanish relative to |f||g|.
template <class T>
bool proportional(const BinaryForm<T>& f, const BinaryForm<T>& g, Tolerance tol = {}) {
    if (f.degree() != g.degree()) return false;
    const double scale = norm2(f) * norm2(g);
    for (int i = 0; i <= f.degree(); ++i) {
        for (int j = i + 1; j <= f.degree(); ++j) {
            const T minor = f[i] * g[j] - f[j] * g[i];
            if (!ScalarTraits<T>::is_zero(minor, scale, tol.eps)) return false;
        }
    }
    return true;
}

/// f(x, -y)
template <class T>
BinaryForm<T> reflect_y(const BinaryForm<T>& f) {
    BinaryForm<T> out = f;
    for (int k = 1; k <= f.degree(); k += 2) out[k] = -out[k];
    return out;
}

/// f(a*x, b*y)
template <class T>
BinaryForm<T> scale_vars(const BinaryForm<T>& f, const T& a, const T& b) {
    BinaryForm<T> out = f;
    const int d = f.degree();
    for (int k = 0; k <= d; ++k) {
        T s(1);
        for (int i = 0; i < d - k; ++i) s *= a;
        for (int i = 0; i < k; ++i) s *= b;
        out[k] = out[k] * s;
    }
    return out;
}

/// f(y, x)
template <class T>
BinaryForm<T> swap_xy(const BinaryForm<T>& f) {
    std::vector<T> c(f.coeffs().rbegin(), f.coeffs().rend());
    return BinaryForm<T>(f.degree(), std::move(c));
}

/// Invertible linear change M(x, y) = (a x + b y, c x + d y).
template <class T>
struct LinearChange {
    T a{1}, b{0}, c{0}, d{1};

    static LinearChange identity() { return {T(1), T(0), T(0), T(1)}; }

    T det() const { return a * d - b * c; }

    bool is_invertible(Tolerance tol = {}) const {
        const double scale = ScalarTraits<T>::magnitude(a) * ScalarTraits<T>::magnitude(d) +
                             ScalarTraits<T>::magnitude(b) * ScalarTraits<T>::magnitude(c);
        return !ScalarTraits<T>::is_zero(det(), scale, tol.eps);
    }

    LinearChange inverse() const {
        if (!is_invertible()) throw std::domain_error("linear change is singular");
        const T inv = T(1) / det();
        return {d * inv, -b * inv, -c * inv, a * inv};
    }

    /// Matrix product: f o (M * N) == (f o M) o N.
    friend LinearChange operator*(const LinearChange& m, const LinearChange& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

/// (f o M)(x, y) = f(a x + b y, c x + d y). Throws std::domain_error when M is
/// singular.
template <class T>
BinaryForm<T> compose(const BinaryForm<T>& f, const LinearChange<T>& m, Tolerance tol = {}) {
    if (!m.is_invertible(tol)) throw std::domain_error("cannot compose with a singular linear change");
    const int d = f.degree();
    const BinaryForm<T> X = BinaryForm<T>::linear(m.a, m.b);
    const BinaryForm<T> Y = BinaryForm<T>::linear(m.c, m.d);
    std::vector<BinaryForm<T>> xp{BinaryForm<T>::constant(T(1))};
    std::vector<BinaryForm<T>> yp{BinaryForm<T>::constant(T(1))};
    for (int k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
    }
    BinaryForm<T> out(d);
    for (int k = 0; k <= d; ++k) {
        if constexpr (is_exact_v<T>) {
            if (ScalarTraits<T>::is_zero(f[k])) continue;
        }
        out += (xp[static_cast<std::size_t>(d - k)] * yp[static_cast<std::size_t>(k)]) * f[k];
    }
    return out;
}

namespace detail {

// Dense univariate polynomials, lowest degree first, used for gcd chains on
// the dehomogenisation f(x, 1).
template <class T>
using Dense = std::vector<T>;

template <class T>
void trim(Dense<T>& p, double scale, double eps) {
    while (!p.empty() && ScalarTraits<T>::is_zero(p.back(), scale, eps)) p.pop_back();
}

template <class T>
double dense_scale(const Dense<T>& p) {
    double m = 0.0;
    for (const auto& c : p) m = std::max(m, ScalarTraits<T>::magnitude(c));
    return m;
}

template <class T>
Dense<T> derivative(const Dense<T>& p) {
    Dense<T> out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * T(static_cast<long>(k)));
    return out;
}

template <class T>
Dense<T> monic(Dense<T> p) {
    if (p.empty()) return p;
    const T inv = T(1) / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

/// Quotient and remainder; divisor must be non-empty after trimming.
template <class T>
std::pair<Dense<T>, Dense<T>> divmod(Dense<T> num, const Dense<T>& den, double eps) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    const double scale = std::max(dense_scale(num), dense_scale(den));
    if (num.size() < den.size()) {
        trim(num, scale, eps);
        return {Dense<T>{}, num};
    }
    const std::size_t shift_max = num.size() - den.size();
    Dense<T> q(shift_max + 1, T(0));
    const T lead_inv = T(1) / den.back();
    for (std::size_t shift = shift_max + 1; shift-- > 0;) {
        const std::size_t top = shift + den.size() - 1;
        const T coef = num[top] * lead_inv;
        q[shift] = coef;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= coef * den[j];
        num[top] = T(0);
    }
    num.resize(den.size() - 1);
    trim(num, scale, eps);
    trim(q, 0.0, 0.0);
    return {q, num};
}

/// Monic gcd (empty when both inputs are zero).
template <class T>
Dense<T> gcd(Dense<T> a, Dense<T> b, double eps) {
    trim(a, dense_scale(a), eps);
    trim(b, dense_scale(b), eps);
    while (!b.empty()) {
        auto r = divmod(a, b, eps).second;
        a = std::move(b);
        b = std::move(r);
        // Keep the working pair normalised so the floating tolerance stays relative.
        if (!b.empty()) b = monic(std::move(b));
    }
    return monic(std::move(a));
}

template <class T>
std::pair<Dense<T>, int> dehomogenize(const BinaryForm<T>& f, double eps) {
    const double scale = max_magnitude(f);
    int inf_mult = 0;
    while (inf_mult <= f.degree() && ScalarTraits<T>::is_zero(f[inf_mult], scale, eps)) ++inf_mult;
    Dense<T> p;
    for (int k = f.degree(); k >= inf_mult; --k) p.push_back(f[k]);
    return {p, inf_mult};
}

template <class T>
BinaryForm<T> homogenize(const Dense<T>& p, int y_power) {
    const int deg_p = static_cast<int>(p.size()) - 1;
    const int d = deg_p + y_power;
    BinaryForm<T> out(d);
    for (int j = 0; j <= deg_p; ++j) out[d - j] = p[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace detail

/// Greatest common divisor up to a scalar factor. Roots at infinity are
/// handled projectively through the y-power. Throws when both inputs vanish.
/// For the floating kernel, Euclidean remainders whose coefficients fall below
/// eps times the working scale are treated as zero.
template <class T>
BinaryForm<T> form_gcd(const BinaryForm<T>& f, const BinaryForm<T>& g, Tolerance tol = {}) {
    const double eps = is_exact_v<T> ? 0.0 : tol.eps;
    const bool fz = is_zero_form(f, tol, std::max(max_magnitude(f), 1e-300));
    const bool gz = is_zero_form(g, tol, std::max(max_magnitude(g), 1e-300));
    if (fz && gz) throw std::invalid_argument("gcd of two zero forms");
    if (fz) return g;
    if (gz) return f;
    auto [pf, yf] = detail::dehomogenize(f, eps);
    auto [pg, yg] = detail::dehomogenize(g, eps);
    auto h = detail::gcd(pf, pg, eps);
    return detail::homogenize(h, std::min(yf, yg));
}

/// q with q * g == f. Throws std::domain_error if g does not divide f (exactly,
/// or to within the tolerance relative to |f| for floating forms) and
/// std::invalid_argument if g is zero.
template <class T>
BinaryForm<T> exact_divide(const BinaryForm<T>& f, const BinaryForm<T>& g, Tolerance tol = {}) {
    const double gs = std::max(max_magnitude(g), 1e-300);
    if (is_zero_form(g, tol, gs)) throw std::invalid_argument("division by the zero form");
    if (f.degree() < g.degree()) throw std::domain_error("divisor has larger degree");
    int k0 = 0;
    if constexpr (is_exact_v<T>) {
        while (ScalarTraits<T>::is_zero(g[k0])) ++k0;
    } else {
        while (ScalarTraits<T>::magnitude(g[k0]) <= tol.eps * gs) ++k0;
    }
    const int e = g.degree();
    const int dq = f.degree() - e;
    BinaryForm<T> q(dq);
    for (int j = 0; j <= dq; ++j) {
        if (j + k0 > f.degree()) break;
        T acc = f[j + k0];
        for (int i = 0; i < j; ++i) {
            const int gi = j + k0 - i;
            if (gi <= e) acc = acc - q[i] * g[gi];
        }
        q[j] = acc / g[k0];
    }
    if (!forms_equal(q * g, f, tol)) throw std::domain_error("form does not divide exactly");
    return q;
}

/// Root multiplicities of an exact form, from a square-free (Yun)
/// decomposition of the dehomogenisation plus the multiplicity at infinity.
/// Returned in non-increasing order. Throws for the zero form.
template <class T>
std::vector<int> multiplicity_structure(const BinaryForm<T>& p) {
    static_assert(is_exact_v<T>, "floating forms: use roots::linear_factors for multiplicities");
    if (is_zero_form(p)) throw std::invalid_argument("multiplicity structure of the zero form");
    auto [u, inf_mult] = detail::dehomogenize(p, 0.0);
    std::vector<int> out;
    if (inf_mult > 0) out.push_back(inf_mult);
    if (u.size() > 1) {
        using detail::Dense;
        const Dense<T> du = detail::derivative(u);
        const Dense<T> b = detail::gcd(u, du, 0.0);
        Dense<T> c = detail::divmod(u, b, 0.0).first;
        Dense<T> d = detail::divmod(du, b, 0.0).first;
        {
            const auto dc = detail::derivative(c);
            if (d.size() < dc.size()) d.resize(dc.size(), T(0));
            for (std::size_t k = 0; k < dc.size(); ++k) d[k] -= dc[k];
            detail::trim(d, 0.0, 0.0);
        }
        for (int i = 1; c.size() > 1; ++i) {
            const Dense<T> a = detail::gcd(c, d, 0.0);
            for (std::size_t r = 1; r < a.size(); ++r) out.push_back(i);
            c = detail::divmod(c, a, 0.0).first;
            d = detail::divmod(d, a, 0.0).first;
            const auto dc = detail::derivative(c);
            if (d.size() < dc.size()) d.resize(dc.size(), T(0));
            for (std::size_t k = 0; k < dc.size(); ++k) d[k] -= dc[k];
            detail::trim(d, 0.0, 0.0);
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Promote an exact form to the complex floating kernel.
template <class T>
BinaryForm<Complex> to_complex(const BinaryForm<T>& f) {
    return f.map([](const T& c) { return ScalarTraits<T>::to_complex(c); });
}

/// Instantiate a form with ParamPoly coefficients at a parameter value.
template <class C>
BinaryForm<C> eval_param(const BinaryForm<UniPoly<C>>& f, const C& at) {
    return f.map([&](const UniPoly<C>& c) { return c.eval(at); });
}

/// Lift a form over C to constant ParamPoly coefficients.
template <class C>
BinaryForm<UniPoly<C>> lift_param(const BinaryForm<C>& f) {
    return f.map([](const C& c) { return UniPoly<C>(c); });
}

extern template class BinaryForm<Rational>;
extern template class BinaryForm<CycNum>;
extern template class BinaryForm<ParamPoly>;
extern template class BinaryForm<Complex>;

}  // namespace sextic

#endif  // SEXTIC_BINARY_FORM_HPP

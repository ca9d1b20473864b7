#ifndef SEXTIC_PARAM_POLY_HPP
#define SEXTIC_PARAM_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sextic/cycnum.hpp"

namespace sextic {

/// Univariate polynomial in a formal parameter (lambda, n, d, ...) with
/// coefficients in an exact ring. Ring operations only; there is no division,
/// so identities with parameter denominators are checked after clearing them.
/// Invariant: no trailing zero coefficient (the zero polynomial is empty).
template <class T>
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(const T& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : coeffs_{T(c)} { trim(); }   // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    /// The formal parameter itself.
    static UniPoly variable() { return UniPoly(std::vector<T>{T(0), T(1)}); }
    static UniPoly monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Horner evaluation at a scalar of the coefficient ring.
    T eval(const T& at) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Evaluation into any ring R that accepts products with T (e.g. another
    /// UniPoly, or a CycNum when T is Rational).
    template <class R>
    R eval_into(const R& at) const {
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + R(*it);
        return acc;
    }

    /// t^n * p(1/t); requires n >= degree().
    UniPoly reversed(std::size_t n) const {
        std::vector<T> v(n + 1, T(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) v[n - k] = coeffs_[k];
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    UniPoly& operator+=(const UniPoly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& b) {
        *this = *this * b;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(unsigned e) const {
        UniPoly out(T(1));
        UniPoly base = *this;
        while (e != 0) {
            if (e & 1U) out *= base;
            base *= base;
            e >>= 1U;
        }
        return out;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k] == T(0)) continue;
            if (!first) os << " + ";
            os << "(" << coeffs_[k] << ")";
            if (k >= 1) os << "*" << var;
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const UniPoly<T>& p) {
    return os << p.to_string();
}

/// Polynomial in one formal parameter over Q(zeta_24).
using ParamPoly = UniPoly<CycNum>;
/// Polynomial in two formal parameters: outer variable over ParamPoly.
using BiParamPoly = UniPoly<ParamPoly>;

}  // namespace sextic

#endif  // SEXTIC_PARAM_POLY_HPP

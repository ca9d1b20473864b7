#ifndef SEXTIC_FAMILIES_HPP
#define SEXTIC_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/binary_form.hpp"

namespace sextic {

// Generators are templated on the scalar kernel: Rational or CycNum for exact
// values, ParamPoly for a formal parameter, Complex for numerics. Families
// that need a cube root of unity require a kernel with omega().

namespace fam {

template <class T>
BinaryForm<T> quad(const T& a, const T& b, const T& c) {
    return BinaryForm<T>::quadratic(a, b, c);
}

template <class T>
T pw(const T& v, unsigned e) {
    T out(1);
    for (unsigned i = 0; i < e; ++i) out = out * v;
    return out;
}

/// Throws std::domain_error if v vanishes (exactly, or below 1e-12 for floating).
template <class T>
void require_nonzero(const T& v, const char* what) {
    if constexpr (std::is_same_v<T, Complex>) {
        if (std::abs(v) <= 1e-12) throw std::domain_error(what);
    } else if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, CycNum>) {
        if (v.is_zero()) throw std::domain_error(what);
    }
}

}  // namespace fam

/// Ramanujan's quadruple: R1^3 = R2^3 + R3^3 + R4^3, with R1(1,0) = 6.
template <class T>
std::array<BinaryForm<T>, 4> ramanujan(long leading = 6) {
    using fam::quad;
    return {quad<T>(T(leading), T(-4), T(4)), quad<T>(T(3), T(5), T(-5)), quad<T>(T(4), T(-4), T(6)),
            quad<T>(T(5), T(-5), T(-3))};
}

/// Narayanan's parameterised version of Ramanujan's identity; N_{j,2} = 3 R_j.
template <class T>
std::array<BinaryForm<T>, 4> narayanan(const T& l) {
    using fam::pw;
    using fam::quad;
    const T l3 = pw(l, 3);
    const T L = l * (l3 + T(1));
    const T m = T(2) * l3 - T(1);
    const T n = l * (l3 - T(2));
    const T p = l3 + T(1);
    return {quad<T>(L, -n, n), quad<T>(p, m, -m), quad<T>(n, -n, L), quad<T>(m, -m, -p)};
}

/// The enhanced version with a third sum:
/// N4^3 + N3^3 = -N2^3 + N1^3 = E1^3 + E2^3. Returns {N4, N3, -N2, N1, E1, E2}.
template <class T>
std::array<BinaryForm<T>, 6> narayanan_enhanced(const T& l) {
    using fam::pw;
    using fam::quad;
    const auto N = narayanan(l);
    const T l3 = pw(l, 3);
    const T L = l * (l3 + T(1));
    const T m = T(2) * l3 - T(1);
    const T n = l * (l3 - T(2));
    const T p = l3 + T(1);
    return {N[3], N[2], -N[1], N[0], quad<T>(-p, m + T(2) * p, -p), quad<T>(L, n - T(2) * L, L)};
}

/// F_{1..6,lambda}: F1^3 + F2^3 = F3^3 + F4^3 = F5^3 + F6^3 = p1.
template <class T>
std::array<BinaryForm<T>, 6> f_family(const T& l) {
    using fam::pw;
    using fam::quad;
    const T w = ScalarTraits<T>::omega();
    const T w2 = w * w;
    const T l3 = pw(l, 3);
    const auto F1 = quad<T>(l3, T(-1), l3);
    const auto F2 = quad<T>(-l, pw(l, 4), -l);
    return {F1, F2, scale_vars(F1, w, w2), scale_vars(F2, w, w2), scale_vars(F1, w2, w), scale_vars(F2, w2, w)};
}

/// The flip-similar pair, numerators over 1 - lambda^6:
/// ((2l^3 + l^9), (1 + 5l^6), (2l^3 + l^9)) and -l((1 + 2l^6), (5l^3 + l^9), (1 + 2l^6)).
template <class T>
std::array<BinaryForm<T>, 2> f78_numerators(const T& l) {
    using fam::pw;
    using fam::quad;
    const T l3 = pw(l, 3);
    const T l6 = pw(l, 6);
    const T l9 = pw(l, 9);
    const T e = T(2) * l3 + l9;
    const T g = T(1) + T(2) * l6;
    return {quad<T>(e, T(1) + T(5) * l6, e), quad<T>(-l * g, -l * (T(5) * l3 + l9), -l * g)};
}

/// (lambda^6 - 1)(lambda^3 x^3 + y^3)(x^3 + lambda^3 y^3)
template <class T>
BinaryForm<T> p1_form(const T& l) {
    const T l3 = fam::pw(l, 3);
    const BinaryForm<T> a(3, {l3, T(0), T(0), T(1)});
    const BinaryForm<T> b(3, {T(1), T(0), T(0), l3});
    return a * b * (fam::pw(l, 6) - T(1));
}

/// ((1 + l^6)x^3 + 3l^3 x^2 y - l^3 y^3)(-l^3 x^3 + 3l^3 x y^2 + (1 + l^6) y^3)
template <class T>
BinaryForm<T> p2_form(const T& l) {
    const T l3 = fam::pw(l, 3);
    const T l6 = fam::pw(l, 6);
    const BinaryForm<T> a(3, {T(1) + l6, T(3) * l3, T(0), -l3});
    const BinaryForm<T> b(3, {-l3, T(0), T(3) * l3, T(1) + l6});
    return a * b;
}

/// 3 sqrt(-3) l^3 xy(x - y)(x + y)(l^3 x + y)(x + l^3 y) = F4^3 - F6^3 = F5^3 - F3^3.
template <class T>
BinaryForm<T> p3_form(const T& l) {
    using Lin = BinaryForm<T>;
    const T l3 = fam::pw(l, 3);
    const T c = T(3) * ScalarTraits<T>::sqrt_m3() * l3;
    return Lin::x() * Lin::y() * Lin::linear(T(1), T(-1)) * Lin::linear(T(1), T(1)) * Lin::linear(l3, T(1)) *
           Lin::linear(T(1), l3) * c;
}

/// x^6 + t x^4 y^2 + t x^2 y^4 + y^6
template <class T>
BinaryForm<T> A_form(const T& t) {
    return BinaryForm<T>(6, {T(1), T(0), t, T(0), t, T(0), T(1)});
}

/// x^6 + t x^3 y^3 + y^6
template <class T>
BinaryForm<T> B_form(const T& t) {
    return BinaryForm<T>(6, {T(1), T(0), T(0), t, T(0), T(0), T(1)});
}

template <class T>
BinaryForm<T> Q1_form() {
    return B_form<T>(T(0));
}

/// xy(x^4 - y^4)
template <class T>
BinaryForm<T> Q2_form() {
    return BinaryForm<T>(6, {T(0), T(1), T(0), T(0), T(0), T(-1), T(0)});
}

/// Young's Type(4) family in the arrangement Y1^3 + Y2^3 = Y4^3 + (-Y3)^3.
template <class T>
std::array<BinaryForm<T>, 4> young() {
    using fam::quad;
    return {quad<T>(T(1), T(16), T(-21)), quad<T>(T(-1), T(16), T(21)), quad<T>(T(2), T(4), T(42)),
            -quad<T>(T(2), T(-4), T(42))};
}

/// Young's Type(n^2) family: first pair cubes equal second pair cubes.
template <class T>
std::array<BinaryForm<T>, 4> young_n(const T& n) {
    using fam::pw;
    using fam::quad;
    const T a = T(3) * (pw(n, 7) - n);
    const T b = T(3) * (pw(n, 6) - T(1));
    const T n3 = pw(n, 3);
    return {quad<T>(n, T(-6) * n, a), quad<T>(T(-1), T(6) * n3, b), quad<T>(n, T(6) * n, a),
            quad<T>(T(-1), T(-6) * n3, b)};
}

/// Hirschhorn's Type(4) identity.
template <class T>
std::array<BinaryForm<T>, 4> hirschhorn() {
    using fam::quad;
    return {quad<T>(T(1), T(7), T(-9)), quad<T>(T(2), T(-4), T(12)), quad<T>(T(2), T(0), T(10)),
            quad<T>(T(1), T(-9), T(-1))};
}

/// Hirschhorn's Type(n^2) generalisation.
template <class T>
std::array<BinaryForm<T>, 4> hirschhorn_n(const T& n) {
    using fam::pw;
    using fam::quad;
    const T n3 = pw(n, 3);
    const T c = T(1) - pw(n, 6);
    const T d = pw(n, 7) - n;
    return {quad<T>(T(3), T(6) * n3, c), quad<T>(T(3) * n, T(-6) * n, d), quad<T>(T(3), T(-6) * n3, c),
            quad<T>(T(3) * n, T(6) * n, d)};
}

/// Sandor's conditional identity; valid when w1^3 + w2^3 = w3^3 + w4^3.
template <class T>
std::array<BinaryForm<T>, 4> sandor(const T& w1, const T& w2, const T& w3, const T& w4) {
    using fam::quad;
    const T u = w1 - w3;
    const T v = w4 - w2;
    const T s13 = w1 * w1 - w3 * w3;
    const T s24 = w2 * w2 - w4 * w4;
    return {quad<T>(w2 * u, s13, w4 * v), quad<T>(-w3 * u, s24, -w1 * v), quad<T>(w4 * u, s13, w2 * v),
            quad<T>(-w1 * u, s24, -w3 * v)};
}

/// Vieta's quartics: first pair cubes equal second pair cubes.
template <class T>
std::array<BinaryForm<T>, 4> vieta() {
    const BinaryForm<T> x = BinaryForm<T>::x();
    const BinaryForm<T> y = BinaryForm<T>::y();
    const BinaryForm<T> d(3, {T(1), T(0), T(0), T(-1)});
    return {x * d, y * d, x * BinaryForm<T>(3, {T(1), T(0), T(0), T(2)}),
            -(y * BinaryForm<T>(3, {T(2), T(0), T(0), T(1)}))};
}

/// The three equal sums equal to 2x^6 - 2y^6.
template <class T>
std::array<BinaryForm<T>, 6> cubic_family() {
    using fam::quad;
    const T w = ScalarTraits<T>::omega();
    const T w2 = w * w;
    return {quad<T>(T(1), T(1), T(-1)), quad<T>(T(1), T(-1), T(-1)), quad<T>(w, T(1), -w2),
            quad<T>(w, T(-1), -w2),       quad<T>(w2, T(1), -w),        quad<T>(w2, T(-1), -w)};
}

/// Tame completion for formal or numeric gamma: f3,4 = x^2 +- gamma xy + y^2.
template <class T>
std::array<BinaryForm<T>, 2> tame_pair(const T& gamma) {
    return {fam::quad<T>(T(1), gamma, T(1)), fam::quad<T>(T(1), -gamma, T(1))};
}

enum class FamilyName {
    Ramanujan,
    Narayanan,
    F,
    P1,
    P2,
    P3,
    A,
    B,
    Q1,
    Q2,
    Naren,
    Young,
    YoungN,
    Hirschhorn,
    HirschhornN,
    Sandor,
    Vieta
};

struct FamilyId {
    FamilyName name;
    /// Parameter where applicable (lambda, n, t). Sandor takes w1..w4 in order.
    std::vector<std::string> params;
};

/// Parse "R", "N", "F", "p1", "p2", "p3", "A", "B", "Q1", "Q2", "Naren",
/// "Young", "YoungN", "Hirschhorn", "HirschhornN", "Sandor", "Vieta".
FamilyName parse_family_name(std::string_view text);
std::string family_name_string(FamilyName name);
/// Number of scalar parameters a family takes.
int family_param_count(FamilyName name);

template <class T>
struct NamedForms {
    std::vector<std::string> names;
    std::vector<BinaryForm<T>> forms;
};

/// Members of a family followed by their common sum (entry named "p").
template <class T>
NamedForms<T> generate(FamilyName name, const std::vector<T>& params) {
    if (static_cast<int>(params.size()) != family_param_count(name)) {
        throw std::invalid_argument(family_name_string(name) + " takes " + std::to_string(family_param_count(name)) +
                                    " parameter(s)");
    }
    auto honest_lambda = [](const T& l) { fam::require_nonzero(l * (fam::pw(l, 6) - T(1)), "lambda(lambda^6 - 1) must be nonzero"); };
    NamedForms<T> out;
    auto add = [&](std::string n, BinaryForm<T> f) {
        out.names.push_back(std::move(n));
        out.forms.push_back(std::move(f));
    };
    auto add_four = [&](const std::string& stem, const std::array<BinaryForm<T>, 4>& f) {
        for (std::size_t i = 0; i < 4; ++i) add(stem + std::to_string(i + 1), f[i]);
        add("p", cube(f[0]) + cube(f[1]));
    };
    switch (name) {
        case FamilyName::Ramanujan: {
            const auto R = ramanujan<T>();
            for (std::size_t i = 0; i < 4; ++i) add("R" + std::to_string(i + 1), R[i]);
            add("p", cube(R[0]));
            break;
        }
        case FamilyName::Narayanan: {
            honest_lambda(params[0]);
            const auto N = narayanan(params[0]);
            for (std::size_t i = 0; i < 4; ++i) add("N" + std::to_string(i + 1), N[i]);
            add("p", cube(N[0]));
            break;
        }
        case FamilyName::F: {
            honest_lambda(params[0]);
            const auto F = f_family(params[0]);
            for (std::size_t i = 0; i < 6; ++i) add("F" + std::to_string(i + 1), F[i]);
            add("p", p1_form(params[0]));
            break;
        }
        case FamilyName::P1:
            honest_lambda(params[0]);
            add("p", p1_form(params[0]));
            break;
        case FamilyName::P2:
            honest_lambda(params[0]);
            add("p", p2_form(params[0]));
            break;
        case FamilyName::P3:
            honest_lambda(params[0]);
            add("p", p3_form(params[0]));
            break;
        case FamilyName::A:
            add("p", A_form(params[0]));
            break;
        case FamilyName::B:
            add("p", B_form(params[0]));
            break;
        case FamilyName::Q1:
            add("p", Q1_form<T>());
            break;
        case FamilyName::Q2:
            add("p", Q2_form<T>());
            break;
        case FamilyName::Naren: {
            honest_lambda(params[0]);
            const auto E = narayanan_enhanced(params[0]);
            const char* names[] = {"N4", "N3", "-N2", "N1", "E1", "E2"};
            for (std::size_t i = 0; i < 6; ++i) add(names[i], E[i]);
            add("p", cube(E[0]) + cube(E[1]));
            break;
        }
        case FamilyName::Young:
            add_four("Y", young<T>());
            break;
        case FamilyName::YoungN:
            add_four("Y", young_n(params[0]));
            break;
        case FamilyName::Hirschhorn:
            add_four("H", hirschhorn<T>());
            break;
        case FamilyName::HirschhornN:
            add_four("H", hirschhorn_n(params[0]));
            break;
        case FamilyName::Sandor:
            add_four("S", sandor(params[0], params[1], params[2], params[3]));
            break;
        case FamilyName::Vieta:
            add_four("V", vieta<T>());
            break;
    }
    return out;
}

}  // namespace sextic

#endif  // SEXTIC_FAMILIES_HPP

#include "sextic/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <utility>

#include "sextic/decomp.hpp"
#include "sextic/ecurve.hpp"
#include "sextic/families.hpp"

namespace sextic {

namespace {

using Q = Rational;
using C = CycNum;
using PP = ParamPoly;
using BPP = UniPoly<ParamPoly>;

template <class T>
using Form = BinaryForm<T>;

// One named sub-identity; a group passes when all of its parts pass.
struct Part {
    std::string name;
    bool ok;
    double residual = 0.0;
};
using Parts = std::vector<Part>;

struct Group {
    std::string id;
    std::string anchor;
    std::string method;
    std::function<Parts()> run;
};

IdentityCheck summarize(const Group& g, const Parts& parts) {
    IdentityCheck out{g.id, g.anchor, g.method, true, 0.0, ""};
    for (const auto& p : parts) {
        out.residual = std::max(out.residual, p.residual);
        if (!p.ok) {
            out.pass = false;
            if (!out.detail.empty()) out.detail += "; ";
            out.detail += p.name;
        }
    }
    return out;
}

template <class T>
Part same(std::string name, const Form<T>& a, const Form<T>& b) {
    return {std::move(name), a.degree() == b.degree() && a == b};
}

template <class T>
Form<T> q(const T& a, const T& b, const T& c) {
    return Form<T>::quadratic(a, b, c);
}

template <class T>
Form<T> cubesum(const Form<T>& a, const Form<T>& b) {
    return cube(a) + cube(b);
}

PP lam() { return PP::variable(); }

PP pp(long v) { return PP(v); }

template <class T>
Form<T> linear(const T& a, const T& b) {
    return Form<T>::linear(a, b);
}

Parts ramanujan_parts(long leading) {
    const auto R = ramanujan<Q>(leading);
    return {same("R1^3 = R2^3 + R3^3 + R4^3", cube(R[0]), cube(R[1]) + cube(R[2]) + cube(R[3]))};
}

Parts flips() {
    const auto R = ramanujan<Q>();
    const auto x = Form<Q>::x();
    const auto y = Form<Q>::y();
    Parts out;
    const Form<Q> f1 = cube(R[2]) + cube(R[3]);
    out.push_back(same("flip 1: R3^3 + R4^3 = R1^3 - R2^3", f1, cube(R[0]) - cube(R[1])));
    out.push_back(same("flip 1: third pair", f1, cube(q<Q>(6, -8, 6)) - cube(q<Q>(3, -11, 3))));
    out.push_back(same("flip 1: factored", f1, q<Q>(1, 1, 1) * q<Q>(3, -3, 1) * q<Q>(1, -3, 3) * Q(63)));
    const Form<Q> f2 = cube(R[0]) - cube(R[3]);
    out.push_back(same("flip 2: R1^3 - R4^3 = R3^3 + R2^3", f2, cube(R[2]) + cube(R[1])));
    out.push_back(same("flip 2: third pair, cleared by 21^3", f2 * Q(21 * 21 * 21),
                       cube(q<Q>(94, -8, 94)) + cube(q<Q>(23, -199, 23))));
    out.push_back(same("flip 2: factored", f2, q<Q>(13, -23, 13) * q<Q>(7, 1, 1) * q<Q>(1, 1, 7)));
    const Form<Q> f3 = cube(R[0]) - cube(R[2]);
    out.push_back(same("flip 3: R1^3 - R3^3 = R2^3 + R4^3", f3, cube(R[1]) + cube(R[3])));
    out.push_back(same("flip 3: factored", f3,
                       (x - y) * (x + y) * q<Q>(1, -1, 1) * q<Q>(19, -11, 19) * Q(8)));
    const LinearChange<Q> M{Q(5), Q(-2), Q(3), Q(3)};
    out.push_back(same("flip 1 o [[5,-2],[3,3]] = 21^3 flip 2", compose(f1, M), f2 * Q(21 * 21 * 21)));
    return out;
}

Parts narayanan_parts() {
    const PP l = lam();
    const auto N = narayanan(l);
    const auto E = narayanan_enhanced(l);
    Parts out;
    out.push_back(same("N1^3 = N2^3 + N3^3 + N4^3", cube(N[0]), cube(N[1]) + cube(N[2]) + cube(N[3])));
    out.push_back(same("N4^3 + N3^3 = N1^3 - N2^3", cubesum(E[0], E[1]), cubesum(E[2], E[3])));
    out.push_back(same("N4^3 + N3^3 = E1^3 + E2^3", cubesum(E[0], E[1]), cubesum(E[4], E[5])));
    out.push_back(same("N2 + N4 = l^2 (N1 - N3)", N[1] + N[3], (N[0] - N[2]) * (l * l)));
    const auto R = ramanujan<C>();
    bool scaled = true;
    for (std::size_t j = 0; j < 4; ++j) scaled = scaled && eval_param(N[j], C(2)) == R[j] * C(3);
    out.push_back({"N_j at l = 2 equals 3 R_j", scaled});
    return out;
}

Parts threefold() {
    const PP a = lam();
    const Form<PP> lhs = cube(q<PP>(a, pp(-1), a)) + cube(q<PP>(pp(-1), a, pp(-1))) * a;
    const Form<PP> rhs = Form<PP>(3, {a, pp(0), pp(0), pp(1)}) * Form<PP>(3, {pp(1), pp(0), pp(0), a}) * (a * a - pp(1));
    return {same("(ax^2 - xy + ay^2)^3 + a(-x^2 + axy - y^2)^3 = (a^2 - 1)(ax^3 + y^3)(x^3 + ay^3)", lhs, rhs)};
}

Parts threefold2() {
    const PP l = lam();
    const auto F = f_family(l);
    const Form<PP> p1 = p1_form(l);
    const Form<PP> s12 = cubesum(F[0], F[1]);
    int deg = 0;
    for (const auto& form : {s12, cubesum(F[2], F[3]), cubesum(F[4], F[5])}) {
        for (const auto& c : form.coeffs()) deg = std::max(deg, c.degree());
    }
    const PP l3 = l * l * l;
    const PP l6 = l3 * l3;
    const Form<PP> B = Form<PP>(6, {l3, pp(0), pp(0), l6 + pp(1), pp(0), pp(0), l3}) * (l6 - pp(1));
    return {same("F1^3 + F2^3 = p1", s12, p1),
            same("F3^3 + F4^3 = p1", cubesum(F[2], F[3]), p1),
            same("F5^3 + F6^3 = p1", cubesum(F[4], F[5]), p1),
            {"formal degree in lambda <= 18", deg <= 18},
            same("p1 = l^3 (l^6 - 1) B_{l^3 + l^-3}, cleared", p1, B)};
}

Parts flippo() {
    const PP l = lam();
    const auto F = f_family(l);
    const Form<PP> p2 = p2_form(l);
    const Form<PP> p3 = p3_form(l);
    return {same("F4^3 - F5^3 = p2", cube(F[3]) - cube(F[4]), p2),
            same("F6^3 - F3^3 = p2", cube(F[5]) - cube(F[2]), p2),
            same("F4^3 - F6^3 = p3", cube(F[3]) - cube(F[5]), p3),
            same("F5^3 - F3^3 = p3", cube(F[4]) - cube(F[2]), p3),
            same("F5 - F3 = l^2 (F4 - F6)", F[4] - F[2], (F[3] - F[5]) * (l * l))};
}

Parts f78() {
    const PP l = lam();
    const PP l3 = l * l * l;
    const PP w = pp(1) - l3 * l3;
    const auto F = f_family(l);
    const auto G = f78_numerators(l);
    const LinearChange<PP> M{l3, pp(1), pp(-1), -l3};
    return {same("F1 o M = (1 - l^6) F7", compose(F[0], M), G[0]),
            same("F2 o M = (1 - l^6) F8", compose(F[1], M), G[1]),
            same("p1 o M = (1 - l^6)^3 p2", compose(p1_form(l), M), p2_form(l) * (w * w * w)),
            same("(1 - l^6)^3 (F7^3 + F8^3) = (1 - l^6)^3 p2", cubesum(G[0], G[1]), p2_form(l) * (w * w * w))};
}

Parts sqrt_m3_change() {
    const PP l = lam();
    const PP l3 = l * l * l;
    const C r = C::sqrt_m3();
    const LinearChange<PP> M{pp(1), PP(-r), pp(1), PP(r)};
    const Form<PP> target = -compose(p1_form(l), M);
    const Form<PP> a1 = q<PP>(pp(1) - pp(2) * l3, pp(0), pp(3) * (pp(1) + pp(2) * l3));
    const Form<PP> a2 = q<PP>(l * (pp(2) - l3), pp(0), pp(-3) * l * (pp(2) + l3));
    const Form<PP> b1 = q<PP>(pp(1) + l3, pp(6) * l3, pp(3) * (pp(1) - l3));
    const Form<PP> b2 = q<PP>(-l * (pp(1) + l3), pp(-6) * l, pp(3) * l * (pp(1) - l3));
    return {same("even pair", cubesum(a1, a2), target), same("pair with +xy", cubesum(b1, b2), target),
            same("pair with -xy", cubesum(reflect_y(b1), reflect_y(b2)), target)};
}

Parts symmetries() {
    const PP l = lam();
    const auto F = f_family(l);
    const auto Fm = f_family(-l);
    Parts out;
    for (std::size_t j = 0; j < 6; ++j) {
        out.push_back(same("F" + std::to_string(j + 1) + "(-l)(x, y) = -F" + std::to_string(j + 1) + "(l)(x, -y)",
                           Fm[j], -reflect_y(F[j])));
    }
    // l^4 F(1/l) via coefficient reversal at degree 4.
    auto recip = [](const Form<PP>& f) { return f.map([](const PP& c) { return c.reversed(4); }); };
    out.push_back(same("l^4 F1(1/l) = -F2(l)", recip(F[0]), -F[1]));
    out.push_back(same("l^4 F2(1/l) = -F1(l)", recip(F[1]), -F[0]));
    return out;
}

Parts tameo() {
    const PP g = lam();
    const auto t = tame_pair(g);
    return {same("(x^2 + gxy + y^2)^3 + (x^2 - gxy + y^2)^3 = 2 A_{3(1 + g^2)}", cubesum(t[0], t[1]),
                 A_form(pp(3) * (pp(1) + g * g)) * pp(2))};
}

Parts wild() {
    // Outer variable s = 2 sqrt(3) / sqrt(1 - d^6), inner variable d.
    const BPP s = BPP::variable();
    const BPP d(PP::variable());
    const BPP d3 = d * d * d;
    const Form<BPP> f1 = q<BPP>(BPP(1), -s * d3, BPP(1));
    const Form<BPP> f2 = q<BPP>(d, s * d, -d);
    const Form<BPP> sum = cubesum(f1, f2);

    const PP t = PP::variable();
    const PP r = t * t * t;
    const PP w = pp(1) - r * r;
    const Form<PP> F3 = q<PP>(-t * (pp(2) + pp(3) * r + r * r), pp(0), t * (pp(2) - pp(3) * r + r * r));
    const Form<PP> F4 = q<PP>(pp(1) + pp(3) * r + pp(2) * r * r, pp(0), pp(1) - pp(3) * r + pp(2) * r * r);
    const Form<PP> target = cubesum(F3, F4);

    bool odd = true;
    bool even = true;
    bool low = true;
    for (int m = 0; m <= 6; ++m) {
        const BPP& c = sum[m];
        low = low && c.degree() <= 3;
        odd = odd && (c.coeff(1) * w + c.coeff(3) * pp(12)).is_zero();
        even = even && c.coeff(0) * w * w * w + c.coeff(2) * w * w * pp(12) == target[m];
    }
    const Form<PP> pw =
        Form<PP>(6, {w * (pp(1) + r), pp(0), pp(3) * (pp(1) + pp(10) * r + r * r) * (pp(1) + r), pp(0),
                     pp(3) * (pp(1) - pp(10) * r + r * r) * (pp(1) - r), pp(0), w * (pp(1) - r)}) *
        (w * w);
    const Form<BPP> line = q<BPP>(BPP(1) + d3, BPP(0), BPP(1) - d3);
    return {{"s-degree of the cube sum <= 3", low},
            {"odd part in s vanishes once s^2 = 12/(1 - d^6)", odd},
            {"even part equals (f3^3 + f4^3), cleared by (1 - d^6)^3", even},
            same("(1 - d^6)^3 p in closed form", target, pw),
            same("f1 + d^2 f2 = (1 + d^3)x^2 + (1 - d^3)y^2", f1 + f2 * (d * d), line),
            same("d^2 f3 + f4 = (1 + d^3)x^2 + (1 - d^3)y^2, cleared", F3 * (t * t) + F4,
                 q<PP>(pp(1) + r, pp(0), pp(1) - r) * w)};
}

Parts cubic_q1flip() {
    const auto c = cubic_family<C>();
    const Form<C> target(6, {C(2), C(0), C(0), C(0), C(0), C(0), C(-2)});
    const C w = C::omega();
    const C w2 = w * w;
    const Form<C> lhs = cube(q<C>(w, C(1), -w2)) - cube(q<C>(w2, C(1), -w));
    return {same("first pair = 2x^6 - 2y^6", cubesum(c[0], c[1]), target),
            same("w pair = 2x^6 - 2y^6", cubesum(c[2], c[3]), target),
            same("w^2 pair = 2x^6 - 2y^6", cubesum(c[4], c[5]), target),
            same("(wx^2 + xy - w^2y^2)^3 - (w^2x^2 + xy - wy^2)^3 = -3 sqrt(-3) Q2", lhs,
                 Q2_form<C>() * (C(-3) * C::sqrt_m3()))};
}

PP det3(const std::array<Form<PP>, 3>& r) {
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

Parts p1factors() {
    const PP l = lam();
    const C w = C::omega();
    std::array<Form<PP>, 3> a;
    std::array<Form<PP>, 3> b;
    C wp(1);
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = linear(l, PP(wp));
        b[i] = linear(pp(1), l * PP(wp));
        wp = wp * w;
    }
    Parts out;
    const Form<PP> core = Form<PP>(3, {l * l * l, pp(0), pp(0), pp(1)}) * Form<PP>(3, {pp(1), pp(0), pp(0), l * l * l});
    for (std::size_t k = 0; k < 3; ++k) {
        std::array<Form<PP>, 3> tri;
        for (std::size_t i = 0; i < 3; ++i) tri[i] = a[i] * b[(k + 3 - i) % 3];
        out.push_back({"triple " + std::to_string(k) + " is dependent", det3(tri).is_zero()});
        out.push_back(same("triple " + std::to_string(k) + " multiplies to p1/(l^6 - 1)", tri[0] * tri[1] * tri[2], core));
    }
    const std::array<Form<PP>, 3> M{q<PP>(l, l * l + pp(1), l), q<PP>(pp(1), -l, l * l), q<PP>(l * l, -l, pp(1))};
    const PP det = det3(M);
    out.push_back({"extra determinant = (l^2 - 1)(l^4 + 4l^2 + 1)",
                   det == (l * l - pp(1)) * (l * l * l * l + pp(4) * l * l + pp(1))});
    const C root = C::imag_unit() * C::eta();
    out.push_back({"extra determinant vanishes at l^2 = -2 - sqrt(3)", det.eval(root).is_zero()});
    return out;
}

Parts bizarre() {
    const C z = C::zeta8();
    const C e = C::eta();
    const LinearChange<C> M{z * z * e, z, C(1), z * z * z * e};
    const Form<C> lhs = compose(B_form(C(5) * C::sqrt_m2()), M);
    return {same("B_{5 sqrt(-2)} o M = 54 z8^3 eta^3 Q2", lhs, Q2_form<C>() * (C(54) * z.pow(3) * e.pow(3)))};
}

Parts q2_reps() {
    const auto nu = [](int k) { return C::zeta(2 * k); };
    const auto z8 = [](int k) { return C::zeta(3 * k); };
    const Form<C> Q2 = Q2_form<C>();
    const C m = C(-3) * C::sqrt_m3();
    const C s6 = C::sqrt6();
    const C c6 = C(6) * C::sqrt_m6();
    return {same("first pair", Q2 * m, cubesum(q<C>(nu(5), C(1), nu(1)), q<C>(nu(7), C(-1), nu(11)))),
            same("second pair", Q2 * (-m), cubesum(q<C>(nu(7), C(1), nu(11)), q<C>(nu(5), C(-1), nu(1)))),
            same("third pair", Q2 * m, cubesum(q<C>(nu(10), C(1), nu(8)), q<C>(nu(8), C(-1), nu(10)))),
            same("fourth pair", Q2 * m, cubesum(q<C>(nu(4), C(1), nu(2)), q<C>(nu(2), C(-1), nu(4)))),
            same("fifth pair", Q2 * c6, cubesum(q<C>(z8(5), s6, z8(7)), q<C>(z8(1), s6, z8(3)))),
            same("sixth pair", Q2 * c6, cubesum(q<C>(z8(7), -s6, z8(5)), q<C>(z8(3), -s6, z8(1))))};
}

Parts vieta_parts() {
    const auto v = vieta<Q>();
    return {same("(x(x^3 - y^3))^3 + (y(x^3 - y^3))^3 = (x(x^3 + 2y^3))^3 - (y(2x^3 + y^3))^3", cubesum(v[0], v[1]),
                 cubesum(v[2], v[3]))};
}

Parts sandor_parts() {
    Parts out;
    for (const auto& w : {std::array<long, 4>{12, 1, 10, 9}, std::array<long, 4>{10, -1, -9, 12}}) {
        const auto s = sandor(Q(w[0]), Q(w[1]), Q(w[2]), Q(w[3]));
        const std::string tag = "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                                std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
        out.push_back({"condition at " + tag,
                       w[0] * w[0] * w[0] + w[1] * w[1] * w[1] == w[2] * w[2] * w[2] + w[3] * w[3] * w[3]});
        out.push_back(same("identity at " + tag, cubesum(s[0], s[1]), cubesum(s[2], s[3])));
    }
    return out;
}

Parts young_parts() {
    const auto y = young<Q>();
    const auto yn = young_n(lam());
    return {same("Y1^3 + Y2^3 + Y3^3 = Y4^3", cubesum(y[0], y[1]), cubesum(y[2], y[3])),
            same("Type(n^2) family in formal n", cubesum(yn[0], yn[1]), cubesum(yn[2], yn[3]))};
}

Parts hirschhorn_parts() {
    const auto h = hirschhorn<Q>();
    const auto hn = hirschhorn_n(lam());
    return {same("Type(4) identity", cubesum(h[0], h[1]), cubesum(h[2], h[3])),
            same("Type(n^2) identity in formal n", cubesum(hn[0], hn[1]), cubesum(hn[2], hn[3]))};
}

Parts curveadd() {
    const BPP a = BPP::variable();
    const BPP b(PP::variable());
    const auto eb = eb_forward<BPP>({a, b, BPP(1)});
    const auto h = curve_third_rep<BPP>({a, b, BPP(1)});
    const auto c3 = [](const BPP& v) { return v * v * v; };
    const auto& f = eb.f;
    return {{"f1^3 + f2^3 = f3^3 + f4^3", c3(f[0]) + c3(f[1]) == c3(f[2]) + c3(f[3])},
            {"f1^3 + f2^3 = p", c3(f[0]) + c3(f[1]) == eb.p},
            {"f1^3 - f4^3 = h1^3 - h2^3", c3(f[0]) - c3(f[3]) == c3(h[0]) - c3(h[1])},
            {"f3^3 - f2^3 = h1^3 - h2^3", c3(f[2]) - c3(f[1]) == c3(h[0]) - c3(h[1])}};
}

Parts tau_change() {
    Parts out;
    double worst = 0.0;
    int used = 0;
    for (int k = 0; used < 20; ++k) {
        const double radius = 0.45 + 0.07 * k;
        const Complex l = std::polar(radius, 0.3 + 0.7 * k);
        const Complex l3 = l * l * l;
        if (std::abs(1.0 - l3 * l3) < 1e-2) continue;
        ++used;
        const Complex I(0.0, 1.0);
        const Complex tau = std::sqrt(1.0 - l3 * l3) - I * l3;
        const LinearChange<Complex> M{1.0, tau, -I * tau, I};
        const auto F = f_family(l);
        const auto G4 = compose(F[3], M);
        const auto G6 = -compose(F[5], M);
        const auto G5 = compose(F[4], M);
        const auto G3 = -compose(F[2], M);
        const double n4 = norm2(G4);
        const double n5 = norm2(G5);
        const auto P3 = compose(p3_form(l), M);
        const auto A = A_form(4.0 * l3 * l3 - 1.0);
        double r = 0.0;
        r = std::max(r, std::abs(G4[0] - G4[2]) / n4);
        r = std::max(r, norm2(G6 - BinaryForm<Complex>::quadratic(G4[0], -G4[1], G4[2])) / n4);
        r = std::max(r, std::abs(G5[1]) / n5);
        r = std::max(r, norm2(G3 - BinaryForm<Complex>::quadratic(G5[2], 0.0, G5[0])) / n5);
        const Complex scale = P3[0] / A[0];
        r = std::max(r, norm2(P3 - A * scale) / norm2(P3));
        worst = std::max(worst, r);
    }
    out.push_back({"20 sampled lambda: both sides become (ax^2 +- bxy + ay^2), (rx^2 + sy^2, sx^2 + ry^2) and p3 ~ "
                   "A_{4l^6 - 1}",
                   worst <= 1e-9, worst});
    return out;
}

std::vector<Group> groups() {
    return {
        {"ramanujan", "Ramanujan: (6,-4,4)^3 = (3,5,-5)^3 + (4,-4,6)^3 + (5,-5,-3)^3", "exact",
         [] { return ramanujan_parts(6); }},
        {"flips", "the three flips of Ramanujan's identity and the change [[5,-2],[3,3]]", "exact", flips},
        {"narayanan", "Narayanan's lambda family and its enhanced third sum", "exact", narayanan_parts},
        {"threefold-alpha", "(ax^2 - xy + ay^2)^3 + a(-x^2 + axy - y^2)^3 in formal a", "exact", threefold},
        {"threefold-lambda", "F1^3 + F2^3 = F3^3 + F4^3 = F5^3 + F6^3 = p1 in formal lambda", "exact", threefold2},
        {"flippo", "the flips p2 = F4^3 - F5^3 and p3 = F4^3 - F6^3", "exact", flippo},
        {"f7f8", "F7, F8 flip similarity under (l^3 x + y, -(x + l^3 y))", "exact", f78},
        {"sqrt-3-change", "three pairs for p1 under (x - sqrt(-3)y, x + sqrt(-3)y)", "exact", sqrt_m3_change},
        {"symmetries", "lambda -> -lambda and lambda -> 1/lambda relations", "exact", symmetries},
        {"tame", "(x^2 + gxy + y^2)^3 + (x^2 - gxy + y^2)^3 = 2 A_{3(1+g^2)}", "exact", tameo},
        {"wild", "wild-case family in formal d, split by parity in s = 2 sqrt(3)/sqrt(1 - d^6)", "exact", wild},
        {"cubic-q1flip", "2x^6 - 2y^6 three ways and the w-flip of Q1", "exact", cubic_q1flip},
        {"p1-factors", "dependent triples of p1 and the extra determinant", "exact", p1factors},
        {"bizarre", "B_{5 sqrt(-2)} is similar to Q2", "exact", bizarre},
        {"q2-representations", "six representations of xy(x^4 - y^4)", "exact", q2_reps},
        {"vieta", "Vieta's quartic identity", "exact", vieta_parts},
        {"sandor", "Sandor's conditional identity at (12,1,10,9) and (10,-1,-9,12)", "exact", sandor_parts},
        {"young", "Young's Type(4) and Type(n^2) families", "exact", young_parts},
        {"hirschhorn", "Hirschhorn's Type(4) and Type(n^2) identities", "exact", hirschhorn_parts},
        {"curveadd", "Euler-Binet third representation h1^3 - h2^3 in formal a, b", "exact", curveadd},
        {"tau-change", "x -> x + tau y, y -> -i tau x + i y with tau = sqrt(1 - l^6) - i l^3", "sampled",
         tau_change},
    };
}

IdentityCheck run_guarded(const Group& g) {
    try {
        return summarize(g, g.run());
    } catch (const std::exception& e) {
        return {g.id, g.anchor, g.method, false, 0.0, std::string("exception: ") + e.what()};
    }
}

}  // namespace

IdentityCheck check_ramanujan(long leading) {
    const Group g{"ramanujan", "Ramanujan: R1^3 = R2^3 + R3^3 + R4^3 with R1(1,0) = " + std::to_string(leading),
                  "exact", [leading] { return ramanujan_parts(leading); }};
    return run_guarded(g);
}

std::vector<IdentityCheck> run_identity_suite(int jobs) {
    const auto gs = groups();
    std::vector<IdentityCheck> out(gs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < gs.size(); ++i) out[i] = run_guarded(gs[i]);
        return out;
    }
    std::size_t next = 0;
    while (next < gs.size()) {
        std::vector<std::pair<std::size_t, std::future<IdentityCheck>>> batch;
        for (int j = 0; j < jobs && next < gs.size(); ++j, ++next) {
            batch.emplace_back(next, std::async(std::launch::async, run_guarded, std::cref(gs[next])));
        }
        for (auto& [i, fut] : batch) out[i] = fut.get();
    }
    return out;
}

bool all_passed(const std::vector<IdentityCheck>& report) {
    return std::all_of(report.begin(), report.end(), [](const IdentityCheck& c) { return c.pass; });
}

}  // namespace sextic

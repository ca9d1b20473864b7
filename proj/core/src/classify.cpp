#include "sextic/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sextic/families.hpp"
#include "sextic/roots.hpp"

namespace sextic {

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kCanonicalTolerance = 1e-7;

Complex omega_pow(int e) {
    const Complex w = ScalarTraits<Complex>::omega();
    Complex out(1.0, 0.0);
    for (int i = 0; i < ((e % 3) + 3) % 3; ++i) out *= w;
    return out;
}

double max_cube_norm(const Quadruple& f) {
    double s = 0.0;
    for (const auto& q : f) s = std::max(s, norm2(cube(q)));
    return s;
}

// Best set-wise match of the cubes of {u1, u2} against {v1, v2}.
double cube_pair_mismatch(const Quad& u1, const Quad& u2, const Quad& v1, const Quad& v2) {
    const auto cu1 = cube(u1);
    const auto cu2 = cube(u2);
    const auto cv1 = cube(v1);
    const auto cv2 = cube(v2);
    const double straight = std::max(relative_residual(cu1, cv1), relative_residual(cu2, cv2));
    const double crossed = std::max(relative_residual(cu1, cv2), relative_residual(cu2, cv1));
    return std::min(straight, crossed);
}

std::string signed_label(int sign, int wpow, int index) {
    std::string out = sign < 0 ? "-" : "";
    if (wpow == 1) out += "w*";
    if (wpow == 2) out += "w^2*";
    return out + "f" + std::to_string(index + 1);
}

void check_equal_sums_and_honesty(const Quadruple& f) {
    const double scale = max_cube_norm(f);
    if (scale == 0.0) throw DishonestFamily("family contains only zero forms");
    for (const auto& q : f) {
        if (norm2(q) == 0.0) throw DishonestFamily("family contains a zero form");
    }
    const double mismatch = norm2(cube(f[0]) + cube(f[1]) - cube(f[2]) - cube(f[3])) / scale;
    if (mismatch > kSumTolerance) {
        throw std::invalid_argument("f1^3 + f2^3 differs from f3^3 + f4^3 (relative " + std::to_string(mismatch) +
                                    ")");
    }
    if (norm2(cube(f[0]) + cube(f[1])) <= kSumTolerance * scale) throw DishonestFamily("common sum vanishes");
    for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 4; ++j) {
            if (relative_residual(cube(f[static_cast<std::size_t>(i)]), cube(f[static_cast<std::size_t>(j)])) <=
                kSumTolerance) {
                throw DishonestFamily("f" + std::to_string(i + 1) + "^3 = f" + std::to_string(j + 1) +
                                      "^3: the family is not honest");
            }
        }
    }
}

// Least-squares T with u ~ T v.
Complex ratio(const Quad& u, const Quad& v) {
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (int i = 0; i <= 2; ++i) {
        num += std::conj(v[i]) * u[i];
        den += std::norm(v[i]);
    }
    return num / den;
}

}  // namespace

TypeTag type_detect(const Quadruple& f, double rel_tol) {
    for (const auto& q : f) {
        if (q.degree() != 2) throw std::invalid_argument("type_detect expects quadratic forms");
    }
    check_equal_sums_and_honesty(f);
    struct Flip {
        std::array<int, 4> index;
        std::array<int, 4> sign;
    };
    const std::array<Flip, 3> flips{{{{0, 1, 2, 3}, {1, 1, 1, 1}}, {{0, 2, 3, 1}, {1, -1, 1, -1}},
                                     {{0, 3, 2, 1}, {1, -1, 1, -1}}}};
    double scale = 0.0;
    for (const auto& q : f) scale = std::max(scale, norm2(q));
    for (int fl = 0; fl < 3; ++fl) {
        const Flip& flip = flips[static_cast<std::size_t>(fl)];
        Quadruple base;
        for (std::size_t i = 0; i < 4; ++i) {
            base[i] = f[static_cast<std::size_t>(flip.index[i])] * Complex(flip.sign[i], 0.0);
        }
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const Quad b = base[1] * omega_pow(j);
                const Quad d = base[3] * omega_pow(k);
                const Quad u = base[0] + b;
                const Quad v = base[2] + d;
                if (norm2(v) <= 1e-9 * scale || norm2(u) <= 1e-9 * scale) continue;
                if (!proportional(u, v, Tolerance{rel_tol})) continue;
                const Complex T = ratio(u, v);
                if (std::abs(T * T * T - 1.0) <= 1e-8) continue;
                TypeTag tag;
                tag.T = T;
                tag.flip = fl;
                tag.j = j;
                tag.k = k;
                tag.arranged = {base[0], b, base[2], d};
                tag.labels = {signed_label(flip.sign[0], 0, flip.index[0]), signed_label(flip.sign[1], j, flip.index[1]),
                              signed_label(flip.sign[2], 0, flip.index[2]), signed_label(flip.sign[3], k, flip.index[3])};
                tag.residual = norm2(u - v * T) / norm2(u);
                return tag;
            }
        }
    }
    throw TheoremViolation("no arrangement a + w^j b = T(c + w^k d) found for an honest family");
}

Quadruple from_three_cubes(const Quadruple& abcd) { return {abcd[1], abcd[3], abcd[0], -abcd[2]}; }

BinaryForm<Complex> square_root(const Quad& q) {
    if (q.degree() != 2) throw std::invalid_argument("square_root expects a quadratic form");
    const double scale = norm2(q);
    if (scale == 0.0) return BinaryForm<Complex>(1);
    BinaryForm<Complex> l(1);
    if (std::abs(q[0]) >= std::abs(q[2])) {
        const Complex r = std::sqrt(q[0]);
        l = BinaryForm<Complex>::linear(r, q[1] / (2.0 * r));
    } else {
        const Complex r = std::sqrt(q[2]);
        l = BinaryForm<Complex>::linear(q[1] / (2.0 * r), r);
    }
    if (norm2(l * l - q) > 1e-8 * scale) throw std::domain_error("quadratic form is not a square: " + q.to_string());
    const double lscale = norm2(l);
    for (int i = 0; i <= 1; ++i) {
        if (std::abs(l[i]) <= 1e-14 * lscale) continue;
        const bool positive = l[i].real() > 0.0 || (l[i].real() == 0.0 && l[i].imag() > 0.0);
        return positive ? l : -l;
    }
    return l;
}

LinearChange<Complex> diagonalize(const Quad& f1, const Quad& f2) {
    if (f1.degree() != 2 || f2.degree() != 2) throw std::invalid_argument("diagonalize expects quadratic forms");
    const Complex a1 = f1[0], b1 = f1[1], c1 = f1[2];
    const Complex a2 = f2[0], b2 = f2[1], c2 = f2[2];
    const double n1 = norm2(f1);
    const double n2 = norm2(f2);
    if (n1 == 0.0 || n2 == 0.0) throw std::invalid_argument("diagonalize: zero form");
    const Complex res = (a1 * c2 - a2 * c1) * (a1 * c2 - a2 * c1) - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1);
    if (std::abs(res) <= 1e-10 * n1 * n1 * n2 * n2) {
        throw std::invalid_argument("diagonalize: forms share a common factor");
    }
    const Quad disc = Quad::quadratic(b1 * b1 - 4.0 * a1 * c1, 2.0 * b1 * b2 - 4.0 * (a1 * c2 + a2 * c1),
                                      b2 * b2 - 4.0 * a2 * c2);
    if (norm2(disc) <= 1e-12 * n1 * n2) throw std::domain_error("diagonalize: pencil discriminant vanishes");
    const Factorization fac = linear_factors(disc);
    if (fac.roots.size() != 2) throw std::domain_error("diagonalize: pencil discriminant has a repeated root");
    std::array<BinaryForm<Complex>, 2> l;
    for (std::size_t j = 0; j < 2; ++j) {
        const Complex mu = fac.roots[j].s;
        const Complex nu = fac.roots[j].t;
        l[j] = square_root(f1 * mu + f2 * nu);
    }
    const LinearChange<Complex> L{l[0][0], l[0][1], l[1][0], l[1][1]};
    return L.inverse();
}

TameFamily tame_complete(Complex gamma) {
    if (std::abs(gamma) <= 1e-12) throw std::domain_error("tame completion needs gamma != 0");
    const Complex g2 = gamma * gamma;
    if (std::abs(g2 + 4.0 / 3.0) <= 1e-12) throw std::domain_error("tame completion needs gamma^2 != -4/3");
    TameFamily out;
    const Complex sigma = principal_cbrt(8.0 + 6.0 * g2);
    const Complex rs = 2.0 * (1.0 + g2) / sigma;
    const Complex root = std::sqrt(sigma * sigma - 4.0 * rs);
    out.r = (sigma + root) / 2.0;
    out.s = (sigma - root) / 2.0;
    out.T = sigma / 2.0;
    const auto tp = tame_pair(gamma);
    out.f = {Quad::quadratic(out.r, 0.0, out.s), Quad::quadratic(out.s, 0.0, out.r), tp[0], tp[1]};
    out.p = A_form(3.0 * (1.0 + g2)) * Complex(2.0, 0.0);
    out.residual = std::max(relative_residual(cube(out.f[0]) + cube(out.f[1]), out.p),
                            relative_residual(cube(out.f[2]) + cube(out.f[3]), out.p));
    if (out.residual > kSumTolerance) {
        throw TheoremViolation("tame completion sums disagree (relative " + std::to_string(out.residual) + ")");
    }
    return out;
}

WildFamily wild_family(Complex d) {
    if (std::abs(d) <= 1e-12) throw std::domain_error("wild family needs d != 0");
    const Complex d3 = d * d * d;
    const Complex d6 = d3 * d3;
    const Complex w = 1.0 - d6;
    if (std::abs(w) <= 1e-12) throw std::domain_error("wild family needs d^6 != 1");
    const Complex s = 2.0 * std::sqrt(3.0) / std::sqrt(w);
    WildFamily out;
    out.f = {Quad::quadratic(1.0, -s * d3, 1.0), Quad::quadratic(d, s * d, -d),
             Quad::quadratic(-d * (2.0 + 3.0 * d3 + d6) / w, 0.0, d * (2.0 - 3.0 * d3 + d6) / w),
             Quad::quadratic((1.0 + 3.0 * d3 + 2.0 * d6) / w, 0.0, (1.0 - 3.0 * d3 + 2.0 * d6) / w)};
    out.third = {reflect_y(out.f[0]), reflect_y(out.f[1])};
    out.T = d * d;
    out.p = cube(out.f[0]) + cube(out.f[1]);
    const Quad line = Quad::quadratic(1.0 + d3, 0.0, 1.0 - d3);
    out.residual = std::max({relative_residual(cube(out.f[2]) + cube(out.f[3]), out.p),
                             relative_residual(cube(out.third[0]) + cube(out.third[1]), out.p),
                             relative_residual(out.f[0] + out.f[1] * (d * d), line),
                             relative_residual(out.f[2] * (d * d) + out.f[3], line)});
    if (out.residual > kSumTolerance) {
        throw TheoremViolation("wild family identities fail (relative " + std::to_string(out.residual) + ")");
    }
    return out;
}

Canonicalization canonicalize_type(const Quadruple& f, Complex lambda) {
    Canonicalization out;
    out.tag = type_detect(f);
    out.lambda = lambda;
    const Complex T = out.tag.T;
    if (std::abs(lambda * lambda - T) > 1e-6 * std::max(1.0, std::abs(T))) {
        throw std::invalid_argument("lambda^2 does not match the detected type T");
    }
    const Complex T3 = T * T * T;
    if (std::abs(T3 - 1.0) <= 1e-8) throw std::domain_error("canonicalize_type needs T^3 != 1");

    const auto F = f_family(lambda);
    const Quadruple ref{F[2], -F[4], -F[3], F[5]};

    const Quad phi = Quad::quadratic((4.0 - T3) / (3.0 * T), -(4.0 + 2.0 * T3) / (3.0 * T), (4.0 - T3) / (3.0 * T));
    const Factorization fac = linear_factors(phi);
    if (fac.roots.size() != 2) throw std::domain_error("canonicalize_type: degenerate quadratic in (u, v)");

    const auto& A = out.tag.arranged;
    std::array<BinaryForm<Complex>, 2> g;
    std::array<BinaryForm<Complex>, 2> h;
    for (std::size_t j = 0; j < 2; ++j) {
        const Complex s = fac.roots[j].s;
        const Complex t = fac.roots[j].t;
        g[j] = square_root(A[2] * t - A[3] * s);
        h[j] = square_root(ref[2] * t - ref[3] * s);
    }
    const LinearChange<Complex> G{g[0][0], g[0][1], g[1][0], g[1][1]};
    if (!G.is_invertible(Tolerance{1e-10})) throw TheoremViolation("square witnesses are dependent");
    const LinearChange<Complex> Ginv = G.inverse();

    double best = std::numeric_limits<double>::infinity();
    for (int swap = 0; swap < 2; ++swap) {
        for (int sign = 0; sign < 4; ++sign) {
            const Complex e0 = (sign & 1) != 0 ? -1.0 : 1.0;
            const Complex e1 = (sign & 2) != 0 ? -1.0 : 1.0;
            const auto& r0 = h[static_cast<std::size_t>(swap)];
            const auto& r1 = h[static_cast<std::size_t>(1 - swap)];
            const LinearChange<Complex> H{e0 * r0[0], e0 * r0[1], e1 * r1[0], e1 * r1[1]};
            const LinearChange<Complex> M = Ginv * H;
            if (!M.is_invertible(Tolerance{1e-10})) continue;
            Quadruple img;
            for (std::size_t i = 0; i < 4; ++i) img[i] = compose(A[i], M);
            const double mis = std::max(cube_pair_mismatch(img[0], img[1], ref[0], ref[1]),
                                        cube_pair_mismatch(img[2], img[3], ref[2], ref[3]));
            if (mis < best) {
                best = mis;
                out.M = M;
            }
        }
        if (best <= kCanonicalTolerance) break;
    }
    out.residual = best;
    if (best > kCanonicalTolerance) {
        throw TheoremViolation("canonicalization failed to match the reference family (relative " +
                               std::to_string(best) + ")");
    }
    return out;
}

}  // namespace sextic

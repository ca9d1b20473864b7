#include "sextic/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

namespace sextic {

namespace {

void enumerate_pairings(std::vector<int>& rest, std::vector<std::array<int, 2>>& acc, std::vector<Pairing>& out) {
    if (rest.empty()) {
        out.push_back({acc[0], acc[1], acc[2]});
        return;
    }
    const int first = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        const int partner = rest[i];
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j) {
            if (j != i) next.push_back(rest[j]);
        }
        acc.push_back({first, partner});
        enumerate_pairings(next, acc, out);
        acc.pop_back();
    }
}

using ClassKey = std::array<std::pair<int, int>, 3>;

ClassKey class_key(const Pairing& pr, const std::vector<int>& classes) {
    ClassKey key;
    for (std::size_t k = 0; k < 3; ++k) {
        int a = classes[static_cast<std::size_t>(pr[k][0])];
        int b = classes[static_cast<std::size_t>(pr[k][1])];
        if (a > b) std::swap(a, b);
        key[k] = {a, b};
    }
    std::sort(key.begin(), key.end());
    return key;
}

using Row3 = std::array<Complex, 3>;

Row3 to_row(const BinaryForm<Complex>& q) { return {q[0], q[1], q[2]}; }

double row_norm(const Row3& r) { return std::sqrt(std::norm(r[0]) + std::norm(r[1]) + std::norm(r[2])); }

Complex det3(const Row3& a, const Row3& b, const Row3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool cubes_match(const Representation& u, const Representation& v) {
    constexpr double kCubeTol = 1e-7;
    const auto u1 = cube(u.f1);
    const auto u2 = cube(u.f2);
    const auto v1 = cube(v.f1);
    const auto v2 = cube(v.f2);
    return (relative_residual(u1, v1) <= kCubeTol && relative_residual(u2, v2) <= kCubeTol) ||
           (relative_residual(u1, v2) <= kCubeTol && relative_residual(u2, v1) <= kCubeTol);
}

}  // namespace

std::vector<Pairing> pair_partitions(const std::vector<int>& classes) {
    if (classes.size() != 6) throw std::invalid_argument("pair_partitions needs exactly 6 items");
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    std::vector<std::array<int, 2>> acc;
    std::vector<Pairing> all;
    enumerate_pairings(idx, acc, all);
    std::vector<Pairing> out;
    std::vector<ClassKey> seen;
    for (const auto& pr : all) {
        const ClassKey key = class_key(pr, classes);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(pr);
    }
    return out;
}

Representation normalise_pair(const ScaledPair<Complex>& pair, Complex target_scale, const BinaryForm<Complex>& p) {
    const Complex k = principal_cbrt(target_scale / pair.scale);
    Representation rep{pair.h1 * k, pair.h2 * k, 0.0};
    rep.residual = relative_residual(cube(rep.f1) + cube(rep.f2), p);
    return rep;
}

Subspace Subspace::span(const BinaryForm<Complex>& f, const BinaryForm<Complex>& g) {
    if (f.degree() != 2 || g.degree() != 2) throw std::invalid_argument("Subspace::span expects quadratics");
    if (proportional(f, g, Tolerance{1e-12})) throw std::invalid_argument("Subspace::span of proportional forms");
    std::array<Row3, 2> m{to_row(f), to_row(g)};
    // First pivot: largest entry overall.
    std::size_t pr = 0;
    std::size_t pc = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (std::abs(m[r][c]) > best) {
                best = std::abs(m[r][c]);
                pr = r;
                pc = c;
            }
        }
    }
    if (best == 0.0) throw std::invalid_argument("Subspace::span of zero forms");
    std::swap(m[0], m[pr]);
    const Complex p0 = m[0][pc];
    for (auto& v : m[0]) v /= p0;
    const Complex f1 = m[1][pc];
    for (std::size_t c = 0; c < 3; ++c) m[1][c] -= f1 * m[0][c];
    std::size_t pc2 = 0;
    best = -1.0;
    for (std::size_t c = 0; c < 3; ++c) {
        if (c != pc && std::abs(m[1][c]) > best) {
            best = std::abs(m[1][c]);
            pc2 = c;
        }
    }
    const Complex p1 = m[1][pc2];
    for (auto& v : m[1]) v /= p1;
    const Complex f0 = m[0][pc2];
    for (std::size_t c = 0; c < 3; ++c) m[0][c] -= f0 * m[1][c];
    if (pc2 < pc) std::swap(m[0], m[1]);
    Subspace out;
    out.rows_ = m;
    return out;
}

bool Subspace::contains(const BinaryForm<Complex>& q, double rel_tol) const {
    const Row3 r = to_row(q);
    const double scale = row_norm(rows_[0]) * row_norm(rows_[1]) * row_norm(r);
    return std::abs(det3(rows_[0], rows_[1], r)) <= rel_tol * scale;
}

bool Subspace::same_as(const Subspace& other, double rel_tol) const {
    for (const auto& r : other.rows_) {
        const double scale = row_norm(rows_[0]) * row_norm(rows_[1]) * row_norm(r);
        if (std::abs(det3(rows_[0], rows_[1], r)) > rel_tol * scale) return false;
    }
    return true;
}

CubicSplit cubic_two_cubes(const BinaryForm<Complex>& q) {
    if (q.degree() != 3) throw std::invalid_argument("cubic_two_cubes expects a cubic form");
    if (max_magnitude(q) == 0.0) throw std::invalid_argument("cubic_two_cubes of the zero form");
    const Factorization fac = linear_factors(q);
    CubicSplit out;
    for (const auto& r : fac.roots) {
        if (r.multiplicity == 3) {
            out.reason = "cube of a linear form";
            return out;
        }
        if (r.multiplicity == 2) {
            out.reason = "square factor";
            return out;
        }
    }
    const auto ls = fac.expanded_factors();
    const Complex det = ls[0][0] * ls[1][1] - ls[0][1] * ls[1][0];
    const Complex alpha = (ls[2][0] * ls[1][1] - ls[2][1] * ls[1][0]) / det;
    const Complex beta = (ls[0][0] * ls[2][1] - ls[0][1] * ls[2][0]) / det;
    const auto pair = construct_from_triple(ls[0], ls[1], alpha, beta);
    const Complex k = principal_cbrt(fac.scale / pair.scale);
    out.ok = true;
    out.l1 = pair.h1 * k;
    out.l2 = pair.h2 * k;
    return out;
}

HValue H_eval(const std::vector<ProjectiveRoot>& roots, double rel_tol) {
    std::vector<std::array<Complex, 2>> lin;
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) {
            if (r.at_infinity()) {
                lin.push_back({Complex(0.0, 0.0), Complex(1.0, 0.0)});
            } else {
                lin.push_back({Complex(1.0, 0.0), -r.affine()});
            }
        }
    }
    if (lin.size() != 6) throw std::invalid_argument("H_eval needs six roots counted with multiplicity");
    HValue out;
    out.value = Complex(1.0, 0.0);
    out.min_ratio = 1.0;
    for (const auto& pr : pair_partitions(std::vector<int>{0, 1, 2, 3, 4, 5})) {
        std::array<Row3, 3> rows;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& u = lin[static_cast<std::size_t>(pr[k][0])];
            const auto& v = lin[static_cast<std::size_t>(pr[k][1])];
            rows[k] = {u[0] * v[0], u[0] * v[1] + u[1] * v[0], u[1] * v[1]};
        }
        const Complex det = det3(rows[0], rows[1], rows[2]);
        out.value *= det;
        const double ratio = std::abs(det) / (row_norm(rows[0]) * row_norm(rows[1]) * row_norm(rows[2]));
        out.min_ratio = std::min(out.min_ratio, ratio);
    }
    out.vanishes = out.min_ratio <= rel_tol;
    return out;
}

DecompositionReport rep_count(const BinaryForm<Complex>& p, const DecompOptions& opts) {
    if (p.degree() != 6) throw std::invalid_argument("rep_count expects a sextic");
    if (max_magnitude(p) == 0.0) throw std::invalid_argument("rep_count of the zero form");
    DecompositionReport rep;
    rep.factorization = linear_factors(p, opts.roots);
    rep.multiplicities = rep.factorization.multiplicities();
    const auto hv = H_eval(rep.factorization.roots, opts.dependence_tol);
    rep.H = hv.value;
    rep.H_min_ratio = hv.min_ratio;
    rep.H_vanishes = hv.vanishes;

    const auto factors = rep.factorization.expanded_factors();
    const auto classes = rep.factorization.expanded_classes();
    for (const auto& pr : pair_partitions(classes)) {
        TripleDiagnostic diag;
        diag.pairing = pr;
        std::array<std::pair<int, int>, 3> cls;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto a = static_cast<std::size_t>(pr[k][0]);
            const auto b = static_cast<std::size_t>(pr[k][1]);
            diag.quadratics[k] = factors[a] * factors[b];
            cls[k] = std::minmax(classes[a], classes[b]);
        }
        if (cls[0] == cls[1] || cls[0] == cls[2] || cls[1] == cls[2]) {
            diag.status = TripleStatus::NotDistinct;
            rep.triples.push_back(diag);
            continue;
        }
        const auto dep = dependence_test(diag.quadratics[0], diag.quadratics[1], diag.quadratics[2],
                                         opts.dependence_tol);
        diag.ratio = dep.ratio;
        diag.status = dep.dependent ? TripleStatus::Dependent : TripleStatus::Independent;
        rep.triples.push_back(diag);
        if (!dep.dependent) continue;
        ++rep.dependent_triples;
        const auto pair = construct_from_triple(diag.quadratics[0], diag.quadratics[1], dep.alpha, dep.beta);
        Representation r = normalise_pair(pair, rep.factorization.scale, p);
        const Subspace sub = Subspace::span(diag.quadratics[0], diag.quadratics[1]);
        bool duplicate = false;
        for (std::size_t i = 0; i < rep.reps.size(); ++i) {
            if (rep.subspaces[i].same_as(sub) && cubes_match(rep.reps[i], r)) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        rep.reps.push_back(std::move(r));
        rep.subspaces.push_back(sub);
    }
    rep.N = static_cast<int>(rep.reps.size());
    return rep;
}

Complex cube_matrix_det(const std::array<BinaryForm<Complex>, 4>& linear) {
    std::array<std::array<Complex, 4>, 4> m;
    for (std::size_t j = 0; j < 4; ++j) {
        const auto c = cube(linear[j]);
        for (std::size_t i = 0; i < 4; ++i) m[j][i] = c[static_cast<int>(i)];
    }
    Complex det(1.0, 0.0);
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        if (m[piv][col] == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < 4; ++r) {
            const Complex f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Complex vandermonde_product(const std::array<BinaryForm<Complex>, 4>& linear) {
    Complex prod(9.0, 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = j + 1; k < 4; ++k) {
            prod *= linear[j][0] * linear[k][1] - linear[k][0] * linear[j][1];
        }
    }
    return prod;
}

}  // namespace sextic

#include "sextic/roots.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>

namespace sextic {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();
// Coefficients this small relative to the largest are treated as exact zeros
// when peeling off roots at infinity and at zero.
constexpr double kNegligibleCoeff = 1e-14;
constexpr double kClusterRadius = 1e-3;
constexpr double kMergeResidual = 1e-10;
constexpr double kReconstructionBound = 1e-8;

using Poly = std::vector<Complex>;  // lowest degree first

Complex horner(const Poly& a, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double horner_abs(const Poly& a, double r) {
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

Poly derivative(const Poly& a) {
    Poly out;
    for (std::size_t k = 1; k < a.size(); ++k) out.push_back(a[k] * static_cast<double>(k));
    return out;
}

Poly from_roots(const std::vector<Complex>& z) {
    Poly out{Complex(1.0, 0.0)};
    for (const auto& r : z) {
        Poly next(out.size() + 1, Complex(0.0, 0.0));
        for (std::size_t k = 0; k < out.size(); ++k) {
            next[k + 1] += out[k];
            next[k] -= r * out[k];
        }
        out = std::move(next);
    }
    return out;
}

double monic_residual(const Poly& a, const std::vector<Complex>& z) {
    const Poly b = from_roots(z);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        num += std::norm(a[k] - b[k]);
        den += std::norm(a[k]);
    }
    return std::sqrt(num / den);
}

bool backward_ok(const Poly& a, Complex z) {
    const double bound = horner_abs(a, std::abs(z));
    return std::abs(horner(a, z)) <= 1e4 * kMachineEps * bound;
}

// Aberth-Ehrlich simultaneous iteration for a monic polynomial of degree >= 1.
bool aberth(const Poly& a, std::mt19937_64& rng, int max_iterations, std::vector<Complex>& z) {
    const std::size_t n = a.size() - 1;
    const Poly da = derivative(a);
    double radius = std::pow(std::max(std::abs(a[0]), 1e-300), 1.0 / static_cast<double>(n));
    if (!std::isfinite(radius) || radius < 1e-8) radius = 1.0;
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const double offset = 0.4 + jitter(rng);
    z.assign(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + offset;
        const double r = radius * (0.9 + 0.2 * jitter(rng));
        z[k] = std::polar(r, angle);
    }
    for (int it = 0; it < max_iterations; ++it) {
        bool settled = true;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex pz = horner(a, z[k]);
            if (pz == Complex(0.0, 0.0)) continue;
            const Complex ratio = pz / horner(da, z[k]);
            Complex sum(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            }
            const Complex corr = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
            z[k] -= corr;
            if (std::abs(corr) > 4.0 * kMachineEps * (1.0 + std::abs(z[k]))) settled = false;
        }
        if (settled) break;
    }
    for (const auto& r : z) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return false;
        if (!backward_ok(a, r)) return false;
    }
    return true;
}

Complex newton_refine(const Poly& a, Complex c, int m) {
    Poly d = a;
    for (int i = 0; i < m - 1; ++i) d = derivative(d);
    const Poly dd = derivative(d);
    for (int it = 0; it < 30; ++it) {
        const Complex den = horner(dd, c);
        if (den == Complex(0.0, 0.0)) break;
        const Complex step = horner(d, c) / den;
        c -= step;
        if (std::abs(step) <= 4.0 * kMachineEps * (1.0 + std::abs(c))) break;
    }
    return c;
}

struct Cluster {
    Complex center;
    int multiplicity;
};

std::vector<Cluster> cluster_roots(const Poly& a, const std::vector<Complex>& z) {
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double reach = kClusterRadius * (1.0 + std::max(std::abs(z[i]), std::abs(z[j])));
            if (std::abs(z[i] - z[j]) <= reach) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

    struct Candidate {
        std::vector<std::size_t> members;
        Complex center;
    };
    std::vector<Candidate> cands;
    for (const auto& g : groups) {
        if (g.size() < 2) continue;
        Complex mean(0.0, 0.0);
        for (auto i : g) mean += z[i];
        mean /= static_cast<double>(g.size());
        Complex center = newton_refine(a, mean, static_cast<int>(g.size()));
        if (!(std::abs(center - mean) <= kClusterRadius * (1.0 + std::abs(mean)))) center = mean;
        cands.push_back({g, center});
    }
    // Try merge sets from most to fewest clusters; keep the first one whose
    // reconstruction stays within kMergeResidual.
    const std::size_t k = cands.size();
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1U << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned u, unsigned v) { return std::popcount(u) > std::popcount(v); });
    std::vector<Complex> working = z;
    for (unsigned mask : masks) {
        if (mask == 0) break;
        std::vector<Complex> trial = z;
        for (std::size_t c = 0; c < k; ++c) {
            if ((mask >> c) & 1U) {
                for (auto i : cands[c].members) trial[i] = cands[c].center;
            }
        }
        if (monic_residual(a, trial) <= kMergeResidual) {
            working = std::move(trial);
            break;
        }
    }
    std::vector<Cluster> out;
    // Regroup on identical values after merging.
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        int m = 0;
        for (std::size_t j = i; j < n; ++j) {
            if (!used[j] && working[j] == working[i]) {
                used[j] = true;
                ++m;
            }
        }
        out.push_back({working[i], m});
    }
    return out;
}

double form_norm(const BinaryForm<Complex>& f) { return norm2(f); }

}  // namespace

ProjectiveRoot ProjectiveRoot::finite(Complex z, int multiplicity) {
    ProjectiveRoot r;
    const double n = std::hypot(std::abs(z), 1.0);
    r.s = z / n;
    r.t = Complex(1.0 / n, 0.0);
    if (z != Complex(0.0, 0.0)) {
        const Complex phase = std::conj(r.s) / std::abs(r.s);
        r.s *= phase;
        r.t *= phase;
        r.s = Complex(r.s.real(), 0.0);
    }
    r.multiplicity = multiplicity;
    return r;
}

ProjectiveRoot ProjectiveRoot::infinity(int multiplicity) {
    ProjectiveRoot r;
    r.multiplicity = multiplicity;
    return r;
}

Complex ProjectiveRoot::affine() const {
    if (at_infinity()) throw std::domain_error("affine coordinate of the root at infinity");
    return s / t;
}

BinaryForm<Complex> ProjectiveRoot::linear_form() const { return BinaryForm<Complex>::linear(t, -s); }

std::vector<int> Factorization::multiplicities() const {
    std::vector<int> out;
    for (const auto& r : roots) out.push_back(r.multiplicity);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<BinaryForm<Complex>> Factorization::expanded_factors() const {
    std::vector<BinaryForm<Complex>> out;
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.linear_form());
    }
    return out;
}

std::vector<int> Factorization::expanded_classes() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (int k = 0; k < roots[i].multiplicity; ++k) out.push_back(static_cast<int>(i));
    }
    return out;
}

BinaryForm<Complex> Factorization::product() const {
    BinaryForm<Complex> out = BinaryForm<Complex>::constant(scale);
    for (const auto& f : expanded_factors()) out = out * f;
    return out;
}

double reconstruction_residual(const BinaryForm<Complex>& p, const std::vector<ProjectiveRoot>& roots,
                               Complex* scale_out) {
    BinaryForm<Complex> q = BinaryForm<Complex>::constant(Complex(1.0, 0.0));
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) q = q * r.linear_form();
    }
    if (q.degree() != p.degree()) throw std::invalid_argument("root multiplicities do not match the degree");
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (int k = 0; k <= p.degree(); ++k) {
        num += std::conj(q[k]) * p[k];
        den += std::norm(q[k]);
    }
    const Complex scale = num / den;
    if (scale_out != nullptr) *scale_out = scale;
    const double pn = form_norm(p);
    return pn == 0.0 ? 0.0 : form_norm(p - q * scale) / pn;
}

Factorization linear_factors(const BinaryForm<Complex>& p, const RootOptions& opts) {
    const int d = p.degree();
    const double big = max_magnitude(p);
    if (big == 0.0) throw std::invalid_argument("linear factors of the zero form");
    if (d == 0) return Factorization{p[0], {}, 0.0};
    const double thr = kNegligibleCoeff * big;

    int inf_mult = 0;
    while (inf_mult <= d && std::abs(p[inf_mult]) <= thr) ++inf_mult;
    int zero_mult = 0;
    while (d - zero_mult > inf_mult && std::abs(p[d - zero_mult]) <= thr) ++zero_mult;
    const int n = d - inf_mult - zero_mult;

    std::vector<Cluster> clusters;
    if (n >= 1) {
        Poly a(static_cast<std::size_t>(n) + 1);
        const Complex lead = p[inf_mult];
        for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(j)] = p[d - zero_mult - j] / lead;
        std::vector<Complex> z;
        if (n == 1) {
            z = {-a[0]};
        } else {
            std::mt19937_64 rng(opts.seed);
            bool ok = false;
            for (int attempt = 0; attempt <= opts.max_restarts && !ok; ++attempt) {
                ok = aberth(a, rng, opts.max_iterations, z);
            }
            if (!ok) throw RootFindingError("root iteration did not converge after restarts");
        }
        clusters = cluster_roots(a, z);
    }

    Factorization out;
    if (inf_mult > 0) out.roots.push_back(ProjectiveRoot::infinity(inf_mult));
    if (zero_mult > 0) out.roots.push_back(ProjectiveRoot::finite(Complex(0.0, 0.0), zero_mult));
    for (const auto& c : clusters) out.roots.push_back(ProjectiveRoot::finite(c.center, c.multiplicity));
    std::sort(out.roots.begin(), out.roots.end(), [](const ProjectiveRoot& u, const ProjectiveRoot& v) {
        return std::make_tuple(u.s.real(), u.s.imag(), u.t.real(), u.t.imag()) <
               std::make_tuple(v.s.real(), v.s.imag(), v.t.real(), v.t.imag());
    });
    out.residual = reconstruction_residual(p, out.roots, &out.scale);
    if (!(out.residual <= kReconstructionBound)) {
        throw RootFindingError("factorization residual " + std::to_string(out.residual) + " exceeds bound");
    }
    return out;
}

}  // namespace sextic

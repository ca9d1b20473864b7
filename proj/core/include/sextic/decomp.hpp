#ifndef SEXTIC_DECOMP_HPP
#define SEXTIC_DECOMP_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sextic/binary_form.hpp"
#include "sextic/roots.hpp"

namespace sextic {

using Pairing = std::array<std::array<int, 2>, 3>;

/// All ways of splitting six labelled items into three unordered pairs,
/// collapsing pairings that coincide once items with the same class id are
/// identified. Six distinct classes give 15 pairings.
std::vector<Pairing> pair_partitions(const std::vector<int>& classes);

/// Same enumeration on explicit linear forms; forms equal up to a scalar
/// (kernel tolerance) share a class. Throws unless there are exactly six.
template <class T>
std::vector<std::array<BinaryForm<T>, 3>> pair_partitions(const std::vector<BinaryForm<T>>& factors,
                                                           Tolerance tol = {}) {
    if (factors.size() != 6) throw std::invalid_argument("pair_partitions needs exactly 6 linear factors");
    std::vector<int> classes(6);
    for (std::size_t i = 0; i < 6; ++i) {
        classes[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (proportional(factors[i], factors[j], tol)) {
                classes[i] = classes[j];
                break;
            }
        }
    }
    std::vector<std::array<BinaryForm<T>, 3>> out;
    for (const auto& pr : pair_partitions(classes)) {
        std::array<BinaryForm<T>, 3> triple;
        for (std::size_t k = 0; k < 3; ++k) {
            triple[k] = factors[static_cast<std::size_t>(pr[k][0])] * factors[static_cast<std::size_t>(pr[k][1])];
        }
        out.push_back(triple);
    }
    return out;
}

/// q3 = alpha*q1 + beta*q2 when dependent.
template <class T>
struct Dependence {
    bool dependent = false;
    T alpha{0};
    T beta{0};
    /// |det| / product of row norms (0 for exact dependence).
    double ratio = 0.0;
};

inline constexpr double kDependenceTolerance = 1e-7;

/// 3x3 coefficient determinant test. Exact kernels test det == 0; the floating
/// kernel uses |det| <= 1e-7 * product of row 2-norms. Throws
/// std::invalid_argument when q1 and q2 are proportional.
template <class T>
Dependence<T> dependence_test(const BinaryForm<T>& q1, const BinaryForm<T>& q2, const BinaryForm<T>& q3,
                              double rel_tol = kDependenceTolerance) {
    if (q1.degree() != 2 || q2.degree() != 2 || q3.degree() != 2) {
        throw std::invalid_argument("dependence_test expects quadratic forms");
    }
    if (proportional(q1, q2)) throw std::invalid_argument("dependence_test: q1 and q2 are proportional");
    const T det = q1[0] * (q2[1] * q3[2] - q2[2] * q3[1]) - q1[1] * (q2[0] * q3[2] - q2[2] * q3[0]) +
                  q1[2] * (q2[0] * q3[1] - q2[1] * q3[0]);
    Dependence<T> out;
    const double scale = norm2(q1) * norm2(q2) * norm2(q3);
    out.ratio = scale == 0.0 ? 0.0 : ScalarTraits<T>::magnitude(det) / scale;
    if constexpr (is_exact_v<T>) {
        out.dependent = ScalarTraits<T>::is_zero(det);
    } else {
        out.dependent = out.ratio <= rel_tol;
    }
    if (!out.dependent) return out;
    // Solve on the best-conditioned 2x2 minor of [q1 q2].
    int bi = 0;
    int bj = 1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double m = ScalarTraits<T>::magnitude(q1[i] * q2[j] - q1[j] * q2[i]);
            if (m > best) {
                best = m;
                bi = i;
                bj = j;
            }
        }
    }
    const T minor = q1[bi] * q2[bj] - q1[bj] * q2[bi];
    out.alpha = (q3[bi] * q2[bj] - q3[bj] * q2[bi]) / minor;
    out.beta = (q1[bi] * q3[bj] - q1[bj] * q3[bi]) / minor;
    return out;
}

/// h1^3 + h2^3 = scale * g1 * g2 * (alpha g1 + beta g2).
template <class T>
struct ScaledPair {
    BinaryForm<T> h1;
    BinaryForm<T> h2;
    T scale;
};

/// h1 = w a g1 - b g2, h2 = -a g1 + w b g2, scale = 3 sqrt(-3) a b, where w is a
/// primitive cube root of unity. Works for forms of any common degree.
/// Throws std::invalid_argument when alpha or beta vanishes.
template <class T>
ScaledPair<T> construct_from_triple(const BinaryForm<T>& g1, const BinaryForm<T>& g2, const T& alpha,
                                    const T& beta) {
    if (ScalarTraits<T>::is_zero(alpha, 1.0, 1e-14) || ScalarTraits<T>::is_zero(beta, 1.0, 1e-14)) {
        throw std::invalid_argument("construct_from_triple: alpha and beta must be nonzero");
    }
    const T w = ScalarTraits<T>::omega();
    ScaledPair<T> out{g1 * (w * alpha) - g2 * beta, g2 * (w * beta) - g1 * alpha,
                      T(3) * ScalarTraits<T>::sqrt_m3() * alpha * beta};
    return out;
}

/// A representation p = f1^3 + f2^3 over the floating kernel.
struct Representation {
    BinaryForm<Complex> f1;
    BinaryForm<Complex> f2;
    double residual = 0.0;
};

/// Normalise a scaled pair so that f1^3 + f2^3 = target_scale * g1 g2 g3.
Representation normalise_pair(const ScaledPair<Complex>& pair, Complex target_scale, const BinaryForm<Complex>& p);

/// 2-dimensional subspace of binary quadratics, kept as a reduced row-echelon
/// basis with largest-pivot selection.
class Subspace {
   public:
    static Subspace span(const BinaryForm<Complex>& f, const BinaryForm<Complex>& g);
    const std::array<std::array<Complex, 3>, 2>& basis() const { return rows_; }
    bool contains(const BinaryForm<Complex>& q, double rel_tol = 1e-7) const;
    bool same_as(const Subspace& other, double rel_tol = 1e-7) const;

   private:
    std::array<std::array<Complex, 3>, 2> rows_{};
};

/// Result of splitting a cubic into two cubes of linear forms.
struct CubicSplit {
    bool ok = false;
    std::string reason;
    BinaryForm<Complex> l1{1};
    BinaryForm<Complex> l2{1};
};

/// Throws std::invalid_argument for the zero form or a non-cubic.
CubicSplit cubic_two_cubes(const BinaryForm<Complex>& q);

enum class TripleStatus { NotDistinct, Independent, Dependent };

struct TripleDiagnostic {
    Pairing pairing{};
    std::array<BinaryForm<Complex>, 3> quadratics;
    TripleStatus status = TripleStatus::Independent;
    double ratio = 0.0;
};

struct DecompositionReport {
    int N = 0;
    std::vector<Representation> reps;
    std::vector<Subspace> subspaces;
    Factorization factorization;
    std::vector<int> multiplicities;
    Complex H{0.0, 0.0};
    /// Smallest normalised pairing determinant over the 15 pairings.
    double H_min_ratio = 0.0;
    bool H_vanishes = false;
    int dependent_triples = 0;
    std::vector<TripleDiagnostic> triples;
};

struct DecompOptions {
    Tolerance tol{};
    RootOptions roots{};
    double dependence_tol = kDependenceTolerance;
};

/// Count and construct the essentially distinct representations of a sextic
/// as a sum of two cubes of quadratics.
DecompositionReport rep_count(const BinaryForm<Complex>& p, const DecompOptions& opts = {});

/// Product over the 15 pairings of the roots of the 3x3 determinants with
/// rows from the pair products. Finite roots use the monic factor x - z y,
/// the root at infinity the factor y.
struct HValue {
    Complex value{0.0, 0.0};
    double min_ratio = 0.0;
    bool vanishes = false;
};
HValue H_eval(const std::vector<ProjectiveRoot>& roots, double rel_tol = kDependenceTolerance);

/// det of the 4x4 coefficient matrix of the cubes of four linear forms, and
/// the closed form 9 * prod_{j<k} (a_j b_k - a_k b_j).
Complex cube_matrix_det(const std::array<BinaryForm<Complex>, 4>& linear);
Complex vandermonde_product(const std::array<BinaryForm<Complex>, 4>& linear);

}  // namespace sextic

#endif  // SEXTIC_DECOMP_HPP

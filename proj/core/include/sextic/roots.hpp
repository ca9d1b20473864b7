#ifndef SEXTIC_ROOTS_HPP
#define SEXTIC_ROOTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sextic/binary_form.hpp"

namespace sextic {

/// Raised when the simultaneous root iteration fails to converge after all
/// random restarts.
class RootFindingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Projective root (s : t) of a binary form. The matching linear factor is
/// t*x - s*y, so a finite root z is (z : 1) and the root at infinity is
/// (1 : 0). Stored with unit Euclidean norm and first nonzero entry real
/// positive.
struct ProjectiveRoot {
    Complex s{1.0, 0.0};
    Complex t{0.0, 0.0};
    int multiplicity = 1;

    static ProjectiveRoot finite(Complex z, int multiplicity = 1);
    static ProjectiveRoot infinity(int multiplicity = 1);

    bool at_infinity() const { return t == Complex(0.0, 0.0); }
    /// s/t; throws std::domain_error at infinity.
    Complex affine() const;
    /// t*x - s*y
    BinaryForm<Complex> linear_form() const;
};

/// p = scale * prod (t_j x - s_j y)^{m_j}
struct Factorization {
    Complex scale{0.0, 0.0};
    std::vector<ProjectiveRoot> roots;
    double residual = 0.0;

    /// Multiplicities in non-increasing order.
    std::vector<int> multiplicities() const;
    /// One linear form per root and multiplicity, in root order.
    std::vector<BinaryForm<Complex>> expanded_factors() const;
    /// Root index of each entry of expanded_factors().
    std::vector<int> expanded_classes() const;
    BinaryForm<Complex> product() const;
};

struct RootOptions {
    std::uint64_t seed = 0x5e871cULL;
    int max_restarts = 5;
    int max_iterations = 600;
};

/// Factor p into projective linear factors with multiplicities (Aberth-Ehrlich
/// on the dehomogenisation, clustering for multiple roots). Throws
/// std::invalid_argument for the zero form and RootFindingError on
/// non-convergence.
Factorization linear_factors(const BinaryForm<Complex>& p, const RootOptions& opts = {});

/// Relative residual ||p - scale * prod|| / ||p|| of a candidate factorization.
double reconstruction_residual(const BinaryForm<Complex>& p, const std::vector<ProjectiveRoot>& roots,
                               Complex* scale_out = nullptr);

}  // namespace sextic

#endif  // SEXTIC_ROOTS_HPP

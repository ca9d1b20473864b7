#ifndef SEXTIC_CLASSIFY_HPP
#define SEXTIC_CLASSIFY_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "sextic/binary_form.hpp"

namespace sextic {

using Quad = BinaryForm<Complex>;
using Quadruple = std::array<Quad, 4>;

/// A theorem guarantees an outcome that the computation failed to produce.
class TheoremViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A family whose two sides share a cube (or whose common sum vanishes).
class DishonestFamily : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// a + w^j b = T (c + w^k d) for an arrangement (a, b | c, d) of the input.
struct TypeTag {
    Complex T{0.0, 0.0};
    /// 0: (f1, f2 | f3, f4); 1: (f1, -f3 | f4, -f2); 2: (f1, -f4 | f3, -f2).
    int flip = 0;
    int j = 0;
    int k = 0;
    /// (a, w^j b, c, w^k d), so that arranged[0] + arranged[1] = T (arranged[2] + arranged[3])
    /// and arranged[0]^3 + arranged[1]^3 = arranged[2]^3 + arranged[3]^3.
    Quadruple arranged;
    /// Human-readable names of the arranged entries, e.g. "-w^2*f3".
    std::array<std::string, 4> labels;
    double residual = 0.0;
};

/// Checks f1^3 + f2^3 = f3^3 + f4^3 (relative 1e-9, else std::invalid_argument)
/// and honesty (else DishonestFamily), then searches the three flips and nine
/// w-power combinations in fixed order. Throws TheoremViolation if none fits.
TypeTag type_detect(const Quadruple& f, double rel_tol = 1e-8);

/// Rearrange a^3 = b^3 + c^3 + d^3 as the equal-sums quadruple (b, d, a, -c).
Quadruple from_three_cubes(const Quadruple& abcd);

/// M making f1 o M and f2 o M both even (no xy term). Throws
/// std::invalid_argument if f1, f2 share a factor and std::domain_error in the
/// rank-degenerate case of a repeated root of the pencil discriminant.
LinearChange<Complex> diagonalize(const Quad& f1, const Quad& f2);

/// l with l^2 = q, choosing the sign that makes the leading nonzero coefficient
/// real-positive. Throws std::domain_error if q is not a square (relative 1e-8).
BinaryForm<Complex> square_root(const Quad& q);

struct TameFamily {
    /// r x^2 + s y^2, s x^2 + r y^2, x^2 + g xy + y^2, x^2 - g xy + y^2
    Quadruple f;
    Complex r{0.0, 0.0};
    Complex s{0.0, 0.0};
    Complex T{0.0, 0.0};
    /// 2 A_{3(1 + g^2)}
    BinaryForm<Complex> p{6};
    double residual = 0.0;
};

/// Throws std::domain_error for gamma = 0 or gamma^2 = -4/3.
TameFamily tame_complete(Complex gamma);

struct WildFamily {
    Quadruple f;
    /// (f1(x, -y), f2(x, -y))
    std::array<Quad, 2> third;
    Complex T{0.0, 0.0};
    BinaryForm<Complex> p{6};
    double residual = 0.0;
};

/// Throws std::domain_error for d = 0 or d^6 = 1.
WildFamily wild_family(Complex d);

struct Canonicalization {
    LinearChange<Complex> M;
    TypeTag tag;
    Complex lambda{0.0, 0.0};
    /// Worst set-wise cube mismatch against (F3, -F5 | -F4, F6).
    double residual = 0.0;
};

/// M sending an honest Type(T) family to the reference family at lambda
/// (lambda^2 = T): {a o M, b o M} match {F3, -F5} and {c o M, d o M} match
/// {-F4, F6} up to cube roots of unity. Throws std::invalid_argument if
/// lambda^2 differs from the detected T, std::domain_error for T^3 = 1 and
/// TheoremViolation if no candidate verifies to 1e-7.
Canonicalization canonicalize_type(const Quadruple& f, Complex lambda);

}  // namespace sextic

#endif  // SEXTIC_CLASSIFY_HPP

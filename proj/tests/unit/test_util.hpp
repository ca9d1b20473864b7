#ifndef SEXTIC_TEST_UTIL_HPP
#define SEXTIC_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "sextic/binary_form.hpp"
#include "sextic/cycnum.hpp"

namespace sextic::test {

using Q = Rational;
using C = Complex;
using FQ = BinaryForm<Rational>;
using FK = BinaryForm<CycNum>;
using FC = BinaryForm<Complex>;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261016ULL);
    return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline double rand_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline C rand_disk() {
    for (;;) {
        const C z(rand_real(-1.0, 1.0), rand_real(-1.0, 1.0));
        if (std::abs(z) <= 1.0) return z;
    }
}

inline FC rand_form(int degree) {
    std::vector<C> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rand_disk());
    return FC(degree, c);
}

inline LinearChange<C> rand_change() {
    for (;;) {
        LinearChange<C> m{rand_disk(), rand_disk(), rand_disk(), rand_disk()};
        if (std::abs(m.det()) > 0.2) return m;
    }
}

inline CycNum rand_cyc(long bound) {
    CycNum::Coords c;
    for (auto& v : c) v = Q(rand_int(-bound, bound), rand_int(1, bound));
    return CycNum(c);
}

}  // namespace sextic::test

#endif  // SEXTIC_TEST_UTIL_HPP

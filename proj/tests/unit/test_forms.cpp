#include <gtest/gtest.h>

#include <stdexcept>

#include "sextic/binary_form.hpp"
#include "sextic/families.hpp"
#include "test_util.hpp"

using namespace sextic;
using namespace sextic::test;

namespace {

FQ qf(long a, long b, long c) { return FQ::quadratic(Q(a), Q(b), Q(c)); }

FQ rand_qform(int degree) {
    std::vector<Q> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(rand_int(-9, 9));
    return FQ(degree, c);
}

LinearChange<Q> rand_qchange() {
    for (;;) {
        LinearChange<Q> m{Q(rand_int(-5, 5)), Q(rand_int(-5, 5)), Q(rand_int(-5, 5)), Q(rand_int(-5, 5))};
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace

TEST(Forms, Arithmetic) {
    EXPECT_EQ(qf(1, 0, 1) * qf(1, 0, -1), FQ({Q(1), Q(0), Q(0), Q(0), Q(-1)}));
    EXPECT_EQ(cube(qf(1, 1, -1)) + cube(qf(1, -1, -1)), FQ({Q(2), 0, 0, 0, 0, 0, Q(-2)}));
    const FQ z = qf(1, 2, 3) * FQ::constant(Q(0));
    EXPECT_EQ(z.degree(), 2);
    EXPECT_TRUE(is_zero_form(z));
    EXPECT_EQ(pow(qf(1, 1, 0), 3), cube(qf(1, 1, 0)));
}

TEST(Forms, DegreeMismatch) {
    EXPECT_THROW(qf(1, 0, 1) + FQ::x(), std::invalid_argument);
    EXPECT_THROW(qf(1, 0, 1) - FQ::x(), std::invalid_argument);
    EXPECT_THROW(FQ(-1), std::invalid_argument);
}

TEST(Forms, Evaluation) {
    EXPECT_EQ(qf(1, 2, 3).eval(Q(2), Q(-1)), Q(4 - 4 + 3));
    EXPECT_EQ(FQ::monomial(Q(5), 2, 1).degree(), 3);
}

TEST(Forms, ComposeExamples) {
    const LinearChange<Q> M{Q(1), Q(1), Q(1), Q(-1)};
    EXPECT_EQ(compose(qf(1, 0, 1), M), qf(2, 0, 2));
    EXPECT_EQ(compose(A_form<Q>(Q(0)), M), A_form<Q>(Q(15)) * Q(2));
}

TEST(Forms, BizarreChange) {
    const CycNum z8 = CycNum::zeta8();
    const CycNum eta = CycNum::eta();
    const LinearChange<CycNum> M{z8 * z8 * eta, z8, CycNum(1), z8.pow(3) * eta};
    const FK B = B_form<CycNum>(CycNum(5) * CycNum::sqrt_m2());
    EXPECT_EQ(compose(B, M), Q2_form<CycNum>() * (CycNum(54) * z8.pow(3) * eta.pow(3)));
}

TEST(Forms, ComposeSingular) {
    const LinearChange<Q> S{Q(1), Q(2), Q(2), Q(4)};
    EXPECT_THROW(compose(qf(1, 0, 1), S), std::domain_error);
}

TEST(Forms, ComposeInverseAndMultiplicative) {
    for (int i = 0; i < 50; ++i) {
        const FQ f = rand_qform(static_cast<int>(rand_int(0, 6)));
        const FQ g = rand_qform(static_cast<int>(rand_int(0, 4)));
        const LinearChange<Q> M = rand_qchange();
        ASSERT_EQ(compose(compose(f, M), M.inverse()), f);
        ASSERT_EQ(compose(f * g, M), compose(f, M) * compose(g, M));
    }
}

TEST(Forms, ComposeAssociativeExact) {
    for (int i = 0; i < 50; ++i) {
        const FQ f = rand_qform(static_cast<int>(rand_int(1, 6)));
        const LinearChange<Q> M = rand_qchange();
        const LinearChange<Q> N = rand_qchange();
        ASSERT_EQ(compose(f, M * N), compose(compose(f, M), N));
    }
}

TEST(Forms, ComposeAssociativeFloating) {
    for (int i = 0; i < 50; ++i) {
        const FC f = rand_form(static_cast<int>(rand_int(1, 6)));
        const LinearChange<C> M = rand_change();
        const LinearChange<C> N = rand_change();
        ASSERT_LE(relative_residual(compose(f, M * N), compose(compose(f, M), N)), 1e-10);
    }
}

TEST(Forms, ScalingLaw) {
    for (int d = 0; d <= 6; ++d) {
        const FQ f = rand_qform(d);
        const Q a(rand_int(1, 7), rand_int(1, 7));
        EXPECT_EQ(compose(f, LinearChange<Q>{a, Q(0), Q(0), a}), f * a.pow(static_cast<unsigned>(d)));
    }
}

TEST(Forms, Gcd) {
    const FQ g = form_gcd(qf(1, 0, -1), qf(1, 2, 1));
    EXPECT_TRUE(proportional(g, FQ::linear(Q(1), Q(1))));
    EXPECT_EQ(form_gcd(qf(1, 0, 0), qf(0, 0, 1)).degree(), 0);
    EXPECT_THROW(form_gcd(FQ(2), FQ(2)), std::invalid_argument);
}

TEST(Forms, GcdOfFamilyMembers) {
    const auto F = f_family<CycNum>(CycNum(2));
    EXPECT_EQ(form_gcd(F[0], F[1]).degree(), 0);
    const auto R = ramanujan<Q>();
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) EXPECT_EQ(form_gcd(R[i], R[j]).degree(), 0);
    }
}

TEST(Forms, GcdDividesInputs) {
    for (int i = 0; i < 40; ++i) {
        const FQ common = rand_qform(static_cast<int>(rand_int(0, 2)));
        if (is_zero_form(common)) continue;
        const FQ f = common * rand_qform(3);
        const FQ g = common * rand_qform(2);
        if (is_zero_form(f) || is_zero_form(g)) continue;
        const FQ d = form_gcd(f, g);
        ASSERT_GE(d.degree(), common.degree());
        ASSERT_NO_THROW(exact_divide(f, d));
        ASSERT_NO_THROW(exact_divide(g, d));
        ASSERT_EQ(exact_divide(f, d) * d, f);
    }
}

TEST(Forms, ExactDivide) {
    EXPECT_EQ(exact_divide(qf(1, 0, -1), FQ::linear(Q(1), Q(1))), FQ::linear(Q(1), Q(-1)));
    EXPECT_THROW(exact_divide(qf(1, 0, 1), FQ::linear(Q(1), Q(1))), std::domain_error);
    EXPECT_THROW(exact_divide(qf(1, 0, 1), FQ(1)), std::invalid_argument);
}

TEST(Forms, MultiplicityStructure) {
    EXPECT_EQ(multiplicity_structure(A_form<Q>(Q(3))), (std::vector<int>{3, 3}));
    EXPECT_EQ(multiplicity_structure(Q2_form<Q>()), (std::vector<int>{1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(multiplicity_structure(A_form<Q>(Q(-1))), (std::vector<int>{2, 2, 1, 1}));
    EXPECT_EQ(multiplicity_structure(FQ::monomial(Q(1), 2, 3)), (std::vector<int>{3, 2}));
    EXPECT_THROW(multiplicity_structure(FQ(6)), std::invalid_argument);
}

TEST(Forms, MultiplicitiesSumToDegree) {
    for (int i = 0; i < 40; ++i) {
        const FQ f = rand_qform(2) * rand_qform(2) * rand_qform(1);
        if (is_zero_form(f)) continue;
        int total = 0;
        for (const int m : multiplicity_structure(f)) total += m;
        ASSERT_EQ(total, 5);
    }
}

TEST(Forms, Helpers) {
    EXPECT_EQ(reflect_y(qf(1, 2, 3)), qf(1, -2, 3));
    EXPECT_EQ(swap_xy(qf(1, 2, 3)), qf(3, 2, 1));
    EXPECT_EQ(scale_vars(qf(1, 1, 1), Q(2), Q(3)), qf(4, 6, 9));
    EXPECT_TRUE(proportional(to_complex(qf(1, 2, 3)), to_complex(qf(2, 4, 6))));
    EXPECT_FALSE(proportional(qf(1, 2, 3), qf(1, 2, 4)));
}

#include <gtest/gtest.h>

#include <stdexcept>

#include "sextic/decomp.hpp"
#include "sextic/families.hpp"
#include "test_util.hpp"

using namespace sextic;
using namespace sextic::test;

namespace {

FC A(double t) { return to_complex(A_form<Q>(Q(static_cast<long>(t)))); }
FC B(C t) { return B_form<C>(t); }

int N(const FC& p) { return rep_count(p).N; }

std::vector<FC> census_forms() {
    return {A(3),   A(-1),  A(0),         A(15), A(-5), A(7), B(0), B(2), B(-2), B(1),
            B(C(0, 5 * std::sqrt(2.0))), to_complex(Q1_form<Q>()), to_complex(Q2_form<Q>())};
}

FC qc(C a, C b, C c) { return FC::quadratic(a, b, c); }

}  // namespace

TEST(PairPartitions, Counts) {
    EXPECT_EQ(pair_partitions(std::vector<int>{0, 1, 2, 3, 4, 5}).size(), 15u);
    EXPECT_EQ(pair_partitions(std::vector<int>{0, 0, 1, 1, 2, 2}).size(), 5u);
    EXPECT_EQ(pair_partitions(std::vector<int>{0, 0, 0, 1, 1, 1}).size(), 2u);
    EXPECT_THROW(pair_partitions(std::vector<FC>(5, FC::x())), std::invalid_argument);
}

TEST(PairPartitions, ProductsPreserved) {
    const FC p = rand_form(6);
    const Factorization f = linear_factors(p);
    const auto triples = pair_partitions(f.expanded_factors());
    ASSERT_EQ(triples.size(), 15u);
    for (const auto& t : triples) EXPECT_LE(relative_residual(t[0] * t[1] * t[2] * f.scale, p), 1e-8);
}

TEST(PairPartitions, B2ContainsSquares) {
    const Factorization f = linear_factors(B(2));
    const C w = ScalarTraits<C>::omega();
    const FC s1 = pow(FC::linear(1, 1), 2);
    const FC s2 = pow(FC::linear(1, w), 2);
    const FC s3 = pow(FC::linear(1, w * w), 2);
    bool found = false;
    for (const auto& t : pair_partitions(f.expanded_factors())) {
        int hits = 0;
        for (const auto& q : t) hits += (proportional(q, s1) || proportional(q, s2) || proportional(q, s3)) ? 1 : 0;
        found = found || hits == 3;
    }
    EXPECT_TRUE(found);
}

TEST(DependenceTest, Examples) {
    const Q a(3);
    const auto d = dependence_test(FQ::quadratic(a, 1, 0), FQ::quadratic(0, 1, a), FQ::quadratic(1, 0, -1));
    ASSERT_TRUE(d.dependent);
    EXPECT_EQ(d.alpha, Q(1, 3));
    EXPECT_EQ(d.beta, Q(-1, 3));
    EXPECT_FALSE(dependence_test(FQ::quadratic(1, 0, 0), FQ::quadratic(0, 1, 0), FQ::quadratic(0, 0, 1)).dependent);
    const CycNum w = CycNum::omega();
    const auto sq = [](const CycNum& c) { return FK::quadratic(CycNum(1), CycNum(2) * c, c * c); };
    EXPECT_FALSE(dependence_test(sq(CycNum(1)), sq(w), sq(w * w)).dependent);
    EXPECT_THROW(dependence_test(FQ::quadratic(1, 0, 0), FQ::quadratic(2, 0, 0), FQ::quadratic(0, 0, 1)),
                 std::invalid_argument);
}

TEST(DependenceTest, FloatingTolerance) {
    const auto d = dependence_test(qc(3, 1, 0), qc(0, 1, 3), qc(1, 0, -1));
    EXPECT_TRUE(d.dependent);
    EXPECT_NEAR(std::abs(d.alpha - C(1.0 / 3.0)), 0.0, 1e-14);
    EXPECT_FALSE(dependence_test(qc(3, 1, 0), qc(0, 1, 3), qc(1, 1e-3, -1)).dependent);
}

TEST(ConstructFromTriple, ContractExact) {
    const FK g1 = FK::quadratic(CycNum(1), CycNum(0), CycNum(0));
    const FK g2 = FK::quadratic(CycNum(0), CycNum(0), CycNum(-1));
    const FK g3 = g1 + g2;
    const auto r = construct_from_triple(g1, g2, CycNum(1), CycNum(1));
    EXPECT_EQ(r.scale, CycNum(3) * CycNum::sqrt_m3());
    EXPECT_EQ(cube(r.h1) + cube(r.h2), g1 * g2 * g3 * r.scale);
    EXPECT_THROW(construct_from_triple(g1, g2, CycNum(0), CycNum(1)), std::invalid_argument);
}

TEST(ConstructFromTriple, Q2Triple) {
    const FC g1 = qc(1, -1, 0);
    const FC g2 = qc(0, 1, 1);
    const auto d = dependence_test(g1, g2, qc(1, 0, 1));
    ASSERT_TRUE(d.dependent);
    const auto r = construct_from_triple(g1, g2, d.alpha, d.beta);
    const Subspace X = Subspace::span(qc(1, -1, 0), qc(1, 0, 1));
    EXPECT_TRUE(X.contains(r.h1));
    EXPECT_TRUE(X.contains(r.h2));
    const FC p = to_complex(Q2_form<Q>());
    const Representation rep = normalise_pair(r, C(1), p);
    EXPECT_LE(relative_residual(cube(rep.f1) + cube(rep.f2), p), 1e-12);
}

TEST(CubicTwoCubes, Examples) {
    const auto s = cubic_two_cubes(FC({C(1), C(0), C(0), C(1)}));
    ASSERT_TRUE(s.ok);
    EXPECT_TRUE((proportional(s.l1, FC::x()) && proportional(s.l2, FC::y())) ||
                (proportional(s.l1, FC::y()) && proportional(s.l2, FC::x())));
    EXPECT_FALSE(cubic_two_cubes(FC({C(0), C(1), C(0), C(0)})).ok);
    EXPECT_FALSE(cubic_two_cubes(pow(FC::linear(1, 2), 3)).ok);
    const FC q({C(0), C(1), C(1), C(0)});
    const auto t = cubic_two_cubes(q);
    ASSERT_TRUE(t.ok);
    EXPECT_LE(relative_residual(cube(t.l1) + cube(t.l2), q), 1e-12);
    EXPECT_THROW(cubic_two_cubes(FC(3)), std::invalid_argument);
    EXPECT_THROW(cubic_two_cubes(FC::x()), std::invalid_argument);
}

TEST(RepCount, CensusExamples) {
    EXPECT_EQ(N(A(3)), 0);
    EXPECT_EQ(N(to_complex(Q2_form<Q>())), 6);
    EXPECT_EQ(N(to_complex(Q1_form<Q>())), 4);
    EXPECT_EQ(N(A(-1)), 1);
    EXPECT_EQ(N(A(7)), 2);
    EXPECT_EQ(N(B(0)), 4);
    EXPECT_EQ(N(A(0)), 4);
    EXPECT_EQ(N(A(15)), 4);
    EXPECT_EQ(N(A(-5)), 6);
    EXPECT_EQ(N(B(2)), 0);
    EXPECT_EQ(N(B(-2)), 0);
    EXPECT_EQ(N(B(1)), 3);
    EXPECT_EQ(N(B(C(0, 5 * std::sqrt(2.0)))), 6);
    EXPECT_EQ(N(B(C(0, -5 * std::sqrt(2.0)))), 6);
}

TEST(RepCount, Diagnostics) {
    const auto r = rep_count(to_complex(Q2_form<Q>()));
    EXPECT_EQ(r.dependent_triples, 6);
    EXPECT_EQ(r.subspaces.size(), 6u);
    EXPECT_TRUE(r.H_vanishes);
    EXPECT_EQ(r.multiplicities, (std::vector<int>{1, 1, 1, 1, 1, 1}));
    const auto b2 = rep_count(B(2));
    EXPECT_EQ(b2.multiplicities, (std::vector<int>{2, 2, 2}));
    EXPECT_THROW(rep_count(FC(6)), std::invalid_argument);
    EXPECT_THROW(rep_count(FC(4, std::vector<C>(5, C(1)))), std::invalid_argument);
}

TEST(RepCount, ResidualContract) {
    for (const FC& p : census_forms()) {
        const auto r = rep_count(p);
        ASSERT_EQ(static_cast<int>(r.reps.size()), r.N);
        ASSERT_LE(r.N, r.dependent_triples);
        ASSERT_LE(r.dependent_triples, 15);
        for (const auto& rep : r.reps) {
            ASSERT_LE(rep.residual, 1e-9);
            ASSERT_LE(relative_residual(cube(rep.f1) + cube(rep.f2), p), 1e-9);
            ASSERT_FALSE(proportional(rep.f1, rep.f2));
        }
    }
}

TEST(RepCount, SimilarityInvariance) {
    for (const FC& p : census_forms()) {
        const int n = N(p);
        for (int i = 0; i < 50; ++i) {
            const LinearChange<C> M = rand_change();
            ASSERT_EQ(N(compose(p, M)), n) << p;
        }
    }
}

TEST(RepCount, ScaleInvariance) {
    for (const FC& p : census_forms()) {
        const C c = rand_disk() * 10.0 + C(0.1, 0.0);
        ASSERT_EQ(N(p * c), N(p)) << p;
    }
}

TEST(HEval, VanishesWhenRepresentable) {
    EXPECT_TRUE(H_eval(linear_factors(to_complex(Q2_form<Q>())).roots).vanishes);
    EXPECT_TRUE(H_eval(linear_factors(to_complex(p1_form<Q>(Q(2)))).roots).vanishes);
    EXPECT_TRUE(H_eval(linear_factors(B(1)).roots).vanishes);
    EXPECT_THROW(H_eval(std::vector<ProjectiveRoot>(5, ProjectiveRoot::finite(C(1)))), std::invalid_argument);
}

TEST(HEval, RandomSexticsNonzero) {
    for (int i = 0; i < 100; ++i) {
        const auto r = rep_count(rand_form(6));
        ASSERT_EQ(r.N, 0);
        ASSERT_GT(std::abs(r.H), 1e-6);
        ASSERT_FALSE(r.H_vanishes);
    }
}

TEST(Vandermonde, ProductFormula) {
    for (int i = 0; i < 100; ++i) {
        std::array<FC, 4> l;
        for (auto& f : l) f = FC::linear(rand_disk(), rand_disk());
        const C det = cube_matrix_det(l);
        const C prod = vandermonde_product(l);
        ASSERT_GT(std::abs(det), 0.0);
        ASSERT_LE(std::abs(det - prod), 1e-8 * std::max(1.0, std::abs(prod)));
    }
}

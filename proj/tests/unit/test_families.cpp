#include <gtest/gtest.h>

#include <stdexcept>

#include "sextic/decomp.hpp"
#include "sextic/families.hpp"
#include "sextic/identities.hpp"
#include "test_util.hpp"

using namespace sextic;
using namespace sextic::test;

using PP = UniPoly<CycNum>;
using FP = BinaryForm<PP>;

TEST(Families, RamanujanAtOneZero) {
    const auto R = ramanujan<Q>();
    std::array<Q, 4> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = R[i].eval(Q(1), Q(0));
    EXPECT_EQ(v, (std::array<Q, 4>{Q(6), Q(3), Q(4), Q(5)}));
    EXPECT_EQ(cube(R[0]), cube(R[1]) + cube(R[2]) + cube(R[3]));
}

TEST(Families, NarayananAtTwo) {
    const auto N = narayanan<Q>(Q(2));
    const auto R = ramanujan<Q>();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(N[i], R[i] * Q(3));
}

TEST(Families, NarayananSymbolic) {
    const auto N = narayanan<PP>(PP::variable());
    EXPECT_EQ(cube(N[0]), cube(N[1]) + cube(N[2]) + cube(N[3]));
    const auto E = narayanan_enhanced<PP>(PP::variable());
    EXPECT_EQ(cube(E[0]) + cube(E[1]), cube(E[4]) + cube(E[5]));
}

TEST(Families, FFamilySymbolic) {
    const PP l = PP::variable();
    const auto F = f_family<PP>(l);
    const FP p1 = p1_form<PP>(l);
    EXPECT_EQ(cube(F[0]) + cube(F[1]), p1);
    EXPECT_EQ(cube(F[2]) + cube(F[3]), p1);
    EXPECT_EQ(cube(F[4]) + cube(F[5]), p1);
    EXPECT_EQ(cube(F[3]) - cube(F[4]), p2_form<PP>(l));
    EXPECT_EQ(cube(F[3]) - cube(F[5]), p3_form<PP>(l));
    const PP l3 = l.pow(3);
    const FP scaled_b(6, {l3, PP(0), PP(0), l.pow(6) + PP(1), PP(0), PP(0), l3});
    EXPECT_EQ(p1 * l3, (scaled_b * (l.pow(6) - PP(1))) * l3);
    EXPECT_EQ(F[4] - F[2], (F[3] - F[5]) * (l * l));
}

TEST(Families, P1MatchesBAtRationalLambda) {
    const Q l(3, 2);
    const Q t = l.pow(3) + l.pow(3).inverse();
    EXPECT_EQ(p1_form<Q>(l), B_form<Q>(t) * (l.pow(3) * (l.pow(6) - Q(1))));
}

TEST(Families, NamedForms) {
    const auto r = generate<CycNum>(FamilyName::F, {CycNum(2)});
    ASSERT_EQ(r.names.size(), 7u);
    EXPECT_EQ(r.names.back(), "p");
    EXPECT_EQ(r.forms[0][0], CycNum(8));
    EXPECT_EQ(r.forms.back(), p1_form<CycNum>(CycNum(2)));
    EXPECT_THROW(generate<CycNum>(FamilyName::F, {}), std::invalid_argument);
    EXPECT_THROW(generate<CycNum>(FamilyName::F, {CycNum(1)}), std::domain_error);
    EXPECT_THROW(generate<CycNum>(FamilyName::Narayanan, {CycNum::omega()}), std::domain_error);
    EXPECT_THROW(generate<C>(FamilyName::P1, {C(0)}), std::domain_error);
    EXPECT_EQ(parse_family_name("Hirschhorn"), FamilyName::Hirschhorn);
    EXPECT_EQ(family_name_string(FamilyName::P3), "p3");
    EXPECT_EQ(family_param_count(FamilyName::Sandor), 4);
    EXPECT_THROW(parse_family_name("Euler"), std::invalid_argument);
}

TEST(Families, EveryGeneratedFamilyHasEqualSums) {
    for (int k = 0; k <= static_cast<int>(FamilyName::Vieta); ++k) {
        const auto name = static_cast<FamilyName>(k);
        std::vector<CycNum> params;
        if (name == FamilyName::Sandor) {
            params = {12, 1, 10, 9};
        } else if (family_param_count(name) == 1) {
            params = {CycNum(Q(3, 2))};
        }
        const auto g = generate<CycNum>(name, params);
        ASSERT_FALSE(g.forms.empty()) << family_name_string(name);
        EXPECT_EQ(g.names.back(), "p");
    }
}

TEST(Families, OtherIdentities) {
    const auto Y = young<Q>();
    EXPECT_EQ(cube(Y[0]) + cube(Y[1]), cube(Y[2]) + cube(Y[3]));
    const auto H = hirschhorn<Q>();
    EXPECT_EQ(cube(H[0]) + cube(H[1]), cube(H[2]) + cube(H[3]));
    const auto V = vieta<Q>();
    EXPECT_EQ(cube(V[0]) + cube(V[1]), cube(V[2]) + cube(V[3]));
    for (const auto& w : {std::array<long, 4>{12, 1, 10, 9}, std::array<long, 4>{10, -1, -9, 12}}) {
        const auto S = sandor<Q>(Q(w[0]), Q(w[1]), Q(w[2]), Q(w[3]));
        EXPECT_EQ(cube(S[0]) + cube(S[1]), cube(S[2]) + cube(S[3]));
    }
    const PP n = PP::variable();
    const auto Yn = young_n<PP>(n);
    EXPECT_EQ(cube(Yn[0]) + cube(Yn[1]), cube(Yn[2]) + cube(Yn[3]));
    const auto Hn = hirschhorn_n<PP>(n);
    EXPECT_EQ(cube(Hn[0]) + cube(Hn[1]), cube(Hn[2]) + cube(Hn[3]));
    const auto K = cubic_family<CycNum>();
    const FK two = FK(6, {CycNum(2), 0, 0, 0, 0, 0, CycNum(-2)});
    for (std::size_t i = 0; i < 6; i += 2) EXPECT_EQ(cube(K[i]) + cube(K[i + 1]), two);
}

TEST(Families, SandorNeedsEqualSums) {
    const auto S = sandor<Q>(Q(12), Q(1), Q(10), Q(8));
    EXPECT_NE(cube(S[0]) + cube(S[1]), cube(S[2]) + cube(S[3]));
}

TEST(IdentitySuite, AllPass) {
    const auto report = run_identity_suite(2);
    EXPECT_EQ(report.size(), 21u);
    for (const auto& c : report) {
        EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
        if (c.method == "exact") {
            EXPECT_EQ(c.residual, 0.0) << c.id;
        } else {
            EXPECT_LE(c.residual, 1e-9) << c.id;
        }
    }
    EXPECT_TRUE(all_passed(report));
}

TEST(IdentitySuite, NegativeControl) {
    EXPECT_TRUE(check_ramanujan().pass);
    const IdentityCheck bad = check_ramanujan(7);
    EXPECT_FALSE(bad.pass);
    EXPECT_EQ(bad.id, "ramanujan");
    EXPECT_FALSE(bad.detail.empty());
}

TEST(Census, FamilySums) {
    for (const C l : {C(2), C(1.5), C(0.7, 0.3)}) {
        EXPECT_EQ(rep_count(p2_form<C>(l)).N, 3) << l;
        EXPECT_EQ(rep_count(p3_form<C>(l)).N, 2) << l;
    }
    const auto R = ramanujan<Q>();
    EXPECT_EQ(rep_count(to_complex(cube(R[2]) + cube(R[3]))).N, 3);
    EXPECT_EQ(rep_count(to_complex(cube(R[0]) - cube(R[2]))).N, 2);
}

TEST(Census, ExceptionalLambda) {
    const PP l = PP::variable();
    const PP a = l;
    const PP b = l * l + PP(1);
    const PP det = a * (PP(-1) * l * PP(1) - l * l * (PP(-1) * l)) - b * (PP(1) - l * l * l * l) +
                   a * (PP(-1) * l - PP(-1) * l * l * l);
    EXPECT_EQ(det, (l * l - PP(1)) * (l.pow(4) + PP(4) * l * l + PP(1)));
    const CycNum e = CycNum::imag_unit() * CycNum::eta();
    const FK g1 = FK::quadratic(e, e * e + CycNum(1), e);
    const FK g2 = FK::quadratic(CycNum(1), -e, e * e);
    const FK g3 = FK::quadratic(e * e, -e, CycNum(1));
    EXPECT_TRUE(dependence_test(g1, g2, g3).dependent);
    EXPECT_FALSE(dependence_test(g1, g2, FK::quadratic(CycNum(4), -e, CycNum(1))).dependent);
    EXPECT_EQ(rep_count(to_complex(p1_form<CycNum>(e))).N, 6);
    EXPECT_EQ(rep_count(to_complex(p1_form<Q>(Q(3)))).N, 3);
}

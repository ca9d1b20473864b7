// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sextic/classify.hpp"
#include "sextic/decomp.hpp"
#include "sextic/ecurve.hpp"
#include "sextic/families.hpp"
#include "sextic/identities.hpp"

using namespace sextic;

namespace {

using C = Complex;
using FC = BinaryForm<Complex>;
using FQ = BinaryForm<Rational>;
using FK = BinaryForm<CycNum>;
using Q = Rational;

constexpr double kRepResidual = 1e-9;
constexpr double kSampledResidual = 1e-9;
constexpr double kTypeTol = 1e-8;
constexpr double kCanonicalTol = 1e-7;
constexpr double kHFloor = 1e-6;
constexpr double kVandermondeTol = 1e-8;
constexpr double kReconstructionTol = 1e-8;

std::mt19937_64 gen(0xac5e7ULL);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

C disk() {
    for (;;) {
        const C z(uniform(-1, 1), uniform(-1, 1));
        if (std::abs(z) <= 1.0) return z;
    }
}

FC random_sextic() {
    std::vector<C> c;
    for (int k = 0; k < 7; ++k) c.push_back(disk());
    return FC(6, c);
}

LinearChange<C> random_change() {
    for (;;) {
        LinearChange<C> m{disk(), disk(), disk(), disk()};
        if (std::abs(m.det()) > 0.2) return m;
    }
}

C away_from(const std::vector<C>& bad) {
    for (;;) {
        const C t = std::polar(uniform(0.5, 20.0), uniform(0.0, 2.0 * M_PI));
        bool ok = true;
        for (const C& b : bad) ok = ok && std::abs(t - b) > 0.1;
        if (ok) return t;
    }
}

FC A(C t) { return A_form<C>(t); }
FC B(C t) { return B_form<C>(t); }
const C kFiveRootMinusTwo(0.0, 5.0 * std::sqrt(2.0));

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!pass) note << "; ";
            else note.str("");
            pass = false;
            note << what;
        }
    }
};

// N check with the residual contract on every representation.
void expect_N(Outcome& o, const FC& p, int n, const std::string& label) {
    const auto r = rep_count(p);
    o.require(r.N == n, label + ": N=" + std::to_string(r.N) + " expected " + std::to_string(n));
    for (const auto& rep : r.reps) o.require(rep.residual <= kRepResidual, label + ": representation residual");
}

Outcome census() {
    Outcome o;
    expect_N(o, A(3), 0, "A3");
    expect_N(o, A(-1), 1, "A-1");
    expect_N(o, A(0), 4, "A0");
    expect_N(o, A(15), 4, "A15");
    expect_N(o, A(-5), 6, "A-5");
    expect_N(o, B(0), 4, "B0");
    expect_N(o, B(2), 0, "B2");
    expect_N(o, B(-2), 0, "B-2");
    expect_N(o, B(kFiveRootMinusTwo), 6, "B(5sqrt-2)");
    expect_N(o, B(-kFiveRootMinusTwo), 6, "B(-5sqrt-2)");
    expect_N(o, to_complex(Q1_form<Q>()), 4, "Q1");
    expect_N(o, to_complex(Q2_form<Q>()), 6, "Q2");
    for (int i = 0; i < 20; ++i) {
        expect_N(o, A(away_from({-5, -1, 0, 3, 15})), 2, "A_t generic");
        expect_N(o, B(away_from({0, 2, -2, kFiveRootMinusTwo, -kFiveRootMinusTwo})), 3, "B_t generic");
    }
    if (o.pass) o.note << "12 exceptional forms and 40 generic t";
    return o;
}

Outcome identities() {
    Outcome o;
    const auto report = run_identity_suite(4);
    int exact = 0;
    int sampled = 0;
    for (const auto& c : report) {
        o.require(c.pass, c.id + " failed: " + c.detail);
        if (c.method == "exact") {
            ++exact;
            o.require(c.residual == 0.0, c.id + ": nonzero exact residual");
        } else {
            ++sampled;
            o.require(c.residual <= kSampledResidual, c.id + ": sampled residual too large");
        }
    }
    o.require(report.size() == 21, "expected 21 identity groups");
    if (o.pass) o.note << exact << " exact groups, " << sampled << " sampled group";
    return o;
}

Outcome flips() {
    Outcome o;
    const auto R = ramanujan<Q>();
    expect_N(o, to_complex(cube(R[2]) + cube(R[3])), 3, "Flip1 sum");
    expect_N(o, to_complex(cube(R[0]) - cube(R[2])), 2, "Flip3 sum");
    if (o.pass) o.note << "N(Flip1)=3, N(Flip3)=2";
    return o;
}

Outcome chord_theorem() {
    Outcome o;
    int checked = 0;
    for (long num = -5; num <= 5 && checked < 20; ++num) {
        for (long den = 1; den <= 4 && checked < 20; ++den) {
            const Q l(num, den);
            if (l.is_zero() || l.pow(6) == Q(1) || l.denominator() != den) continue;
            const auto F = f_family<CycNum>(CycNum(l));
            const auto S = curve_add_forms<CycNum>({F[0], F[1]}, {F[2], F[3]}, p1_form<CycNum>(CycNum(l)));
            const bool poly = S.X.is_polynomial() && S.Y.is_polynomial();
            o.require(poly && S.X.as_form() == F[4] && S.Y.as_form() == F[5], "lambda=" + l.to_string());
            ++checked;
        }
    }
    o.require(checked == 20, "fewer than 20 lambda values");
    if (o.pass) o.note << checked << " rational lambda, exact";
    return o;
}

Outcome euler_binet() {
    Outcome o;
    const EBParams<Q> e{Q(-3, 2), Q(1, 2), Q(1)};
    const auto fwd = eb_forward(e);
    o.require(fwd.f == std::array<Q, 4>{Q(10), Q(-1), Q(-9), Q(12)}, "forward image");
    const auto inv = eb_inverse<Q>(fwd.f);
    o.require(inv.a == e.a && inv.b == e.b && inv.mu == e.mu, "inverse");
    const auto h = curve_third_rep(e);
    o.require(h[0] == Q(-8) && h[1] == Q(6), "third representation values");
    o.require(h[0].pow(3) - h[1].pow(3) == Q(-728) && Q(1000) - Q(1728) == Q(-728), "-728 = 10^3 - 12^3");

    using PP = UniPoly<CycNum>;
    using BPP = UniPoly<PP>;
    const EBParams<BPP> s{BPP(PP::variable()), BPP::variable(), BPP(1)};
    const auto q = eb_forward(s);
    const auto t = curve_third_rep(s);
    auto c3 = [](const BPP& v) { return v * v * v; };
    o.require(c3(q.f[0]) - c3(q.f[3]) == c3(t[0]) - c3(t[1]), "symbolic third representation");
    o.require(c3(q.f[0]) + c3(q.f[1]) == c3(q.f[2]) + c3(q.f[3]), "symbolic equal sums");
    if (o.pass) o.note << "(-3/2,1/2,1) <-> (10,-1,-9,12); third rep symbolic in (a,b)";
    return o;
}

Outcome types() {
    Outcome o;
    double worst = 0.0;
    double worst_canon = 0.0;
    for (int i = 0; i < 20; ++i) {
        C l;
        do {
            l = std::polar(uniform(0.3, 3.0), uniform(0.0, 2.0 * M_PI));
        } while (std::abs(l * (std::pow(l, 6) - 1.0)) < 0.05);
        const auto F = f_family<C>(l);
        const Quadruple f{F[0], F[1], F[2], F[3]};
        worst = std::max(worst, std::abs(type_detect(f).T - l * l));
        const auto M = random_change();
        Quadruple g = f;
        for (auto& x : g) x = compose(x, M);
        worst_canon = std::max(worst_canon, canonicalize_type(g, l).residual);
    }
    o.require(worst <= kTypeTol, "|T - lambda^2| too large");
    o.require(worst_canon <= kCanonicalTol, "canonicalization residual too large");
    const auto R = ramanujan<C>();
    const double tr = std::abs(type_detect(from_three_cubes({R[0], R[1], R[2], R[3]})).T - C(4));
    const auto Y = young<C>();
    const double ty = std::abs(type_detect({Y[0], Y[1], Y[2], Y[3]}).T - C(4));
    o.require(tr <= kTypeTol, "Ramanujan T != 4");
    o.require(ty <= kTypeTol, "Young T != 4");
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "max |T-l^2| = %.1e, max canonical residual = %.1e", worst, worst_canon);
        o.note << buf;
    }
    return o;
}

Outcome properties() {
    Outcome o;
    const std::vector<FC> forms{A(3),  A(-1),  A(0),  A(15), A(-5), A(7),  B(0),
                                B(2),  B(-2),  B(1),  B(kFiveRootMinusTwo),
                                to_complex(Q1_form<Q>()), to_complex(Q2_form<Q>())};
    for (const FC& p : forms) {
        const auto base = rep_count(p);
        for (int i = 0; i < 50; ++i) {
            o.require(rep_count(compose(p, random_change())).N == base.N, "N not similarity invariant");
        }
        if (base.N >= 1) o.require(base.H_vanishes, "H nonzero on a representable sextic");
    }
    double h_min = 1e300;
    for (int i = 0; i < 100; ++i) {
        const auto r = rep_count(random_sextic());
        if (r.N != 0) continue;
        h_min = std::min(h_min, std::abs(r.H));
    }
    o.require(h_min > kHFloor, "|H| below floor on a random sextic");
    double vd = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::array<FC, 4> l;
        for (auto& f : l) f = FC::linear(disk(), disk());
        const C prod = vandermonde_product(l);
        vd = std::max(vd, std::abs(cube_matrix_det(l) - prod) / std::max(1.0, std::abs(prod)));
    }
    o.require(vd <= kVandermondeTol, "Vandermonde mismatch");
    double rec = 0.0;
    for (int i = 0; i < 500; ++i) {
        const FC p = random_sextic();
        rec = std::max(rec, relative_residual(linear_factors(p).product(), p));
    }
    o.require(rec <= kReconstructionTol, "reconstruction residual too large");
    if (o.pass) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "min |H| (random) = %.1e, Vandermonde err = %.1e, reconstruction = %.1e", h_min,
                      vd, rec);
        o.note << buf;
    }
    return o;
}

Outcome negative_controls() {
    Outcome o;
    o.require(!check_ramanujan(7).pass, "perturbed Ramanujan identity passed");
    const auto r = rep_count(B(2));
    o.require(r.N == 0, "N(B2) != 0");
    const C w = ScalarTraits<C>::omega();
    const std::array<FC, 3> squares{pow(FC::linear(1, 1), 2), pow(FC::linear(1, w), 2), pow(FC::linear(1, w * w), 2)};
    bool reported = false;
    for (const auto& t : r.triples) {
        int hits = 0;
        for (const auto& q : t.quadratics) {
            for (const auto& s : squares) hits += proportional(q, s) ? 1 : 0;
        }
        if (hits == 3) reported = t.status == TripleStatus::Independent;
    }
    o.require(reported, "(x+y)^2 triple not reported independent");
    if (o.pass) o.note << "Ramanujan with 7 fails; B2: N=0, squares triple independent";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"census table", census},
        {"identity suite", identities},
        {"flip census", flips},
        {"chord addition of F-family points", chord_theorem},
        {"Euler-Binet and the 1729 third representation", euler_binet},
        {"type detection and canonicalization", types},
        {"property suites", properties},
        {"negative controls", negative_controls},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note.str(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s AC%zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.note.str().c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

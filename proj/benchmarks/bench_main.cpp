#include <benchmark/benchmark.h>

#include <random>

#include "sextic/classify.hpp"
#include "sextic/decomp.hpp"
#include "sextic/ecurve.hpp"
#include "sextic/families.hpp"
#include "sextic/identities.hpp"

using namespace sextic;

namespace {

CycNum random_cyc(std::mt19937_64& gen) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    CycNum::Coords c;
    for (auto& v : c) v = Rational(num(gen), den(gen));
    return CycNum(c);
}

BinaryForm<Complex> random_sextic(std::mt19937_64& gen) {
    std::normal_distribution<double> n;
    std::vector<Complex> c;
    for (int k = 0; k < 7; ++k) c.emplace_back(n(gen), n(gen));
    return BinaryForm<Complex>(6, c);
}

void BM_CycNumMultiply(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const CycNum a = random_cyc(gen);
    const CycNum b = random_cyc(gen);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycNumMultiply);

void BM_CycNumInverse(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const CycNum a = random_cyc(gen);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycNumInverse);

void BM_LinearFactors(benchmark::State& state) {
    std::mt19937_64 gen(3);
    const auto p = random_sextic(gen);
    for (auto _ : state) benchmark::DoNotOptimize(linear_factors(p));
}
BENCHMARK(BM_LinearFactors);

void BM_RepCountQ2(benchmark::State& state) {
    const auto p = to_complex(Q2_form<Rational>());
    for (auto _ : state) benchmark::DoNotOptimize(rep_count(p));
}
BENCHMARK(BM_RepCountQ2);

void BM_RepCountRandom(benchmark::State& state) {
    std::mt19937_64 gen(4);
    const auto p = random_sextic(gen);
    for (auto _ : state) benchmark::DoNotOptimize(rep_count(p));
}
BENCHMARK(BM_RepCountRandom);

void BM_TypeDetect(benchmark::State& state) {
    const auto F = f_family<Complex>(Complex(1.3, 0.4));
    const Quadruple f{F[0], F[1], F[2], F[3]};
    for (auto _ : state) benchmark::DoNotOptimize(type_detect(f));
}
BENCHMARK(BM_TypeDetect);

void BM_ChordAdditionForms(benchmark::State& state) {
    const CycNum l(Rational(3, 2));
    const auto F = f_family<CycNum>(l);
    const auto p = p1_form<CycNum>(l);
    for (auto _ : state) benchmark::DoNotOptimize(curve_add_forms<CycNum>({F[0], F[1]}, {F[2], F[3]}, p));
}
BENCHMARK(BM_ChordAdditionForms)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(jobs));
}
BENCHMARK(BM_IdentitySuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Timing comparisons between the symbolic quotient-ring path and the
// integer-only modular-exponentiation path.
#include <benchmark/benchmark.h>

#include "ringterm/kronecker.hpp"
#include "ringterm/roots.hpp"
#include "ringterm/sequences.hpp"

using namespace ringterm;

namespace {

void BM_PellFormula(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pell(n));
}
BENCHMARK(BM_PellFormula)->Arg(64)->Arg(256)->Arg(1024);

void BM_PellOracle(benchmark::State& state) {
    const unsigned long n = state.range(0);
    const auto rec = CRecurrence::pell();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_term(rec, n));
}
BENCHMARK(BM_PellOracle)->Arg(64)->Arg(256)->Arg(1024);

void BM_CentralBinomialFormula(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(central_binomial(n));
}
BENCHMARK(BM_CentralBinomialFormula)->Arg(16)->Arg(64)->Arg(128);

void BM_BinomialOracle(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(binomial_oracle(2 * n, n));
}
BENCHMARK(BM_BinomialOracle)->Arg(16)->Arg(64)->Arg(128);

void BM_RingPowSymbolic(benchmark::State& state) {
    const unsigned long k = state.range(0);
    const MonicModulus m(2, Poly::constant(2));
    const Poly xp1 = Poly::x() + Poly::constant(1);
    for (auto _ : state) benchmark::DoNotOptimize(ring_pow(xp1, Int(k), m));
}
BENCHMARK(BM_RingPowSymbolic)->Arg(64)->Arg(256)->Arg(1024);

void BM_SubstitutionChecked(benchmark::State& state) {
    const unsigned long k = state.range(0);
    const Poly f = Poly::x() + Poly::constant(1);
    const MonicModulus m(2, Poly::constant(2));
    const SubstitutionParams params(3, k, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eval_substitution(f, m, params));
}
BENCHMARK(BM_SubstitutionChecked)->Arg(64)->Arg(256)->Arg(1024);

void BM_SubstitutionUnchecked(benchmark::State& state) {
    const unsigned long k = state.range(0);
    const Poly f = Poly::x() + Poly::constant(1);
    const MonicModulus m(2, Poly::constant(2));
    const SubstitutionParams params(3, k, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eval_substitution_unchecked(f, m, params));
}
BENCHMARK(BM_SubstitutionUnchecked)->Arg(64)->Arg(256)->Arg(1024);

void BM_RootArith(benchmark::State& state) {
    const unsigned long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(root_arith(2, 2, k));
}
BENCHMARK(BM_RootArith)->Arg(8)->Arg(16)->Arg(32);

void BM_ExactFloorRoot(benchmark::State& state) {
    const unsigned long bits = state.range(0);
    const Int a = (Int(1) << bits) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(exact_floor_root(a, 3));
}
BENCHMARK(BM_ExactFloorRoot)->Arg(256)->Arg(4096);

} // namespace

BENCHMARK_MAIN();

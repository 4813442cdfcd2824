/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "dtlsum/log.hpp"
#include "dtlsum/polymatrix.hpp"
#include "dtlsum/sampling.hpp"
#include "dtlsum/verify.hpp"

using namespace dtlsum;

namespace {

void BM_CycloMul(benchmark::State& state) {
    Sampler s(1);
    Cyclo a = s.nonzero_cyclo(), b = s.nonzero_cyclo();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

// eps_1 * eps_2 over L variables
void BM_LaurentMul(benchmark::State& state) {
    auto vs = VarSet::numbered(static_cast<int>(state.range(0)));
    auto a = eps(vs, 1), b = eps(vs, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.counters["terms"] = static_cast<double>((a * b).size());
}
BENCHMARK(BM_LaurentMul)->DenseRange(2, 6);

void BM_ExactDivide(benchmark::State& state) {
    auto vs = VarSet::numbered(static_cast<int>(state.range(0)));
    auto d = eps(vs, 2), q = eps(vs, 1) + elem_E(vs, 1);
    auto n = d * q;
    for (auto _ : state) benchmark::DoNotOptimize(exact_divide(n, d));
}
BENCHMARK(BM_ExactDivide)->DenseRange(2, 5);

void BM_SymbolicDet(benchmark::State& state) {
    const auto kind = static_cast<MatrixKind>(state.range(0));
    auto m = build_matrix(kind, VarSet::numbered(static_cast<int>(state.range(1))));
    for (auto _ : state) benchmark::DoNotOptimize(det(m, DetAlgo::AUTO));
}
BENCHMARK(BM_SymbolicDet)
    ->ArgNames({"kind", "L"})
    ->ArgsProduct({{static_cast<int>(MatrixKind::E_STAIRCASE)}, {4, 6, 8}})
    ->ArgsProduct({{static_cast<int>(MatrixKind::LAMBDA_DIFF)}, {3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_NumericDet(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto algo = static_cast<DetAlgo>(state.range(1));
    Sampler s(7);
    Matrix<Cyclo> m(n, n, Cyclo(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = s.cyclo();
    CycloRing ring;
    for (auto _ : state) benchmark::DoNotOptimize(det(ring, m, algo));
}
BENCHMARK(BM_NumericDet)
    ->ArgNames({"n", "algo"})
    ->ArgsProduct({{4, 8, 12, 16}, {static_cast<int>(DetAlgo::BAREISS), static_cast<int>(DetAlgo::GAUSS)}});

// one random trial per iteration
void BM_VerifyTrial(benchmark::State& state) {
    const auto id = static_cast<IdentityId>(state.range(0));
    const int L = static_cast<int>(state.range(1));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify(id, L, VerifyMode::random(1, seed++)));
}
BENCHMARK(BM_VerifyTrial)
    ->ArgNames({"id", "L"})
    ->ArgsProduct({{static_cast<int>(IdentityId::REC1P)}, {6, 8, 10}})
    ->ArgsProduct({{static_cast<int>(IdentityId::SYMMETRY)}, {6, 8, 10}})
    ->Unit(benchmark::kMillisecond);

void BM_VerifySymbolic(benchmark::State& state) {
    const auto id = static_cast<IdentityId>(state.range(0));
    const int L = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify(id, L, VerifyMode::symbolic()));
}
BENCHMARK(BM_VerifySymbolic)
    ->ArgNames({"id", "L"})
    ->ArgsProduct({{static_cast<int>(IdentityId::REC2P)}, {4, 6}})
    ->ArgsProduct({{static_cast<int>(IdentityId::CROSS_OPEN)}, {3, 4}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    set_log_sink(nullptr);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}

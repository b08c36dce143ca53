/*
   Copyright 2026 The jetwist Authors

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

#include "jetwist/canonical.hpp"
#include "jetwist/prolong.hpp"
#include "jetwist/twist.hpp"

using namespace jetwist;

namespace {

struct Setup {
    JetSpace sp;
    VectorField X;
    MatrixExpr A;

    explicit Setup(int n)
        : sp({"x"}, {"u", "v"}, n),
          X(sp, {parse("x*u", sp)}, {parse("u^2 + v", sp), parse("x*v - u", sp)}),
          A({{Expr(1), parse("u", sp)}, {Expr(0), Expr(1)}}) {}
};

void BM_StandardProlong(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(standard_prolong(s.X, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StandardProlong)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MuProlong(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Setup s(n);
    const auto lambda = gauge_to_mu(s.A, s.sp);
    for (auto _ : state) benchmark::DoNotOptimize(mu_prolong(s.X, n, lambda));
}
BENCHMARK(BM_MuProlong)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MuDiagram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Setup s(n);
    for (auto _ : state) benchmark::DoNotOptimize(verify_mu_diagram(s.X, s.A, n));
}
BENCHMARK(BM_MuDiagram)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SigmaDiagram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Setup s(n);
    const VectorField Y(s.sp, {Expr(1)}, {parse("v", s.sp), Expr(0)});
    for (auto _ : state) benchmark::DoNotOptimize(verify_sigma_diagram({s.X, Y}, s.A, n));
}
BENCHMARK(BM_SigmaDiagram)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_GaugeToMu(benchmark::State& state) {
    const JetSpace sp({"x", "y"}, {"u", "v"}, 1);
    const MatrixExpr A({{parse("1 + x*u", sp), parse("v", sp), Expr(0)},
                        {parse("y", sp), parse("2 + v^2", sp), parse("u", sp)},
                        {Expr(0), parse("x - y", sp), parse("exp(u)", sp)}});
    for (auto _ : state) benchmark::DoNotOptimize(gauge_to_mu(A, sp));
}
BENCHMARK(BM_GaugeToMu)->Unit(benchmark::kMillisecond);

}  // namespace

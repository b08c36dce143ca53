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
#include "jetwist/expr.hpp"
#include "jetwist/jet.hpp"

using namespace jetwist;

namespace {

const JetSpace& space() {
    static const JetSpace sp({"x"}, {"u", "v"}, 2);
    return sp;
}

// Parsing each iteration keeps the canonical-form cache cold.
void BM_NormalizeKernels(benchmark::State& state) {
    for (auto _ : state) {
        const Expr e = parse("exp(u)*(exp(u)*(x^2 + x)^2 + 2*x + x*u_x*(x + 1) + 1)*exp(u) - exp(3*u)*(x + x^2)^2", space());
        benchmark::DoNotOptimize(normalize(e));
    }
}
BENCHMARK(BM_NormalizeKernels);

void BM_NormalizeRational(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    std::string num = "(x + u)", den = "(x - v)";
    for (int i = 1; i < k; ++i) {
        num += "*(x + u + " + std::to_string(i) + "*v)";
        den += "*(x + u + " + std::to_string(i) + "*v)";
    }
    const std::string text = num + "/(" + den + ") + " + num + "/(" + den + "*(u_x + 1))";
    for (auto _ : state) benchmark::DoNotOptimize(normalize(parse(text, space())));
}
BENCHMARK(BM_NormalizeRational)->DenseRange(1, 4);

void BM_ZeroTest(benchmark::State& state) {
    for (auto _ : state) {
        const Expr e = parse("sin(x + u)^2 + cos(x + u)^2 - 1 + ln(exp(v)) - v", space());
        benchmark::DoNotOptimize(is_zero(e));
    }
}
BENCHMARK(BM_ZeroTest);

void BM_TotalDerivative(benchmark::State& state) {
    const Expr e = parse("u_x*exp(-v)*(x + u^2)/(1 + v_x^2)", space());
    for (auto _ : state) benchmark::DoNotOptimize(normalize(total_derivative(e, 0, space())));
}
BENCHMARK(BM_TotalDerivative);

}  // namespace

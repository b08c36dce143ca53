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

#include <string>

#include "jetwist/cli.hpp"

using namespace jetwist;

namespace {

void BM_RunCorpusFile(benchmark::State& state, const char* stem) {
    const auto file = load_problem(std::string(CORPUS_DIR) + "/" + stem + ".prob");
    for (auto _ : state) benchmark::DoNotOptimize(run_problem(file, {}));
}
BENCHMARK_CAPTURE(BM_RunCorpusFile, lambda_scalar, "lambda_scalar")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunCorpusFile, mu_gauge, "mu_gauge")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunCorpusFile, sigma_gauge, "sigma_gauge")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunCorpusFile, mu_point, "mu_point")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

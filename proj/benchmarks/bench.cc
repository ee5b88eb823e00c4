// Copyright 2026 The qstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qstab/search.h"
#include "qstab/stabcode.h"
#include "qstab/verify.h"

using namespace qstab;

namespace {

StabilizerCode circulant_code(const Field &f, const FqVec &row) {
    return StabilizerCode::from_L(circulant(f, row), zero_sum_basis(f, row.size()), true);
}

const FqVec kRow13 = {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0};
const FqVec kRow21 = {0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1};

void distance_13(benchmark::State &state) {
    StabilizerCode code = circulant_code(Field::make(2), kRow13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << 14));
}
BENCHMARK(distance_13);

void distance_21(benchmark::State &state) {
    StabilizerCode code = circulant_code(Field::make(2), kRow21);
    DistanceOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code, opts));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << 22));
}
BENCHMARK(distance_21)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

void distance_q3(benchmark::State &state) {
    StabilizerCode code = circulant_code(Field::make(3), {0, 0, 1, 1, 0, 1, 1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
}
BENCHMARK(distance_q3)->Unit(benchmark::kMillisecond);

void alpha_good_check(benchmark::State &state) {
    size_t n = static_cast<size_t>(state.range(0));
    FqMat r = random_binary_matrix(n, 1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_alpha_good(r, Rational{1, 10}));
    }
}
BENCHMARK(alpha_good_check)->Arg(20)->Arg(40);

void kl_five_qubit(benchmark::State &state) {
    StabilizerCode code = circulant_code(Field::make(2), {0, 0, 1, 1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_kl(code, 1));
    }
}
BENCHMARK(kl_five_qubit);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The nogo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "nogo/constructions.hpp"
#include "nogo/field.hpp"
#include "nogo/group_search.hpp"
#include "nogo/stabilizer_code.hpp"

namespace {

using namespace nogo;

StabilizerCode steane() {
    return StabilizerCode::from_paulis({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, "steane");
}

StabilizerCode four_two_two() { return StabilizerCode::from_paulis({"XXXX", "ZZZZ"}, "422"); }

void BM_FieldMultiply(benchmark::State &state) {
    auto field = FieldSpec::create(2, find_primitive(2, static_cast<unsigned>(state.range(0))));
    FieldElement a = pow(FieldElement::alpha(field), 12345);
    FieldElement b = a;
    for (auto _ : state) {
        b *= a;
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_FieldMultiply)->Arg(8)->Arg(16)->Arg(24);

void BM_ElementOrder(benchmark::State &state) {
    size_t k = static_cast<size_t>(state.range(0));
    SymplecticMatrix w = construct_w(k).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(element_order(w));
    }
}
BENCHMARK(BM_ElementOrder)->DenseRange(2, 12, 5);

void BM_ConstructW(benchmark::State &state) {
    size_t k = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_w(k));
    }
}
BENCHMARK(BM_ConstructW)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GenerateSp4(benchmark::State &state) {
    std::vector<SymplecticMatrix> gens = {embed(gates::hadamard(), std::vector<size_t>{0}, 2),
                                          embed(gates::phase(), std::vector<size_t>{0}, 2), gates::cnot(),
                                          embed(gates::cnot(), std::vector<size_t>{1, 0}, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_group(2, gens).size());
    }
}
BENCHMARK(BM_GenerateSp4)->Unit(benchmark::kMillisecond);

void BM_StandardForm(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_standard_form(steane()));
    }
}
BENCHMARK(BM_StandardForm);

void BM_TransversalSteane(benchmark::State &state) {
    StabilizerCode code = steane();
    for (auto _ : state) {
        benchmark::DoNotOptimize(transversal_logical_group(code, static_cast<unsigned>(state.range(0))).preserving);
    }
    state.SetItemsProcessed(state.iterations() * 279936);
}
BENCHMARK(BM_TransversalSteane)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Automorphism422(benchmark::State &state) {
    StabilizerCode code = four_two_two();
    for (auto _ : state) {
        benchmark::DoNotOptimize(automorphism_logical_group(code).preserving);
    }
    state.SetItemsProcessed(state.iterations() * 31104);
}
BENCHMARK(BM_Automorphism422)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

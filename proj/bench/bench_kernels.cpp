// Copyright 2026 The sglab Authors
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

// Serial reference vs OpenMP kernels on a register of n qubits.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "sglab/decoherence.hpp"
#include "sglab/experiment.hpp"
#include "sglab/haar.hpp"
#include "sglab/kernels.hpp"
#include "sglab/rng.hpp"

namespace {

using namespace sglab;

struct Fixture {
    Register reg;
    Vector amps;
    Matrix op;
    std::vector<std::string> targets;
};

Fixture make_fixture(int n) {
    std::vector<std::string> labels;
    std::vector<Slot> slots;
    for (int i = 0; i < n; ++i) {
        labels.push_back("q" + std::to_string(i));
        slots.push_back({labels.back(), 2});
    }
    Fixture f{Register(slots), Vector(), haar_unitary(4, 1), {labels[0], labels[static_cast<std::size_t>(n) - 1]}};
    RngStream rng(2);
    f.amps = Vector(static_cast<Eigen::Index>(f.reg.total_dim()));
    for (Eigen::Index i = 0; i < f.amps.size(); ++i) {
        f.amps(i) = cplx(rng.normal(), rng.normal());
    }
    f.amps.normalize();
    return f;
}

template <void (*Apply)(std::span<cplx>, const Matrix &, const kernels::Layout &)>
void bm_apply(benchmark::State &state) {
    auto f = make_fixture(static_cast<int>(state.range(0)));
    const auto layout = kernels::make_layout(f.reg, f.targets);
    for (auto _ : state) {
        Apply({f.amps.data(), static_cast<std::size_t>(f.amps.size())}, f.op, layout);
        benchmark::DoNotOptimize(f.amps.data());
    }
}

template <Matrix (*Reduce)(std::span<const cplx>, const kernels::Layout &)>
void bm_reduced(benchmark::State &state) {
    auto f = make_fixture(static_cast<int>(state.range(0)));
    const auto layout = kernels::make_layout(f.reg, f.targets);
    for (auto _ : state) {
        auto m = Reduce({f.amps.data(), static_cast<std::size_t>(f.amps.size())}, layout);
        benchmark::DoNotOptimize(m.data());
    }
}

template <Matrix (*Trace)(const Matrix &, const kernels::Layout &)>
void bm_partial_trace(benchmark::State &state) {
    auto f = make_fixture(static_cast<int>(state.range(0)));
    const Matrix rho = f.amps * f.amps.adjoint();
    const auto layout = kernels::make_layout(f.reg, f.targets);
    for (auto _ : state) {
        auto m = Trace(rho, layout);
        benchmark::DoNotOptimize(m.data());
    }
}

void bm_shots_serial(benchmark::State &state) {
    const EnsembleState in({{1.0, t4_state(SpinPrep::balanced())}});
    for (auto _ : state) {
        auto r = serial::run_local_mode(in, LocalBasis::X, static_cast<std::size_t>(state.range(0)), 7);
        benchmark::DoNotOptimize(r.product_mean);
    }
}

void bm_shots_omp(benchmark::State &state) {
    const EnsembleState in({{1.0, t4_state(SpinPrep::balanced())}});
    for (auto _ : state) {
        auto r = run_local_mode(in, LocalBasis::X, static_cast<std::size_t>(state.range(0)), 7);
        benchmark::DoNotOptimize(r.product_mean);
    }
}

void bm_sweep_serial(benchmark::State &state) {
    const std::vector<std::size_t> ds{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        auto r = serial::suppression_sweep(SpinPrep::balanced(), ds, 64, EnvModel::haar,
                                           WeightsModel::uniform, 7);
        benchmark::DoNotOptimize(r.data());
    }
}

void bm_sweep_omp(benchmark::State &state) {
    const std::vector<std::size_t> ds{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        auto r = suppression_sweep(SpinPrep::balanced(), ds, 64, EnvModel::haar, WeightsModel::uniform, 7);
        benchmark::DoNotOptimize(r.data());
    }
}

} // namespace

BENCHMARK(bm_apply<sglab::kernels::serial::apply>)->Name("apply/serial")->DenseRange(10, 16, 3);
BENCHMARK(bm_apply<sglab::kernels::omp::apply>)->Name("apply/omp")->DenseRange(10, 16, 3);
BENCHMARK(bm_reduced<sglab::kernels::serial::reduced_density>)->Name("reduced_density/serial")->DenseRange(10, 16, 3);
BENCHMARK(bm_reduced<sglab::kernels::omp::reduced_density>)->Name("reduced_density/omp")->DenseRange(10, 16, 3);
BENCHMARK(bm_partial_trace<sglab::kernels::serial::partial_trace>)->Name("partial_trace/serial")->Arg(8)->Arg(10);
BENCHMARK(bm_partial_trace<sglab::kernels::omp::partial_trace>)->Name("partial_trace/omp")->Arg(8)->Arg(10);
BENCHMARK(bm_shots_serial)->Name("local_shots/serial")->Arg(10000);
BENCHMARK(bm_shots_omp)->Name("local_shots/omp")->Arg(10000);
BENCHMARK(bm_sweep_serial)->Name("sweep/serial")->Arg(64);
BENCHMARK(bm_sweep_omp)->Name("sweep/omp")->Arg(64);

BENCHMARK_MAIN();

// Copyright 2026 The scramble Authors
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

#include "scramble/evolution.hpp"
#include "scramble/liouvillian.hpp"
#include "scramble/otoc.hpp"
#include "scramble/pauli.hpp"

using namespace scramble;

namespace {

ModelSpec chain(int n, ChannelKind kind, double gamma) {
  ModelSpec m;
  m.n_sites = n;
  m.channel = {kind, gamma};
  return m;
}

void BM_ApplyHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Liouvillian gen({chain(n, ChannelKind::kDepolarizing, 0.1), Direction::kBackward, Picture::kAdjoint});
  const Matrix x = pauli_on_site(PauliLetter::Z, 1, n).matrix();
  Matrix out;
  for (auto _ : state) {
    gen.apply_hermitian(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * x.size() * static_cast<long>(sizeof(Complex)));
}
BENCHMARK(BM_ApplyHermitian)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Rk4Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Liouvillian gen({chain(n, ChannelKind::kPhase, 0.1), Direction::kBackward, Picture::kAdjoint});
  Rk4Stepper stepper(
      n, [&](const Matrix& x, Matrix& out) { gen.apply_hermitian(x, out); }, pauli_on_site(PauliLetter::Z, 1, n),
      0.02);
  for (auto _ : state) stepper.advance(1);
}
BENCHMARK(BM_Rk4Step)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SandwichTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix x = (pauli_on_site(PauliLetter::Z, 1, n) + pauli_on_site(PauliLetter::X, 2, n)).matrix();
  const PauliString p = PauliString::from_index(3ULL << (2 * (n - 1)), n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pauli_sandwich_trace(x, p, x));
}
BENCHMARK(BM_SandwichTrace)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

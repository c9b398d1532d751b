// Copyright 2026 The ncgeom Authors
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

#include "ncg/linalg.hpp"

namespace {

ncg::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ncg::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = ncg::Scalar(static_cast<long>(rng() % 7) - 3);
  return m;
}

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ncg::Matrix m = random_matrix(n / 2, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(32)->Arg(64);

void BM_Inverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ncg::Matrix m = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::inverse(m));
}
BENCHMARK(BM_Inverse)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

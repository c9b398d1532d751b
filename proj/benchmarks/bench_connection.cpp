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

#include <string>

#include "ncg/builders.hpp"
#include "ncg/connection.hpp"

namespace {

const char* preset_name(std::int64_t k) { return k == 0 ? "abelian-torus" : "matrix-derivations"; }

void BM_ValidateCalculus(benchmark::State& state) {
  ncg::Preset p = ncg::make_preset(preset_name(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::validate_calculus(p.calculus));
  state.SetLabel(p.name);
}
BENCHMARK(BM_ValidateCalculus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildSymmetry(benchmark::State& state) {
  ncg::Preset p = ncg::make_preset(preset_name(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::build_symmetry(p.calculus));
  state.SetLabel(p.name);
}
BENCHMARK(BM_BuildSymmetry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LeviCivitaKoszul(benchmark::State& state) {
  ncg::Preset p = ncg::make_preset(preset_name(state.range(0)), 2);
  auto geo = ncg::Geometry::create(p.calculus, p.metric).value();
  for (auto _ : state) benchmark::DoNotOptimize(ncg::levi_civita_koszul(geo));
  state.SetLabel(p.name);
}
BENCHMARK(BM_LeviCivitaKoszul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LeviCivitaDirect(benchmark::State& state) {
  ncg::Preset p = ncg::make_preset(preset_name(state.range(0)), 2);
  auto geo = ncg::Geometry::create(p.calculus, p.metric).value();
  auto frame = ncg::frame_presentation(p.calculus, geo.cert(), std::nullopt).value();
  auto nabla0 = ncg::nabla_zero(p.calculus, geo.cert(), frame).value();
  for (auto _ : state) benchmark::DoNotOptimize(ncg::levi_civita_direct(geo, nabla0));
  state.SetLabel(p.name);
}
BENCHMARK(BM_LeviCivitaDirect)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

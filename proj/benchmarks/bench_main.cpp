// Copyright 2026 The tallone Authors
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

#include "tallone/lattice.hpp"
#include "tallone/model.hpp"
#include "tallone/toric_projection.hpp"

namespace {

using namespace tallone;

HPolyhedron example_6d() {
  HPolyhedron p;
  p.dim = 3;
  p.add_ineq({Rat(1), Rat(0), Rat(0)}, Rat(-3));
  p.add_ineq({Rat(-1), Rat(0), Rat(0)}, Rat(-3));
  p.add_ineq({Rat(0), Rat(1), Rat(0)}, Rat(-2));
  p.add_ineq({Rat(0), Rat(-1), Rat(0)}, Rat(-2));
  p.add_ineq({Rat(0), Rat(0), Rat(1)}, Rat(1));
  p.add_ineq({Rat(0), Rat(0), Rat(-1)}, Rat(-4));
  p.add_ineq({Rat(-1), Rat(0), Rat(1)}, Rat(0));
  p.add_ineq({Rat(1), Rat(0), Rat(1)}, Rat(0));
  p.add_ineq({Rat(0), Rat(-1), Rat(1)}, Rat(0));
  p.add_ineq({Rat(0), Rat(1), Rat(1)}, Rat(0));
  return p;
}

void BM_HvConvert6d(benchmark::State& state) {
  HPolyhedron p = example_6d();
  for (auto _ : state) {
    VPolyhedron v = hv_convert(p);
    benchmark::DoNotOptimize(v.vertices.size());
  }
}
BENCHMARK(BM_HvConvert6d);

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m(6, 6);
  long seed = 1;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      seed = (seed * 1103515245 + 12345) % 2147483648;
      m.at(i, j) = (seed % 19) - 9;
    }
  for (auto _ : state) {
    SnfResult r = snf(m);
    benchmark::DoNotOptimize(r.s.at(0, 0));
  }
}
BENCHMARK(BM_SmithNormalForm);

void BM_Project6d(benchmark::State& state) {
  HPolyhedron p = example_6d();
  LatticeBasis z3 = LatticeBasis::standard(3);
  for (auto _ : state) {
    ComplexityOneBundle b = build_projection(p, z3);
    benchmark::DoNotOptimize(b.skeleton.cells.size());
  }
}
BENCHMARK(BM_Project6d);

void BM_DhTruncation(benchmark::State& state) {
  ComplexityOneModel m;
  m.torus_rank = 2;
  m.subtorus = LatticeBasis::standard(2);
  m.weights = {{Int(-1), Int(0)}, {Int(0), Int(-1)}, {Int(1), Int(1)}};
  m.base_point = {Rat(1), Rat(1)};
  for (auto _ : state) {
    PiecewiseAffineFn rho = dh_truncation(m, default_truncation(m));
    benchmark::DoNotOptimize(rho.cells.size());
  }
}
BENCHMARK(BM_DhTruncation);

void BM_RhoCompat6d(benchmark::State& state) {
  ComplexityOneBundle b = build_projection(example_6d(), LatticeBasis::standard(3));
  LatticeBasis z2 = LatticeBasis::standard(2);
  for (auto _ : state) {
    CompatReport r = check_rho_compat(b.skeleton, b.delta, b.rho, z2);
    benchmark::DoNotOptimize(r.checkpoints.size());
  }
}
BENCHMARK(BM_RhoCompat6d);

}  // namespace

BENCHMARK_MAIN();

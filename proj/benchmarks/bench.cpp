// Microbenchmarks for the heavy paths: GKM graph construction, nerve
// assembly, Smith normal form on nerve boundary operators, and the full
// report pipeline. The n = 7 cases bound the worst profile the batch
// command enumerates by default.
#include <benchmark/benchmark.h>

#include "orbitlab/gkm.hpp"
#include "orbitlab/hessenberg.hpp"
#include "orbitlab/homology.hpp"
#include "orbitlab/orbitspace.hpp"
#include "orbitlab/permutohedron.hpp"

using namespace orbitlab;

namespace {

HFun profile(int n, int i0) {
  std::vector<int> values;
  for (int i = 1; i <= n; ++i) values.push_back(std::min(i + 1, n));
  values[static_cast<size_t>(i0) - 1] = i0 + 2;
  return HFun(values);
}

void bm_build_gkm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HFun h = profile(n, 1);
  Spectrum lambda = Spectrum::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_gkm(h, lambda));
}
BENCHMARK(bm_build_gkm)->Arg(4)->Arg(5)->Arg(6);

void bm_nerve(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto special = special_facets(profile(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(nerve(special));
}
BENCHMARK(bm_nerve)->Arg(5)->Arg(6)->Arg(7);

void bm_nerve_snf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  NerveComplex nv = nerve(special_facets(profile(n, 1)));
  auto boundaries = boundary_matrices(nv.complex);
  const IntMatrix& top = boundaries.back();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(top));
  state.SetLabel(std::to_string(top.rows) + "x" + std::to_string(top.cols));
}
BENCHMARK(bm_nerve_snf)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_orbit_report(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HFun h = profile(n, 1);
  Spectrum lambda = Spectrum::standard(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_space_report(h, lambda));
}
BENCHMARK(bm_orbit_report)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

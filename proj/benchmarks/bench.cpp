#include <benchmark/benchmark.h>

#include "ultrawave/propagation.hpp"

using namespace uw;

namespace {

SampledSignal battery(const std::string& name, int n) {
  SynthParams p;
  p.sigma = 0.5;
  return synth(name, p, GridSpec::regular_1d(n, 64.0));
}

void BM_dft_1d(benchmark::State& state) {
  const SampledSignal f = battery("gaussian", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dft_1d)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

void BM_dft_2d(benchmark::State& state) {
  SynthParams p;
  const SampledSignal f =
      synth("gaussian", p, GridSpec::regular_2d(static_cast<int>(state.range(0)), 16.0));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_dft_2d)->Arg(64)->Arg(128)->Arg(256);

void BM_assoc_eval(benchmark::State& state) {
  const AssociatedFunction af(gevrey_sequence(2.0));
  double rho = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(af.eval(rho));
    rho = rho < 1e4 ? rho * 1.001 : 1.0;  // defeat the eval cache, stay below truncation
  }
}
BENCHMARK(BM_assoc_eval);

void BM_stft(benchmark::State& state) {
  const SampledSignal f = battery("step", 1024);
  const WindowSpec g = WindowSpec::gevrey_bump(2.0, 8.0);
  const int stride = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stft(f, g, stride));
}
BENCHMARK(BM_stft)->Arg(8)->Arg(32);

void BM_fl_cone_seminorm(benchmark::State& state) {
  const SampledSignal f = battery("step", 4096);
  const Spectrum F = dft(f);
  ConeSeminormParams params;
  params.q = 2.0;
  params.weight = assoc_weight(gevrey_sequence(2.0), 1.0);
  params.cone = half_line(+1);
  params.annulus = {4.0, 16.0};
  for (auto _ : state) benchmark::DoNotOptimize(fl_cone_seminorm(F, params));
}
BENCHMARK(BM_fl_cone_seminorm);

void BM_wf_estimate_1d(benchmark::State& state) {
  const SampledSignal f = battery("step", static_cast<int>(state.range(0)));
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(f.grid);
  for (auto _ : state) benchmark::DoNotOptimize(wf_estimate(f, af, 1.0, cfg));
}
BENCHMARK(BM_wf_estimate_1d)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <doctest.h>

#include <cmath>

#include "ultrawave/signal.hpp"

using namespace uw;

TEST_CASE("grid accessors: centered domain, nyquist, frequency step") {
  const GridSpec g = GridSpec::regular_1d(1024, 32.0);
  CHECK(g.extent[0] == 1024);
  CHECK(g.spacing[0] == doctest::Approx(32.0 / 1024.0));
  CHECK(g.coord(0, 512) == doctest::Approx(0.0));
  CHECK(g.coord(0, 0) == doctest::Approx(-16.0));
  CHECK(g.nyquist(0) == doctest::Approx(16.0));
  CHECK(g.freq_step(0) == doctest::Approx(1.0 / 32.0));
  CHECK_THROWS_AS(GridSpec::regular_1d(1000, 32.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::regular_1d(8, 32.0), std::invalid_argument);
}

TEST_CASE("synth: delta integrates to one, step jumps at x0") {
  const GridSpec g = GridSpec::regular_1d(1024, 32.0);
  SynthParams p;
  const SampledSignal d = synth("delta", p, g);
  double mass = 0.0;
  for (const cplx& v : d.values) mass += v.real() * g.spacing[0];
  CHECK(mass == doctest::Approx(1.0));

  const SampledSignal s = synth("step", p, g);
  CHECK(s.at(100).real() == 0.0);
  CHECK(s.at(900).real() == 1.0);

  CHECK_THROWS_AS(synth("nonsense", p, g), std::invalid_argument);
  CHECK_THROWS_AS(synth("ridge", p, g), std::invalid_argument);  // 2D only
}

TEST_CASE("gevrey bump: compact support, interior positivity, peak at center") {
  const GridSpec g = GridSpec::regular_1d(1024, 32.0);
  const SampledSignal b = gevrey_bump_signal(2.0, 4.0, g);
  double peak = 0.0;
  for (int i = 0; i < g.extent[0]; ++i) {
    const double x = g.coord(0, i);
    const double v = b.at(i).real();
    if (std::abs(x) >= 4.0) CHECK(v == 0.0);
    peak = std::max(peak, v);
  }
  CHECK(b.at(512).real() == doctest::Approx(peak));
  CHECK(peak == doctest::Approx(1.0));
  CHECK_THROWS_AS(gevrey_bump_signal(2.0, 100.0, g), std::invalid_argument);
}

TEST_CASE("windows: support radius is exact and the peak is one") {
  for (const WindowSpec w :
       {WindowSpec::gevrey_bump(2.0, 3.0), WindowSpec::gaussian(3.0)}) {
    CHECK(w.value(0.0) == doctest::Approx(1.0));
    CHECK(w.value(3.0) == 0.0);
    CHECK(w.value(-3.0) == 0.0);
    // just inside the support the profile is tiny but positive; right at the
    // edge the exponent underflows to an exact zero well before r = R
    CHECK(w.value(2.9) > 0.0);
    CHECK(w.value(1.0) > w.value(2.0));  // monotone on the shoulder
  }
  CHECK_THROWS_AS(WindowSpec::gaussian(0.0), std::invalid_argument);
}

TEST_CASE("translate and modulate commute up to the Weyl phase") {
  const GridSpec g = GridSpec::regular_1d(1024, 32.0);
  SynthParams p;
  p.sigma = 1.0;
  const SampledSignal f = synth("gaussian", p, g);
  CHECK(commutation_residual(f, 1.0, 2.0) < 1e-12);
  CHECK(commutation_residual(f, 0.5, 5.0) < 1e-12);
}

TEST_CASE("translate requires a grid-step multiple") {
  const GridSpec g = GridSpec::regular_1d(1024, 32.0);
  const SampledSignal f = synth("gaussian", SynthParams{}, g);
  CHECK_THROWS_AS(translate(f, 0.01), std::invalid_argument);
  const SampledSignal t = translate(f, 1.0);
  const int shift = static_cast<int>(std::lround(1.0 / g.spacing[0]));
  CHECK(t.at(512 + shift) == f.at(512));
}

TEST_CASE("gs decay probe: gevrey bump decays on both sides of phase space") {
  const GridSpec g = GridSpec::regular_1d(4096, 64.0);
  const SampledSignal b = gevrey_bump_signal(2.0, 2.0, g);
  const AssociatedFunction af(gevrey_sequence(2.0, 512));
  const DecayProbe probe = gs_decay_probe(b, af, af);
  // compact support: spatial tail is exactly zero outside radius 2
  CHECK(probe.space_all_zero);
  // spectral side decays against M(|xi|) with a genuine negative slope
  CHECK(probe.freq.valid);
  CHECK(probe.freq.slope < -0.1);
}

TEST_CASE("2D synth: ridge jumps across x = c, constant along y") {
  const GridSpec g = GridSpec::regular_2d(64, 16.0);
  SynthParams p;
  const SampledSignal r = synth("ridge", p, g);
  CHECK(r.at(10, 20).real() == r.at(10, 50).real());
  CHECK(r.at(8, 5).real() == -r.at(56, 5).real());
}

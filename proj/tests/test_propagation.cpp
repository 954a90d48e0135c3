#include <doctest.h>

#include <cmath>

#include "ultrawave/propagation.hpp"

using namespace uw;

namespace {

const GridSpec kGrid = GridSpec::regular_1d(1024, 64.0);

SampledSignal make(const std::string& name, double x0 = 0.0) {
  SynthParams p;
  p.x0 = x0;
  p.sigma = 0.5;
  return synth(name, p, kGrid);
}

double max_abs_diff(const SampledSignal& a, const SampledSignal& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

}  // namespace

TEST_CASE("convolution with a unit delta is the identity") {
  const SampledSignal f = make("gaussian");
  const SampledSignal conv = convolve(f, make("delta"));
  CHECK(max_abs_diff(conv, f) < 1e-10);
}

TEST_CASE("convolution with a shifted delta translates") {
  const SampledSignal f = make("gevrey-bump");
  const SampledSignal conv = convolve(f, make("delta", 2.0));
  const SampledSignal shifted = translate(f, 2.0);
  CHECK(max_abs_diff(conv, shifted) < 1e-10);
}

TEST_CASE("convolution is commutative and bilinear") {
  const SampledSignal f = make("gaussian");
  const SampledSignal g = make("gevrey-bump", 1.0);
  CHECK(max_abs_diff(convolve(f, g), convolve(g, f)) < 1e-10);

  SampledSignal f2 = f;
  for (cplx& v : f2.values) v *= 2.0;
  SampledSignal doubled = convolve(f, g);
  for (cplx& v : doubled.values) v *= 2.0;
  // the roundoff clamp acts at 1e-11 of the peak, so compare at that scale
  CHECK(max_abs_diff(convolve(f2, g), doubled) < 1e-9);
}

TEST_CASE("convolution grids must agree") {
  SynthParams p;
  CHECK_THROWS_AS(
      convolve(make("gaussian"), synth("gaussian", p, GridSpec::regular_1d(512, 64.0))),
      std::invalid_argument);
}

TEST_CASE("conv_wf_check accepts the delta-shift inclusion") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const SampledSignal d = make("delta", 2.0);
  const SampledSignal f = make("step");
  const WaveFrontReport wf2 = wf_estimate(f, af, 1.0, cfg);
  const WaveFrontReport wf12 = wf_estimate(convolve(d, f), af, 1.0, cfg);
  const InclusionVerdict v = conv_wf_check(d, wf2, wf12, 1, 0);
  CHECK(v.holds);
  CHECK(v.violating_cells.empty());
}

TEST_CASE("conv_wf_check flags a fabricated singularity") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const SampledSignal d = make("delta");
  const SampledSignal f = make("step");
  const WaveFrontReport wf2 = wf_estimate(f, af, 1.0, cfg);
  WaveFrontReport wf12 = wf2;
  // corrupt a regular interior cell away from the step and the crop edge
  bool corrupted = false;
  for (std::size_t p = 0; p < wf12.positions.size() && !corrupted; ++p) {
    const double x = kGrid.coord(0, wf12.positions[p][0]);
    if (x > 15.5 && x < 18.5 && !wf12.cell(p, 0).singular) {
      wf12.cell(p, 0).singular = true;
      corrupted = true;
    }
  }
  REQUIRE(corrupted);
  const InclusionVerdict v = conv_wf_check(d, wf2, wf12, 1, 0);
  CHECK_FALSE(v.holds);
  CHECK(v.violating_cells.size() == 1);
}

TEST_CASE("conv_wf_check rejects mismatched reports") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const WaveFrontReport a = wf_estimate(make("step"), af, 1.0, cfg);
  cfg.position_stride *= 2;
  const WaveFrontReport b = wf_estimate(make("step"), af, 1.0, cfg);
  CHECK_THROWS_AS(conv_wf_check(make("delta"), a, b, 1, 0), std::invalid_argument);
}

TEST_CASE("embedding: larger q gives a smaller seminorm and fewer singularities") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const EmbeddingReport rep = embedding_check(make("step"), af, 1.0, 1.0, 2.0, 1.0, cfg);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.subset);
  CHECK(rep.violating_cells.empty());
  CHECK_THROWS_AS(embedding_check(make("step"), af, 2.0, 1.0, 1.0, 1.0, cfg),
                  std::invalid_argument);  // q1 > q2
  CHECK_THROWS_AS(embedding_check(make("step"), af, 1.0, 1.0, 2.0, 2.0, cfg),
                  std::invalid_argument);  // N2 > N1: weight embedding fails
}

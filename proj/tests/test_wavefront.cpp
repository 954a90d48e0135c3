#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <memory>

#include "ultrawave/wavefront.hpp"

using namespace uw;

namespace {

const GridSpec kGrid = GridSpec::regular_1d(1024, 64.0);

SampledSignal make(const std::string& name, double x0 = 0.0) {
  SynthParams p;
  p.x0 = x0;
  p.sigma = 0.5;
  return synth(name, p, kGrid);
}

ConeSeminormParams unit_params(int sign, double q = 2.0) {
  ConeSeminormParams params;
  params.q = q;
  params.weight = Weight::polynomial(0.0);
  params.cone = half_line(sign);
  params.annulus = {kGrid.nyquist(0) / 8.0, kGrid.nyquist(0) / 2.0};
  return params;
}

}  // namespace

TEST_CASE("FL cone seminorm is a seminorm") {
  const SampledSignal f = make("gaussian");
  const SampledSignal g = make("gevrey-bump");
  SampledSignal f2 = f, sum = f;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    f2.values[k] *= 2.0;
    sum.values[k] += g.values[k];
  }
  const ConeSeminormParams params = unit_params(+1);
  const double nf = fl_cone_seminorm(f, params);
  CHECK(nf > 0.0);
  // absolute homogeneity and the triangle inequality
  CHECK(fl_cone_seminorm(f2, params) == doctest::Approx(2.0 * nf).epsilon(1e-12));
  CHECK(fl_cone_seminorm(sum, params) <=
        nf + fl_cone_seminorm(g, params) + 1e-10);
}

TEST_CASE("FL sup seminorm of a delta is its flat spectrum level") {
  const SampledSignal d = make("delta");
  const double sup =
      fl_cone_seminorm(d, unit_params(+1, std::numeric_limits<double>::infinity()));
  CHECK(sup == doctest::Approx(1.0).epsilon(1e-9));  // unit-mass delta
  // the finite-q norm aggregates the same flat level over the region measure
  CHECK(fl_cone_seminorm(d, unit_params(+1, 2.0)) > sup);
}

TEST_CASE("FL seminorm rejects an empty cone-annulus region") {
  ConeSeminormParams params = unit_params(+1);
  params.annulus = {1e6, 2e6};  // beyond nyquist: no grid frequency inside
  CHECK_THROWS_AS(fl_cone_seminorm(make("gaussian"), params), std::invalid_argument);
}

TEST_CASE("MOD cone seminorm is homogeneous and window-positive") {
  const GridSpec g = GridSpec::regular_1d(256, 64.0);
  SynthParams sp;
  sp.sigma = 1.0;
  const SampledSignal f = synth("gaussian", sp, g);
  SampledSignal f3 = f;
  for (cplx& v : f3.values) v *= 3.0;
  ConeSeminormParams params;
  params.q = 2.0;
  params.weight = Weight::polynomial(0.0);
  params.cone = half_line(+1);
  params.annulus = {g.nyquist(0) / 8.0, g.nyquist(0) / 2.0};
  const WindowSpec win = WindowSpec::gevrey_bump(2.0, 8.0);
  const double nf = mod_cone_seminorm(f, win, 2.0, params, 4);
  CHECK(nf > 0.0);
  CHECK(mod_cone_seminorm(f3, win, 2.0, params, 4) ==
        doctest::Approx(3.0 * nf).epsilon(1e-12));
}

TEST_CASE("wf_estimate flags a delta in every direction at its position") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const WaveFrontReport rep = wf_estimate(make("delta"), af, 1.0, cfg);
  CHECK(rep.n_fit_failures == 0);
  CHECK_FALSE(rep.singular_empty());
  // the cell at the origin is singular in both directions
  bool found_origin = false;
  for (std::size_t p = 0; p < rep.positions.size(); ++p) {
    const double x = kGrid.coord(0, rep.positions[p][0]);
    if (std::abs(x) < 1e-9) {
      found_origin = true;
      for (std::size_t d = 0; d < rep.n_dirs(); ++d) CHECK(rep.cell(p, d).singular);
    }
    // far from the delta every cell is regular
    if (std::abs(x) > cfg.window.radius + 1e-9)
      for (std::size_t d = 0; d < rep.n_dirs(); ++d) CHECK_FALSE(rep.cell(p, d).singular);
  }
  CHECK(found_origin);
}

TEST_CASE("wf_estimate finds no singularity in a gaussian") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const WaveFrontReport rep = wf_estimate(make("gaussian"), af, 1.0, cfg);
  CHECK(rep.singular_empty());
  const std::vector<bool> flat = rep.classification();
  CHECK(flat.size() == rep.cells.size());
  for (bool b : flat) CHECK_FALSE(b);
}

TEST_CASE("membership agrees with wave-front emptiness on easy members") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const MembershipCheck smooth = membership_iff_empty(make("gaussian"), af, 1.0, cfg);
  CHECK(smooth.member);
  CHECK(smooth.wf_empty);
  const MembershipCheck rough = membership_iff_empty(make("step"), af, 1.0, cfg);
  CHECK_FALSE(rough.member);
  CHECK_FALSE(rough.wf_empty);
}

TEST_CASE("wf_estimate validates its configuration") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  cfg.tau_star = 0.0;
  CHECK_THROWS_AS(wf_estimate(make("delta"), af, 1.0, cfg), std::invalid_argument);
  cfg = EstimatorConfig::defaults(kGrid);
  cfg.kind = EstimatorKind::MOD;
  cfg.crop_extent = 100;  // not a power of two
  CHECK_THROWS_AS(wf_estimate(make("delta"), af, 1.0, cfg), std::invalid_argument);
  cfg = EstimatorConfig::defaults(kGrid);
  cfg.window.radius = 1e6;  // no interior position survives
  CHECK_THROWS_AS(wf_estimate(make("delta"), af, 1.0, cfg), std::invalid_argument);
}

TEST_CASE("family reports are the pointwise lattice of their members") {
  const AssociatedFunction af(gevrey_sequence(2.0));
  const EstimatorConfig cfg = EstimatorConfig::defaults(kGrid);
  const SampledSignal f = make("step");
  const std::array<WaveFrontReport, 2> members{wf_estimate(f, af, 1.0, cfg),
                                               wf_estimate(f, af, 2.0, cfg)};
  const auto [inf_rep, sup_rep] = wf_family(members);
  CHECK(inf_rep.kind == EstimatorKind::FAMILY_INF);
  CHECK(sup_rep.kind == EstimatorKind::FAMILY_SUP);
  for (std::size_t k = 0; k < inf_rep.cells.size(); ++k) {
    const bool a = members[0].cells[k].singular, b = members[1].cells[k].singular;
    CHECK(inf_rep.cells[k].singular == (a && b));
    CHECK(sup_rep.cells[k].singular == (a || b));
  }
  CHECK_THROWS_AS(wf_family(std::span<const WaveFrontReport>{}), std::invalid_argument);
}

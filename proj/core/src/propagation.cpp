#include "ultrawave/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uw {

namespace {

constexpr double kSuppRel = 1e-12;

GridSpec padded_grid(const GridSpec& g) {
  GridSpec p = g;
  p.extent[0] *= 2;
  p.origin[0] = 2.0 * g.origin[0];
  if (g.dimension == 2) {
    p.extent[1] *= 2;
    p.origin[1] = 2.0 * g.origin[1];
  }
  return p;
}

SampledSignal embed(const SampledSignal& f, const GridSpec& p) {
  SampledSignal out = zero_signal(p, f.name);
  const int o0 = f.grid.extent[0] / 2;
  const int o1 = f.grid.dimension == 2 ? f.grid.extent[1] / 2 : 0;
  for (int i = 0; i < f.grid.extent[0]; ++i) {
    if (f.grid.dimension == 1) {
      out.at(i + o0) = f.at(i);
    } else {
      for (int j = 0; j < f.grid.extent[1]; ++j) out.at(i + o0, j + o1) = f.at(i, j);
    }
  }
  return out;
}

}  // namespace

SampledSignal convolve(const SampledSignal& f1, const SampledSignal& f2) {
  if (!(f1.grid == f2.grid)) throw std::invalid_argument("convolve: grid mismatch");
  const GridSpec& g = f1.grid;
  const GridSpec p = padded_grid(g);
  Spectrum F1 = dft(embed(f1, p));
  const Spectrum F2 = dft(embed(f2, p));
  for (std::size_t k = 0; k < F1.values.size(); ++k) F1.values[k] *= F2.values[k];
  const SampledSignal full = idft(F1);

  // Crop back to the common grid; tails that the inputs themselves already
  // truncated at the domain edge stay truncated.
  SampledSignal out = zero_signal(g, f1.name + "*" + f2.name);
  const int o0 = g.extent[0] / 2;
  const int o1 = g.dimension == 2 ? g.extent[1] / 2 : 0;
  for (int i = 0; i < g.extent[0]; ++i) {
    if (g.dimension == 1) {
      out.at(i) = full.at(i + o0);
    } else {
      for (int j = 0; j < g.extent[1]; ++j) out.at(i, j) = full.at(i + o0, j + o1);
    }
  }
  // Transform roundoff otherwise masquerades as singular support under the
  // relative-floor classifiers; clamp it to the exact zero it represents.
  // Spike inputs (delta pairs) leave residue up to ~2e-13 of the peak after
  // the padded round trip, so the clamp sits two orders above that.
  double peak = 0.0;
  for (const cplx& v : out.values) peak = std::max(peak, std::abs(v));
  for (cplx& v : out.values)
    if (std::abs(v) <= 1e-11 * peak) v = 0.0;
  return out;
}

InclusionVerdict conv_wf_check(const SampledSignal& f1, const WaveFrontReport& wf2,
                               const WaveFrontReport& wf12, int position_slack,
                               int direction_slack) {
  if (!(wf2.grid == wf12.grid) || wf2.n_dirs() != wf12.n_dirs() ||
      wf2.positions != wf12.positions)
    throw std::invalid_argument("conv_wf_check: report grid mismatch");
  const GridSpec& g = wf2.grid;

  double f1_max = 0.0;
  for (const cplx& v : f1.values) f1_max = std::max(f1_max, std::abs(v));
  std::vector<std::array<double, 2>> supp;
  for (int i = 0; i < g.extent[0]; ++i) {
    if (g.dimension == 1) {
      if (std::abs(f1.at(i)) > kSuppRel * f1_max)
        supp.push_back({g.coord(0, i), 0.0});
    } else {
      for (int j = 0; j < g.extent[1]; ++j)
        if (std::abs(f1.at(i, j)) > kSuppRel * f1_max)
          supp.push_back({g.coord(0, i), g.coord(1, j)});
    }
  }

  InclusionVerdict verdict;
  verdict.position_slack = position_slack;
  verdict.direction_slack = direction_slack;
  const std::size_t nd = wf12.n_dirs();
  const double pos_tol =
      position_slack * wf12.config.position_stride * g.spacing[0] + 1e-9;

  // Boundary guard: cropping the padded convolution truncates non-compact
  // factors at the domain edge, fabricating a support jump the theorem knows
  // nothing about. Cells whose cutoff disk can reach that edge (shifted by up
  // to the support extent of f1) are outside the surrogate's scope.
  std::array<double, 2> smax{0.0, 0.0};
  for (const auto& s : supp)
    for (int ax = 0; ax < g.dimension; ++ax)
      smax[ax] = std::max(smax[ax], std::abs(s[ax]));
  const auto near_crop_edge = [&](double x, double y) {
    const std::array<double, 2> pos{x, y};
    for (int ax = 0; ax < g.dimension; ++ax)
      if (std::abs(pos[ax]) + wf12.config.window.radius + smax[ax] >=
          g.length(ax) / 2.0 - g.spacing[ax])
        return true;
    return false;
  };

  for (std::size_t c12 = 0; c12 < wf12.cells.size(); ++c12) {
    if (!wf12.cells[c12].singular) continue;
    const std::size_t p12 = c12 / nd, d12 = c12 % nd;
    const auto [i12, j12] = wf12.positions[p12];
    const double x12 = g.coord(0, i12);
    const double y12 = g.dimension == 2 ? g.coord(1, j12) : 0.0;
    if (near_crop_edge(x12, y12)) continue;

    bool covered = false;
    for (std::size_t c2 = 0; c2 < wf2.cells.size() && !covered; ++c2) {
      if (!wf2.cells[c2].singular) continue;
      const std::size_t p2 = c2 / nd, d2 = c2 % nd;
      const std::size_t dd = d12 > d2 ? d12 - d2 : d2 - d12;
      if (std::min(dd, nd - dd) > static_cast<std::size_t>(direction_slack)) continue;
      const auto [i2, j2] = wf2.positions[p2];
      const double x2 = g.coord(0, i2);
      const double y2 = g.dimension == 2 ? g.coord(1, j2) : 0.0;
      for (const auto& s : supp) {
        if (std::abs(x12 - (s[0] + x2)) <= pos_tol &&
            std::abs(y12 - (s[1] + y2)) <= pos_tol) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) verdict.violating_cells.push_back(c12);
  }
  verdict.holds = verdict.violating_cells.empty();
  return verdict;
}

EmbeddingReport embedding_check(const SampledSignal& f, const AssociatedFunction& af,
                                double q1, double N1, double q2, double N2,
                                const EstimatorConfig& base) {
  if (q1 > q2) throw std::invalid_argument("embedding_check: q1 <= q2 required");
  EmbeddingReport rep;
  // w2 <= C w1 on the annulus <=> (N2 - N1) M(r) bounded above; M increases,
  // so the ratio at r_max decides.
  const double lr_min = (N2 - N1) * af.eval(base.annulus[0]);
  const double lr_max = (N2 - N1) * af.eval(base.annulus[1]);
  rep.weight_ratio_C = std::exp(std::max(lr_min, lr_max));
  if (N2 > N1 + 1e-12)
    throw std::invalid_argument("embedding_check: w2 <~ w1 fails (N2 > N1)");
  rep.hypothesis_ok = true;

  EstimatorConfig c1 = base, c2 = base;
  c1.q = q1;
  c2.q = q2;
  const WaveFrontReport r1 = wf_estimate(f, af, N1, c1);
  const WaveFrontReport r2 = wf_estimate(f, af, N2, c2);
  rep.subset = true;
  for (std::size_t k = 0; k < r1.cells.size(); ++k)
    if (r2.cells[k].singular && !r1.cells[k].singular) {
      rep.subset = false;
      rep.violating_cells.push_back(k);
    }

  const DirectionCover cov = cover(f.grid.dimension, base.n_dir, base.overlap);
  for (const Cone& cone : cov.cones) {
    ConeSeminormParams s1{q1, assoc_weight(af.sequence(), N1, f.grid.dimension), cone,
                          base.annulus};
    ConeSeminormParams s2{q2, assoc_weight(af.sequence(), N2, f.grid.dimension), cone,
                          base.annulus};
    const double a = fl_cone_seminorm(f, s2);
    const double b = fl_cone_seminorm(f, s1);
    rep.seminorm_ratio.push_back(b > 0 ? a / b : 0.0);
  }
  return rep;
}

}  // namespace uw

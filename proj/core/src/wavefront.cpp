#include "ultrawave/wavefront.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "ultrawave/threads.hpp"

namespace uw {

namespace {

constexpr double kZeroTau = -1e9;  // exact-zero tail sentinel (cell is regular)

double inf() { return std::numeric_limits<double>::infinity(); }

// Phase-space weights are evaluated at x = 0.
double weight_log_at_freq(const Weight& w, std::array<double, 2> xi, int d) {
  if (w.dimension == d) return w.log_eval(std::span<const double>(xi.data(), d));
  if (w.dimension == 2 * d) {
    std::array<double, 4> z{};
    for (int k = 0; k < d; ++k) z[d + k] = xi[k];
    return w.log_eval(std::span<const double>(z.data(), 2 * d));
  }
  throw std::invalid_argument("weight dimension incompatible with the spectrum");
}

template <typename Fn>
void for_region(const Spectrum& F, const Cone* cone, std::array<double, 2> annulus,
                Fn&& fn) {
  const GridSpec& g = F.grid;
  const int n1 = g.dimension == 2 ? g.extent[1] : 1;
  for (int k = 0; k < g.extent[0]; ++k) {
    const double fx = F.freq(0, k);
    for (int l = 0; l < n1; ++l) {
      const double fy = g.dimension == 2 ? F.freq(1, l) : 0.0;
      const double r = std::hypot(fx, fy);
      if (r < annulus[0] || r > annulus[1]) continue;
      if (cone && !cone->contains({fx, fy})) continue;
      const std::size_t flat = static_cast<std::size_t>(k) * n1 + l;
      fn(flat, std::array<double, 2>{fx, fy}, r);
    }
  }
}

}  // namespace

double fl_cone_seminorm(const Spectrum& F, const ConeSeminormParams& params) {
  const GridSpec& g = F.grid;
  double cell = g.freq_step(0);
  if (g.dimension == 2) cell *= g.freq_step(1);
  const bool sup = std::isinf(params.q);
  // The weight factor and the q-th power dominate the per-point cost; elide
  // both where they are trivial (unit weights and q in {1, 2} are the
  // estimator's inner loop).
  const bool unit_weight =
      params.weight.kind == Weight::Kind::Polynomial && params.weight.poly_t == 0.0;
  double acc = 0.0;
  std::size_t n = 0;
  for_region(F, &params.cone, params.annulus, [&](std::size_t flat,
                                                  std::array<double, 2> xi, double) {
    double term = std::abs(F.values[flat]);
    if (!unit_weight)
      term *= std::exp(weight_log_at_freq(params.weight, xi, g.dimension));
    if (sup)
      acc = std::max(acc, term);
    else if (params.q == 2.0)
      acc += term * term * cell;
    else if (params.q == 1.0)
      acc += term * cell;
    else
      acc += std::pow(term, params.q) * cell;
    ++n;
  });
  if (n == 0) throw std::invalid_argument("fl_cone_seminorm: empty cone-annulus region");
  return sup ? acc : std::pow(acc, 1.0 / params.q);
}

double fl_cone_seminorm(const SampledSignal& f, const ConeSeminormParams& params) {
  return fl_cone_seminorm(dft(f), params);
}

double mod_cone_seminorm(const StftArray& V, double p, const ConeSeminormParams& params) {
  const GridSpec& g = V.grid;
  double cell_x = V.stride * g.spacing[0];
  double cell_f = g.freq_step(0);
  if (g.dimension == 2) {
    cell_x *= V.stride * g.spacing[1];
    cell_f *= g.freq_step(1);
  }
  const bool sup_q = std::isinf(params.q);
  const bool sup_p = std::isinf(p);

  // frequency-major: inner x-aggregation per retained bin
  Spectrum probe{g, {}};
  double acc = 0.0;
  std::size_t n = 0;
  const int n1 = g.dimension == 2 ? g.extent[1] : 1;
  for (int k = 0; k < g.extent[0]; ++k) {
    const double fx = probe.freq(0, k);
    for (int l = 0; l < n1; ++l) {
      const double fy = g.dimension == 2 ? probe.freq(1, l) : 0.0;
      const double r = std::hypot(fx, fy);
      if (r < params.annulus[0] || r > params.annulus[1]) continue;
      if (!params.cone.contains({fx, fy})) continue;
      const std::size_t flat = static_cast<std::size_t>(k) * n1 + l;
      double inner = 0.0;
      for (std::size_t pos = 0; pos < V.positions.size(); ++pos) {
        const double a = std::abs(V.row(pos)[flat]);
        if (sup_p)
          inner = std::max(inner, a);
        else
          inner += std::pow(a, p) * cell_x;
      }
      if (!sup_p) inner = std::pow(inner, 1.0 / p);
      const double term =
          inner * std::exp(weight_log_at_freq(params.weight, {fx, fy}, g.dimension));
      if (sup_q)
        acc = std::max(acc, term);
      else
        acc += std::pow(term, params.q) * cell_f;
      ++n;
    }
  }
  if (n == 0) throw std::invalid_argument("mod_cone_seminorm: empty cone-annulus region");
  return sup_q ? acc : std::pow(acc, 1.0 / params.q);
}

double mod_cone_seminorm(const SampledSignal& f, const WindowSpec& g, double p,
                         const ConeSeminormParams& params, int stride) {
  return mod_cone_seminorm(stft(f, g, stride), p, params);
}

namespace {

DecayFit fit_samples(std::span<const double> radius, std::span<const double> amp,
                     double width, const std::function<double(double)>& scale,
                     const Weight* weight, double global_max, double floor_rel) {
  DecayFit out;
  if (global_max == 0.0) {
    out.all_zero = true;
    return out;
  }
  const ShellProfile prof = shell_reduce(radius, amp, width, floor_rel, global_max);
  if (prof.radius.empty()) {
    out.all_zero = !radius.empty();
    return out;
  }
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < prof.radius.size(); ++k) {
    xs.push_back(scale(prof.radius[k]));
    double y = std::log(prof.amplitude[k]);
    if (weight) y += weight->log_eval_radial(prof.radius[k]);
    ys.push_back(y);
  }
  const LinearFit fit = least_squares(xs, ys);
  out.tau = fit.slope;
  out.intercept = fit.intercept;
  out.r2 = fit.r2;
  out.n_points = fit.n_points;
  out.valid = fit.valid;
  if (!fit.valid) {
    // Count how many shells the region offers geometrically; if the floor
    // starved an otherwise adequate profile, the tail has decayed below the
    // noise floor -- that is evidence of regularity, not a fit failure.
    const ShellProfile full = shell_reduce(radius, amp, width, 0.0, global_max);
    if (full.radius.size() >= static_cast<std::size_t>(8) &&
        full.radius.size() > prof.radius.size())
      out.all_zero = true;
  }
  return out;
}

double shell_width(const GridSpec& g, std::array<double, 2> annulus) {
  return std::max(g.freq_step(0), (annulus[1] - annulus[0]) / 24.0);
}

DecayFit fit_region(const Spectrum& F, const Cone* cone,
                    const std::function<double(double)>& scale,
                    std::array<double, 2> annulus, const Weight* weight,
                    double floor_rel = kClassificationFloorRel) {
  double global_max = 0.0;
  for (const cplx& v : F.values) global_max = std::max(global_max, std::abs(v));
  std::vector<double> radius, amp;
  for_region(F, cone, annulus, [&](std::size_t flat, std::array<double, 2>, double r) {
    radius.push_back(r);
    amp.push_back(std::abs(F.values[flat]));
  });
  return fit_samples(radius, amp, shell_width(F.grid, annulus), scale, weight,
                     global_max, floor_rel);
}

}  // namespace

DecayFit directional_decay_fit(const Spectrum& F, const Cone& cone,
                               const AssociatedFunction& af,
                               std::array<double, 2> annulus, const Weight* weight,
                               double floor_rel) {
  return fit_region(F, &cone, [&](double r) { return af.eval(r); }, annulus, weight,
                    floor_rel);
}

DecayFit directional_decay_fit_scaled(const Spectrum& F, const Cone& cone,
                                      const std::function<double(double)>& scale,
                                      std::array<double, 2> annulus, double floor_rel) {
  return fit_region(F, &cone, scale, annulus, nullptr, floor_rel);
}

std::string to_string(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::FL: return "FL";
    case EstimatorKind::MOD: return "MOD";
    case EstimatorKind::GEVREY: return "GEVREY";
    case EstimatorKind::FAMILY_INF: return "FAMILY_INF";
    case EstimatorKind::FAMILY_SUP: return "FAMILY_SUP";
  }
  return "?";
}

EstimatorConfig EstimatorConfig::defaults(const GridSpec& grid) {
  EstimatorConfig cfg;
  cfg.window =
      WindowSpec::gevrey_bump(2.0, (3.0 * grid.extent[0] / 16.0) * grid.spacing[0]);
  // Stride of one sixth of the window radius: the last interior lattice center
  // still sees a singularity through the window shoulder with ample margin,
  // and the first outside center sees exactly zero of it (support boundary on
  // the lattice), which keeps classification maps window-independent.
  cfg.position_stride = std::max(1, grid.extent[0] * 3 / (16 * 6));
  const double nyq =
      grid.dimension == 2 ? std::min(grid.nyquist(0), grid.nyquist(1)) : grid.nyquist(0);
  // In 2D the weight is too flat over the lowest frequency octave to separate
  // jump plateaus from smooth decay, so the fit band sits one octave higher.
  cfg.annulus = grid.dimension == 1 ? std::array<double, 2>{nyq / 8.0, nyq / 2.0}
                                    : std::array<double, 2>{nyq / 4.0, nyq};
  cfg.n_dir = grid.dimension == 1 ? 2 : 16;
  cfg.crop_extent = grid.extent[0] / 2;
  return cfg;
}

bool WaveFrontReport::singular_empty() const {
  return std::none_of(cells.begin(), cells.end(),
                      [](const WfCell& c) { return c.singular; });
}

std::vector<bool> WaveFrontReport::classification() const {
  std::vector<bool> map(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) map[k] = cells[k].singular;
  return map;
}

namespace {

struct PositionLattice {
  std::vector<std::array<int, 2>> points;
  std::vector<int> idx0, idx1;  // per-axis index lists (lattice structure)
};

PositionLattice interior_positions(const GridSpec& g, const EstimatorConfig& cfg) {
  PositionLattice lat;
  const auto axis_indices = [&](int axis) {
    std::vector<int> out;
    const int margin =
        static_cast<int>(std::ceil(cfg.window.radius / g.spacing[axis]));
    int i = ((margin + cfg.position_stride - 1) / cfg.position_stride) *
            cfg.position_stride;
    for (; i <= g.extent[axis] - 1 - margin; i += cfg.position_stride) out.push_back(i);
    return out;
  };
  lat.idx0 = axis_indices(0);
  lat.idx1 = g.dimension == 2 ? axis_indices(1) : std::vector<int>{0};
  if (lat.idx0.empty() || lat.idx1.empty())
    throw std::invalid_argument("wf_estimate: window radius leaves no interior position");
  for (int i : lat.idx0)
    for (int j : lat.idx1) lat.points.push_back({i, j});
  return lat;
}

SampledSignal localize(const SampledSignal& f, const WindowSpec& w, double cx, double cy) {
  const GridSpec& g = f.grid;
  SampledSignal out = zero_signal(g, f.name);
  for (int i = 0; i < g.extent[0]; ++i) {
    const double dx = g.coord(0, i) - cx;
    if (std::abs(dx) >= w.radius) continue;
    if (g.dimension == 1) {
      out.at(i) = f.at(i) * w.value(dx);
    } else {
      for (int j = 0; j < g.extent[1]; ++j) {
        const double r = std::hypot(dx, g.coord(1, j) - cy);
        if (r < w.radius) out.at(i, j) = f.at(i, j) * w.value(r);
      }
    }
  }
  // Cells that catch only an extreme tail sliver (window shoulder times signal
  // shoulder, ~1e-30 of the signal scale) have too few meaningful samples to
  // carry spectral information; relative-floor fitting would read them as
  // spikes. They are indistinguishable from zero at this scale, so clamp them.
  double fmax = 0.0, omax = 0.0;
  for (const cplx& v : f.values) fmax = std::max(fmax, std::abs(v));
  for (const cplx& v : out.values) omax = std::max(omax, std::abs(v));
  if (omax <= 1e-25 * fmax)
    std::fill(out.values.begin(), out.values.end(), cplx{0.0, 0.0});
  return out;
}

// MOD xi-profile: p-aggregated |V_g(phi f)(x, .)| over window offsets
// {-R/2, 0, R/2} per axis, computed on a cropped subgrid around x0 so the
// profile's frequency step stays calibrated with the crop size.
Spectrum mod_profile(const SampledSignal& localized, const EstimatorConfig& cfg,
                     int ci, int cj) {
  const GridSpec& g = localized.grid;
  const int nc = cfg.crop_extent;
  if (nc < 16 || nc > g.extent[0] || !is_pow2(static_cast<std::size_t>(nc)))
    throw std::invalid_argument("mod: crop_extent must be a power of two within the grid");
  const auto crop_start = [&](int axis, int center) {
    return std::clamp(center - nc / 2, 0, g.extent[axis] - nc);
  };
  const int s0 = crop_start(0, ci);
  const int s1 = g.dimension == 2 ? crop_start(1, cj) : 0;

  GridSpec cg;
  cg.dimension = g.dimension;
  cg.spacing = g.spacing;
  cg.origin = {g.coord(0, s0), g.dimension == 2 ? g.coord(1, s1) : 0.0};
  cg.extent = {nc, g.dimension == 2 ? nc : 1};

  const double R = cfg.window.radius;
  const std::vector<double> offsets{-R / 2.0, 0.0, R / 2.0};
  const double cx = g.coord(0, ci);
  const double cy = g.dimension == 2 ? g.coord(1, cj) : 0.0;
  const bool sup_p = std::isinf(cfg.p);

  std::vector<double> agg(cg.size(), 0.0);
  SampledSignal windowed{cg, std::vector<cplx>(cg.size()), ""};
  for (double ox : offsets) {
    for (double oy : g.dimension == 2 ? offsets : std::vector<double>{0.0}) {
      for (int i = 0; i < nc; ++i) {
        const double dx = cg.coord(0, i) - (cx + ox);
        if (g.dimension == 1) {
          windowed.at(i) = localized.at(s0 + i) * cfg.window.value(dx);
        } else {
          for (int j = 0; j < nc; ++j) {
            const double r = std::hypot(dx, cg.coord(1, j) - (cy + oy));
            windowed.at(i, j) = localized.at(s0 + i, s1 + j) * cfg.window.value(r);
          }
        }
      }
      const Spectrum row = dft(windowed);
      for (std::size_t k = 0; k < agg.size(); ++k) {
        const double a = std::abs(row.values[k]);
        if (sup_p)
          agg[k] = std::max(agg[k], a);
        else
          agg[k] += std::pow(a, cfg.p);
      }
    }
  }
  Spectrum profile{cg, std::vector<cplx>(cg.size())};
  for (std::size_t k = 0; k < agg.size(); ++k)
    profile.values[k] = sup_p ? agg[k] : std::pow(agg[k], 1.0 / cfg.p);
  return profile;
}

// Closedness pass: a regular cell flanked along a lattice axis by singular
// cells (same direction) is flipped singular.
int smooth_pass(WaveFrontReport& rep, const PositionLattice& lat) {
  const std::size_t nd = rep.n_dirs();
  const std::size_t n0 = lat.idx0.size(), n1 = lat.idx1.size();
  auto cell_at = [&](std::size_t a, std::size_t b, std::size_t d) -> WfCell& {
    return rep.cells[(a * n1 + b) * nd + d];
  };
  int flipped = 0;
  for (std::size_t d = 0; d < nd; ++d) {
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n1; ++b) {
        WfCell& c = cell_at(a, b, d);
        if (c.singular) continue;
        const bool axis0 = a > 0 && a + 1 < n0 && cell_at(a - 1, b, d).singular &&
                           cell_at(a + 1, b, d).singular;
        const bool axis1 = b > 0 && b + 1 < n1 && cell_at(a, b - 1, d).singular &&
                           cell_at(a, b + 1, d).singular;
        if (axis0 || axis1) {
          c.singular = true;
          ++flipped;
        }
      }
  }
  return flipped;
}

void fill_cell_from_fit(WfCell& cell, const DecayFit& fit, double shift, double tau_star,
                        std::atomic<int>& failures) {
  cell.r2 = fit.r2;
  cell.n_points = fit.n_points;
  if (fit.valid) {
    cell.fit_ok = true;
    cell.tau = fit.tau + shift;
    cell.singular = cell.tau > tau_star;
  } else if (fit.all_zero) {
    cell.fit_ok = true;  // exact-zero tail: decays faster than anything
    cell.tau = kZeroTau;
  } else {
    ++failures;
  }
}

}  // namespace

WaveFrontReport wf_estimate(const SampledSignal& f, const AssociatedFunction& af,
                            double weight_N, const EstimatorConfig& cfg) {
  if (!(cfg.tau_star < 0))
    throw std::invalid_argument("wf_estimate: tau_star < 0 required");
  if (cfg.kind != EstimatorKind::FL && cfg.kind != EstimatorKind::MOD)
    throw std::invalid_argument("wf_estimate: kind must be FL or MOD");
  const GridSpec& g = f.grid;
  const PositionLattice lat = interior_positions(g, cfg);
  WaveFrontReport rep;
  rep.kind = cfg.kind;
  rep.grid = g;
  rep.positions = lat.points;
  rep.dir_cover = cover(g.dimension, cfg.n_dir, cfg.overlap);
  rep.config = cfg;
  rep.weight_N = weight_N;
  rep.cells.resize(lat.points.size() * rep.n_dirs());

  // The cone-annulus geometry is position-independent, so the per-cone lists
  // of spectrum indices, radii, and nesting tiers are shared by every cell.
  GridSpec sg = g;
  if (cfg.kind == EstimatorKind::MOD) {
    sg.extent = {cfg.crop_extent, g.dimension == 2 ? cfg.crop_extent : 1};
  }
  struct ConeRegion {
    std::vector<std::uint32_t> idx;
    std::vector<double> radius;
    std::vector<std::uint8_t> tier;
  };
  std::vector<ConeRegion> regions(rep.n_dirs());
  {
    const double a0 = cfg.annulus[0];
    const double span = cfg.annulus[1] - cfg.annulus[0];
    const Spectrum probe{sg, {}};
    const int n1 = sg.dimension == 2 ? sg.extent[1] : 1;
    for (int k = 0; k < sg.extent[0]; ++k) {
      const double fx = probe.freq(0, k);
      for (int l = 0; l < n1; ++l) {
        const double fy = sg.dimension == 2 ? probe.freq(1, l) : 0.0;
        const double r = std::sqrt(fx * fx + fy * fy);
        if (r < cfg.annulus[0] || r > cfg.annulus[1]) continue;
        const std::uint8_t tier =
            r <= a0 + span / 3.0 ? 0 : (r <= a0 + 2.0 * span / 3.0 ? 1 : 2);
        for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
          if (!rep.dir_cover.cones[di].contains({fx, fy})) continue;
          regions[di].idx.push_back(static_cast<std::uint32_t>(k) * n1 + l);
          regions[di].radius.push_back(r);
          regions[di].tier.push_back(tier);
        }
      }
    }
  }
  const std::function<double(double)> scale = [&af](double r) { return af.eval(r); };
  const double width = shell_width(sg, cfg.annulus);
  double fcell = sg.freq_step(0);
  if (sg.dimension == 2) fcell *= sg.freq_step(1);
  const bool sup_q = std::isinf(cfg.q);

  std::atomic<int> failures{0};
  parallel_for(lat.points.size(), [&](std::size_t pi) {
    const auto [ci, cj] = lat.points[pi];
    const double cx = g.coord(0, ci);
    const double cy = g.dimension == 2 ? g.coord(1, cj) : 0.0;
    const SampledSignal localized = localize(f, cfg.window, cx, cy);

    const Spectrum F = cfg.kind == EstimatorKind::MOD
                           ? mod_profile(localized, cfg, ci, cj)
                           : dft(localized);
    double gmax = 0.0;
    for (const cplx& v : F.values) gmax = std::max(gmax, std::abs(v));

    std::vector<double> amp;
    for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
      WfCell& cell = rep.cells[pi * rep.n_dirs() + di];
      const ConeRegion& reg = regions[di];
      amp.resize(reg.idx.size());
      for (std::size_t k = 0; k < reg.idx.size(); ++k)
        amp[k] = std::abs(F.values[reg.idx[k]]);
      const DecayFit fit = fit_samples(reg.radius, amp, width, scale, nullptr, gmax,
                                       kClassificationFloorRel);
      fill_cell_from_fit(cell, fit, weight_N, cfg.tau_star, failures);

      // Weight-free seminorm trend over the nested annuli (the weighted trend
      // is e^{N M} larger): a point in nesting tier t contributes to annuli
      // t..2.
      std::array<double, 3> acc{};
      std::array<std::size_t, 3> count{};
      for (std::size_t k = 0; k < reg.idx.size(); ++k) {
        const double a = amp[k];
        for (int t = reg.tier[k]; t < 3; ++t) {
          if (sup_q)
            acc[t] = std::max(acc[t], a);
          else if (cfg.q == 2.0)
            acc[t] += a * a * fcell;
          else if (cfg.q == 1.0)
            acc[t] += a * fcell;
          else
            acc[t] += std::pow(a, cfg.q) * fcell;
          ++count[t];
        }
      }
      for (int t = 0; t < 3; ++t) {
        if (count[t] == 0)
          cell.seminorms.push_back(-1.0);  // empty cone-annulus region
        else
          cell.seminorms.push_back(sup_q ? acc[t] : std::pow(acc[t], 1.0 / cfg.q));
      }
    }
  });
  rep.n_fit_failures = failures;
  rep.n_smoothed = smooth_pass(rep, lat);
  return rep;
}

WaveFrontReport wf_gevrey_estimate(const SampledSignal& f, double s,
                                   std::span<const double> N_family,
                                   const EstimatorConfig& cfg) {
  if (!(s > 1.0)) throw std::invalid_argument("wf_gevrey_estimate: s > 1 required");
  if (N_family.empty())
    throw std::invalid_argument("wf_gevrey_estimate: empty N family");
  const double n_min = *std::min_element(N_family.begin(), N_family.end());
  const double n_max = *std::max_element(N_family.begin(), N_family.end());

  const GridSpec& g = f.grid;
  const PositionLattice lat = interior_positions(g, cfg);
  WaveFrontReport rep;
  rep.kind = EstimatorKind::GEVREY;
  rep.grid = g;
  rep.positions = lat.points;
  rep.dir_cover = cover(g.dimension, cfg.n_dir, cfg.overlap);
  rep.config = cfg;
  rep.gevrey_s = s;
  rep.family.assign(N_family.begin(), N_family.end());
  rep.cells.resize(lat.points.size() * rep.n_dirs());

  const auto scale = [s](double r) { return std::pow(r, 1.0 / s); };
  std::atomic<int> failures{0};
  parallel_for(lat.points.size(), [&](std::size_t pi) {
    const auto [ci, cj] = lat.points[pi];
    const double cx = g.coord(0, ci);
    const double cy = g.dimension == 2 ? g.coord(1, cj) : 0.0;
    const Spectrum F = dft(localize(f, cfg.window, cx, cy));
    for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
      WfCell& cell = rep.cells[pi * rep.n_dirs() + di];
      const DecayFit fit =
          directional_decay_fit_scaled(F, rep.dir_cover.cones[di], scale, cfg.annulus);
      cell.r2 = fit.r2;
      cell.n_points = fit.n_points;
      if (fit.valid) {
        cell.fit_ok = true;
        cell.tau = fit.tau;
        cell.h = -fit.tau;
      } else if (fit.all_zero) {
        cell.fit_ok = true;
        cell.tau = kZeroTau;
        cell.h = inf();
      } else {
        ++failures;
        continue;
      }
      cell.singular_beurling = !(cell.h > n_max);  // fails "for each N"
      cell.singular_roumieu = !(cell.h > n_min);   // fails "for some N"
      cell.singular = cell.singular_beurling;
    }
  });
  rep.n_fit_failures = failures;
  rep.n_smoothed = smooth_pass(rep, lat);
  return rep;
}

std::pair<WaveFrontReport, WaveFrontReport> wf_family(
    std::span<const WaveFrontReport> members) {
  if (members.empty()) throw std::invalid_argument("wf_family: no members");
  const WaveFrontReport& head = members.front();
  for (const auto& m : members)
    if (m.positions != head.positions || m.n_dirs() != head.n_dirs() ||
        !(m.grid == head.grid))
      throw std::invalid_argument("wf_family: member grids differ");

  WaveFrontReport inf_rep = head, sup_rep = head;
  inf_rep.kind = EstimatorKind::FAMILY_INF;
  sup_rep.kind = EstimatorKind::FAMILY_SUP;
  inf_rep.family.clear();
  sup_rep.family.clear();
  for (const auto& m : members) {
    inf_rep.family.push_back(m.weight_N);
    sup_rep.family.push_back(m.weight_N);
  }
  for (std::size_t k = 0; k < head.cells.size(); ++k) {
    bool all = true, any = false;
    double tau_min = inf(), tau_max = -inf();
    for (const auto& m : members) {
      all = all && m.cells[k].singular;
      any = any || m.cells[k].singular;
      tau_min = std::min(tau_min, m.cells[k].tau);
      tau_max = std::max(tau_max, m.cells[k].tau);
    }
    inf_rep.cells[k].singular = all;
    inf_rep.cells[k].tau = tau_min;
    sup_rep.cells[k].singular = any;
    sup_rep.cells[k].tau = tau_max;
  }
  return {inf_rep, sup_rep};
}

MembershipCheck membership_iff_empty(const SampledSignal& f, const AssociatedFunction& af,
                                     double weight_N, const EstimatorConfig& cfg,
                                     const WaveFrontReport& report) {
  MembershipCheck out;
  const Spectrum F = dft(f);
  const DecayFit global = fit_region(
      F, nullptr, [&](double r) { return af.eval(r); }, cfg.annulus, nullptr);
  if (global.valid) {
    out.global_tau = global.tau + weight_N;
    out.member = out.global_tau <= cfg.tau_star;
  } else if (global.all_zero) {
    out.global_tau = kZeroTau;
    out.member = true;
  }
  out.wf_empty = report.singular_empty();
  return out;
}

MembershipCheck membership_iff_empty(const SampledSignal& f, const AssociatedFunction& af,
                                     double weight_N, const EstimatorConfig& cfg) {
  return membership_iff_empty(f, af, weight_N, cfg, wf_estimate(f, af, weight_N, cfg));
}

}  // namespace uw

#include "ultrawave/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ultrawave/spectral.hpp"

namespace uw {

namespace {

constexpr double kFloorRel = 1e-14;

void require_pow2_extent(int n) {
  if (n < 16 || !is_pow2(static_cast<std::size_t>(n)))
    throw std::invalid_argument("grid extent must be a power of two >= 16");
}

int nearest_index(const GridSpec& g, int axis, double x) {
  const int i = static_cast<int>(std::lround((x - g.origin[axis]) / g.spacing[axis]));
  if (i < 0 || i >= g.extent[axis])
    throw std::invalid_argument("synth: feature position outside the grid");
  return i;
}

double bump_profile(double u, double s) {
  // exp(1 - (1 - u^2)^{-1/(s-1)}) on |u| < 1, peak-normalized.
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - std::pow(1.0 - u * u, -1.0 / (s - 1.0)));
}

}  // namespace

GridSpec GridSpec::regular_1d(int n, double physical_length) {
  require_pow2_extent(n);
  GridSpec g;
  g.dimension = 1;
  g.spacing = {physical_length / n, 1.0};
  g.origin = {-physical_length / 2.0, 0.0};
  g.extent = {n, 1};
  return g;
}

GridSpec GridSpec::regular_2d(int n, double physical_length) {
  require_pow2_extent(n);
  GridSpec g;
  g.dimension = 2;
  g.spacing = {physical_length / n, physical_length / n};
  g.origin = {-physical_length / 2.0, -physical_length / 2.0};
  g.extent = {n, n};
  return g;
}

double SampledSignal::l2_norm() const {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  double cell = grid.spacing[0];
  if (grid.dimension == 2) cell *= grid.spacing[1];
  return std::sqrt(s * cell);
}

SampledSignal zero_signal(const GridSpec& grid, std::string name) {
  return {grid, std::vector<cplx>(grid.size(), cplx{0.0, 0.0}), std::move(name)};
}

SampledSignal synth(const std::string& name, const SynthParams& p, const GridSpec& grid) {
  SampledSignal f = zero_signal(grid, name);
  const bool two_d = grid.dimension == 2;

  auto fill = [&](auto&& rule) {
    for (int i = 0; i < grid.extent[0]; ++i) {
      const double x = grid.coord(0, i);
      if (!two_d) {
        f.at(i) = rule(x, 0.0);
      } else {
        for (int j = 0; j < grid.extent[1]; ++j) f.at(i, j) = rule(x, grid.coord(1, j));
      }
    }
  };

  if (name == "delta") {
    double cell = grid.spacing[0];
    int j = 0;
    if (two_d) {
      cell *= grid.spacing[1];
      j = nearest_index(grid, 1, p.y0);
    }
    const int i = nearest_index(grid, 0, p.x0);
    (two_d ? f.at(i, j) : f.at(i)) = 1.0 / cell;  // unit mass Riemann sum
  } else if (name == "gaussian") {
    if (!(p.sigma > 0)) throw std::invalid_argument("gaussian: sigma > 0 required");
    fill([&](double x, double y) {
      const double r2 = (x - p.x0) * (x - p.x0) + (two_d ? (y - p.y0) * (y - p.y0) : 0.0);
      return cplx{std::exp(-r2 / (2.0 * p.sigma * p.sigma)), 0.0};
    });
  } else if (name == "step") {
    if (two_d) throw std::invalid_argument("step: 1D only");
    fill([&](double x, double) { return cplx{x >= p.x0 ? 1.0 : 0.0, 0.0}; });
  } else if (name == "ridge") {
    if (!two_d) throw std::invalid_argument("ridge: 2D only");
    fill([&](double x, double) { return cplx{x >= p.c ? 1.0 : -1.0, 0.0}; });
  } else if (name == "halfplane") {
    if (!two_d) throw std::invalid_argument("halfplane: 2D only");
    fill([&](double x, double) { return cplx{x >= p.c ? 1.0 : 0.0, 0.0}; });
  } else if (name == "gevrey-bump") {
    return gevrey_bump_signal(p.s, p.R, grid, p.x0, p.y0);
  } else if (name == "chirp") {
    if (two_d) throw std::invalid_argument("chirp: 1D only");
    fill([&](double x, double) {
      const double phase = std::numbers::pi * p.a * (x - p.x0) * (x - p.x0);
      return cplx{std::cos(phase), std::sin(phase)};
    });
  } else {
    throw std::invalid_argument("synth: unknown signal '" + name + "'");
  }
  return f;
}

SampledSignal gevrey_bump_signal(double s, double R, const GridSpec& grid, double x0,
                                 double y0) {
  if (!(s > 1.0)) throw std::invalid_argument("gevrey bump: s > 1 required");
  if (!(R > 0.0)) throw std::invalid_argument("gevrey bump: R > 0 required");
  const double hi0 = grid.coord(0, grid.extent[0] - 1);
  if (x0 - R < grid.origin[0] || x0 + R > hi0)
    throw std::invalid_argument("gevrey bump: support leaves the grid");
  SampledSignal f = zero_signal(grid, "gevrey-bump");
  if (grid.dimension == 1) {
    for (int i = 0; i < grid.extent[0]; ++i)
      f.at(i) = bump_profile((grid.coord(0, i) - x0) / R, s);
  } else {
    const double hi1 = grid.coord(1, grid.extent[1] - 1);
    if (y0 - R < grid.origin[1] || y0 + R > hi1)
      throw std::invalid_argument("gevrey bump: support leaves the grid");
    for (int i = 0; i < grid.extent[0]; ++i)
      for (int j = 0; j < grid.extent[1]; ++j) {
        const double dx = grid.coord(0, i) - x0, dy = grid.coord(1, j) - y0;
        f.at(i, j) = bump_profile(std::hypot(dx, dy) / R, s);
      }
  }
  return f;
}

double WindowSpec::value(double r) const {
  r = std::abs(r);
  if (r >= radius) return 0.0;
  if (kind == Kind::Gaussian) {
    // Gaussian core tapered to zero by the order-2 bump shoulder. A hard
    // truncation would leave an edge discontinuity that the decay classifiers
    // correctly detect as a singularity of the localized signal. sigma is
    // chosen so the shoulder near the support edge stays within an order of
    // magnitude of the bump window's; a much sharper core attenuates
    // edge-of-band singularities below the classification resolution floor.
    const double sigma = radius / 2.0;
    return std::exp(-r * r / (2.0 * sigma * sigma)) * bump_profile(r / radius, 2.0);
  }
  return bump_profile(r / radius, s);
}

WindowSpec WindowSpec::gaussian(double radius) {
  if (!(radius > 0)) throw std::invalid_argument("window: radius > 0 required");
  return {Kind::Gaussian, 2.0, radius};
}

WindowSpec WindowSpec::gevrey_bump(double s, double radius) {
  if (!(s > 1.0)) throw std::invalid_argument("window: s > 1 required");
  if (!(radius > 0)) throw std::invalid_argument("window: radius > 0 required");
  return {Kind::GevreyBump, s, radius};
}

namespace {

int shift_samples(const GridSpec& g, int axis, double a) {
  const double k = a / g.spacing[axis];
  const double kr = std::round(k);
  if (std::abs(k - kr) > 1e-9)
    throw std::invalid_argument("translate: shift must be a grid-step multiple");
  return static_cast<int>(kr);
}

}  // namespace

SampledSignal translate(const SampledSignal& f, std::array<double, 2> a) {
  const GridSpec& g = f.grid;
  const int s0 = shift_samples(g, 0, a[0]);
  const int s1 = g.dimension == 2 ? shift_samples(g, 1, a[1]) : 0;
  SampledSignal out = zero_signal(g, f.name);
  for (int i = 0; i < g.extent[0]; ++i) {
    const int si = i - s0;
    if (si < 0 || si >= g.extent[0]) continue;
    if (g.dimension == 1) {
      out.at(i) = f.at(si);
    } else {
      for (int j = 0; j < g.extent[1]; ++j) {
        const int sj = j - s1;
        if (sj >= 0 && sj < g.extent[1]) out.at(i, j) = f.at(si, sj);
      }
    }
  }
  return out;
}

SampledSignal translate(const SampledSignal& f, double a) { return translate(f, {a, 0.0}); }

SampledSignal modulate(const SampledSignal& f, std::array<double, 2> xi) {
  const GridSpec& g = f.grid;
  for (int ax = 0; ax < g.dimension; ++ax) {
    const double k = xi[ax] * g.length(ax);
    if (std::abs(k - std::round(k)) > 1e-9)
      throw std::invalid_argument("modulate: xi must be a grid frequency");
  }
  SampledSignal out = f;
  constexpr double tau = 2.0 * std::numbers::pi;
  for (int i = 0; i < g.extent[0]; ++i) {
    if (g.dimension == 1) {
      out.at(i) *= std::polar(1.0, tau * xi[0] * g.coord(0, i));
    } else {
      for (int j = 0; j < g.extent[1]; ++j)
        out.at(i, j) *= std::polar(1.0, tau * (xi[0] * g.coord(0, i) + xi[1] * g.coord(1, j)));
    }
  }
  return out;
}

SampledSignal modulate(const SampledSignal& f, double xi) { return modulate(f, {xi, 0.0}); }

double commutation_residual(const SampledSignal& f, double shift, double xi) {
  const SampledSignal lhs = modulate(translate(f, shift), xi);
  SampledSignal rhs = translate(modulate(f, xi), shift);
  const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * shift * xi);
  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.values.size(); ++k)
    worst = std::max(worst, std::abs(lhs.values[k] - phase * rhs.values[k]));
  return worst;
}

namespace {

// ln(amplitude) vs scale(M(factor * r)) on the outer radial half, envelope via
// per-shell maxima; all_zero reports an identically-subfloor tail.
LinearFit tail_fit(const std::vector<double>& radius, const std::vector<double>& amp,
                   double r_lo, double r_hi, double shell_width,
                   const AssociatedFunction& af, double factor, bool* all_zero) {
  double global_max = 0.0;
  for (double a : amp) global_max = std::max(global_max, a);
  std::vector<double> r_sel, a_sel;
  for (std::size_t k = 0; k < radius.size(); ++k)
    if (radius[k] >= r_lo && radius[k] <= r_hi) {
      r_sel.push_back(radius[k]);
      a_sel.push_back(amp[k]);
    }
  const ShellProfile prof = shell_reduce(r_sel, a_sel, shell_width, kFloorRel, global_max);
  *all_zero = prof.radius.empty() && !r_sel.empty();
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < prof.radius.size(); ++k) {
    xs.push_back(af.eval(factor * prof.radius[k]));
    ys.push_back(std::log(prof.amplitude[k]));
  }
  return least_squares(xs, ys);
}

}  // namespace

DecayProbe gs_decay_probe(const SampledSignal& f, const AssociatedFunction& space_af,
                          const AssociatedFunction& freq_af, double A, double B) {
  DecayProbe probe;
  const GridSpec& g = f.grid;
  const bool two_d = g.dimension == 2;

  std::vector<double> r_space, a_space;
  for (int i = 0; i < g.extent[0]; ++i) {
    const double x = g.coord(0, i);
    if (!two_d) {
      r_space.push_back(std::abs(x));
      a_space.push_back(std::abs(f.at(i)));
    } else {
      for (int j = 0; j < g.extent[1]; ++j) {
        r_space.push_back(std::hypot(x, g.coord(1, j)));
        a_space.push_back(std::abs(f.at(i, j)));
      }
    }
  }
  const double half = g.length(0) / 2.0;
  probe.space = tail_fit(r_space, a_space, half / 2.0, half, 4.0 * g.spacing[0], space_af,
                         A, &probe.space_all_zero);

  const Spectrum spec = dft(f);
  std::vector<double> r_freq, a_freq;
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    r_freq.push_back(spec.freq_radius(k));
    a_freq.push_back(std::abs(spec.values[k]));
  }
  const double nyq = g.nyquist(0);
  probe.freq = tail_fit(r_freq, a_freq, nyq / 2.0, nyq, 4.0 * g.freq_step(0), freq_af, B,
                        &probe.freq_all_zero);
  return probe;
}

}  // namespace uw

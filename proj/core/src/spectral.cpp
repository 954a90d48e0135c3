#include "ultrawave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ultrawave/threads.hpp"

namespace uw {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;
constexpr double kFloorRel = 1e-14;

// Reorder one axis from standard FFT bin order to centered order and apply
// the origin phase e^{-sign 2 pi i xi_k o}; sign matches the transform kernel.
void center_axis(std::span<cplx> data, std::size_t n0, std::size_t n1, int axis,
                 double origin, double freq_step, int sign) {
  const std::size_t n = axis == 0 ? n0 : n1;
  std::vector<cplx> phase(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = (static_cast<double>(k) - static_cast<double>(n) / 2.0) * freq_step;
    phase[k] = std::polar(1.0, sign * kTau * xi * origin);
  }
  std::vector<cplx> tmp(n);
  const std::size_t n_lines = axis == 0 ? n1 : n0;
  for (std::size_t line = 0; line < n_lines; ++line) {
    auto idx = [&](std::size_t k) {
      return axis == 0 ? k * n1 + line : line * n1 + k;
    };
    for (std::size_t k = 0; k < n; ++k)
      tmp[k] = data[idx((k + n / 2) % n)] * phase[k];
    for (std::size_t k = 0; k < n; ++k) data[idx(k)] = tmp[k];
  }
}

void uncenter_axis(std::span<cplx> data, std::size_t n0, std::size_t n1, int axis,
                   double origin, double freq_step, int sign) {
  const std::size_t n = axis == 0 ? n0 : n1;
  std::vector<cplx> phase(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = (static_cast<double>(k) - static_cast<double>(n) / 2.0) * freq_step;
    phase[k] = std::polar(1.0, -sign * kTau * xi * origin);
  }
  std::vector<cplx> tmp(n);
  const std::size_t n_lines = axis == 0 ? n1 : n0;
  for (std::size_t line = 0; line < n_lines; ++line) {
    auto idx = [&](std::size_t k) {
      return axis == 0 ? k * n1 + line : line * n1 + k;
    };
    for (std::size_t k = 0; k < n; ++k)
      tmp[(k + n / 2) % n] = data[idx(k)] * phase[k];
    for (std::size_t k = 0; k < n; ++k) data[idx(k)] = tmp[k];
  }
}

}  // namespace

double Spectrum::freq_radius(std::size_t flat) const {
  if (grid.dimension == 1) return std::abs(freq(0, static_cast<int>(flat)));
  const int k = static_cast<int>(flat / grid.extent[1]);
  const int l = static_cast<int>(flat % grid.extent[1]);
  return std::hypot(freq(0, k), freq(1, l));
}

Spectrum dft(const SampledSignal& f) {
  const GridSpec& g = f.grid;
  Spectrum F{g, f.values};
  const std::size_t n0 = g.extent[0];
  if (g.dimension == 1) {
    fft_inplace(F.values, -1);
    center_axis(F.values, n0, 1, 0, g.origin[0], g.freq_step(0), -1);
  } else {
    const std::size_t n1 = g.extent[1];
    fft2_inplace(F.values, n0, n1, -1);
    center_axis(F.values, n0, n1, 0, g.origin[0], g.freq_step(0), -1);
    center_axis(F.values, n0, n1, 1, g.origin[1], g.freq_step(1), -1);
  }
  double cell = g.spacing[0];
  if (g.dimension == 2) cell *= g.spacing[1];
  for (cplx& v : F.values) v *= cell;
  return F;
}

SampledSignal idft(const Spectrum& F) {
  const GridSpec& g = F.grid;
  SampledSignal f{g, F.values, ""};
  const std::size_t n0 = g.extent[0];
  if (g.dimension == 1) {
    uncenter_axis(f.values, n0, 1, 0, g.origin[0], g.freq_step(0), -1);
    fft_inplace(f.values, +1);
  } else {
    const std::size_t n1 = g.extent[1];
    uncenter_axis(f.values, n0, n1, 0, g.origin[0], g.freq_step(0), -1);
    uncenter_axis(f.values, n0, n1, 1, g.origin[1], g.freq_step(1), -1);
    fft2_inplace(f.values, n0, n1, +1);
  }
  double cell_freq = g.freq_step(0);
  if (g.dimension == 2) cell_freq *= g.freq_step(1);
  for (cplx& v : f.values) v *= cell_freq;
  return f;
}

// Displacements are reduced to the fundamental domain so the window tiles the
// periodic grid; otherwise positions near the boundary see a truncated window
// and the discrete Moyal/inversion identities degrade from roundoff to O(dx).
static double wrap_len(double d, double length) {
  return d - length * std::round(d / length);
}

StftArray stft(const SampledSignal& f, const WindowSpec& g, int stride) {
  const GridSpec& grid = f.grid;
  if (stride < 1 || grid.extent[0] % stride != 0 ||
      (grid.dimension == 2 && grid.extent[1] % stride != 0))
    throw std::invalid_argument("stft: stride must divide the grid extent");

  StftArray V;
  V.grid = grid;
  V.window = g;
  V.stride = stride;
  for (int i = 0; i < grid.extent[0]; i += stride) {
    if (grid.dimension == 1) {
      V.positions.push_back({i, 0});
    } else {
      for (int j = 0; j < grid.extent[1]; j += stride) V.positions.push_back({i, j});
    }
  }
  V.values.resize(V.positions.size() * V.n_freq());

  parallel_for(V.positions.size(), [&](std::size_t p) {
    const auto [ci, cj] = V.positions[p];
    const double cx = grid.coord(0, ci);
    const double cy = grid.dimension == 2 ? grid.coord(1, cj) : 0.0;
    SampledSignal windowed = zero_signal(grid);
    for (int i = 0; i < grid.extent[0]; ++i) {
      const double dx = wrap_len(grid.coord(0, i) - cx, grid.length(0));
      if (grid.dimension == 1) {
        windowed.at(i) = f.at(i) * g.value(dx);
      } else {
        for (int j = 0; j < grid.extent[1]; ++j) {
          const double dy = wrap_len(grid.coord(1, j) - cy, grid.length(1));
          windowed.at(i, j) = f.at(i, j) * g.value(std::hypot(dx, dy));
        }
      }
    }
    const Spectrum row = dft(windowed);
    std::copy(row.values.begin(), row.values.end(), V.row(p));
  });
  return V;
}

SampledSignal adjoint_stft(const StftArray& F, const WindowSpec& g) {
  const GridSpec& grid = F.grid;
  SampledSignal out = zero_signal(grid);
  double cell = F.stride * grid.spacing[0];
  if (grid.dimension == 2) cell *= F.stride * grid.spacing[1];

  Spectrum row{grid, {}};
  for (std::size_t p = 0; p < F.positions.size(); ++p) {
    row.values.assign(F.row(p), F.row(p) + F.n_freq());
    const SampledSignal h = idft(row);
    const auto [cx, cy] = F.position(p);
    for (int i = 0; i < grid.extent[0]; ++i) {
      const double dx = wrap_len(grid.coord(0, i) - cx, grid.length(0));
      if (grid.dimension == 1) {
        const double w = g.value(dx);
        if (w != 0.0) out.at(i) += h.at(i) * w * cell;
      } else {
        for (int j = 0; j < grid.extent[1]; ++j) {
          const double dy = wrap_len(grid.coord(1, j) - cy, grid.length(1));
          const double w = g.value(std::hypot(dx, dy));
          if (w != 0.0) out.at(i, j) += h.at(i, j) * w * cell;
        }
      }
    }
  }
  return out;
}

cplx window_inner(const WindowSpec& g, const WindowSpec& psi, const GridSpec& grid) {
  double acc = 0.0;
  for (int i = 0; i < grid.extent[0]; ++i) {
    const double x = grid.coord(0, i);
    if (grid.dimension == 1) {
      acc += g.value(x) * psi.value(x);
    } else {
      for (int j = 0; j < grid.extent[1]; ++j) {
        const double r = std::hypot(x, grid.coord(1, j));
        acc += g.value(r) * psi.value(r);
      }
    }
  }
  double cell = grid.spacing[0];
  if (grid.dimension == 2) cell *= grid.spacing[1];
  return {acc * cell, 0.0};
}

PaleyWienerFit paley_wiener_fit(const SampledSignal& f, const AssociatedFunction& af,
                                int envelope_bins) {
  const Spectrum F = dft(f);
  const GridSpec& g = F.grid;
  const double nyq = g.dimension == 2 ? std::min(g.nyquist(0), g.nyquist(1)) : g.nyquist(0);

  double global_max = 0.0;
  for (const cplx& v : F.values) global_max = std::max(global_max, std::abs(v));
  if (global_max == 0.0) throw std::invalid_argument("paley_wiener_fit: zero signal");

  std::vector<double> radius, amp;
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    const double r = F.freq_radius(k);
    if (r >= nyq / 2.0 && r <= nyq) {
      radius.push_back(r);
      amp.push_back(std::abs(F.values[k]));
    }
  }
  const ShellProfile prof =
      shell_reduce(radius, amp, envelope_bins * g.freq_step(0), kFloorRel, global_max);
  if (static_cast<int>(prof.radius.size()) < 8)
    throw std::invalid_argument("paley_wiener_fit: fewer than 8 usable shells");

  PaleyWienerFit out;
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < prof.radius.size(); ++k) {
    xs.push_back(af.eval(prof.radius[k]));
    ys.push_back(std::log(prof.amplitude[k]));
  }
  out.fit = least_squares(xs, ys);
  out.h = -out.fit.slope;
  out.n_shells = static_cast<int>(prof.radius.size());
  return out;
}

StftGrowthProbe stft_growth_probe(const StftArray& V, const AssociatedFunction& af,
                                  double support_radius) {
  const GridSpec& g = V.grid;
  const std::size_t zero_bin =
      g.dimension == 1 ? static_cast<std::size_t>(g.extent[0] / 2)
                       : static_cast<std::size_t>(g.extent[0] / 2) * g.extent[1] +
                             g.extent[1] / 2;

  std::vector<double> row_max(V.positions.size(), 0.0);
  std::size_t peak = 0;
  double global_max = 0.0;
  for (std::size_t p = 0; p < V.positions.size(); ++p) {
    const cplx* r = V.row(p);
    for (std::size_t k = 0; k < V.n_freq(); ++k)
      row_max[p] = std::max(row_max[p], std::abs(r[k]));
    if (row_max[p] > global_max) {
      global_max = row_max[p];
      peak = p;
    }
  }
  StftGrowthProbe probe;
  if (global_max == 0.0) return probe;
  const auto [px, py] = V.position(peak);

  std::vector<double> r_sp, a_sp;
  double leak = 0.0;
  for (std::size_t p = 0; p < V.positions.size(); ++p) {
    const auto [x, y] = V.position(p);
    const double r = std::hypot(x - px, y - py);
    r_sp.push_back(r);
    a_sp.push_back(std::abs(V.row(p)[zero_bin]));
    if (r > support_radius) leak = std::max(leak, row_max[p]);
  }
  const ShellProfile sp =
      shell_reduce(r_sp, a_sp, V.stride * g.spacing[0], kFloorRel, global_max);
  // The peak's own shell sits at radius zero, where M vanishes; eval requires
  // a positive argument, so substitute the limit directly.
  const auto abscissa = [&](double r) { return r > 0.0 ? af.eval(r) : 0.0; };
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < sp.radius.size(); ++k) {
    xs.push_back(abscissa(sp.radius[k]));
    ys.push_back(std::log(sp.amplitude[k]));
  }
  probe.space = least_squares(xs, ys);
  probe.h_space = probe.space.valid ? -probe.space.slope : 0.0;

  Spectrum row{g, {V.row(peak), V.row(peak) + V.n_freq()}};
  std::vector<double> r_fr, a_fr;
  for (std::size_t k = 0; k < row.values.size(); ++k) {
    r_fr.push_back(row.freq_radius(k));
    a_fr.push_back(std::abs(row.values[k]));
  }
  const ShellProfile fr =
      shell_reduce(r_fr, a_fr, 4.0 * g.freq_step(0), kFloorRel, global_max);
  xs.clear();
  ys.clear();
  for (std::size_t k = 0; k < fr.radius.size(); ++k) {
    xs.push_back(abscissa(fr.radius[k]));
    ys.push_back(std::log(fr.amplitude[k]));
  }
  probe.freq = least_squares(xs, ys);
  probe.eps_freq = probe.freq.valid ? std::max(probe.freq.slope, 0.0) : 0.0;

  probe.support_leak = leak / global_max;
  probe.support_ok = probe.support_leak <= 1e-12;
  return probe;
}

}  // namespace uw

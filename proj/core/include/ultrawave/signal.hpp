#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "ultrawave/fft.hpp"
#include "ultrawave/fit.hpp"
#include "ultrawave/sequence.hpp"

namespace uw {

// Uniform centered grid; extent per axis is a power of two (>= 16).
struct GridSpec {
  int dimension = 1;
  std::array<double, 2> origin{0.0, 0.0};
  std::array<double, 2> spacing{1.0, 1.0};
  std::array<int, 2> extent{0, 1};

  std::size_t size() const {
    return static_cast<std::size_t>(extent[0]) * (dimension == 2 ? extent[1] : 1);
  }
  double coord(int axis, int i) const { return origin[axis] + i * spacing[axis]; }
  double length(int axis) const { return extent[axis] * spacing[axis]; }
  double nyquist(int axis) const { return 0.5 / spacing[axis]; }
  double freq_step(int axis) const { return 1.0 / length(axis); }
  bool operator==(const GridSpec&) const = default;

  // Centered domain [-L/2, L/2); default physical lengths keep the battery
  // annulus [nyquist/8, nyquist/2] in the calibrated range.
  static GridSpec regular_1d(int n, double physical_length = 64.0);
  static GridSpec regular_2d(int n, double physical_length = 16.0);
};

struct SampledSignal {
  GridSpec grid;
  std::vector<cplx> values;
  std::string name;

  cplx& at(int i) { return values[i]; }
  const cplx& at(int i) const { return values[i]; }
  cplx& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.extent[1] + j]; }
  const cplx& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.extent[1] + j];
  }
  double l2_norm() const;  // Riemann-weighted: (sum |f|^2 dx^d)^{1/2}
};

SampledSignal zero_signal(const GridSpec& grid, std::string name = "zero");

struct SynthParams {
  double x0 = 0.0, y0 = 0.0;  // feature position
  double sigma = 1.0;         // gaussian
  double s = 2.0, R = 1.0;    // gevrey bump
  double c = 0.0;             // ridge / half-plane line x1 = c
  double a = 1.0;             // chirp rate
};

// Battery members: delta, gaussian, step, ridge (2D), halfplane (2D),
// gevrey-bump, chirp.
SampledSignal synth(const std::string& name, const SynthParams& p, const GridSpec& grid);

SampledSignal gevrey_bump_signal(double s, double R, const GridSpec& grid,
                                 double x0 = 0.0, double y0 = 0.0);

// Analytic window profiles, peak-normalized to 1 at the center.
struct WindowSpec {
  enum class Kind { Gaussian, GevreyBump };
  Kind kind = Kind::GevreyBump;
  double s = 2.0;      // bump order
  double radius = 1.0; // support radius (gaussian: sigma = radius / 2, tapered
                       // to zero at the edge by the order-2 bump shoulder)

  double value(double r) const;
  static WindowSpec gaussian(double radius);
  static WindowSpec gevrey_bump(double s, double radius);
};

// T_a f = f(. - a), zero fill; a must be a grid-step multiple per axis.
SampledSignal translate(const SampledSignal& f, std::array<double, 2> a);
SampledSignal translate(const SampledSignal& f, double a);

// M_xi f = e^{2 pi i xi . x} f; xi must be a grid frequency.
SampledSignal modulate(const SampledSignal& f, std::array<double, 2> xi);
SampledSignal modulate(const SampledSignal& f, double xi);

// Max abs residual of M_y T_x f - e^{2 pi i x y} T_x M_y f on the grid.
double commutation_residual(const SampledSignal& f, double shift, double xi);

struct DecayProbe {
  LinearFit space;  // ln|f(x)| vs M(A|x - center|), outer half of the grid
  LinearFit freq;   // ln|fhat(xi)| vs N(B|xi|), outer half of the spectrum
  bool space_all_zero = false;  // tail identically below floor: -inf sentinel
  bool freq_all_zero = false;
};

DecayProbe gs_decay_probe(const SampledSignal& f, const AssociatedFunction& space_af,
                          const AssociatedFunction& freq_af, double A = 1.0,
                          double B = 1.0);

}  // namespace uw

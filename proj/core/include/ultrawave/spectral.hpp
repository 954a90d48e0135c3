#pragma once

#include <vector>

#include "ultrawave/fit.hpp"
#include "ultrawave/signal.hpp"

namespace uw {

// Riemann-sum DFT of a centered grid, stored in monotone ("centered")
// frequency order: freq(axis, k) = (k - n/2) / (n dx). With this
// normalization Parseval, inversion, and the Moyal identity are exact to
// rounding, and values approximate the continuous Fourier transform.
struct Spectrum {
  GridSpec grid;  // grid of the originating signal
  std::vector<cplx> values;

  double freq(int axis, int k) const {
    return (k - grid.extent[axis] / 2) * grid.freq_step(axis);
  }
  double freq_radius(std::size_t flat) const;
  cplx& at(int k) { return values[k]; }
  cplx& at(int k, int l) { return values[static_cast<std::size_t>(k) * grid.extent[1] + l]; }
  const cplx& at(int k) const { return values[k]; }
  const cplx& at(int k, int l) const {
    return values[static_cast<std::size_t>(k) * grid.extent[1] + l];
  }
};

Spectrum dft(const SampledSignal& f);
SampledSignal idft(const Spectrum& F);

// STFT samples V_g f(x, xi) = integral f(t) conj(g(t - x)) e^{-2 pi i xi t} dt
// at window positions on the signal grid decimated by stride; the window is
// evaluated analytically. One frequency row (centered order) per position.
struct StftArray {
  GridSpec grid;
  WindowSpec window;
  int stride = 1;
  std::vector<std::array<int, 2>> positions;  // grid indices of window centers
  std::vector<cplx> values;                   // positions-major, frequency rows

  std::size_t n_freq() const { return grid.size(); }
  const cplx* row(std::size_t pos) const { return values.data() + pos * n_freq(); }
  cplx* row(std::size_t pos) { return values.data() + pos * n_freq(); }
  std::array<double, 2> position(std::size_t pos) const {
    return {grid.coord(0, positions[pos][0]),
            grid.dimension == 2 ? grid.coord(1, positions[pos][1]) : 0.0};
  }
};

StftArray stft(const SampledSignal& f, const WindowSpec& g, int stride = 1);

// V_g^* F(t) = sum_{x,xi} F(x, xi) g(t - x) e^{2 pi i xi t} dxi (stride dx)^d.
// With stride 1 and windows supported in half the domain,
// <g, psi>^{-1} V_g^* V_psi = identity holds to rounding on the support of f.
SampledSignal adjoint_stft(const StftArray& F, const WindowSpec& g);

// <g, psi> = integral g conj(psi) for radial window profiles on the grid.
cplx window_inner(const WindowSpec& g, const WindowSpec& psi, const GridSpec& grid);

struct PaleyWienerFit {
  LinearFit fit;   // ln|Fhat| envelope vs M(|xi|), outer spectral half
  double h = 0.0;  // -slope
  int n_shells = 0;
};

// Envelope fit of ln|dft(f)| against the associated function over
// [nyquist/2, nyquist]; envelope_bins frequency bins per shell smooth the
// lobes of compactly supported f. Throws when fewer than 8 shells survive
// the relative floor (e.g. the zero signal).
PaleyWienerFit paley_wiener_fit(const SampledSignal& f, const AssociatedFunction& af,
                                int envelope_bins = 8);

struct StftGrowthProbe {
  LinearFit space;          // ln|V(x, 0)| vs M(|x - x_peak|)
  LinearFit freq;           // ln|V(x_peak, xi)| vs M(|xi|)
  double h_space = 0.0;     // -space slope
  double eps_freq = 0.0;    // freq slope clamped at 0
  double support_leak = 0.0;  // mass fraction with x outside supp f + supp g
  bool support_ok = false;
};

// Decay of the STFT across phase space against exp(N M(.)) scales; support_ok
// certifies V_g f = 0 (to 1e-12 relative) outside supp f + supp g, meaningful
// for compactly supported f and bump windows.
StftGrowthProbe stft_growth_probe(const StftArray& V, const AssociatedFunction& af,
                                  double support_radius);

}  // namespace uw

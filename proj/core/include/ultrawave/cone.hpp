#pragma once

#include <array>
#include <vector>

#include "ultrawave/signal.hpp"

namespace uw {

// Open cone in frequency space. 1D: the half-line sign(axis[0]); half_angle
// is ignored. 2D: directions within half_angle of axis, strictly.
struct Cone {
  int dimension = 1;
  std::array<double, 2> axis{1.0, 0.0};
  double half_angle = 0.0;

  bool contains(std::array<double, 2> xi) const;
  bool contains(double xi) const { return contains({xi, 0.0}); }
  double angle() const;  // axis angle in [0, 2 pi), 2D
};

Cone half_line(int sign);                                    // 1D
Cone sector(double axis_angle, double half_angle);           // 2D

// closure(inner) subset of outer, decided by axis/half-angle arithmetic.
bool nested_in(const Cone& inner, const Cone& outer);

// Concentric shrink for Theorem-proof geometry: same axis, scaled half-angle.
Cone shrink(const Cone& c, double factor);

struct DirectionCover {
  int dimension = 1;
  double overlap = 1.0;
  std::vector<Cone> cones;
};

// 1D: exactly two half-lines. 2D: n_dir equal sectors with
// half_angle = overlap * pi / n_dir.
DirectionCover cover(int dimension, int n_dir, double overlap = 1.5);

// Every nonzero frequency-grid point lies in at least one cone.
bool cover_complete(const DirectionCover& cov, const GridSpec& grid);

struct SeparationEstimate {
  bool holds = false;  // c > 0 with no violating pair
  double c = 0.0;      // min over tested pairs of |xi - eta| / (|xi| + |eta|)
  long long n_pairs = 0;
};

// Exhaustive scan of grid frequencies xi in inner, eta outside outer
// (requires nested_in(inner, outer)): the separation constant of the
// cutoff estimate.
SeparationEstimate separation_estimate(const Cone& inner, const Cone& outer,
                                       const GridSpec& grid);

}  // namespace uw

#include "ultrawave/cone.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uw {

namespace {

double wrap_angle(double a) {
  constexpr double tau = 2.0 * std::numbers::pi;
  a = std::fmod(a, tau);
  return a < 0 ? a + tau : a;
}

// Absolute angular distance in [0, pi].
double angle_dist(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace

bool Cone::contains(std::array<double, 2> xi) const {
  if (dimension == 1) return xi[0] != 0.0 && xi[0] * axis[0] > 0.0;
  if (xi[0] == 0.0 && xi[1] == 0.0) return false;
  return angle_dist(std::atan2(xi[1], xi[0]), angle()) < half_angle;
}

double Cone::angle() const { return wrap_angle(std::atan2(axis[1], axis[0])); }

Cone half_line(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("half_line: sign must be +-1");
  Cone c;
  c.dimension = 1;
  c.axis = {static_cast<double>(sign), 0.0};
  return c;
}

Cone sector(double axis_angle, double half_angle) {
  if (!(half_angle > 0.0) || !(half_angle < std::numbers::pi))
    throw std::invalid_argument("sector: half_angle in (0, pi) required");
  Cone c;
  c.dimension = 2;
  c.axis = {std::cos(axis_angle), std::sin(axis_angle)};
  c.half_angle = half_angle;
  return c;
}

bool nested_in(const Cone& inner, const Cone& outer) {
  if (inner.dimension != outer.dimension) return false;
  if (inner.dimension == 1) return inner.axis[0] * outer.axis[0] > 0.0;
  return angle_dist(inner.angle(), outer.angle()) + inner.half_angle <
         outer.half_angle;
}

Cone shrink(const Cone& c, double factor) {
  if (!(factor > 0.0 && factor < 1.0))
    throw std::invalid_argument("shrink: factor in (0, 1) required");
  Cone out = c;
  out.half_angle = c.half_angle * factor;
  return out;
}

DirectionCover cover(int dimension, int n_dir, double overlap) {
  if (overlap < 1.0) throw std::invalid_argument("cover: overlap >= 1 required");
  DirectionCover cov;
  cov.dimension = dimension;
  cov.overlap = overlap;
  if (dimension == 1) {
    if (n_dir != 2) throw std::invalid_argument("cover: 1D requires n_dir = 2");
    cov.cones = {half_line(+1), half_line(-1)};
  } else if (dimension == 2) {
    if (n_dir < 2) throw std::invalid_argument("cover: n_dir >= 2 required");
    const double half = overlap * std::numbers::pi / n_dir;
    for (int k = 0; k < n_dir; ++k)
      cov.cones.push_back(sector(2.0 * std::numbers::pi * k / n_dir, half));
  } else {
    throw std::invalid_argument("cover: dimension must be 1 or 2");
  }
  return cov;
}

bool cover_complete(const DirectionCover& cov, const GridSpec& grid) {
  for (int k = 0; k < grid.extent[0]; ++k) {
    const double fx = (k - grid.extent[0] / 2) * grid.freq_step(0);
    const int n1 = grid.dimension == 2 ? grid.extent[1] : 1;
    for (int l = 0; l < n1; ++l) {
      const double fy = grid.dimension == 2 ? (l - grid.extent[1] / 2) * grid.freq_step(1)
                                            : 0.0;
      if (fx == 0.0 && fy == 0.0) continue;
      bool hit = false;
      for (const Cone& c : cov.cones)
        if (c.contains({fx, fy})) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  }
  return true;
}

SeparationEstimate separation_estimate(const Cone& inner, const Cone& outer,
                                       const GridSpec& grid) {
  if (!nested_in(inner, outer))
    throw std::invalid_argument("separation_estimate: inner not nested in outer");
  std::vector<std::array<double, 2>> in_pts, out_pts;
  for (int k = 0; k < grid.extent[0]; ++k) {
    const double fx = (k - grid.extent[0] / 2) * grid.freq_step(0);
    const int n1 = grid.dimension == 2 ? grid.extent[1] : 1;
    for (int l = 0; l < n1; ++l) {
      const double fy = grid.dimension == 2 ? (l - grid.extent[1] / 2) * grid.freq_step(1)
                                            : 0.0;
      if (fx == 0.0 && fy == 0.0) continue;
      const std::array<double, 2> xi{fx, fy};
      if (inner.contains(xi)) in_pts.push_back(xi);
      if (!outer.contains(xi)) out_pts.push_back(xi);
    }
  }
  SeparationEstimate est;
  est.c = std::numeric_limits<double>::infinity();
  for (const auto& xi : in_pts)
    for (const auto& eta : out_pts) {
      const double sep = std::hypot(xi[0] - eta[0], xi[1] - eta[1]) /
                         (std::hypot(xi[0], xi[1]) + std::hypot(eta[0], eta[1]));
      est.c = std::min(est.c, sep);
      ++est.n_pairs;
    }
  est.holds = est.n_pairs > 0 && est.c > 0.0;
  return est;
}

}  // namespace uw

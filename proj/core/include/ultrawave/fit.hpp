#pragma once

#include <span>
#include <vector>

namespace uw {

// Ordinary least squares y ~ intercept + slope * x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int n_points = 0;
  bool valid = false;
};

LinearFit least_squares(std::span<const double> x, std::span<const double> y,
                        int min_points = 8);

// Collapses (radius, amplitude) samples to one representative per radial
// shell (the shell maximum) and drops shells below floor_rel * max amplitude.
// Shell index = round(radius / shell_width).
struct ShellProfile {
  std::vector<double> radius;
  std::vector<double> amplitude;
};

ShellProfile shell_reduce(std::span<const double> radius,
                          std::span<const double> amplitude,
                          double shell_width, double floor_rel = 1e-14,
                          double global_max = -1.0);

}  // namespace uw

#include "ultrawave/fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace uw {

LinearFit least_squares(std::span<const double> x, std::span<const double> y,
                        int min_points) {
  LinearFit f;
  if (x.size() != y.size()) throw std::invalid_argument("least_squares: size mismatch");
  f.n_points = static_cast<int>(x.size());
  if (f.n_points < min_points) return f;

  const double n = static_cast<double>(f.n_points);
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) { sx += x[i]; sy += y[i]; }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = (syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  f.valid = true;
  return f;
}

ShellProfile shell_reduce(std::span<const double> radius,
                          std::span<const double> amplitude,
                          double shell_width, double floor_rel,
                          double global_max) {
  if (radius.size() != amplitude.size())
    throw std::invalid_argument("shell_reduce: size mismatch");
  if (shell_width <= 0) throw std::invalid_argument("shell_reduce: shell_width <= 0");

  double amax = global_max;
  if (amax < 0) {
    amax = 0;
    for (double a : amplitude) amax = std::max(amax, a);
  }
  const double floor_abs = floor_rel * amax;

  std::map<long long, std::pair<double, double>> shells;  // idx -> (radius sum count, max amp)
  std::map<long long, long long> counts;
  for (std::size_t i = 0; i < radius.size(); ++i) {
    const long long idx = llround(radius[i] / shell_width);
    auto& s = shells[idx];
    s.first += radius[i];
    s.second = std::max(s.second, amplitude[i]);
    counts[idx]++;
  }
  ShellProfile p;
  for (const auto& [idx, s] : shells) {
    if (s.second <= floor_abs) continue;
    p.radius.push_back(s.first / static_cast<double>(counts[idx]));
    p.amplitude.push_back(s.second);
  }
  return p;
}

}  // namespace uw

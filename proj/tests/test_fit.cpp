#include <doctest.h>

#include <cmath>
#include <vector>

#include "ultrawave/fit.hpp"

using namespace uw;

TEST_CASE("least squares recovers an exact line") {
  std::vector<double> x, y;
  for (int k = 0; k < 16; ++k) {
    x.push_back(k);
    y.push_back(3.0 - 0.5 * k);
  }
  const LinearFit fit = least_squares(x, y);
  CHECK(fit.valid);
  CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0));
  CHECK(fit.n_points == 16);
}

TEST_CASE("least squares refuses underdetermined input") {
  std::vector<double> x{1.0, 2.0, 3.0}, y{1.0, 2.0, 3.0};
  CHECK_FALSE(least_squares(x, y).valid);           // below min_points
  CHECK(least_squares(x, y, 3).valid);              // explicit minimum
  std::vector<double> flat{2.0, 2.0, 2.0};
  CHECK_FALSE(least_squares(flat, y, 3).valid);     // degenerate abscissa
}

TEST_CASE("shell reduce keeps the per-shell maximum") {
  const std::vector<double> r{1.0, 1.1, 2.0, 2.05, 3.0};
  const std::vector<double> a{0.5, 0.9, 0.3, 0.4, 0.2};
  const ShellProfile prof = shell_reduce(r, a, 1.0);
  REQUIRE(prof.radius.size() == 3);
  CHECK(prof.amplitude[0] == doctest::Approx(0.9));
  CHECK(prof.amplitude[1] == doctest::Approx(0.4));
  CHECK(prof.amplitude[2] == doctest::Approx(0.2));
  // the shell abscissa is the mean radius of its members
  CHECK(prof.radius[0] == doctest::Approx(1.05));
  CHECK(prof.radius[1] == doctest::Approx(2.025));
}

TEST_CASE("shell reduce drops shells under the relative floor") {
  const std::vector<double> r{1.0, 2.0, 3.0, 4.0};
  const std::vector<double> a{1.0, 0.5, 1e-10, 1e-16};
  const ShellProfile prof = shell_reduce(r, a, 1.0, 1e-8);
  REQUIRE(prof.radius.size() == 2);
  CHECK(prof.radius[1] == doctest::Approx(2.0));
  // an explicit global max rescales the floor
  const ShellProfile deep = shell_reduce(r, a, 1.0, 1e-8, 1e-4);
  CHECK(deep.radius.size() == 3);
}

TEST_CASE("shell reduce on empty input yields an empty profile") {
  const ShellProfile prof = shell_reduce({}, {}, 1.0);
  CHECK(prof.radius.empty());
  CHECK(prof.amplitude.empty());
}

#include <doctest.h>

#include <cmath>

#include "ultrawave/cone.hpp"

using namespace uw;

TEST_CASE("1D cones are open half-lines") {
  const Cone pos = half_line(+1);
  CHECK(pos.contains(0.5));
  CHECK_FALSE(pos.contains(-0.5));
  CHECK_FALSE(pos.contains(0.0));  // open: the origin is excluded
  const Cone neg = half_line(-1);
  CHECK(neg.contains(-2.0));
  CHECK_FALSE(neg.contains(2.0));
}

TEST_CASE("2D sector membership is strict in the half-angle") {
  const Cone c = sector(0.0, M_PI / 4.0);
  CHECK(c.contains({1.0, 0.0}));
  CHECK(c.contains({1.0, 0.9}));
  CHECK_FALSE(c.contains({0.0, 1.0}));
  CHECK_FALSE(c.contains({1.0, 1.0}));  // boundary ray excluded
  CHECK_FALSE(c.contains({0.0, 0.0}));
  CHECK_FALSE(c.contains({-1.0, 0.0}));
}

TEST_CASE("sector axis angle is reduced to [0, 2 pi)") {
  CHECK(sector(-M_PI / 2.0, 0.1).angle() == doctest::Approx(1.5 * M_PI));
  CHECK(sector(2.5 * M_PI, 0.1).angle() == doctest::Approx(0.5 * M_PI));
}

TEST_CASE("nesting and concentric shrink") {
  const Cone outer = sector(0.0, 0.8);
  const Cone inner = shrink(outer, 0.5);
  CHECK(inner.half_angle == doctest::Approx(0.4));
  CHECK(nested_in(inner, outer));
  CHECK_FALSE(nested_in(outer, inner));
  CHECK_FALSE(nested_in(sector(M_PI, 0.4), outer));  // opposite axis
  // 1D: nesting is equality of sign
  CHECK(nested_in(half_line(+1), half_line(+1)));
  CHECK_FALSE(nested_in(half_line(+1), half_line(-1)));
}

TEST_CASE("direction covers are complete on battery grids") {
  const DirectionCover c1 = cover(1, 2);
  CHECK(c1.cones.size() == 2);
  CHECK(cover_complete(c1, GridSpec::regular_1d(256, 16.0)));

  const DirectionCover c2 = cover(2, 16, 1.5);
  CHECK(c2.cones.size() == 16);
  CHECK(c2.cones[0].half_angle == doctest::Approx(1.5 * M_PI / 16.0));
  CHECK(cover_complete(c2, GridSpec::regular_2d(64, 16.0)));
  // overlap below 1 would leave gaps and is rejected outright
  CHECK_THROWS_AS(cover(2, 16, 0.5), std::invalid_argument);
  // overlap exactly 1: the open sectors of a 4-cover meet on the diagonals,
  // so lattice frequencies like (k, k) fall in no cone
  CHECK_FALSE(cover_complete(cover(2, 4, 1.0), GridSpec::regular_2d(64, 16.0)));
}

TEST_CASE("every grid frequency lies in some cone with overlap > 1") {
  const DirectionCover cov = cover(2, 8, 1.2);
  const GridSpec g = GridSpec::regular_2d(32, 8.0);
  CHECK(cover_complete(cov, g));
}

TEST_CASE("separation estimate is positive for strictly nested sectors") {
  const GridSpec g = GridSpec::regular_2d(64, 16.0);
  const SeparationEstimate se =
      separation_estimate(sector(0.0, 0.3), sector(0.0, 0.6), g);
  CHECK(se.holds);
  CHECK(se.c == doctest::Approx(0.153221).epsilon(1e-4));  // frozen
  CHECK(se.n_pairs > 1000000);
  CHECK_THROWS_AS(separation_estimate(sector(0.0, 0.6), sector(0.0, 0.3), g),
                  std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "ultrawave/weight.hpp"

using namespace uw;

namespace {

std::vector<std::vector<double>> line_grid(double lo, double hi, int n) {
  std::vector<std::vector<double>> out;
  for (int k = 0; k < n; ++k) out.push_back({lo + (hi - lo) * k / (n - 1)});
  return out;
}

}  // namespace

TEST_CASE("polynomial weight evaluates <z>^t") {
  const Weight w = Weight::polynomial(2.0, 1);
  const double z[] = {3.0};
  CHECK(w.eval(z) == doctest::Approx(10.0));  // (1 + 9)^{2/2}
  CHECK(w.log_eval_radial(0.0) == doctest::Approx(0.0));
}

TEST_CASE("exp-power weight evaluates e^{k |z|^b}") {
  const Weight w = Weight::exp_power(0.5, 1.0, 1);
  const double z[] = {4.0};
  CHECK(w.log_eval(z) == doctest::Approx(2.0));
}

TEST_CASE("assoc weight matches N * M(|z|)") {
  const auto seq = gevrey_sequence(2.0, 256);
  const AssociatedFunction af(seq);
  const Weight w = assoc_weight(seq, 3.0, 1);
  const double z[] = {50.0};
  CHECK(w.log_eval(z) == doctest::Approx(3.0 * af.eval(50.0)).epsilon(1e-12));
  CHECK_THROWS_AS(assoc_weight(seq, -1.0, 1), std::invalid_argument);
}

TEST_CASE("submultiplicativity: exp-power with b <= 1 passes, b > 1 fails") {
  const auto grid = line_grid(-8.0, 8.0, 41);
  CHECK(submultiplicative_check(Weight::exp_power(1.0, 0.5, 1), grid).holds);
  CHECK(submultiplicative_check(Weight::exp_power(1.0, 1.0, 1), grid).holds);
  CHECK_FALSE(submultiplicative_check(Weight::exp_power(1.0, 2.0, 1), grid).holds);
}

TEST_CASE("moderateness: polynomial weight is moderate over itself") {
  const auto grid = line_grid(-8.0, 8.0, 41);
  const ModeratenessReport rep =
      moderate_check(Weight::polynomial(2.0, 1), Weight::polynomial(2.0, 1), grid);
  CHECK(rep.holds);
  CHECK(rep.witness_C >= 1.0);
  CHECK(rep.skipped_fraction > 0.0);  // sums leave the box near the edges
}

TEST_CASE("Beurling-Domar: subexponential converges, exponential does not") {
  const std::vector<std::vector<double>> xs{{1.0}, {3.0}};
  const auto sub = beurling_domar_check(Weight::exp_power(1.0, 0.5, 1), xs, 4000);
  CHECK(sub.converges);
  CHECK(sub.samples[0].tail_exponent == doctest::Approx(1.5).epsilon(0.05));
  const auto lin = beurling_domar_check(Weight::exp_power(1.0, 1.0, 1), xs, 4000);
  CHECK_FALSE(lin.converges);
  CHECK(lin.samples[0].tail_exponent == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("custom weight dispatches the supplied rule") {
  const Weight w = Weight::custom(
      [](std::span<const double> z) { return z[0] + 2.0 * z[1]; }, 2);
  const double z[] = {1.0, 3.0};
  CHECK(w.log_eval(z) == doctest::Approx(7.0));
}

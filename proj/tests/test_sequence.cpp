#include <doctest.h>

#include <cmath>
#include <vector>

#include "ultrawave/sequence.hpp"

using namespace uw;

TEST_CASE("gevrey sequence is log-convex with M_0 = 1") {
  const DefiningSequence seq = gevrey_sequence(2.0, 64);
  CHECK(seq.log_convex);
  CHECK(seq.log_value(0) == 0.0);
  // M_p = (p!)^2
  CHECK(seq.log_value(3) == doctest::Approx(2.0 * std::log(6.0)));
  CHECK(seq.value(4) == doctest::Approx(576.0));
  CHECK(seq.inf_root() == doctest::Approx(1.0));
}

TEST_CASE("product sequence matches explicit factors") {
  // s_p = p^2 gives M_p = (p!)^2
  std::vector<double> factors(32);
  for (std::size_t j = 0; j < factors.size(); ++j)
    factors[j] = static_cast<double>((j + 1) * (j + 1));
  const DefiningSequence seq = product_sequence(factors);
  const DefiningSequence gev = gevrey_sequence(2.0, 32);
  for (int p = 0; p <= 32; ++p)
    CHECK(seq.log_value(p) == doctest::Approx(gev.log_value(p)).epsilon(1e-12));
  CHECK(check_factor_condition(seq).holds);
}

TEST_CASE("custom sequence records log-convexity and validates its terms") {
  // non-log-convex input is accepted but flagged: M_1^2 > M_0 M_2
  CHECK_FALSE(custom_sequence({1.0, 10.0, 11.0, 1e6}).log_convex);
  CHECK(custom_sequence({1.0, 1.0, 2.0, 6.0}).log_convex);
  CHECK_THROWS_AS(custom_sequence({1.0, 2.0}), std::invalid_argument);       // too short
  CHECK_THROWS_AS(custom_sequence({1.0, -1.0, 2.0}), std::invalid_argument);  // sign
}

TEST_CASE("conditions (M.1), (M.2), (M.3)' hold for gevrey(2)") {
  const ConditionReport rep = check_conditions(gevrey_sequence(2.0, 2048));
  CHECK(rep.m1);
  CHECK(rep.m2.holds);
  // Frozen: brute-force grid scan lands just below the analytic H = 4
  // (the grid has no node at exactly 4).
  CHECK(rep.m2.A == doctest::Approx(1.0));
  CHECK(rep.m2.H == doctest::Approx(3.99).epsilon(0.02));
  CHECK(rep.m3prime_holds());
  CHECK(rep.m3prime.raabe == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("associated function: frozen evaluations for gevrey(2)") {
  const AssociatedFunction af(gevrey_sequence(2.0, 512));
  // M(rho) = sup_p ln+ (rho^p / (p!)^2); vanishes on [0, 1]
  CHECK(af.eval(0.5) == 0.0);
  CHECK(af.eval(1.0) == 0.0);
  CHECK(af.eval(2.0) == doctest::Approx(std::log(2.0)));  // maximizer p = 1
  CHECK(af.eval(10.0) == doctest::Approx(3.32423634052603).epsilon(1e-12));
  CHECK(af.eval(100.0) == doctest::Approx(15.8428767137299).epsilon(1e-12));
  CHECK(af.eval(1e4) == doctest::Approx(193.555286086491).epsilon(1e-12));
  CHECK(af.argmax(10.0) == 3);
  CHECK(af.argmax(1e4) == 100);
}

TEST_CASE("associated function: frozen evaluations for gevrey(3)") {
  const AssociatedFunction af(gevrey_sequence(3.0, 512));
  CHECK(af.eval(10.0) == doctest::Approx(2.52572864430826).epsilon(1e-12));
  CHECK(af.eval(1e3) == doctest::Approx(23.7643150705948).epsilon(1e-12));
}

TEST_CASE("associated function is nondecreasing and subadditive at scale") {
  const AssociatedFunction af(gevrey_sequence(2.0, 512));
  double prev = -1.0;
  for (double rho = 0.25; rho < 1e5; rho *= 1.7) {
    const double v = af.eval(rho);
    CHECK(v >= prev);
    prev = v;
  }
  // dyadic doubling identity in the asymptotic regime: M(4 rho) = 2 M(rho) + O(ln rho)
  // (gevrey(2): M(rho) = 2 sqrt(rho) + O(ln rho), so the gap grows slowly)
  const double lhs = af.eval(4.0 * 256.0);
  const double rhs = 2.0 * af.eval(256.0);
  CHECK(std::abs(lhs - rhs) < 5.0);
}

TEST_CASE("truncated evaluator refuses out-of-range maximizers") {
  const AssociatedFunction af(gevrey_sequence(2.0, 16));
  CHECK_THROWS_AS(af.eval(1e12), TruncationError);
}

TEST_CASE("assoc lemma report passes for gevrey(2) on a calibrated grid") {
  const AssociatedFunction af(gevrey_sequence(2.0, 4096));
  std::vector<double> rho;
  for (int k = 0; k < 200; ++k) rho.push_back(std::pow(10.0, -1.0 + 5.0 * k / 199.0));
  const AssocLemmaReport rep = verify_assoc_lemma(af, rho, 2.0, 200, 2);
  CHECK(rep.pass());
  CHECK(rep.subadditivity.violations == 0);
  CHECK(rep.doubling.violations == 0);
  CHECK(std::isfinite(rep.C_dilation));
  CHECK(std::isfinite(rep.K_L));
  CHECK(rep.A >= 1.0);
  CHECK(rep.H > 1.0);
}

TEST_CASE("assoc lemma verification is deterministic") {
  const AssociatedFunction af(gevrey_sequence(2.0, 2048));
  std::vector<double> rho;
  for (int k = 0; k < 100; ++k) rho.push_back(std::pow(10.0, 1.0 + 3.0 * k / 99.0));
  const AssocLemmaReport a = verify_assoc_lemma(af, rho, 2.0, 100, 2);
  const AssocLemmaReport b = verify_assoc_lemma(af, rho, 2.0, 100, 2);
  CHECK(a.subadditivity.worst_slack == b.subadditivity.worst_slack);
  CHECK(a.C_dilation == b.C_dilation);
}

TEST_CASE("assoc lemma verification needs grid mass in the asymptotic regime") {
  const AssociatedFunction af(gevrey_sequence(2.0, 512));
  const std::vector<double> tiny{0.5, 1.0, 1.5};  // everything below 2H
  CHECK_THROWS_AS(verify_assoc_lemma(af, tiny, 2.0, 10, 2), std::invalid_argument);
}

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ultrawave/sequence.hpp"

namespace uw {

// Positive weight on frequency space (dimension d) or phase space (2d).
// Evaluation is log-domain capable: exp(N M(|xi|)) overflows long before
// the fits that consume it do.
struct Weight {
  enum class Kind { Polynomial, ExpPower, Assoc, Composite, Custom };

  Kind kind = Kind::Custom;
  int dimension = 1;

  double poly_t = 0.0;                      // <z>^t
  double exp_k = 0.0, exp_b = 1.0;          // e^{k |z|^b}
  std::shared_ptr<AssociatedFunction> af;   // assoc: e^{N M(|z|)}
  double assoc_N = 0.0;
  double comp_s = 0.0, comp_b = 0.0, comp_a = 0.0, comp_r = 0.0;
  std::function<double(std::span<const double>)> custom_log;  // returns ln w(z)

  double log_eval(std::span<const double> z) const;
  double eval(std::span<const double> z) const;
  double log_eval_radial(double r) const;  // |z| = r

  static Weight polynomial(double t, int dimension = 1);
  static Weight exp_power(double k, double b, int dimension = 1);
  static Weight composite(double s, double b, double a, double r, int dimension = 1);
  static Weight custom(std::function<double(std::span<const double>)> log_rule,
                       int dimension = 1);
};

// e^{N M(|xi|)} for the associated function of seq; N > 0 required.
Weight assoc_weight(const DefiningSequence& seq, double N, int dimension = 1);
Weight assoc_weight(std::shared_ptr<AssociatedFunction> af, double N, int dimension = 1);

struct ModeratenessReport {
  bool holds = false;
  double witness_C = 0.0;  // max tested ratio
  std::vector<double> worst_x, worst_y;
  double skipped_fraction = 0.0;  // pairs with x+y outside the tested region
};

// v(x+y) <= v(x) v(y) over in-range pairs of grid points. Pairs whose sum
// leaves the bounding box of the grid are skipped and counted. Grid-restricted
// verdict: holds means no tested violation beyond 1e-9 relative.
ModeratenessReport submultiplicative_check(const Weight& v,
                                           std::span<const std::vector<double>> grid);

// omega(x+y) <= C v(x) omega(y); witness_C is the max tested ratio.
ModeratenessReport moderate_check(const Weight& omega, const Weight& v,
                                  std::span<const std::vector<double>> grid);

struct BeurlingDomarReport {
  struct Sample {
    std::vector<double> x;
    double partial_sum = 0.0;
    double tail_exponent = 0.0;  // alpha in t_n ~ c n^{-alpha} over the last decade
    bool converges = false;      // heuristic: alpha > 1
  };
  std::vector<Sample> samples;
  bool converges = false;  // all samples
};

// Partial sums of ln v(n x)/n^2 with a power-law tail estimate.
BeurlingDomarReport beurling_domar_check(const Weight& v,
                                         std::span<const std::vector<double>> x_samples,
                                         int n_max);

}  // namespace uw

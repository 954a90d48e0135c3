#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uw {

// Defining sequence M_p, p = 0..p_max, stored in log domain:
// (p!)^s overflows double near p = 86 for s = 2.
struct DefiningSequence {
  enum class Kind { Gevrey, Product, Custom };

  Kind kind = Kind::Custom;
  double gevrey_s = 0.0;          // Gevrey only
  std::vector<double> factors;    // Product only
  std::vector<double> log_values; // ln M_p; log_values[0] == 0
  bool log_convex = false;        // condition (M.1), checked at construction

  int p_max() const { return static_cast<int>(log_values.size()) - 1; }
  double log_value(int p) const { return log_values.at(p); }
  double value(int p) const;      // exp(log M_p); may overflow to inf
  double inf_root() const;        // empirical inf over p >= 1 of M_p^{1/p}
};

DefiningSequence gevrey_sequence(double s, int p_max = 512);
DefiningSequence product_sequence(std::vector<double> factors);
DefiningSequence custom_sequence(std::vector<double> values);

struct ConditionReport {
  enum class Verdict { Converges, Diverges, Inconclusive };

  bool m1 = false;
  struct {
    bool holds = false;
    double A = 0.0;  // smallest witness found (clamped to >= 1)
    double H = 0.0;  // smallest H on the grid with interior attainment
  } m2;
  struct {
    Verdict verdict = Verdict::Inconclusive;  // heuristic, from finitely many terms
    double partial_sum = 0.0;                 // sum_{p=1}^{p_max} M_{p-1}/M_p
    double raabe = 0.0;                       // tail estimate of p(t_p/t_{p+1}-1)
  } m3prime;
  double inf_root = 0.0;

  bool m3prime_holds() const { return m3prime.verdict == Verdict::Converges; }
};

// m1 exact on the range; m2 witnesses by grid scan over H with A re-minimized;
// m3prime heuristic (Raabe refinement of the ratio test).
ConditionReport check_conditions(const DefiningSequence& seq);

// Factor-level (M.2) analogue for product sequences:
// prod_{j<=q} s_{p+j} <= A H^p prod_{j<=q} s_j on the available range.
struct FactorConditionReport {
  bool holds = false;
  double A = 0.0;
  double H = 0.0;
};
FactorConditionReport check_factor_condition(const DefiningSequence& seq);

class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Truncated-sup evaluator of the associated function
// M(rho) = max_{0<=p<=p_max} ln+ (rho^p / M_p), log-domain throughout.
// Throws TruncationError unless the maximizer is strictly interior.
class AssociatedFunction {
 public:
  explicit AssociatedFunction(DefiningSequence seq);

  double eval(double rho) const;
  double operator()(double rho) const { return eval(rho); }
  int argmax(double rho) const;

  const DefiningSequence& sequence() const { return seq_; }

 private:
  double eval_uncached(double rho, int* maximizer) const;

  DefiningSequence seq_;
  mutable std::mutex mu_;
  mutable std::map<double, double> cache_;
};

struct InequalityCheck {
  bool ok = false;
  int violations = 0;
  double worst_slack = 0.0;  // max over samples of lhs - rhs (<= tol when ok)
  double worst_rho = 0.0;
};

struct AssocLemmaReport {
  InequalityCheck subadditivity;  // M(sum rho_k) <= sum M(rho_k)
  InequalityCheck doubling;       // 2M(rho) <= M(H rho) + ln+ A
  double A = 0.0, H = 0.0;
  double C_dilation = 0.0;  // minimal empirical C: M(L rho) <= (3/2) L M(rho) + C
  double B = 0.0, K_L = 0.0;  // L M(rho) <= M(B^{L-1} rho) + K_L, B = H witness
  double L = 1.0;
  bool pass() const { return subadditivity.ok && doubling.ok; }
};

// Checks the associated-function inequalities on rho_grid. Tuples for the
// subadditivity check are n_tuples random draws of size tuple_size from the
// grid (fixed seed: runs are reproducible). Requires (M.1); (M.2) witnesses
// are brute-forced via check_conditions.
AssocLemmaReport verify_assoc_lemma(const AssociatedFunction& af,
                                    std::span<const double> rho_grid,
                                    double L, int n_tuples, int tuple_size = 2,
                                    double tol = 1e-9,
                                    std::uint64_t seed = 0x2545F4914F6CDD1DULL);

}  // namespace uw

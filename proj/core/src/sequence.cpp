#include "ultrawave/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace uw {

namespace {

bool check_log_convex(const std::vector<double>& lv) {
  for (std::size_t p = 1; p + 1 < lv.size(); ++p)
    if (2.0 * lv[p] > lv[p - 1] + lv[p + 1] + 1e-12) return false;
  return true;
}

void validate(const DefiningSequence& s) {
  if (s.p_max() < 2) throw std::invalid_argument("sequence: p_max >= 2 required");
  if (std::abs(s.log_values[0]) > 1e-15)
    throw std::invalid_argument("sequence: M_0 = 1 required");
  for (double lv : s.log_values)
    if (!std::isfinite(lv)) throw std::invalid_argument("sequence: values must be finite and positive");
}

}  // namespace

double DefiningSequence::value(int p) const { return std::exp(log_value(p)); }

double DefiningSequence::inf_root() const {
  double r = std::numeric_limits<double>::infinity();
  for (int p = 1; p <= p_max(); ++p) r = std::min(r, std::exp(log_values[p] / p));
  return r;
}

DefiningSequence gevrey_sequence(double s, int p_max) {
  if (s <= 1.0)
    throw std::invalid_argument("gevrey_sequence: s > 1 required (non-quasianalytic regime)");
  if (p_max < 2) throw std::invalid_argument("gevrey_sequence: p_max >= 2 required");
  DefiningSequence seq;
  seq.kind = DefiningSequence::Kind::Gevrey;
  seq.gevrey_s = s;
  seq.log_values.resize(p_max + 1);
  for (int p = 0; p <= p_max; ++p) seq.log_values[p] = s * std::lgamma(p + 1.0);
  seq.log_convex = true;
  return seq;
}

DefiningSequence product_sequence(std::vector<double> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product_sequence: need >= 2 factors");
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (!(factors[j] > 0)) throw std::invalid_argument("product_sequence: factors must be positive");
    if (j > 0 && factors[j] < factors[j - 1] - 1e-15)
      throw std::invalid_argument("product_sequence: factors must be nondecreasing");
  }
  DefiningSequence seq;
  seq.kind = DefiningSequence::Kind::Product;
  seq.log_values.resize(factors.size() + 1, 0.0);
  for (std::size_t j = 0; j < factors.size(); ++j)
    seq.log_values[j + 1] = seq.log_values[j] + std::log(factors[j]);
  seq.factors = std::move(factors);
  seq.log_convex = check_log_convex(seq.log_values);
  validate(seq);
  return seq;
}

DefiningSequence custom_sequence(std::vector<double> values) {
  if (values.size() < 3) throw std::invalid_argument("custom_sequence: p_max >= 2 required");
  DefiningSequence seq;
  seq.kind = DefiningSequence::Kind::Custom;
  seq.log_values.resize(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (!(values[p] > 0)) throw std::invalid_argument("custom_sequence: values must be positive");
    seq.log_values[p] = std::log(values[p]);
  }
  seq.log_convex = check_log_convex(seq.log_values);
  validate(seq);
  return seq;
}

ConditionReport check_conditions(const DefiningSequence& seq) {
  if (seq.p_max() < 4) throw std::invalid_argument("check_conditions: p_max >= 4 required");
  ConditionReport rep;
  const auto& lv = seq.log_values;
  const int pm = seq.p_max();

  rep.m1 = check_log_convex(lv);
  rep.inf_root = seq.inf_root();

  // (M.2): minimal H on a grid with A re-minimized per H. The index range
  // is capped; the certificate is that the worst (p, q) is attained at an
  // interior p+q, i.e. the witness does not degrade as the range grows.
  {
    const int range = std::min(pm, 2048);
    // mr[r] = min_{0<=p<=r} (ln M_p + ln M_{r-p})
    std::vector<double> mr(range + 1);
    for (int r = 0; r <= range; ++r) {
      double best = std::numeric_limits<double>::infinity();
      for (int p = 0; p <= r; ++p) best = std::min(best, lv[p] + lv[r - p]);
      mr[r] = best;
    }
    const double h_step = 0.01, h_cap = 64.0;
    for (double H = 1.0 + h_step; H <= h_cap; H += h_step) {
      const double lnH = std::log(H);
      double lnA = -std::numeric_limits<double>::infinity();
      int arg_r = 0;
      for (int r = 0; r <= range; ++r) {
        const double v = lv[r] - r * lnH - mr[r];
        if (v > lnA) { lnA = v; arg_r = r; }
      }
      if (arg_r < range) {  // interior attainment: sup certified on the range
        rep.m2.holds = true;
        rep.m2.H = H;
        rep.m2.A = std::max(1.0, std::exp(lnA));
        break;
      }
    }
  }

  // (M.3)': partial sum of t_p = M_{p-1}/M_p plus a Raabe-type verdict.
  // The plain ratio test is inconclusive for Gevrey sequences (t_{p+1}/t_p -> 1);
  // Raabe's p(t_p/t_{p+1} - 1) -> s distinguishes them. Heuristic by nature.
  {
    double sum = 0.0;
    for (int p = 1; p <= pm; ++p) sum += std::exp(lv[p - 1] - lv[p]);
    rep.m3prime.partial_sum = sum;

    double raabe = 0.0;
    int count = 0;
    for (int p = (9 * pm) / 10; p + 1 <= pm; ++p) {
      // t_p / t_{p+1} = M_{p-1} M_{p+1} / M_p^2
      const double ratio = std::exp(lv[p - 1] + lv[p + 1] - 2.0 * lv[p]);
      raabe += p * (ratio - 1.0);
      ++count;
    }
    if (count > 0) raabe /= count;
    rep.m3prime.raabe = raabe;
    const double delta = 0.1;
    if (raabe > 1.0 + delta)
      rep.m3prime.verdict = ConditionReport::Verdict::Converges;
    else if (raabe < 1.0 - delta)
      rep.m3prime.verdict = ConditionReport::Verdict::Diverges;
    else
      rep.m3prime.verdict = ConditionReport::Verdict::Inconclusive;
  }

  return rep;
}

FactorConditionReport check_factor_condition(const DefiningSequence& seq) {
  if (seq.kind != DefiningSequence::Kind::Product)
    throw std::invalid_argument("check_factor_condition: product sequence required");
  FactorConditionReport rep;
  const int n = static_cast<int>(seq.factors.size());
  std::vector<double> lf(n);
  for (int j = 0; j < n; ++j) lf[j] = std::log(seq.factors[j]);
  std::vector<double> cum(n + 1, 0.0);  // cum[q] = sum_{j<q} ln s_{j+1}
  for (int j = 0; j < n; ++j) cum[j + 1] = cum[j] + lf[j];

  // g(p) = max_q [ sum_{j=1..q} (ln s_{p+j} - ln s_j) ], available range q <= n - p
  std::vector<double> g(n, -std::numeric_limits<double>::infinity());
  for (int p = 0; p < n; ++p) {
    double acc = 0.0, best = 0.0;
    for (int q = 1; p + q <= n; ++q) {
      acc += lf[p + q - 1] - lf[q - 1];
      best = std::max(best, acc);
    }
    g[p] = best;
  }
  const double h_step = 0.01, h_cap = 64.0;
  for (double H = 1.0; H <= h_cap; H += h_step) {
    const double lnH = std::log(H);
    double lnA = -std::numeric_limits<double>::infinity();
    int arg_p = 0;
    for (int p = 0; p < n; ++p) {
      const double v = g[p] - p * lnH;
      if (v > lnA) { lnA = v; arg_p = p; }
    }
    if (arg_p < n - 1) {
      rep.holds = true;
      rep.H = H;
      rep.A = std::max(1.0, std::exp(lnA));
      return rep;
    }
  }
  return rep;
}

AssociatedFunction::AssociatedFunction(DefiningSequence seq) : seq_(std::move(seq)) {
  validate(seq_);
}

double AssociatedFunction::eval_uncached(double rho, int* maximizer) const {
  if (!(rho > 0)) throw std::invalid_argument("assoc_eval: rho > 0 required");
  const auto& lv = seq_.log_values;
  const int pm = seq_.p_max();
  const double lr = std::log(rho);

  int pstar = 0;
  if (seq_.log_convex) {
    // v(p) = p ln rho - ln M_p is concave: the forward difference
    // ln rho - (ln M_{p+1} - ln M_p) is nonincreasing, so binary-search it.
    int lo = 0, hi = pm;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (lr - (lv[mid + 1] - lv[mid]) > 0) lo = mid + 1; else hi = mid;
    }
    pstar = lo;
  } else {
    double best = -std::numeric_limits<double>::infinity();
    for (int p = 0; p <= pm; ++p) {
      const double v = p * lr - lv[p];
      if (v > best) { best = v; pstar = p; }
    }
  }
  const double val = std::max(0.0, pstar * lr - lv[pstar]);
  if (maximizer) *maximizer = pstar;
  if (val > 0.0 && pstar >= pm)
    throw TruncationError("assoc_eval: sup not attained below p_max (rho = " +
                          std::to_string(rho) + ", p_max = " + std::to_string(pm) + ")");
  return val;
}

double AssociatedFunction::eval(double rho) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(rho);
    if (it != cache_.end()) return it->second;
  }
  const double val = eval_uncached(rho, nullptr);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(rho, val);
  return val;
}

int AssociatedFunction::argmax(double rho) const {
  int p = 0;
  eval_uncached(rho, &p);
  return p;
}

AssocLemmaReport verify_assoc_lemma(const AssociatedFunction& af,
                                    std::span<const double> rho_grid,
                                    double L, int n_tuples, int tuple_size,
                                    double tol, std::uint64_t seed) {
  if (rho_grid.empty()) throw std::invalid_argument("verify_assoc_lemma: empty grid");
  if (L < 1.0) throw std::invalid_argument("verify_assoc_lemma: L >= 1 required");
  if (tuple_size < 2) throw std::invalid_argument("verify_assoc_lemma: tuple size >= 2");
  for (double r : rho_grid)
    if (!(r > 0)) throw std::invalid_argument("verify_assoc_lemma: grid must be positive");

  AssocLemmaReport rep;
  rep.L = L;

  const ConditionReport cond = check_conditions(af.sequence());
  if (!cond.m1)
    throw std::invalid_argument("verify_assoc_lemma: sequence must satisfy (M.1)");
  if (!cond.m2.holds)
    throw std::invalid_argument("verify_assoc_lemma: sequence must satisfy (M.2)");
  rep.A = cond.m2.A;
  rep.H = cond.m2.H;

  auto record = [&](InequalityCheck& chk, double slack, double rho) {
    if (slack > chk.worst_slack) { chk.worst_slack = slack; chk.worst_rho = rho; }
    if (slack > tol) chk.violations++;
  };

  // (i) subadditivity on random tuples. The printed inequality fails in the
  // vanishing region of M (2M(rho0) = 0 < M(2 rho0) at the threshold, and
  // kink pairs like (2, 2.5) for (p!)^2 keep violating up to the first slope
  // transitions); it is the asymptotic statement, so tuples are drawn from
  // grid values >= 2H where it holds sharply (equality at dyadic points).
  rep.subadditivity.worst_slack = -std::numeric_limits<double>::infinity();
  std::vector<double> tail;
  for (double r : rho_grid)
    if (r >= 2.0 * rep.H) tail.push_back(r);
  if (tail.size() < 2)
    throw std::invalid_argument("verify_assoc_lemma: grid has no values >= 2H");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, tail.size() - 1);
  for (int t = 0; t < n_tuples; ++t) {
    double sum = 0.0, msum = 0.0;
    for (int k = 0; k < tuple_size; ++k) {
      const double r = tail[pick(rng)];
      sum += r;
      msum += af(r);
    }
    record(rep.subadditivity, af(sum) - msum, sum);
  }
  rep.subadditivity.ok = rep.subadditivity.violations == 0;

  // (ii) doubling with the brute-forced (A, H)
  rep.doubling.worst_slack = -std::numeric_limits<double>::infinity();
  const double lnA_plus = std::max(0.0, std::log(rep.A));
  for (double r : rho_grid)
    record(rep.doubling, 2.0 * af(r) - (af(rep.H * r) + lnA_plus), r);
  rep.doubling.ok = rep.doubling.violations == 0;

  // (iii) minimal empirical C and (iv) empirical K_L at B = H
  rep.B = rep.H;
  double c_min = 0.0, k_min = 0.0;
  const double bpow = std::pow(rep.B, L - 1.0);
  for (double r : rho_grid) {
    c_min = std::max(c_min, af(L * r) - 1.5 * L * af(r));
    k_min = std::max(k_min, L * af(r) - af(bpow * r));
  }
  rep.C_dilation = c_min;
  rep.K_L = k_min;
  return rep;
}

}  // namespace uw

#include "ultrawave/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ultrawave/fit.hpp"

namespace uw {

namespace {

double norm2(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return std::sqrt(s);
}

}  // namespace

double Weight::log_eval_radial(double r) const {
  switch (kind) {
    case Kind::Polynomial:
      return 0.5 * poly_t * std::log1p(r * r);  // <z> = (1+|z|^2)^{1/2}
    case Kind::ExpPower:
      return exp_k * std::pow(r, exp_b);
    case Kind::Assoc:
      return r > 0 ? assoc_N * af->eval(r) : 0.0;
    case Kind::Composite:
      return comp_s * std::pow(r, comp_b) + comp_a * std::log1p(r) +
             comp_r * std::log(std::log(std::exp(1.0) + r));
    case Kind::Custom:
      throw std::logic_error("custom weight has no radial form");
  }
  return 0.0;
}

double Weight::log_eval(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dimension)
    throw std::invalid_argument("weight: dimension mismatch");
  if (kind == Kind::Custom) return custom_log(z);
  return log_eval_radial(norm2(z));
}

double Weight::eval(std::span<const double> z) const { return std::exp(log_eval(z)); }

Weight Weight::polynomial(double t, int dimension) {
  Weight w;
  w.kind = Kind::Polynomial;
  w.poly_t = t;
  w.dimension = dimension;
  return w;
}

Weight Weight::exp_power(double k, double b, int dimension) {
  Weight w;
  w.kind = Kind::ExpPower;
  w.exp_k = k;
  w.exp_b = b;
  w.dimension = dimension;
  return w;
}

Weight Weight::composite(double s, double b, double a, double r, int dimension) {
  Weight w;
  w.kind = Kind::Composite;
  w.comp_s = s;
  w.comp_b = b;
  w.comp_a = a;
  w.comp_r = r;
  w.dimension = dimension;
  return w;
}

Weight Weight::custom(std::function<double(std::span<const double>)> log_rule,
                      int dimension) {
  Weight w;
  w.kind = Kind::Custom;
  w.custom_log = std::move(log_rule);
  w.dimension = dimension;
  return w;
}

Weight assoc_weight(const DefiningSequence& seq, double N, int dimension) {
  return assoc_weight(std::make_shared<AssociatedFunction>(seq), N, dimension);
}

Weight assoc_weight(std::shared_ptr<AssociatedFunction> af, double N, int dimension) {
  if (!(N > 0)) throw std::invalid_argument("assoc_weight: N > 0 required");
  Weight w;
  w.kind = Weight::Kind::Assoc;
  w.af = std::move(af);
  w.assoc_N = N;
  w.dimension = dimension;
  return w;
}

namespace {

struct Box {
  std::vector<double> lo, hi;
  explicit Box(std::span<const std::vector<double>> grid) {
    if (grid.empty()) throw std::invalid_argument("weight check: empty grid");
    lo = hi = grid[0];
    for (const auto& p : grid)
      for (std::size_t k = 0; k < p.size(); ++k) {
        lo[k] = std::min(lo[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
  }
  bool contains(std::span<const double> p) const {
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] < lo[k] - 1e-12 || p[k] > hi[k] + 1e-12) return false;
    return true;
  }
};

ModeratenessReport pair_scan(std::span<const std::vector<double>> grid,
                             const std::function<double(std::span<const double>,
                                                        std::span<const double>,
                                                        std::span<const double>)>& log_ratio) {
  ModeratenessReport rep;
  Box box(grid);
  std::size_t tested = 0, skipped = 0;
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<double> sum(grid[0].size());
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = x[k] + y[k];
      if (!box.contains(sum)) { ++skipped; continue; }
      ++tested;
      const double lr = log_ratio(sum, x, y);
      if (lr > worst) {
        worst = lr;
        rep.worst_x = x;
        rep.worst_y = y;
      }
    }
  }
  if (tested == 0) throw std::invalid_argument("weight check: no in-range pairs");
  rep.witness_C = std::exp(worst);
  rep.skipped_fraction =
      static_cast<double>(skipped) / static_cast<double>(tested + skipped);
  return rep;
}

}  // namespace

ModeratenessReport submultiplicative_check(const Weight& v,
                                           std::span<const std::vector<double>> grid) {
  auto rep = pair_scan(grid, [&](std::span<const double> s, std::span<const double> x,
                                 std::span<const double> y) {
    return v.log_eval(s) - v.log_eval(x) - v.log_eval(y);
  });
  rep.holds = rep.witness_C <= 1.0 + 1e-9;
  return rep;
}

ModeratenessReport moderate_check(const Weight& omega, const Weight& v,
                                  std::span<const std::vector<double>> grid) {
  if (omega.dimension != v.dimension)
    throw std::invalid_argument("moderate_check: dimension mismatch");
  auto rep = pair_scan(grid, [&](std::span<const double> s, std::span<const double> x,
                                 std::span<const double> y) {
    return omega.log_eval(s) - v.log_eval(x) - omega.log_eval(y);
  });
  rep.holds = std::isfinite(rep.witness_C);
  return rep;
}

BeurlingDomarReport beurling_domar_check(const Weight& v,
                                         std::span<const std::vector<double>> x_samples,
                                         int n_max) {
  if (n_max < 100) throw std::invalid_argument("beurling_domar_check: n_max >= 100");
  BeurlingDomarReport rep;
  rep.converges = true;
  std::vector<double> nx(v.dimension);
  for (const auto& x : x_samples) {
    BeurlingDomarReport::Sample s;
    s.x = x;
    std::vector<double> ln_n, ln_t;
    for (int n = 1; n <= n_max; ++n) {
      for (std::size_t k = 0; k < nx.size(); ++k) nx[k] = n * x[k];
      const double term = v.log_eval(nx) / (static_cast<double>(n) * n);
      s.partial_sum += term;
      if (n >= n_max / 10 && term > 0) {  // last decade: fit t_n ~ c n^{-alpha}
        ln_n.push_back(std::log(static_cast<double>(n)));
        ln_t.push_back(std::log(term));
      }
    }
    const LinearFit f = least_squares(ln_n, ln_t);
    s.tail_exponent = f.valid ? -f.slope : std::numeric_limits<double>::infinity();
    s.converges = s.tail_exponent > 1.0 + 1e-6;
    rep.converges = rep.converges && s.converges;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace uw

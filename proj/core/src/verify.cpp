#include "ultrawave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "ultrawave/propagation.hpp"
#include "ultrawave/wavefront.hpp"

namespace uw {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---- battery ---------------------------------------------------------------
//
// Classification battery with analytic ground truth. The chirp is synthesized
// by the signals module but excluded here: its local frequency sweep crosses
// the annulus boundary, which makes individual cells legitimately borderline.

struct GroundTruth {
  // Position resolution of the cutoff method is one window radius: `pos` is
  // the band of centers allowed to flag singular (within a radius of the
  // analytic singular support); `core` marks the centers nearest the support,
  // which must flag singular in exactly the analytic direction set.
  std::function<bool(double, double)> pos;
  std::function<bool(double, double)> core;
  bool all_dirs = false;
  std::vector<std::size_t> dirs;
};

struct Member {
  std::string name;
  SampledSignal f;
  bool singular = false;
  GroundTruth gt;
};

struct ReportKey {
  std::string member;
  EstimatorKind kind;
  WindowSpec::Kind window;
  double p, N, q;
  auto operator<=>(const ReportKey&) const = default;
};

class Battery {
 public:
  Battery() {
    grid1 = GridSpec::regular_1d(4096, 64.0);
    grid2 = GridSpec::regular_2d(256, 16.0);
    base1 = EstimatorConfig::defaults(grid1);
    base2 = EstimatorConfig::defaults(grid2);
    af = std::make_shared<AssociatedFunction>(gevrey_sequence(2.0, 512));

    const double r1 = base1.window.radius;
    const double r2 = base2.window.radius;
    const double step1 = base1.position_stride * grid1.spacing[0];
    const double step2 = base2.position_stride * grid2.spacing[0];
    const auto near_x = [](double radius, double x0) {
      return [radius, x0](double x, double) { return std::abs(x - x0) < radius + 1e-9; };
    };

    const DirectionCover cov2 = cover(2, base2.n_dir, base2.overlap);
    std::vector<std::size_t> ridge_dirs;
    for (std::size_t k = 0; k < cov2.cones.size(); ++k)
      if (cov2.cones[k].contains({1.0, 0.0}) || cov2.cones[k].contains({-1.0, 0.0}))
        ridge_dirs.push_back(k);

    SynthParams p;
    members.push_back({"delta", synth("delta", p, grid1), true,
                       {near_x(r1, 0.0), near_x(step1, 0.0), true, {}}});
    members.push_back({"step", synth("step", p, grid1), true,
                       {near_x(r1, 0.0), near_x(step1, 0.0), true, {}}});
    p.sigma = 1.0;
    members.push_back({"gaussian", synth("gaussian", p, grid1), false, {}});
    members.push_back({"gevrey-bump", gevrey_bump_signal(2.0, 8.0, grid1), false, {}});
    members.push_back({"ridge", synth("ridge", p, grid2), true,
                       {near_x(r2, 0.0), near_x(step2, 0.0), false, ridge_dirs}});
    members.push_back({"halfplane", synth("halfplane", p, grid2), true,
                       {near_x(r2, 0.0), near_x(step2, 0.0), false, ridge_dirs}});
    members.push_back({"gaussian2d", synth("gaussian", p, grid2), false, {}});
  }

  EstimatorConfig config(const Member& m, EstimatorKind kind, WindowSpec::Kind wk,
                         double p, double N, double q) const {
    (void)N;
    EstimatorConfig cfg = m.f.grid.dimension == 1 ? base1 : base2;
    cfg.kind = kind;
    cfg.p = p;
    cfg.q = q;
    if (wk == WindowSpec::Kind::Gaussian) cfg.window = WindowSpec::gaussian(cfg.window.radius);
    return cfg;
  }

  const WaveFrontReport& report(const Member& m, EstimatorKind kind,
                                WindowSpec::Kind wk = WindowSpec::Kind::GevreyBump,
                                double p = 2.0, double N = 1.0, double q = 2.0) {
    const ReportKey key{m.name, kind, wk, p, N, q};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    WaveFrontReport rep = wf_estimate(m.f, *af, N, config(m, kind, wk, p, N, q));
    return cache.emplace(key, std::move(rep)).first->second;
  }

  // Ground-truth mismatches: singular cells must stay inside the allowed
  // position band with an analytic direction; core cells must be singular in
  // exactly the analytic directions; regular members must be fully regular.
  std::size_t mismatches(const Member& m, const WaveFrontReport& rep) const {
    std::size_t wrong = 0;
    for (std::size_t pi = 0; pi < rep.positions.size(); ++pi) {
      const double x = rep.grid.coord(0, rep.positions[pi][0]);
      const double y =
          rep.grid.dimension == 2 ? rep.grid.coord(1, rep.positions[pi][1]) : 0.0;
      const bool allowed = m.singular && m.gt.pos(x, y);
      const bool core = m.singular && m.gt.core(x, y);
      for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
        const bool got = rep.cells[pi * rep.n_dirs() + di].singular;
        const bool dir_hit =
            m.singular && (m.gt.all_dirs ||
                           std::find(m.gt.dirs.begin(), m.gt.dirs.end(), di) !=
                               m.gt.dirs.end());
        if (got && !(allowed && dir_hit)) ++wrong;
        if (core && got != dir_hit) ++wrong;
      }
    }
    return wrong;
  }

  GridSpec grid1, grid2;
  EstimatorConfig base1, base2;
  std::shared_ptr<AssociatedFunction> af;
  std::vector<Member> members;
  std::map<ReportKey, WaveFrontReport> cache;
};

Battery& battery() {
  static Battery b;
  return b;
}

// ---- lemmas ----------------------------------------------------------------

CheckResult check_asymptotics() {
  CheckResult res{"assoc-asymptotics"};
  res.pass = true;
  std::ostringstream detail;
  for (double s : {1.5, 2.0, 3.0}) {
    const int p_max = s < 1.8 ? 20000 : (s < 2.5 ? 4096 : 1024);
    const AssociatedFunction af(gevrey_sequence(s, p_max));
    std::vector<double> xs, ys;
    for (int k = 0; k <= 60; ++k) {
      const double rho = std::pow(10.0, 2.0 + 4.0 * k / 60.0);
      xs.push_back(std::log(rho));
      ys.push_back(std::log(af.eval(rho)));
    }
    const LinearFit fit = least_squares(xs, ys);
    const double err = std::abs(fit.slope - 1.0 / s);
    detail << "s=" << s << " exponent=" << fmt(fit.slope) << " ";
    if (!(fit.valid && err <= 0.05)) res.pass = false;
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_conditions_suite() {
  CheckResult res{"sequence-conditions"};
  const DefiningSequence seq = gevrey_sequence(2.0, 2048);
  const ConditionReport rep = check_conditions(seq);

  std::vector<double> factors(256);
  for (std::size_t j = 0; j < factors.size(); ++j)
    factors[j] = static_cast<double>((j + 1) * (j + 1));  // (p!)^2 factor-wise
  const FactorConditionReport fact = check_factor_condition(product_sequence(factors));

  res.pass = rep.m1 && rep.m2.holds && rep.m3prime_holds() && fact.holds;
  res.detail = "M.2 A=" + fmt(rep.m2.A) + " H=" + fmt(rep.m2.H) +
               " M.3' raabe=" + fmt(rep.m3prime.raabe) + " factor H=" + fmt(fact.H);
  return res;
}

CheckResult check_assoc_inequalities() {
  CheckResult res{"assoc-inequalities"};
  const AssociatedFunction af(gevrey_sequence(2.0, 4096));
  std::vector<double> rho;
  for (int k = 0; k < 1000; ++k)
    rho.push_back(std::pow(10.0, -2.0 + 6.0 * k / 999.0));
  res.pass = true;
  std::ostringstream detail;
  for (double L : {1.0, 2.0, 5.0}) {
    const AssocLemmaReport rep = verify_assoc_lemma(af, rho, L, 1000, 2);
    if (!rep.pass() || !std::isfinite(rep.C_dilation) || !std::isfinite(rep.K_L))
      res.pass = false;
    if (L == 5.0)
      detail << "A=" << fmt(rep.A) << " H=" << fmt(rep.H) << " C=" << fmt(rep.C_dilation)
             << " K_5=" << fmt(rep.K_L) << " viol="
             << rep.subadditivity.violations + rep.doubling.violations;
  }
  res.detail = detail.str();
  return res;
}

// ---- paley-wiener ----------------------------------------------------------

CheckResult check_pw_bump() {
  CheckResult res{"paley-wiener-bump"};
  const GridSpec g = GridSpec::regular_1d(4096, 64.0);
  const SampledSignal f = gevrey_bump_signal(2.0, 1.0, g);
  const AssociatedFunction af(gevrey_sequence(2.0, 512));
  // fit against |xi|^{1/2} directly via a custom-scale spectrum fit
  const Spectrum F = dft(f);
  // Deep-decay measurement: the classification resolution floor would starve
  // the exponentially small tail, so fit down to near roundoff.
  const DecayFit fit = directional_decay_fit_scaled(
      F, half_line(+1), [](double r) { return std::sqrt(r); },
      {g.nyquist(0) / 2.0, g.nyquist(0)}, 1e-12);
  const double h = -fit.tau;
  res.pass = fit.valid && h > 0.0 && fit.r2 >= 0.95;
  res.detail = "h=" + fmt(h) + " r2=" + fmt(fit.r2) + " shells=" + fmt(fit.n_points);
  return res;
}

CheckResult check_pw_step() {
  CheckResult res{"paley-wiener-step"};
  const GridSpec g = GridSpec::regular_1d(4096, 0.5);  // dx = 1/8192
  const SampledSignal f = synth("step", {}, g);
  const Spectrum F = dft(f);
  const DecayFit fit = directional_decay_fit_scaled(
      F, half_line(+1), [](double r) { return std::sqrt(r); },
      {g.nyquist(0) / 2.0, g.nyquist(0)}, 1e-12);
  const double h = -fit.tau;
  res.pass = fit.valid && h <= 0.02;
  res.detail = "h=" + fmt(h);
  return res;
}

// ---- invariance ------------------------------------------------------------

CheckResult check_stft_roundtrip() {
  CheckResult res{"stft-roundtrip"};
  const GridSpec g = GridSpec::regular_1d(256, 16.0);
  SynthParams sp;
  sp.sigma = 1.0;
  SampledSignal f = synth("gaussian", sp, g);
  f = modulate(f, 2.0);
  const SampledSignal shifted = translate(synth("gaussian", sp, g), 1.0);
  for (std::size_t k = 0; k < f.values.size(); ++k) f.values[k] += 0.5 * shifted.values[k];

  std::ostringstream detail;
  res.pass = true;

  const double parseval =
      std::abs(idft(dft(f)).l2_norm() - f.l2_norm()) / f.l2_norm();
  double spec_norm = 0.0;
  {
    const Spectrum F = dft(f);
    for (const cplx& v : F.values) spec_norm += std::norm(v);
    spec_norm = std::sqrt(spec_norm * g.freq_step(0));
  }
  const double plancherel = std::abs(spec_norm - f.l2_norm()) / f.l2_norm();
  if (parseval > 1e-10 || plancherel > 1e-10) res.pass = false;
  detail << "parseval=" << fmt(plancherel) << " ";

  const std::vector<std::pair<WindowSpec, WindowSpec>> pairs{
      {WindowSpec::gaussian(4.0), WindowSpec::gevrey_bump(2.0, 4.0)},
      {WindowSpec::gevrey_bump(2.0, 3.0), WindowSpec::gevrey_bump(3.0, 5.0)}};
  for (const auto& [gw, psi] : pairs) {
    const StftArray V = stft(f, psi, 1);
    double vnorm = 0.0;
    for (const cplx& v : V.values) vnorm += std::norm(v);
    vnorm = std::sqrt(vnorm * g.spacing[0] * g.freq_step(0));
    double psin = 0.0;
    for (int i = 0; i < g.extent[0]; ++i) {
      const double w = psi.value(g.coord(0, i));
      psin += w * w;
    }
    psin = std::sqrt(psin * g.spacing[0]);
    const double moyal = std::abs(vnorm - f.l2_norm() * psin) / (f.l2_norm() * psin);
    if (moyal > 1e-8) res.pass = false;

    const cplx inner = window_inner(gw, psi, g);
    SampledSignal rec = adjoint_stft(V, gw);
    double err = 0.0;
    for (std::size_t k = 0; k < rec.values.size(); ++k)
      err += std::norm(rec.values[k] / inner - f.values[k]);
    const double inv = std::sqrt(err * g.spacing[0]) / f.l2_norm();
    if (inv > 1e-8) res.pass = false;
    detail << "moyal=" << fmt(moyal) << " inversion=" << fmt(inv) << " ";
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_battery_exactness() {
  CheckResult res{"battery-exactness"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    const WaveFrontReport& rep = b.report(m, EstimatorKind::FL);
    const std::size_t wrong = b.mismatches(m, rep);
    if (wrong > 0 || rep.n_fit_failures > 0) res.pass = false;
    detail << m.name << (wrong == 0 ? " ok " : " WRONG=" + std::to_string(wrong) + " ");
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_fl_mod_agreement() {
  CheckResult res{"fl-mod-agreement"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    const auto fl = b.report(m, EstimatorKind::FL).classification();
    const auto mod = b.report(m, EstimatorKind::MOD).classification();
    std::size_t diff = 0;
    for (std::size_t k = 0; k < fl.size(); ++k)
      if (fl[k] != mod[k]) ++diff;
    if (diff > 0) res.pass = false;
    detail << m.name << (diff == 0 ? " ok " : " DIFF=" + std::to_string(diff) + " ");
  }
  res.detail = detail.str();
  return res;
}

// ---- windows ---------------------------------------------------------------

CheckResult check_window_independence() {
  CheckResult res{"window-independence"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    for (EstimatorKind kind : {EstimatorKind::FL, EstimatorKind::MOD}) {
      const auto bump = b.report(m, kind, WindowSpec::Kind::GevreyBump).classification();
      const auto gauss = b.report(m, kind, WindowSpec::Kind::Gaussian).classification();
      std::size_t diff = 0;
      for (std::size_t k = 0; k < bump.size(); ++k)
        if (bump[k] != gauss[k]) ++diff;
      if (diff > 0) {
        res.pass = false;
        detail << m.name << "/" << to_string(kind) << " DIFF=" << diff << " ";
      }
    }
  }
  if (res.pass) detail << "all members identical across windows";
  res.detail = detail.str();
  return res;
}

CheckResult check_p_independence() {
  CheckResult res{"p-independence"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    const auto p1 =
        b.report(m, EstimatorKind::MOD, WindowSpec::Kind::GevreyBump, 1.0).classification();
    const auto p2 =
        b.report(m, EstimatorKind::MOD, WindowSpec::Kind::GevreyBump, 2.0).classification();
    std::size_t diff = 0;
    for (std::size_t k = 0; k < p1.size(); ++k)
      if (p1[k] != p2[k]) ++diff;
    if (diff > 0) {
      res.pass = false;
      detail << m.name << " DIFF=" << diff << " ";
    }
  }
  if (res.pass) detail << "all members identical for p in {1,2}";
  res.detail = detail.str();
  return res;
}

// ---- monotonicity ----------------------------------------------------------

CheckResult check_n_monotonicity() {
  CheckResult res{"n-monotonicity"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    const auto n1 = b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, 1.0)
                        .classification();
    const auto n2 = b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, 2.0)
                        .classification();
    const auto n4 = b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, 4.0)
                        .classification();
    for (std::size_t k = 0; k < n1.size(); ++k)
      if ((n1[k] && !n2[k]) || (n2[k] && !n4[k])) {
        res.pass = false;
        detail << m.name << " violation at " << k << " ";
        break;
      }
  }
  if (res.pass) detail << "singular(N1) subset singular(N2) subset singular(N4)";
  res.detail = detail.str();
  return res;
}

CheckResult check_q_monotonicity() {
  CheckResult res{"q-monotonicity"};
  Battery& b = battery();
  res.pass = true;
  const double qinf = std::numeric_limits<double>::infinity();
  for (const Member& m : b.members) {
    const auto q1 = b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, 1.0,
                             1.0)
                        .classification();
    const auto q2 = b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, 1.0,
                             qinf)
                        .classification();
    for (std::size_t k = 0; k < q1.size(); ++k)
      if (q2[k] && !q1[k]) res.pass = false;
  }
  res.detail = "singular(q=inf) subset singular(q=1), fixed weight";
  return res;
}

CheckResult check_family_identities() {
  CheckResult res{"family-identities"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    std::vector<WaveFrontReport> fam;
    for (double N : {1.0, 2.0, 4.0})
      fam.push_back(b.report(m, EstimatorKind::FL, WindowSpec::Kind::GevreyBump, 2.0, N));
    const auto [inf_rep, sup_rep] = wf_family(fam);
    for (std::size_t k = 0; k < inf_rep.cells.size(); ++k) {
      const bool want_inf =
          fam[0].cells[k].singular && fam[1].cells[k].singular && fam[2].cells[k].singular;
      const bool want_sup =
          fam[0].cells[k].singular || fam[1].cells[k].singular || fam[2].cells[k].singular;
      if (inf_rep.cells[k].singular != want_inf || sup_rep.cells[k].singular != want_sup) {
        res.pass = false;
        detail << m.name << " mismatch at " << k << " ";
      }
    }
  }
  if (res.pass) detail << "inf = intersection, sup = union, family {1,2,4}";
  res.detail = detail.str();
  return res;
}

CheckResult check_embedding() {
  CheckResult res{"embedding"};
  Battery& b = battery();
  const Member& step = b.members[1];
  const EmbeddingReport r1 = embedding_check(step.f, *b.af, 1.0, 1.0,
                                             std::numeric_limits<double>::infinity(), 1.0,
                                             b.base1);
  const EmbeddingReport r2 = embedding_check(step.f, *b.af, 2.0, 2.0, 2.0, 1.0, b.base1);
  res.pass = r1.hypothesis_ok && r1.subset && r2.hypothesis_ok && r2.subset;
  res.detail = "q-embedding subset=" + std::string(r1.subset ? "yes" : "no") +
               " weight-embedding subset=" + std::string(r2.subset ? "yes" : "no");
  return res;
}

// ---- convolution -----------------------------------------------------------

CheckResult check_conv_identities() {
  CheckResult res{"conv-identities"};
  Battery& b = battery();
  SynthParams p;
  const SampledSignal d0 = synth("delta", p, b.grid1);
  p.sigma = 1.0;
  const SampledSignal gauss = synth("gaussian", p, b.grid1);
  const SampledSignal conv = convolve(gauss, d0);
  double err = 0.0;
  for (std::size_t k = 0; k < conv.values.size(); ++k)
    err = std::max(err, std::abs(conv.values[k] - gauss.values[k]));
  res.pass = err <= 1e-10;
  res.detail = "|gauss*delta - gauss|_inf = " + fmt(err);
  return res;
}

CheckResult check_conv_inclusion() {
  CheckResult res{"conv-inclusion"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    if (!m.singular) continue;
    const bool two_d = m.f.grid.dimension == 2;
    SynthParams p;
    p.x0 = two_d ? 0.5 : 1.0;
    p.y0 = two_d ? 0.5 : 0.0;
    const SampledSignal da = synth("delta", p, m.f.grid);
    const SampledSignal conv = convolve(da, m.f);
    const EstimatorConfig cfg = b.config(m, EstimatorKind::FL,
                                         WindowSpec::Kind::GevreyBump, 2.0, 1.0, 2.0);
    const WaveFrontReport wf12 = wf_estimate(conv, *b.af, 1.0, cfg);
    const WaveFrontReport& wf2 = b.report(m, EstimatorKind::FL);
    const InclusionVerdict v = conv_wf_check(da, wf2, wf12);
    if (!v.holds) {
      res.pass = false;
      detail << m.name << " VIOLATIONS=" << v.violating_cells.size() << " ";
    } else {
      detail << m.name << " ok ";
    }
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_conv_mollify() {
  CheckResult res{"conv-mollify"};
  Battery& b = battery();
  const SampledSignal moll = gevrey_bump_signal(2.0, 2.0, b.grid1);
  const SampledSignal smooth = convolve(moll, b.members[1].f);  // step
  const WaveFrontReport rep = wf_estimate(smooth, *b.af, 1.0, b.base1);
  res.pass = rep.singular_empty() && rep.n_fit_failures == 0;
  res.detail = std::string("WF(bump*step) ") +
               (rep.singular_empty() ? "empty" : "NONEMPTY");
  return res;
}

CheckResult check_conv_negative_control() {
  CheckResult res{"conv-negative-control"};
  Battery& b = battery();
  const Member& step = b.members[1];
  SynthParams p;
  p.x0 = 1.0;
  const SampledSignal da = synth("delta", p, b.grid1);
  const SampledSignal conv = convolve(da, step.f);
  const EstimatorConfig cfg = b.config(step, EstimatorKind::FL,
                                       WindowSpec::Kind::GevreyBump, 2.0, 1.0, 2.0);
  WaveFrontReport wf12 = wf_estimate(conv, *b.af, 1.0, cfg);
  wf12.cells.back().singular = true;  // inject an off-set singularity
  const InclusionVerdict v = conv_wf_check(da, b.report(step, EstimatorKind::FL), wf12);
  res.pass = !v.holds && !v.violating_cells.empty();
  res.detail = "corrupted report rejected: " + std::string(res.pass ? "yes" : "no");
  return res;
}

// ---- membership ------------------------------------------------------------

CheckResult check_membership() {
  CheckResult res{"membership-iff"};
  Battery& b = battery();
  res.pass = true;
  std::ostringstream detail;
  for (const Member& m : b.members) {
    for (EstimatorKind kind : {EstimatorKind::FL, EstimatorKind::MOD}) {
      const EstimatorConfig cfg =
          b.config(m, kind, WindowSpec::Kind::GevreyBump, 2.0, 1.0, 2.0);
      const MembershipCheck mc =
          membership_iff_empty(m.f, *b.af, 1.0, cfg, b.report(m, kind));
      if (mc.member != mc.wf_empty) {
        res.pass = false;
        detail << m.name << "/" << to_string(kind) << " member=" << mc.member
               << " wf_empty=" << mc.wf_empty << " ";
      }
    }
  }
  if (res.pass) detail << "member == wf_empty on all members, FL and MOD";
  res.detail = detail.str();
  return res;
}

SuiteResult run_named(const std::string& suite) {
  SuiteResult out;
  out.suite = suite;
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "lemmas") {
    out.checks = {check_asymptotics(), check_conditions_suite(),
                  check_assoc_inequalities()};
  } else if (suite == "paley-wiener") {
    out.checks = {check_pw_bump(), check_pw_step()};
  } else if (suite == "invariance") {
    out.checks = {check_stft_roundtrip(), check_battery_exactness(),
                  check_fl_mod_agreement()};
  } else if (suite == "windows") {
    out.checks = {check_window_independence(), check_p_independence()};
  } else if (suite == "monotonicity") {
    out.checks = {check_n_monotonicity(), check_q_monotonicity(),
                  check_family_identities(), check_embedding()};
  } else if (suite == "convolution") {
    out.checks = {check_conv_identities(), check_conv_inclusion(), check_conv_mollify(),
                  check_conv_negative_control()};
  } else if (suite == "membership") {
    out.checks = {check_membership()};
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* SuiteResult::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{
      "lemmas",       "paley-wiener", "invariance", "windows",
      "monotonicity", "convolution",  "membership", "all"};
  return names;
}

SuiteResult run_suite(const std::string& suite) {
  if (suite != "all") return run_named(suite);
  SuiteResult out;
  out.suite = "all";
  for (const std::string& name : verify_suites()) {
    if (name == "all") continue;
    SuiteResult sub = run_named(name);
    out.seconds += sub.seconds;
    for (auto& c : sub.checks) {
      c.name = name + "/" + c.name;
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> out;
  for (const std::string& name : verify_suites())
    if (name != "all") out.push_back(run_named(name));
  return out;
}

nlohmann::json suites_to_json(const std::vector<SuiteResult>& suites) {
  nlohmann::json j = nlohmann::json::array();
  for (const SuiteResult& s : suites) {
    nlohmann::json sj;
    sj["suite"] = s.suite;
    sj["pass"] = s.pass();
    sj["seconds"] = s.seconds;
    sj["checks"] = nlohmann::json::array();
    for (const CheckResult& c : s.checks)
      sj["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j.push_back(sj);
  }
  return j;
}

}  // namespace uw

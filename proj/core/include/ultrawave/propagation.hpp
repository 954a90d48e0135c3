#pragma once

#include "ultrawave/wavefront.hpp"

namespace uw {

// Linear (non-circular) convolution via 2x zero-padded spectra; the result is
// cropped back to the common grid. Throws when mass within one cell of the
// padded boundary indicates support overflow.
SampledSignal convolve(const SampledSignal& f1, const SampledSignal& f2);

struct InclusionVerdict {
  bool holds = false;
  std::vector<std::size_t> violating_cells;  // flat (position, direction) index
  int position_slack = 1;                    // allowed mismatch, position cells
  int direction_slack = 1;                   // and direction cells
};

// Theorem surrogate: every singular cell of wf12 = WF(f1 * f2) must lie within
// slack of {(x + y, xi) : x in supp f1, (y, xi) in WF(f2)}; supp f1 is
// thresholded at 1e-12 relative.
InclusionVerdict conv_wf_check(const SampledSignal& f1, const WaveFrontReport& wf2,
                               const WaveFrontReport& wf12, int position_slack = 1,
                               int direction_slack = 1);

struct EmbeddingReport {
  bool hypothesis_ok = false;  // q1 <= q2 and w2 <= C w1 on the annulus grid
  bool subset = false;         // singular(q2, w2) subset of singular(q1, w1)
  std::vector<std::size_t> violating_cells;
  double weight_ratio_C = 0.0;      // max w2 / w1 over the annulus
  std::vector<double> seminorm_ratio;  // per-battery-cone raw ratios, inspection
};

// Larger space (q2, w2) can only lose singularities. Runs the FL estimator
// twice on f and compares classifications.
EmbeddingReport embedding_check(const SampledSignal& f, const AssociatedFunction& af,
                                double q1, double N1, double q2, double N2,
                                const EstimatorConfig& base);

}  // namespace uw

/*
 * Copyright 2026 The qorrel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QORREL_MAXENT_HPP
#define QORREL_MAXENT_HPP

#include <map>
#include <vector>

#include "qorrel/kernels.hpp"
#include "qorrel/spectra.hpp"
#include "qorrel/tensor.hpp"
#include "qorrel/types.hpp"

/* Numerical maximum-entropy reconstruction from marginals.
 *
 * The reconstruction runs through the convex dual: over multipliers lambda,
 * minimize f(lambda) = ln tr exp(sum_i lambda_i B_i) - lambda . t, where the
 * B_i are embedded products of single-site traceless generators spanning all
 * supports up to the requested marginal size and t_i = tr(rho B_i) are the
 * target expectations. The gradient is tr(sigma B_i) - t_i with sigma the
 * normalized exponential, so a zero gradient is exactly marginal matching.
 * This module is the independent cross-check for the closed-form spectra and
 * shares no formulas with them.
 */

namespace qorrel {

// Embedded generator products for every support of size 1..level.
class MarginalBasis {
 public:
  static MarginalBasis build(int n, int level);

  int sites() const { return n_; }
  int level() const { return level_; }
  int term_count() const { return static_cast<int>(embedded_.size()); }

  // tr(rho B_i) for every term (real; the terms are Hermitian).
  RealVec expectations(const Mat& rho) const;

  // sum_i w[i] B_i on the full space.
  Mat weighted_sum(const RealVec& w) const;

  // Per-term curvature scale sqrt((2/3)^k): the dual Hessian at lambda = 0 is
  // diag(scales^2), so dividing by these preconditions the solve.
  const RealVec& scales() const { return scales_; }

  const std::vector<std::vector<int>>& supports() const { return supports_; }
  const std::vector<TripletList>& embedded() const { return embedded_; }

  // Dense per-term local matrices, rebuilt on demand (reference kernels only).
  std::vector<Mat> dense_locals() const;

 private:
  int n_ = 0;
  int level_ = 0;
  std::vector<std::vector<int>> supports_;      // per term, ascending sites
  std::vector<std::vector<int>> generators_;    // per term, generator index per site
  std::vector<TripletList> embedded_;
  WeightedTermSet set_;
  RealVec scales_;
};

struct SolverConfig {
  double grad_tol = 1e-7;       // max |tr(sigma B_i) - t_i|
  int max_iters = 5000;
  int lbfgs_memory = 12;
  double armijo_c1 = 1e-4;
  double backtrack_shrink = 0.5;
  int max_backtracks = 60;
  // Mixing weights toward the maximally mixed state used by the spectrum
  // driver for rank-deficient targets, largest first.
  std::vector<double> epsilon_schedule{1e-2, 1e-3, 1e-4};
};

struct MaxEntResult {
  DensityMatrix sigma;
  double entropy = 0.0;
  RealVec dual;                 // multipliers, one per basis term
  double residual = 0.0;        // final max-abs constraint violation
  int iterations = 0;
  bool converged = false;
  std::vector<double> f_trace;  // dual objective after each accepted step
};

// Single solve against a full-rank target (throws otherwise). The overload
// taking a basis allows reuse across solves and warm starting.
MaxEntResult solve_maxent(const DensityMatrix& target, int level,
                          const SolverConfig& config = {});
MaxEntResult solve_maxent(const Mat& target, const MarginalBasis& basis,
                          const SolverConfig& config,
                          const RealVec* warm_start = nullptr);

struct MaxEntSpectrumDetail {
  CorrelationSpectrum spectrum;                 // extrapolated to zero mixing
  std::vector<double> epsilons;                 // as solved, largest first
  std::vector<CorrelationSpectrum> per_epsilon;
  std::vector<double> per_epsilon_total;        // marginal-entropy totals
  std::map<int, MaxEntResult> final_solves;     // smallest-epsilon result per level
};

/* Full reconstruction of the level decomposition: solve every level at each
 * epsilon in the schedule, then extrapolate each level linearly in epsilon
 * from the two smallest entries. Values within 1e-7 of zero are snapped to
 * zero. The reported total is extrapolated from the marginal-entropy totals
 * of the mixed targets, independently of the levels, so comparing it against
 * the telescoped sum is a real consistency check. Cost grows steeply with n;
 * capped at n <= 4.
 */
MaxEntSpectrumDetail maxent_spectrum_detail(const DensityMatrix& target,
                                            const SolverConfig& config = {});
CorrelationSpectrum maxent_spectrum(const DensityMatrix& target,
                                    const SolverConfig& config = {});

}  // namespace qorrel

#endif

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

#include "qorrel/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "qorrel/operators.hpp"

namespace qorrel {

namespace {

TripletList kron_triplets(const TripletList& a, const TripletList& b, long dim_b) {
  TripletList out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back(Triplet{x.r * static_cast<int>(dim_b) + y.r,
                            x.c * static_cast<int>(dim_b) + y.c, x.v * y.v});
  return out;
}

void ascending_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int s = next; s <= n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

double min_eigenvalue(const Mat& a) {
  Spectrum sp = eigh(a);
  return sp.w(sp.w.size() - 1);
}

struct LbfgsPair {
  RealVec s;
  RealVec y;
  double rho;
};

RealVec lbfgs_direction(const RealVec& g, const std::deque<LbfgsPair>& hist) {
  RealVec q = g;
  std::vector<double> a(hist.size());
  for (int i = static_cast<int>(hist.size()) - 1; i >= 0; --i) {
    a[i] = hist[i].rho * hist[i].s.dot(q);
    q -= a[i] * hist[i].y;
  }
  double gamma = 1.0;
  if (!hist.empty()) {
    const auto& last = hist.back();
    gamma = last.s.dot(last.y) / last.y.dot(last.y);
  }
  RealVec r = gamma * q;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    const double b = hist[i].rho * hist[i].y.dot(r);
    r += (a[i] - b) * hist[i].s;
  }
  return -r;
}

}  // namespace

MarginalBasis MarginalBasis::build(int n, int level) {
  if (n < 1) throw std::invalid_argument("MarginalBasis: need n >= 1");
  if (level < 1 || level > n)
    throw std::invalid_argument("MarginalBasis: need 1 <= level <= n");

  MarginalBasis basis;
  basis.n_ = n;
  basis.level_ = level;

  std::vector<TripletList> site_gen(9);
  for (int j = 1; j <= 8; ++j)
    site_gen[j] = kernels::dense_to_triplets(Mat(gell_mann(j)));

  std::vector<std::vector<int>> supports;
  for (int k = 1; k <= level; ++k) ascending_subsets(n, k, supports);

  std::vector<double> scale_list;
  for (const auto& sup : supports) {
    const int k = static_cast<int>(sup.size());
    SiteIndexer ix = SiteIndexer::build(n, sup);
    const double scale = std::pow(2.0 / 3.0, 0.5 * k);

    // Odometer over one generator index per support site.
    std::vector<int> gen(k, 1);
    while (true) {
      TripletList local = site_gen[gen[0]];
      long dim = 3;
      for (int s = 1; s < k; ++s) {
        local = kron_triplets(local, site_gen[gen[s]], 3);
        dim *= 3;
      }
      basis.supports_.push_back(sup);
      basis.generators_.push_back(gen);
      basis.embedded_.push_back(kernels::embed_triplets(local, ix));
      scale_list.push_back(scale);

      int pos = k - 1;
      while (pos >= 0 && gen[pos] == 8) {
        gen[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++gen[pos];
    }
  }

  basis.set_ = WeightedTermSet::build(basis.embedded_, pow3(n));
  basis.scales_ = Eigen::Map<const RealVec>(scale_list.data(), scale_list.size());
  return basis;
}

RealVec MarginalBasis::expectations(const Mat& rho) const {
  return kernels::expect_many(rho, embedded_);
}

Mat MarginalBasis::weighted_sum(const RealVec& w) const {
  if (w.size() != term_count())
    throw std::invalid_argument("MarginalBasis: weight count does not match terms");
  return kernels::accumulate(w, set_);
}

std::vector<Mat> MarginalBasis::dense_locals() const {
  std::vector<Mat> out;
  out.reserve(generators_.size());
  for (const auto& gen : generators_) {
    Mat local = Mat(gell_mann(gen[0]));
    for (std::size_t s = 1; s < gen.size(); ++s)
      local = kernels::kron(local, Mat(gell_mann(gen[s])));
    out.push_back(std::move(local));
  }
  return out;
}

MaxEntResult solve_maxent(const Mat& target, const MarginalBasis& basis,
                          const SolverConfig& config, const RealVec* warm_start) {
  const long dim = pow3(basis.sites());
  if (target.rows() != dim || target.cols() != dim)
    throw std::invalid_argument("solve_maxent: target dimension mismatch");
  const double mineig = min_eigenvalue(target);
  if (mineig < 1e-12) {
    std::ostringstream msg;
    msg << "solve_maxent: target eigenvalue " << mineig
        << " too small; the dual is unbounded for rank-deficient targets "
           "(mix toward the identity first)";
    throw std::invalid_argument(msg.str());
  }

  const int nterm = basis.term_count();
  const RealVec t = basis.expectations(target);
  const RealVec& s = basis.scales();

  RealVec mu = RealVec::Zero(nterm);
  if (warm_start != nullptr) {
    if (warm_start->size() != nterm)
      throw std::invalid_argument("solve_maxent: warm start size mismatch");
    mu = warm_start->cwiseProduct(s);
  }

  // f(lambda) and, when requested, the state and raw constraint gradient.
  Mat sigma;
  auto eval = [&](const RealVec& mu_in, bool with_state, RealVec* graw) -> double {
    RealVec lambda = (mu_in.array() / s.array()).matrix();
    Spectrum sp = eigh(basis.weighted_sum(lambda));
    const double w0 = sp.w(0);
    RealVec e = (sp.w.array() - w0).exp();
    const double z = e.sum();
    if (with_state) {
      RealVec p = e / z;
      Mat raw = sp.v * p.asDiagonal() * sp.v.adjoint();
      sigma = 0.5 * (raw + raw.adjoint().eval());
      if (graw != nullptr) *graw = basis.expectations(sigma) - t;
    }
    return w0 + std::log(z) - lambda.dot(t);
  };

  RealVec graw(nterm);
  double f = eval(mu, true, &graw);
  RealVec gmu = (graw.array() / s.array()).matrix();
  double res = graw.cwiseAbs().maxCoeff();

  MaxEntResult out;
  out.f_trace.push_back(f);

  std::deque<LbfgsPair> hist;
  int iter = 0;
  bool converged = res <= config.grad_tol;

  while (!converged && iter < config.max_iters) {
    ++iter;
    RealVec d = lbfgs_direction(gmu, hist);
    double slope = gmu.dot(d);
    if (!(slope < 0.0)) {
      hist.clear();
      d = -gmu;
      slope = gmu.dot(d);
    }

    auto backtrack = [&](const RealVec& dir, double dirslope, RealVec& mu_out,
                         double& f_out) -> bool {
      double alpha = 1.0;
      for (int bt = 0; bt <= config.max_backtracks; ++bt) {
        RealVec mu_try = mu + alpha * dir;
        const double f_try = eval(mu_try, false, nullptr);
        if (f_try <= f + config.armijo_c1 * alpha * dirslope) {
          mu_out = std::move(mu_try);
          f_out = f_try;
          return true;
        }
        alpha *= config.backtrack_shrink;
      }
      return false;
    };

    RealVec mu_next;
    double f_next = 0.0;
    bool ok = backtrack(d, slope, mu_next, f_next);
    if (!ok && !hist.empty()) {
      hist.clear();
      d = -gmu;
      ok = backtrack(d, gmu.dot(d), mu_next, f_next);
    }
    if (!ok) break;  // no further progress at this precision

    RealVec graw_next(nterm);
    f_next = eval(mu_next, true, &graw_next);
    RealVec gmu_next = (graw_next.array() / s.array()).matrix();

    LbfgsPair pair;
    pair.s = mu_next - mu;
    pair.y = gmu_next - gmu;
    const double sy = pair.s.dot(pair.y);
    if (sy > 1e-12 * pair.s.norm() * pair.y.norm()) {
      pair.rho = 1.0 / sy;
      hist.push_back(std::move(pair));
      if (static_cast<int>(hist.size()) > config.lbfgs_memory) hist.pop_front();
    }

    mu = std::move(mu_next);
    f = f_next;
    graw = std::move(graw_next);
    gmu = std::move(gmu_next);
    res = graw.cwiseAbs().maxCoeff();
    out.f_trace.push_back(f);
    converged = res <= config.grad_tol;
  }

  out.sigma = DensityMatrix{basis.sites(), sigma};
  out.entropy = von_neumann_entropy(sigma);
  out.dual = (mu.array() / s.array()).matrix();
  out.residual = res;
  out.iterations = iter;
  out.converged = converged;
  return out;
}

MaxEntResult solve_maxent(const DensityMatrix& target, int level,
                          const SolverConfig& config) {
  if (level < 1 || level > target.n)
    throw std::invalid_argument("solve_maxent: need 1 <= level <= n");
  if (level == target.n) {
    MaxEntResult out;
    out.sigma = target;
    out.entropy = von_neumann_entropy(target);
    out.residual = 0.0;
    out.converged = true;
    return out;
  }
  MarginalBasis basis = MarginalBasis::build(target.n, level);
  return solve_maxent(target.data, basis, config, nullptr);
}

MaxEntSpectrumDetail maxent_spectrum_detail(const DensityMatrix& target,
                                            const SolverConfig& config) {
  const int n = target.n;
  if (n < 2) throw std::invalid_argument("maxent_spectrum: need n >= 2");
  if (n > 4)
    throw std::invalid_argument(
        "maxent_spectrum: n > 4 exceeds the supported cross-check range");
  target.validate();

  std::vector<double> eps = config.epsilon_schedule;
  if (eps.empty()) throw std::invalid_argument("maxent_spectrum: empty epsilon schedule");
  for (double e : eps)
    if (!(e > 0.0 && e < 1.0))
      throw std::invalid_argument("maxent_spectrum: epsilon outside (0, 1)");
  std::sort(eps.begin(), eps.end(), std::greater<double>());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());

  std::vector<MarginalBasis> bases;
  bases.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) bases.push_back(MarginalBasis::build(n, k));

  MaxEntSpectrumDetail detail;
  detail.epsilons = eps;

  const long dim = pow3(n);
  std::vector<RealVec> warm(n);  // dual per level, carried across the schedule

  for (std::size_t ei = 0; ei < eps.size(); ++ei) {
    const double e = eps[ei];
    Mat rho_eps = (1.0 - e) * target.data + (e / static_cast<double>(dim)) * Mat::Identity(dim, dim);

    std::vector<double> entropy_at(n + 1, 0.0);
    for (int k = 1; k <= n - 1; ++k) {
      const RealVec* start = warm[k].size() > 0 ? &warm[k] : nullptr;
      MaxEntResult res = solve_maxent(rho_eps, bases[k - 1], config, start);
      if (!res.converged) {
        std::ostringstream msg;
        msg << "maxent_spectrum: level " << k << " failed to converge at epsilon " << e
            << " (residual " << res.residual << ")";
        throw std::runtime_error(msg.str());
      }
      entropy_at[k] = res.entropy;
      warm[k] = res.dual;
      if (ei + 1 == eps.size()) detail.final_solves[k] = std::move(res);
    }
    entropy_at[n] = von_neumann_entropy(rho_eps);

    CorrelationSpectrum spec;
    spec.n = n;
    spec.method = "maxent";
    for (int k = 2; k <= n; ++k) spec.values[k] = entropy_at[k - 1] - entropy_at[k];
    spec.total = 0.0;
    for (const auto& kv : spec.values) spec.total += kv.second;
    detail.per_epsilon.push_back(std::move(spec));
    detail.per_epsilon_total.push_back(total_correlation(DensityMatrix{n, rho_eps}));
  }

  // Linear extrapolation to zero mixing from the two smallest epsilons.
  auto extrapolate = [&](double v_prev, double v_last) -> double {
    const double e_prev = eps[eps.size() - 2];
    const double e_last = eps[eps.size() - 1];
    return v_last + (v_last - v_prev) * e_last / (e_prev - e_last);
  };

  CorrelationSpectrum final_spec;
  final_spec.n = n;
  final_spec.method = "maxent";
  const CorrelationSpectrum& last = detail.per_epsilon.back();
  if (eps.size() >= 2) {
    const CorrelationSpectrum& prev = detail.per_epsilon[detail.per_epsilon.size() - 2];
    for (int k = 2; k <= n; ++k)
      final_spec.values[k] = extrapolate(prev.level(k), last.level(k));
    final_spec.total = extrapolate(detail.per_epsilon_total[eps.size() - 2],
                                   detail.per_epsilon_total.back());
  } else {
    final_spec.values = last.values;
    final_spec.total = detail.per_epsilon_total.back();
    final_spec.notes.push_back("single epsilon, no extrapolation");
  }
  for (auto& kv : final_spec.values)
    if (std::abs(kv.second) < 1e-7) kv.second = 0.0;

  detail.spectrum = std::move(final_spec);
  return detail;
}

CorrelationSpectrum maxent_spectrum(const DensityMatrix& target, const SolverConfig& config) {
  return maxent_spectrum_detail(target, config).spectrum;
}

}  // namespace qorrel

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

#include "qorrel/witness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qorrel/kernels.hpp"

namespace qorrel {

namespace {

constexpr double kProjectorTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kBranchFloor = 1e-8;

Mat product_projector(const std::vector<Mat3>& site_projs) {
  Mat full = Mat(site_projs[0]);
  for (std::size_t s = 1; s < site_projs.size(); ++s)
    full = kernels::kron(full, Mat(site_projs[s]));
  return full;
}

ProjectorPair digits_to_split(const std::vector<int>& digits) {
  ProjectorPair pair;
  for (int d : digits) {
    Mat3 p1 = Mat3::Zero();
    p1(d, d) = 1.0;
    pair.first.push_back(p1);
    pair.second.push_back(Mat3::Identity() - p1);
  }
  return pair;
}

void check_state_dim(const Vec& psi, int n, const char* who) {
  if (psi.size() != pow3(n)) {
    std::ostringstream msg;
    msg << who << ": state dimension " << psi.size() << " does not match " << n
        << " sites";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

void ProjectorPair::validate() const {
  if (first.empty() || first.size() != second.size())
    throw std::invalid_argument("ProjectorPair: empty or mismatched site lists");
  for (std::size_t s = 0; s < first.size(); ++s) {
    for (const Mat3* p : {&first[s], &second[s]}) {
      if (((*p) - p->adjoint()).cwiseAbs().maxCoeff() > kProjectorTol)
        throw std::invalid_argument("ProjectorPair: non-Hermitian entry");
      if (((*p) * (*p) - (*p)).cwiseAbs().maxCoeff() > kProjectorTol)
        throw std::invalid_argument("ProjectorPair: entry is not idempotent");
    }
    if ((first[s] * second[s]).cwiseAbs().maxCoeff() > kProjectorTol)
      throw std::invalid_argument("ProjectorPair: pair is not orthogonal");
  }
}

ProjectorPair natural_split(Family family, int n) {
  if (n < 2) throw std::invalid_argument("natural_split: need n >= 2");
  switch (family) {
    case Family::Ghz1:
      // all-0 branch against the 1/2 sector
      return digits_to_split(std::vector<int>(n, 0));
    case Family::Ghz2:
      // all-1 branch against the 0/2 sector
      return digits_to_split(std::vector<int>(n, 1));
    case Family::Ms:
      throw std::invalid_argument(
          "natural_split: the slice family admits no product split");
  }
  throw std::invalid_argument("natural_split: unknown family");
}

SplitBranches split_branches(const Vec& psi, const ProjectorPair& split) {
  split.validate();
  const int n = split.sites();
  check_state_dim(psi, n, "split_branches");
  SplitBranches out;
  out.branch1 = product_projector(split.first) * psi;
  out.branch2 = product_projector(split.second) * psi;
  out.residual = (psi - out.branch1 - out.branch2).norm();
  return out;
}

Vec flip_state(const Vec& psi, const ProjectorPair& split) {
  SplitBranches b = split_branches(psi, split);
  if (b.residual > kResidualTol) {
    std::ostringstream msg;
    msg << "flip_state: split leaves residual " << b.residual
        << "; the state does not decompose over this pair";
    throw std::invalid_argument(msg.str());
  }
  const double n1 = b.branch1.norm(), n2 = b.branch2.norm();
  if (n1 < kBranchFloor || n2 < kBranchFloor)
    throw std::invalid_argument("flip_state: a branch is (numerically) zero");
  Vec flipped = b.branch1 - b.branch2;
  return flipped / flipped.norm();
}

std::vector<ProjectorPair> find_basis_splits(const Vec& psi, int n) {
  check_state_dim(psi, n, "find_basis_splits");
  std::vector<ProjectorPair> found;
  const long dim = pow3(n);

  // Candidate digit strings are the full odometer; the matching branch keeps
  // only amplitudes agreeing at every site, the complement those differing at
  // every site, so both reduce to digit tests on the index.
  std::vector<int> digits(n, 0);
  for (long cand = 0; cand < dim; ++cand) {
    for (int s = 1; s <= n; ++s) digits[s - 1] = digit_at(cand, s, n);

    double match_sq = std::norm(psi(cand));
    double differ_sq = 0.0, cross_sq = 0.0;
    for (long j = 0; j < dim; ++j) {
      if (j == cand) continue;
      bool all_differ = true;
      for (int s = 1; s <= n; ++s)
        if (digit_at(j, s, n) == digits[s - 1]) {
          all_differ = false;
          break;
        }
      (all_differ ? differ_sq : cross_sq) += std::norm(psi(j));
    }

    if (std::sqrt(cross_sq) <= kResidualTol && match_sq >= kBranchFloor * kBranchFloor &&
        differ_sq >= kBranchFloor * kBranchFloor)
      found.push_back(digits_to_split(digits));
  }
  return found;
}

double witness_expectation_deviation(const Vec& psi, const Vec& flipped, int n,
                                     int samples, std::uint64_t seed) {
  check_state_dim(psi, n, "witness_expectation_deviation");
  check_state_dim(flipped, n, "witness_expectation_deviation");
  if (samples < 1) throw std::invalid_argument("witness_expectation_deviation: samples < 1");

  const auto subsets = site_subsets(n, n - 1);
  const Mat rho = projector(psi);
  const Mat rho_flip = projector(flipped);

  std::vector<Mat> marg, marg_flip;
  for (const auto& keep : subsets) {
    SiteIndexer ix = SiteIndexer::build(n, keep);
    marg.push_back(kernels::partial_trace(rho, ix));
    marg_flip.push_back(kernels::partial_trace(rho_flip, ix));
  }

  const long local_dim = pow3(n - 1);
  double worst = 0.0;
  for (int sample = 0; sample < samples; ++sample) {
    double e = 0.0, e_flip = 0.0;
    for (std::size_t sub = 0; sub < subsets.size(); ++sub) {
      Mat h = random_hermitian(local_dim, mix_seed(seed, sample, sub));
      e += (h * marg[sub]).trace().real();
      e_flip += (h * marg_flip[sub]).trace().real();
    }
    worst = std::max(worst, std::abs(e - e_flip));
  }
  return worst;
}

OperatorSum marginal_support_sum(const Vec& psi, int n, int k, double rank_tol) {
  check_state_dim(psi, n, "marginal_support_sum");
  if (k < 1 || k > n) throw std::invalid_argument("marginal_support_sum: need 1 <= k <= n");

  const Mat rho = projector(psi);
  std::vector<SiteOperator> terms;
  for (const auto& keep : site_subsets(n, k)) {
    SiteIndexer ix = SiteIndexer::build(n, keep);
    Spectrum sp = eigh(kernels::partial_trace(rho, ix));
    Mat proj = Mat::Zero(ix.local_dim(), ix.local_dim());
    for (long i = 0; i < sp.w.size(); ++i)
      if (sp.w(i) > rank_tol) proj += sp.v.col(i) * sp.v.col(i).adjoint();
    proj = 0.5 * (proj + proj.adjoint().eval());
    terms.emplace_back(keep, std::move(proj));
  }
  return OperatorSum(n, std::move(terms));
}

UemeCertificate ueme_check(const Vec& psi, const OperatorSum& op, double gap_tol,
                           double fidelity_tol) {
  check_state_dim(psi, op.n, "ueme_check");
  UemeCertificate cert;
  cert.max_support = op.max_support();
  cert.local = cert.max_support <= op.n - 1;

  Spectrum sp = eigh(op.total);
  cert.gap = sp.w(0) - sp.w(1);
  const Cd overlap = sp.v.col(0).dot(psi);
  cert.fidelity = std::norm(overlap);
  cert.valid = cert.local && cert.gap > gap_tol && cert.fidelity >= 1.0 - fidelity_tol;
  return cert;
}

}  // namespace qorrel

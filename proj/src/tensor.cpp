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

#include "qorrel/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qorrel {

namespace {

double herm_deviation(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Mat symmetrized_or_throw(const Mat& a, const char* who) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << who << ": matrix is " << a.rows() << "x" << a.cols() << ", expected square";
    throw std::invalid_argument(msg.str());
  }
  const double dev = herm_deviation(a);
  if (dev > kHermTol) {
    std::ostringstream msg;
    msg << who << ": Hermiticity deviation " << dev << " exceeds " << kHermTol;
    throw std::invalid_argument(msg.str());
  }
  return 0.5 * (a + a.adjoint());
}

}  // namespace

void DensityMatrix::validate() const {
  if (data.rows() != pow3(n) || data.cols() != pow3(n))
    throw std::runtime_error("DensityMatrix: dimension does not match site count");
  const double hdev = herm_deviation(data);
  if (hdev > kHermTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: Hermiticity deviation " << hdev;
    throw std::runtime_error(msg.str());
  }
  const double tdev = std::abs(data.trace() - Cd(1.0, 0.0));
  if (tdev > kHermTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << tdev;
    throw std::runtime_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (data + data.adjoint()),
                                        Eigen::EigenvaluesOnly);
  const double wmin = es.eigenvalues().minCoeff();
  if (wmin < -kHermTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << wmin;
    throw std::runtime_error(msg.str());
  }
}

DensityMatrix make_density(int n, Mat data) {
  DensityMatrix rho{n, std::move(data)};
  rho.validate();
  return rho;
}

SiteOperator::SiteOperator(std::vector<int> support_sites, Mat local)
    : support(std::move(support_sites)), data(std::move(local)) {
  for (std::size_t i = 1; i < support.size(); ++i)
    if (support[i] <= support[i - 1])
      throw std::invalid_argument("SiteOperator: support must be strictly ascending");
  if (support.empty()) throw std::invalid_argument("SiteOperator: empty support");
  const long want = pow3(static_cast<int>(support.size()));
  if (data.rows() != want || data.cols() != want)
    throw std::invalid_argument("SiteOperator: data dimension does not match support size");
  const double dev = herm_deviation(data);
  if (dev > 1e-12) {
    std::ostringstream msg;
    msg << "SiteOperator: Hermiticity deviation " << dev;
    throw std::invalid_argument(msg.str());
  }
}

Mat kron(const Mat& a, const Mat& b) { return kernels::kron(a, b); }

Mat embed(const SiteOperator& op, int n) {
  if (op.support.back() > n)
    throw std::invalid_argument("embed: support site exceeds site count");
  return kernels::embed_dense(op.data, SiteIndexer::build(n, op.support));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  Mat reduced = kernels::partial_trace(rho.data, SiteIndexer::build(rho.n, keep));
  return make_density(static_cast<int>(keep.size()), std::move(reduced));
}

Spectrum eigh(const Mat& a) {
  Mat h = symmetrized_or_throw(a, "eigh");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  const long d = h.rows();
  Spectrum s;
  s.w.resize(d);
  s.v.resize(d, d);
  for (long i = 0; i < d; ++i) {  // Eigen sorts ascending; flip to descending
    s.w(i) = es.eigenvalues()(d - 1 - i);
    s.v.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  return s;
}

Mat herm_exp(const Mat& a) {
  Spectrum s = eigh(a);
  Mat out = s.v * s.w.array().exp().matrix().asDiagonal() * s.v.adjoint();
  return 0.5 * (out + out.adjoint());
}

Mat normalized_herm_exp(const Mat& a) {
  Spectrum s = eigh(a);
  RealVec p = (s.w.array() - s.w(0)).exp();
  p /= p.sum();
  Mat out = s.v * p.asDiagonal() * s.v.adjoint();
  return 0.5 * (out + out.adjoint());
}

double von_neumann_entropy(const Mat& rho) {
  Spectrum s = eigh(rho);
  double h = 0.0;
  for (long i = 0; i < s.w.size(); ++i) {
    const double w = s.w(i);
    if (w >= kEntropyCutoff) h -= w * std::log(w);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.data); }

double trace_distance(const Mat& a, const Mat& b) {
  Spectrum s = eigh(a - b);
  return 0.5 * s.w.array().abs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.data, b.data);
}

double pure_state_fidelity(const Mat& rho, const Vec& psi) {
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

Mat random_hermitian(long dim, std::uint64_t seed) {
  Rng rng(seed);
  Mat g(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) g(r, c) = Cd(rng.normal(), rng.normal());
  return 0.5 * (g + g.adjoint());
}

Vec basis_ket(int n, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != n)
    throw std::invalid_argument("basis_ket: digit count does not match site count");
  long index = 0;
  for (int d : digits) {
    if (d < 0 || d > 2) throw std::invalid_argument("basis_ket: digit out of range");
    index = index * 3 + d;
  }
  Vec out = Vec::Zero(pow3(n));
  out(index) = Cd(1.0, 0.0);
  return out;
}

Vec repeated_ket(int n, int digit) { return basis_ket(n, std::vector<int>(n, digit)); }

Mat projector(const Vec& psi) { return psi * psi.adjoint(); }

}  // namespace qorrel

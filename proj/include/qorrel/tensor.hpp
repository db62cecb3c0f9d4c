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

#ifndef QORREL_TENSOR_HPP
#define QORREL_TENSOR_HPP

#include <vector>

#include "qorrel/kernels.hpp"
#include "qorrel/types.hpp"

namespace qorrel {

/* n-qutrit density operator, dense storage (dimensions stay <= 3^5 = 243).
 *
 * Constructors that build physical states go through make_density, which
 * enforces Hermiticity (<= 1e-10 deviation), unit trace and positive
 * semidefiniteness up to -1e-10. Internal solver iterates fill the struct
 * directly since their positivity holds by construction.
 */
struct DensityMatrix {
  int n = 0;
  Mat data;

  long dim() const { return data.rows(); }
  void validate() const;  // throws std::runtime_error on violated invariants
};

DensityMatrix make_density(int n, Mat data);

// Hermitian operator supported on a subset of sites (ascending labels).
struct SiteOperator {
  std::vector<int> support;
  Mat data;

  SiteOperator(std::vector<int> support_sites, Mat local);
};

// Eigendecomposition of a Hermitian operator, eigenvalues descending.
struct Spectrum {
  RealVec w;
  Mat v;  // columns are eigenvectors, same order as w
};

Mat kron(const Mat& a, const Mat& b);
Mat embed(const SiteOperator& op, int n);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Symmetrizes inputs whose Hermiticity deviation is below 1e-10 and rejects
// anything worse, so downstream code never sees an asymmetric spectrum.
Spectrum eigh(const Mat& a);

Mat herm_exp(const Mat& a);

// exp(a) / tr(exp(a)) computed through a shifted softmax of the spectrum;
// safe for exponents with entries far beyond the overflow range of exp.
Mat normalized_herm_exp(const Mat& a);

// Entropy in nats; eigenvalues below 1e-12 contribute zero.
double von_neumann_entropy(const Mat& rho);
double von_neumann_entropy(const DensityMatrix& rho);

double trace_distance(const Mat& a, const Mat& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// <psi| rho |psi>
double pure_state_fidelity(const Mat& rho, const Vec& psi);

// GUE-like draw: (G + G^dag)/2 with i.i.d. standard complex Gaussian entries;
// identical bytes for identical seeds on any platform.
Mat random_hermitian(long dim, std::uint64_t seed);

Vec basis_ket(int n, const std::vector<int>& digits);
Vec repeated_ket(int n, int digit);
Mat projector(const Vec& psi);

}  // namespace qorrel

#endif

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

#ifndef QORREL_OPERATORS_HPP
#define QORREL_OPERATORS_HPP

#include <vector>

#include "qorrel/tensor.hpp"
#include "qorrel/types.hpp"

namespace qorrel {

enum class OperatorName {
  SpinZ,
  GellMann,
  ShiftX,
  QPair,
  PPair,
  Omega,
  SigmaPauli,
  SigmaR,
  RPair,
  MsGenerator,
  QString,
};

const char* to_string(OperatorName name);

// Sum of site-supported Hermitian terms with an eagerly assembled total on
// the full n-site space (immutable after construction, safe to share).
struct OperatorSum {
  int n = 0;
  std::vector<SiteOperator> terms;
  Mat total;

  OperatorSum(int n_sites, std::vector<SiteOperator> term_list);
  int max_support() const;
};

// diag(1, 0, -1)
Mat3 spin_z();

// The eight standard traceless Hermitian generators, tr(g_i g_j) = 2 delta_ij.
Mat3 gell_mann(int j);

// Cyclic lowering map |1>->|0>, |2>->|1>, |0>->|2>; satisfies X^2 = X^dag,
// X^3 = I. Not Hermitian.
Mat3 shift_x();

// Pair projector onto agreeing digits: (2/3)[1/2 + cos((2pi/3)(Z_i - Z_j))],
// which picks out |00>, |11>, |22> of the pair.
SiteOperator q_pair(int i, int j);

// (2 Z_i^2 - 1) * diag(1,-1,0)_j; cubes to itself.
SiteOperator p_pair(int i, int j);

// Coupling pattern whose top eigenspace is spanned by the three aligned
// family-2 basis strings: site m+1 tied to sites 1..m by p_pair terms and to
// sites m+2..n by q_pair terms. Maximal eigenvalue n-1.
OperatorSum omega(int n, int m);

// Pauli triple on the tail block {m+1..n}: products of gell_mann(4),
// gell_mann(5) and Z that close under multiplication like spin-1/2 operators
// on the span of the all-0 and 0^m 2^(n-m) strings.
SiteOperator sigma_pauli(int alpha, int n, int m);

// cos(xi) Sigma_3 + sin(xi) cos(zeta) Sigma_1 + sin(xi) sin(zeta) Sigma_2
SiteOperator sigma_r(double xi, double zeta, int n, int m);

// cos(a) + sin(a)(X + X^dag)/sqrt(2); Hermitian, diagonal of its square is 1.
Mat3 slice_mixer(double alpha);

// M Q_ij M with the slice mixer M acting on site i. A rank-3 projector for
// every a (because diag(M^2) = 1).
SiteOperator r_pair(int i, int j, double alpha);

struct MsGeneratorParts {
  OperatorSum q;  // pair projectors anchored at site 2
  OperatorSum x;  // the mixing part; commutes with q
  double beta = 0.0;

  OperatorSum combined() const;
};

// Commuting generator pair whose ground-side top eigenvector singles out the
// maximal-slice state; beta solves cot(beta) = sqrt2 (cot a - tan a) + 1 in (0, pi).
MsGeneratorParts ms_generator(int n, double alpha);

// Sum of pair projectors from `anchor` to every other site in {2..n}.
// Maximal eigenvalue n-2 with eigenspace |i>_1 x |j...j>_{2..n}.
OperatorSum q_string(int n, int anchor = 2);

}  // namespace qorrel

#endif

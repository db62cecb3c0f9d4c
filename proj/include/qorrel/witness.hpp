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

#ifndef QORREL_WITNESS_HPP
#define QORREL_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "qorrel/operators.hpp"
#include "qorrel/states.hpp"
#include "qorrel/tensor.hpp"
#include "qorrel/types.hpp"

/* Witnesses for the two ways a pure state can relate to its (n-1)-party
 * marginals.
 *
 * If every site admits orthogonal projectors P1, P2 such that psi splits as
 * (prod P1) psi + (prod P2) psi with both branches nonzero, then flipping the
 * relative sign of the branches changes nothing any (n-1)-local observable
 * can see: every cross term dies at the untouched site. Such a split proves
 * the marginals cannot single the state out. The absence of any such split
 * over the product-basis candidates, together with a gapped local operator
 * whose top eigenvector is the state, certifies the opposite.
 */

namespace qorrel {

// One orthogonal projector pair per site.
struct ProjectorPair {
  std::vector<Mat3> first;
  std::vector<Mat3> second;

  int sites() const { return static_cast<int>(first.size()); }
  // Throws unless every entry is a projector and the pairs are orthogonal
  // (deviations above 1e-12).
  void validate() const;
};

// The designated split for each GHZ-type family; throws for the slice family,
// which has none.
ProjectorPair natural_split(Family family, int n);

// (prod P1) psi and (prod P2) psi.
struct SplitBranches {
  Vec branch1;
  Vec branch2;
  double residual;  // |psi - branch1 - branch2|
};

SplitBranches split_branches(const Vec& psi, const ProjectorPair& split);

// Normalized branch1 - branch2. Throws when the split leaves a residual
// above 1e-10 or either branch norm is below 1e-8.
Vec flip_state(const Vec& psi, const ProjectorPair& split);

// Exhaustive scan over the 3^n per-site basis-vector-vs-complement splits;
// returns every admissible one (residual <= 1e-10, branch norms >= 1e-8).
std::vector<ProjectorPair> find_basis_splits(const Vec& psi, int n);

/* max over `samples` draws of |<psi|H|psi> - <flipped|H|flipped>|, where each
 * H sums one seeded random Hermitian term per support of size n-1. Both
 * expectations are evaluated independently from the respective marginals, so
 * agreement is a measurement-level statement, not an algebraic identity.
 */
double witness_expectation_deviation(const Vec& psi, const Vec& flipped, int n,
                                     int samples, std::uint64_t seed);

// sum over size-k supports of the embedded range projector of psi's marginal.
// psi reaches the top eigenvalue (the number of supports) by construction;
// any state with the same k-party marginals reaches it too.
OperatorSum marginal_support_sum(const Vec& psi, int n, int k,
                                 double rank_tol = 1e-10);

struct UemeCertificate {
  int max_support = 0;     // largest term support in the certifying operator
  double gap = 0.0;        // top eigenvalue minus the second
  double fidelity = 0.0;   // overlap of the top eigenvector with the state
  bool local = false;      // every support has size <= n-1
  bool valid = false;      // local, gapped and faithful within tolerance
};

// Certifies that `op` pins `psi` through (n-1)-local terms: a unique gapped
// top eigenvector equal to the state means no other state shares all its
// (n-1)-party marginals.
UemeCertificate ueme_check(const Vec& psi, const OperatorSum& op,
                           double gap_tol = 1e-8, double fidelity_tol = 1e-8);

}  // namespace qorrel

#endif

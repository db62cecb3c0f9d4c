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

#ifndef QORREL_KERNELS_HPP
#define QORREL_KERNELS_HPP

#include <vector>

#include "qorrel/types.hpp"

/* Low-level index machinery and the data-parallel kernels built on it.
 *
 * Sites are 1-based and big-endian: site 1 is the most significant base-3
 * digit of a computational-basis index. The OpenMP kernels in qorrel::kernels
 * are written so each output element is reduced in a fixed serial order,
 * which makes results independent of the worker count. The definition-direct
 * serial implementations in qorrel::kernels::serial are kept as reference
 * oracles for tests and for the comparison benchmark.
 */

namespace qorrel {

inline int digit_at(long index, int site, int n) {
  return static_cast<int>((index / pow3(n - site)) % 3);
}

// Precomputed offset tables for one support set: a full-space index splits
// into a support part and an environment part, full = sup_lift[ls] + env_lift[le].
struct SiteIndexer {
  int n = 0;
  std::vector<int> support;   // ascending site labels
  std::vector<long> sup_lift; // size 3^k
  std::vector<long> env_lift; // size 3^(n-k)

  int k() const { return static_cast<int>(support.size()); }
  long local_dim() const { return pow3(k()); }
  long env_dim() const { return pow3(n - k()); }

  static SiteIndexer build(int n, std::vector<int> support_sites);
};

// One nonzero of a sparse operator: M(r, c) = v.
struct Triplet {
  int r;
  int c;
  Cd v;
};

using TripletList = std::vector<Triplet>;

// Row-partitioned view over a family of sparse terms so that a weighted sum
// sum_i w[i] * term[i] can be assembled with one independent pass per output
// row (deterministic for any thread count).
struct WeightedTermSet {
  struct Entry {
    int col;
    int term;
    Cd v;
  };
  long dim = 0;
  int term_count = 0;
  std::vector<long> row_ptr;  // dim + 1
  std::vector<Entry> entries;

  static WeightedTermSet build(const std::vector<TripletList>& terms, long dim);
};

namespace kernels {

Mat kron(const Mat& a, const Mat& b);

// Lifts a dense operator on `indexer.support` to the full n-site space.
Mat embed_dense(const Mat& local, const SiteIndexer& indexer);

// Same lift, sparsity-preserving.
TripletList embed_triplets(const TripletList& local, const SiteIndexer& indexer);
TripletList dense_to_triplets(const Mat& m, double drop_tol = 0.0);

// Contracts away every site not in `indexer.support`.
Mat partial_trace(const Mat& full, const SiteIndexer& indexer);

// tr(rho * B) for sparse B.
Cd expect_one(const Mat& rho, const TripletList& term);

// tr(rho * B_i) for a family of Hermitian sparse terms; real parts.
RealVec expect_many(const Mat& rho, const std::vector<TripletList>& terms);

// sum_i w[i] * term[i] as a dense matrix.
Mat accumulate(const RealVec& w, const WeightedTermSet& set);

namespace serial {

Mat embed_dense(const Mat& local, int n, const std::vector<int>& support);
Mat partial_trace(const Mat& full, int n, const std::vector<int>& keep);
RealVec expect_many(const Mat& rho, int n, const std::vector<std::vector<int>>& supports,
                    const std::vector<Mat>& locals);
Mat accumulate(const RealVec& w, int n, const std::vector<std::vector<int>>& supports,
               const std::vector<Mat>& locals);

}  // namespace serial

}  // namespace kernels
}  // namespace qorrel

#endif

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

#include "qorrel/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace qorrel {

SiteIndexer SiteIndexer::build(int n, std::vector<int> support_sites) {
  if (n < 1) throw std::invalid_argument("SiteIndexer: need at least one site");
  std::sort(support_sites.begin(), support_sites.end());
  for (std::size_t i = 0; i < support_sites.size(); ++i) {
    int s = support_sites[i];
    if (s < 1 || s > n) throw std::invalid_argument("SiteIndexer: support site out of range");
    if (i > 0 && support_sites[i - 1] == s)
      throw std::invalid_argument("SiteIndexer: duplicate support site");
  }

  SiteIndexer ix;
  ix.n = n;
  ix.support = std::move(support_sites);
  const int k = ix.k();

  std::vector<long> sup_stride(k);
  for (int p = 0; p < k; ++p) sup_stride[p] = pow3(n - ix.support[p]);

  std::vector<long> env_stride;
  env_stride.reserve(n - k);
  for (int s = 1; s <= n; ++s) {
    if (!std::binary_search(ix.support.begin(), ix.support.end(), s))
      env_stride.push_back(pow3(n - s));
  }

  ix.sup_lift.resize(pow3(k));
  for (long ls = 0; ls < static_cast<long>(ix.sup_lift.size()); ++ls) {
    long full = 0;
    for (int p = 0; p < k; ++p) full += ((ls / pow3(k - 1 - p)) % 3) * sup_stride[p];
    ix.sup_lift[ls] = full;
  }

  const int ek = n - k;
  ix.env_lift.resize(pow3(ek));
  for (long le = 0; le < static_cast<long>(ix.env_lift.size()); ++le) {
    long full = 0;
    for (int p = 0; p < ek; ++p) full += ((le / pow3(ek - 1 - p)) % 3) * env_stride[p];
    ix.env_lift[le] = full;
  }
  return ix;
}

WeightedTermSet WeightedTermSet::build(const std::vector<TripletList>& terms, long dim) {
  WeightedTermSet set;
  set.dim = dim;
  set.term_count = static_cast<int>(terms.size());

  std::vector<long> counts(dim + 1, 0);
  for (const auto& t : terms)
    for (const auto& e : t) ++counts[e.r + 1];
  set.row_ptr.assign(dim + 1, 0);
  for (long r = 0; r < dim; ++r) set.row_ptr[r + 1] = set.row_ptr[r] + counts[r + 1];

  set.entries.resize(set.row_ptr[dim]);
  std::vector<long> cursor(set.row_ptr.begin(), set.row_ptr.end() - 1);
  for (int i = 0; i < set.term_count; ++i) {
    for (const auto& e : terms[i]) {
      set.entries[cursor[e.r]++] = Entry{e.c, i, e.v};
    }
  }
  return set;
}

namespace kernels {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat embed_dense(const Mat& local, const SiteIndexer& ix) {
  const long ld = ix.local_dim();
  if (local.rows() != ld || local.cols() != ld)
    throw std::invalid_argument("embed_dense: local dimension does not match support");
  const long dim = pow3(ix.n);
  Mat out = Mat::Zero(dim, dim);
#pragma omp parallel for schedule(static)
  for (long lr = 0; lr < ld; ++lr) {
    for (long lc = 0; lc < ld; ++lc) {
      const Cd v = local(lr, lc);
      if (v == Cd(0.0, 0.0)) continue;
      for (long e = 0; e < static_cast<long>(ix.env_lift.size()); ++e)
        out(ix.sup_lift[lr] + ix.env_lift[e], ix.sup_lift[lc] + ix.env_lift[e]) = v;
    }
  }
  return out;
}

TripletList embed_triplets(const TripletList& local, const SiteIndexer& ix) {
  TripletList out;
  out.reserve(local.size() * ix.env_lift.size());
  for (const auto& t : local) {
    for (long e = 0; e < static_cast<long>(ix.env_lift.size()); ++e) {
      out.push_back(Triplet{static_cast<int>(ix.sup_lift[t.r] + ix.env_lift[e]),
                            static_cast<int>(ix.sup_lift[t.c] + ix.env_lift[e]), t.v});
    }
  }
  return out;
}

TripletList dense_to_triplets(const Mat& m, double drop_tol) {
  TripletList out;
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > drop_tol)
        out.push_back(Triplet{static_cast<int>(r), static_cast<int>(c), m(r, c)});
  return out;
}

Mat partial_trace(const Mat& full, const SiteIndexer& ix) {
  const long dim = pow3(ix.n);
  if (full.rows() != dim || full.cols() != dim)
    throw std::invalid_argument("partial_trace: matrix dimension does not match site count");
  const long ld = ix.local_dim();
  Mat out(ld, ld);
#pragma omp parallel for schedule(static)
  for (long lr = 0; lr < ld; ++lr) {
    for (long lc = 0; lc < ld; ++lc) {
      Cd acc(0.0, 0.0);
      for (long e = 0; e < static_cast<long>(ix.env_lift.size()); ++e)
        acc += full(ix.sup_lift[lr] + ix.env_lift[e], ix.sup_lift[lc] + ix.env_lift[e]);
      out(lr, lc) = acc;
    }
  }
  return out;
}

Cd expect_one(const Mat& rho, const TripletList& term) {
  // tr(rho B) = sum_{r,c} B(r,c) rho(c,r)
  Cd acc(0.0, 0.0);
  for (const auto& t : term) acc += t.v * rho(t.c, t.r);
  return acc;
}

RealVec expect_many(const Mat& rho, const std::vector<TripletList>& terms) {
  RealVec out(static_cast<long>(terms.size()));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(terms.size()); ++i)
    out(i) = expect_one(rho, terms[i]).real();
  return out;
}

Mat accumulate(const RealVec& w, const WeightedTermSet& set) {
  if (w.size() != set.term_count)
    throw std::invalid_argument("accumulate: weight count does not match term count");
  Mat out = Mat::Zero(set.dim, set.dim);
#pragma omp parallel for schedule(static)
  for (long r = 0; r < set.dim; ++r) {
    for (long p = set.row_ptr[r]; p < set.row_ptr[r + 1]; ++p) {
      const auto& e = set.entries[p];
      out(r, e.col) += w(e.term) * e.v;
    }
  }
  return out;
}

namespace serial {

// Everything below follows the definitions one index at a time; these are the
// reference implementations the fast kernels are tested against.

Mat embed_dense(const Mat& local, int n, const std::vector<int>& support) {
  std::vector<int> sup = support;
  std::sort(sup.begin(), sup.end());
  const long dim = pow3(n);
  const int k = static_cast<int>(sup.size());
  Mat out = Mat::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      bool env_equal = true;
      for (int s = 1; s <= n && env_equal; ++s) {
        if (std::find(sup.begin(), sup.end(), s) != sup.end()) continue;
        if (digit_at(i, s, n) != digit_at(j, s, n)) env_equal = false;
      }
      if (!env_equal) continue;
      long li = 0, lj = 0;
      for (int p = 0; p < k; ++p) {
        li = li * 3 + digit_at(i, sup[p], n);
        lj = lj * 3 + digit_at(j, sup[p], n);
      }
      out(i, j) = local(li, lj);
    }
  }
  return out;
}

Mat partial_trace(const Mat& full, int n, const std::vector<int>& keep) {
  std::vector<int> sup = keep;
  std::sort(sup.begin(), sup.end());
  const long dim = pow3(n);
  const int k = static_cast<int>(sup.size());
  Mat out = Mat::Zero(pow3(k), pow3(k));
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      bool env_equal = true;
      for (int s = 1; s <= n && env_equal; ++s) {
        if (std::find(sup.begin(), sup.end(), s) != sup.end()) continue;
        if (digit_at(i, s, n) != digit_at(j, s, n)) env_equal = false;
      }
      if (!env_equal) continue;
      long li = 0, lj = 0;
      for (int p = 0; p < k; ++p) {
        li = li * 3 + digit_at(i, sup[p], n);
        lj = lj * 3 + digit_at(j, sup[p], n);
      }
      out(li, lj) += full(i, j);
    }
  }
  return out;
}

RealVec expect_many(const Mat& rho, int n, const std::vector<std::vector<int>>& supports,
                    const std::vector<Mat>& locals) {
  RealVec out(static_cast<long>(supports.size()));
  for (std::size_t i = 0; i < supports.size(); ++i) {
    Mat b = embed_dense(locals[i], n, supports[i]);
    out(static_cast<long>(i)) = (rho * b).trace().real();
  }
  return out;
}

Mat accumulate(const RealVec& w, int n, const std::vector<std::vector<int>>& supports,
               const std::vector<Mat>& locals) {
  const long dim = pow3(n);
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < supports.size(); ++i)
    out += w(static_cast<long>(i)) * embed_dense(locals[i], n, supports[i]);
  return out;
}

}  // namespace serial
}  // namespace kernels
}  // namespace qorrel

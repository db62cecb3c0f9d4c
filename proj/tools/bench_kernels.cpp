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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qorrel/kernels.hpp"
#include "qorrel/maxent.hpp"
#include "qorrel/tensor.hpp"
#include "qorrel/threads.hpp"

/* Timing comparison of the parallel kernels against their definition-direct
 * serial references, with an agreement check on every pair. Numbers are
 * wall-clock; on a single hardware thread the parallel column mostly shows
 * the pragma overhead.
 */

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  const auto start = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

struct Row {
  std::string name;
  double parallel_ms;
  double serial_ms;
  double max_diff;
};

}  // namespace

int main(int argc, char** argv) {
  qorrel::apply_thread_cap();
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  if (n < 2 || n > 8) {
    std::fprintf(stderr, "usage: %s [n]   with 2 <= n <= 8\n", argv[0]);
    return 2;
  }
  const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

  const long dim = qorrel::pow3(n);
  const qorrel::Mat rho_like = [&] {
    qorrel::Mat h = qorrel::random_hermitian(dim, 42);
    qorrel::Mat sq = h * h.adjoint();
    sq /= sq.trace().real();
    return sq;
  }();

  std::vector<int> support;
  for (int s = 1; s <= (n + 1) / 2; ++s) support.push_back(2 * s - 1);  // odd sites
  const qorrel::SiteIndexer ix = qorrel::SiteIndexer::build(n, support);
  const qorrel::Mat local = qorrel::random_hermitian(ix.local_dim(), 7);

  const int basis_level = n >= 4 ? 2 : n - 1;
  const qorrel::MarginalBasis basis = qorrel::MarginalBasis::build(n, basis_level);
  const std::vector<qorrel::Mat> locals = basis.dense_locals();
  qorrel::RealVec weights(basis.term_count());
  for (int i = 0; i < basis.term_count(); ++i)
    weights(i) = std::sin(0.1 * (i + 1));  // fixed, nothing special

  std::vector<Row> rows;

  {
    qorrel::Mat par, ser;
    const double tp = time_ms([&] { par = qorrel::kernels::embed_dense(local, ix); }, reps);
    const double ts =
        time_ms([&] { ser = qorrel::kernels::serial::embed_dense(local, n, support); }, reps);
    rows.push_back({"embed_dense", tp, ts, (par - ser).cwiseAbs().maxCoeff()});
  }
  {
    qorrel::Mat par, ser;
    const double tp = time_ms([&] { par = qorrel::kernels::partial_trace(rho_like, ix); }, reps);
    const double ts =
        time_ms([&] { ser = qorrel::kernels::serial::partial_trace(rho_like, n, support); },
                reps);
    rows.push_back({"partial_trace", tp, ts, (par - ser).cwiseAbs().maxCoeff()});
  }
  {
    qorrel::RealVec par, ser;
    const double tp = time_ms([&] { par = basis.expectations(rho_like); }, reps);
    const double ts = time_ms(
        [&] {
          ser = qorrel::kernels::serial::expect_many(rho_like, n, basis.supports(), locals);
        },
        1);
    rows.push_back({"expect_many", tp, ts, (par - ser).cwiseAbs().maxCoeff()});
  }
  {
    qorrel::Mat par, ser;
    const double tp = time_ms([&] { par = basis.weighted_sum(weights); }, reps);
    const double ts = time_ms(
        [&] {
          ser = qorrel::kernels::serial::accumulate(weights, n, basis.supports(), locals);
        },
        1);
    rows.push_back({"accumulate", tp, ts, (par - ser).cwiseAbs().maxCoeff()});
  }

  std::printf("kernel benchmark: n = %d, dim = %ld, threads = %d, basis terms = %d\n", n,
              dim, qorrel::thread_cap(), basis.term_count());
  std::printf("%-15s %14s %14s %12s %10s\n", "kernel", "parallel (ms)", "serial (ms)",
              "speedup", "max diff");
  bool all_match = true;
  for (const auto& r : rows) {
    std::printf("%-15s %14.3f %14.3f %11.2fx %10.2e\n", r.name.c_str(), r.parallel_ms,
                r.serial_ms, r.serial_ms / r.parallel_ms, r.max_diff);
    if (r.max_diff > 1e-12) all_match = false;
  }
  if (!all_match) {
    std::fprintf(stderr, "kernel outputs disagree beyond 1e-12\n");
    return 1;
  }
  return 0;
}

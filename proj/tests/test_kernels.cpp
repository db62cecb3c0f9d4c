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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "qorrel/kernels.hpp"
#include "qorrel/tensor.hpp"

using namespace qorrel;

namespace {

Mat random_state(int n, std::uint64_t seed) {
  Mat h = random_hermitian(pow3(n), seed);
  Mat rho = h * h.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("digit_at reads big-endian base-3 digits") {
  // index 14 in base 3 over three sites is 112
  CHECK(digit_at(14, 1, 3) == 1);
  CHECK(digit_at(14, 2, 3) == 1);
  CHECK(digit_at(14, 3, 3) == 2);
  CHECK(digit_at(0, 1, 3) == 0);
  CHECK(digit_at(26, 2, 3) == 2);
}

TEST_CASE("site indexer validates its support") {
  CHECK_NOTHROW(SiteIndexer::build(4, {2, 4}));
  // unsorted input is normalized rather than rejected
  SiteIndexer sorted = SiteIndexer::build(4, {4, 2});
  CHECK(sorted.support == std::vector<int>{2, 4});
  CHECK_THROWS_AS(SiteIndexer::build(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SiteIndexer::build(4, {2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(SiteIndexer::build(4, {2, 2}), std::invalid_argument);

  SiteIndexer ix = SiteIndexer::build(3, {1, 3});
  CHECK(ix.k() == 2);
  CHECK(ix.local_dim() == 9);
  CHECK(ix.env_dim() == 3);
}

TEST_CASE("parallel and serial embeddings agree") {
  const int n = 4;
  for (const auto& support : {std::vector<int>{1}, {3}, {1, 4}, {2, 3}, {1, 2, 4}}) {
    Mat local = random_hermitian(pow3(static_cast<int>(support.size())),
                                 41 + support.front());
    Mat par = kernels::embed_dense(local, SiteIndexer::build(n, support));
    Mat ser = kernels::serial::embed_dense(local, n, support);
    CHECK((par - ser).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("triplet embedding matches the dense embedding") {
  const int n = 3;
  Mat local = random_hermitian(9, 77);
  TripletList trips = kernels::dense_to_triplets(local);
  SiteIndexer ix = SiteIndexer::build(n, {1, 3});
  TripletList lifted = kernels::embed_triplets(trips, ix);

  Mat dense = kernels::embed_dense(local, SiteIndexer::build(n, {1, 3}));
  Mat rebuilt = Mat::Zero(pow3(n), pow3(n));
  for (const auto& t : lifted) rebuilt(t.r, t.c) += t.v;
  CHECK((dense - rebuilt).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dense_to_triplets drops exact zeros and honors the tolerance") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 2) = Cd(0.0, 1e-6);
  CHECK(kernels::dense_to_triplets(m).size() == 2);
  CHECK(kernels::dense_to_triplets(m, 1e-3).size() == 1);
}

TEST_CASE("parallel and serial partial traces agree on random states") {
  const int n = 4;
  Mat rho = random_state(n, 13);
  for (const auto& keep : {std::vector<int>{2}, {1, 3}, {2, 3, 4}}) {
    Mat par = kernels::partial_trace(rho, SiteIndexer::build(n, keep));
    Mat ser = kernels::serial::partial_trace(rho, n, keep);
    CHECK((par - ser).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("expect_many agrees with dense traces and the serial path") {
  const int n = 3;
  Mat rho = random_state(n, 29);

  std::vector<std::vector<int>> supports = {{1}, {2, 3}, {1, 2, 3}};
  std::vector<Mat> locals;
  std::vector<TripletList> terms;
  for (const auto& s : supports) {
    Mat local = random_hermitian(pow3(static_cast<int>(s.size())), 100 + s.front());
    locals.push_back(local);
    SiteIndexer ix = SiteIndexer::build(n, s);
    terms.push_back(kernels::embed_triplets(kernels::dense_to_triplets(local), ix));
  }

  RealVec par = kernels::expect_many(rho, terms);
  RealVec ser = kernels::serial::expect_many(rho, n, supports, locals);
  REQUIRE(par.size() == 3);
  for (int i = 0; i < 3; ++i) {
    Mat dense = kernels::embed_dense(locals[i], SiteIndexer::build(n, supports[i]));
    const double direct = (dense * rho).trace().real();
    CHECK(par(i) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(par(i) == doctest::Approx(ser(i)).epsilon(1e-14));
  }
}

TEST_CASE("accumulate builds the weighted operator sum both ways") {
  const int n = 3;
  std::vector<std::vector<int>> supports = {{1}, {2}, {1, 3}};
  std::vector<Mat> locals;
  std::vector<TripletList> terms;
  for (const auto& s : supports) {
    Mat local = random_hermitian(pow3(static_cast<int>(s.size())), 7 * s.front() + 1);
    locals.push_back(local);
    SiteIndexer ix = SiteIndexer::build(n, s);
    terms.push_back(kernels::embed_triplets(kernels::dense_to_triplets(local), ix));
  }
  WeightedTermSet set = WeightedTermSet::build(terms, pow3(n));
  CHECK(set.term_count == 3);

  RealVec w(3);
  w << 0.5, -1.25, 2.0;
  Mat par = kernels::accumulate(w, set);
  Mat ser = kernels::serial::accumulate(w, n, supports, locals);
  CHECK((par - ser).cwiseAbs().maxCoeff() < 1e-15);

  Mat direct = Mat::Zero(pow3(n), pow3(n));
  for (int i = 0; i < 3; ++i)
    direct += w(i) * kernels::embed_dense(locals[i], SiteIndexer::build(n, supports[i]));
  CHECK((par - direct).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("expect_one reads a single expectation") {
  Mat rho = random_state(2, 55);
  Mat local = random_hermitian(3, 4);
  SiteIndexer ix = SiteIndexer::build(2, {2});
  TripletList term = kernels::embed_triplets(kernels::dense_to_triplets(local), ix);
  Mat dense = kernels::embed_dense(local, SiteIndexer::build(2, {2}));
  const Cd got = kernels::expect_one(rho, term);
  CHECK(got.real() ==
        doctest::Approx((dense * rho).trace().real()).epsilon(1e-13));
  CHECK(std::abs(got.imag()) < 1e-13);
}

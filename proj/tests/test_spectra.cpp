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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qorrel/spectra.hpp"
#include "qorrel/states.hpp"
#include "qorrel/tensor.hpp"

using namespace qorrel;

namespace {

constexpr double kPi4 = 0.78539816339744831;
constexpr double kLn2 = 0.69314718055994531;
constexpr double kLn3 = 1.0986122886681098;

FamilyParams pure_params(int n, double theta, double phi, int m = 1) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.theta = theta;
  p.phi = phi;
  p.c = spherical_coeff(theta, phi);
  return p;
}

Mat3 outer_square(const double (&a)[3]) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = a[i] * a[j];
  return c;
}

// Coefficients of the actual pure states, coherences included. Family 1 puts
// cos(theta) on the all-zeros string, family 2 on the all-ones string.
FamilyParams pure1_params(int n, double theta, double phi) {
  FamilyParams p = pure_params(n, theta, phi);
  const double a[3] = {std::cos(theta), std::sin(theta) * std::cos(phi),
                       std::sin(theta) * std::sin(phi)};
  p.c = outer_square(a);
  return p;
}

FamilyParams pure2_params(int n, int m, double theta, double phi) {
  FamilyParams p = pure_params(n, theta, phi, m);
  const double a[3] = {std::sin(theta) * std::cos(phi), std::cos(theta),
                       std::sin(theta) * std::sin(phi)};
  p.c = outer_square(a);
  return p;
}

bool has_note(const CorrelationSpectrum& s, const std::string& needle) {
  for (const auto& n : s.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("binary and ternary weight entropies hit their landmarks") {
  CHECK(h2(0.0) == doctest::Approx(0.0));
  CHECK(h2(kPi4) == doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(h3(kPi4, kPi4) == doctest::Approx(1.5 * kLn2).epsilon(1e-14));

  // against a direct Shannon sum for generic angles
  const double t = 0.5, p = 0.4;
  const double w0 = std::pow(std::sin(t) * std::cos(p), 2);
  const double w1 = std::pow(std::cos(t), 2);
  const double w2 = std::pow(std::sin(t) * std::sin(p), 2);
  const double direct = -w0 * std::log(w0) - w1 * std::log(w1) - w2 * std::log(w2);
  CHECK(h3(t, p) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(shannon_diag(spherical_coeff(t, p)) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("coefficient entropy obeys the dephasing inequality") {
  // mixing in any basis can only raise the Shannon entropy of the diagonal
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    Mat3 c = random_psd_coeff(seed);
    CHECK(coeff_entropy(c) <= shannon_diag(c) + 1e-12);
  }
  Mat3 diag = spherical_coeff(0.5, 0.4);
  CHECK(coeff_entropy(diag) == doctest::Approx(shannon_diag(diag)).epsilon(1e-12));
}

TEST_CASE("head mixing angle interpolates between mixed and pure marginals") {
  // at the maximal slice the site-1 marginal is pure
  const double top = 0.9553166181245093;
  CHECK(std::cos(chi_of_alpha(top)) == doctest::Approx(1.0).epsilon(1e-8));
  // tiny mixing leaves the marginal nearly maximally mixed
  const double chi_small = chi_of_alpha(1e-4);
  CHECK(std::pow(std::cos(chi_small), 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  // monotone in between
  double prev = std::pow(std::cos(chi_of_alpha(0.05)), 2);
  for (double a : {0.2, 0.4, 0.6, 0.8, 0.95}) {
    const double cur = std::pow(std::cos(chi_of_alpha(a)), 2);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("family-1 closed form telescopes to the exact total correlation") {
  SUBCASE("pure state") {
    FamilyParams p = pure1_params(3, 0.5, 0.4);
    CorrelationSpectrum s = ghz1_spectrum(p);
    CHECK(s.level(2) == doctest::Approx(2.0 * h3(0.5, 0.4)).epsilon(1e-14));
    CHECK(s.level(3) == doctest::Approx(h3(0.5, 0.4)).epsilon(1e-14));
    const double exact = total_correlation(ghz1(p));
    CHECK(std::abs(s.total - exact) < 1e-9);
  }

  SUBCASE("mixed coefficients") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
      FamilyParams p;
      p.n = 4;
      p.c = random_psd_coeff(seed);
      CorrelationSpectrum s = ghz1_spectrum(p);
      const double hd = shannon_diag(p.c);
      CHECK(s.level(2) == doctest::Approx(3.0 * hd).epsilon(1e-12));
      CHECK(s.level(4) ==
            doctest::Approx(hd - coeff_entropy(p.c)).epsilon(1e-10));
      CHECK(s.level(3) == 0.0);
      CHECK(std::abs(s.total - total_correlation(ghz1(p))) < 1e-9);
    }
  }

  SUBCASE("two sites merge the boundary levels") {
    FamilyParams p = pure1_params(2, 0.5, 0.4);
    CorrelationSpectrum s = ghz1_spectrum(p);
    // (n - 1) * hd from the pairwise level plus hd - S(c) from the top
    // level, with S(c) = 0 for a pure coefficient matrix
    CHECK(s.level(2) == doctest::Approx(2.0 * h3(0.5, 0.4)).epsilon(1e-12));
    CHECK(has_note(s, "coincide"));
    CHECK(std::abs(s.total - total_correlation(ghz1(p))) < 1e-9);
  }
}

TEST_CASE("family-2 closed form places the coherence jump at the right level") {
  SUBCASE("pure state, deep split") {
    const int n = 5, m = 1;
    FamilyParams p = pure2_params(n, m, kPi4, kPi4);
    CorrelationSpectrum s = ghz2_spectrum(p);

    // the middle contribution for a pure state is sin^2(theta) h2(phi)
    const double middle = std::pow(std::sin(kPi4), 2) * h2(kPi4);
    CHECK(s.level(n - m) == doctest::Approx(middle).epsilon(1e-12));
    CHECK(s.level(n) == doctest::Approx(h2(kPi4)).epsilon(1e-12));
    CHECK(s.level(3) == 0.0);
    CHECK(std::abs(s.total - total_correlation(ghz2(p))) < 1e-9);
  }

  SUBCASE("merge when the jump lands on the pairwise level") {
    const int n = 4, m = 2;
    FamilyParams p = pure2_params(n, m, kPi4, kPi4);
    CorrelationSpectrum s = ghz2_spectrum(p);
    CHECK(has_note(s, "merged"));
    CHECK(s.level(3) == 0.0);
    CHECK(std::abs(s.total - total_correlation(ghz2(p))) < 1e-9);
  }

  SUBCASE("no decomposition when the jump would land below the pairwise level") {
    FamilyParams p = pure2_params(3, 2, kPi4, kPi4);  // n - m = 1
    CHECK_THROWS_AS(ghz2_spectrum(p), std::invalid_argument);
  }

  SUBCASE("dephased coefficients kill the jump and the split becomes invisible") {
    FamilyParams p = pure_params(3, 0.5, 0.4, 2);  // n - m = 1 but diagonal c
    p.c = spherical_coeff(0.5, 0.4);               // no 0-2 coherence at all
    CorrelationSpectrum s = ghz2_spectrum(p);      // must not throw: jump is zero
    CHECK(std::abs(s.total - total_correlation(ghz2(p))) < 1e-9);
  }

  SUBCASE("partially coherent coefficients split the jump against a direct oracle") {
    const int n = 4, m = 1;
    FamilyParams p = pure_params(n, 0.6, 0.5, m);
    p.c(0, 2) = Cd(0.12, 0.05);
    p.c(2, 0) = std::conj(p.c(0, 2));
    validate_coeff(p.c);
    CorrelationSpectrum s = ghz2_spectrum(p);

    // oracle for the jump: Shannon entropy of the diagonal minus the entropy
    // of the dephased-except-0-2 block
    Mat3 kept = Mat3::Zero();
    kept(0, 0) = p.c(0, 0);
    kept(1, 1) = p.c(1, 1);
    kept(2, 2) = p.c(2, 2);
    kept(0, 2) = p.c(0, 2);
    kept(2, 0) = p.c(2, 0);
    const double jump = shannon_diag(p.c) - coeff_entropy(kept);
    CHECK(jump > 0.0);
    CHECK(s.level(n - m) == doctest::Approx(jump).epsilon(1e-10));
    CHECK(s.level(n) ==
          doctest::Approx(coeff_entropy(kept) - coeff_entropy(p.c)).epsilon(1e-9));
    CHECK(std::abs(s.total - total_correlation(ghz2(p))) < 1e-9);
  }
}

TEST_CASE("slice family closed form telescopes for every admissible angle") {
  for (double alpha : {0.3, 0.6, 0.9553166181245093}) {
    for (int n : {3, 4, 5}) {
      CorrelationSpectrum s = ms_spectrum(n, alpha);
      const double chi = chi_of_alpha(alpha);
      // at n == 3 the ln3 plateau level coincides with the pairwise level
      // and is folded into it, so the expectation gains one extra ln3
      const double merged = (n == 3) ? kLn3 : 0.0;
      CHECK(s.level(2) ==
            doctest::Approx(h3(chi, kPi4) + (n - 2) * kLn3 + merged)
                .epsilon(1e-12));
      if (n > 3) CHECK(s.level(n - 1) == doctest::Approx(kLn3).epsilon(1e-12));
      CHECK(s.level(n) == 0.0);
      CHECK(std::abs(s.total - total_correlation(ms_state(n, alpha))) < 1e-9);
    }
  }
  // coinciding boundary levels at three sites add up instead of stacking
  CorrelationSpectrum s3 = ms_spectrum(3, 0.6);
  CHECK(s3.level(2) ==
        doctest::Approx(h3(chi_of_alpha(0.6), kPi4) + kLn3 + kLn3).epsilon(1e-12));
  CHECK(has_note(s3, "coincide"));

  CHECK_THROWS_AS(ms_spectrum(2, 0.5), std::invalid_argument);
}

TEST_CASE("spectra carry their bookkeeping fields") {
  FamilyParams p = pure_params(3, 0.5, 0.4);
  CorrelationSpectrum s = ghz1_spectrum(p);
  CHECK(s.n == 3);
  CHECK(s.method == "closed-form");
  CHECK(s.values.count(2) == 1);
  CHECK(s.values.count(3) == 1);
  CHECK(s.level(7) == 0.0);
  double sum = 0.0;
  for (const auto& kv : s.values) sum += kv.second;
  CHECK(s.total == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("total correlation matches the entropy arithmetic directly") {
  FamilyParams p = pure_params(3, kPi4, kPi4);
  DensityMatrix rho = ghz1(p);
  double sum = 0.0;
  for (int site = 1; site <= 3; ++site)
    sum += von_neumann_entropy(partial_trace(rho, {site}));
  CHECK(total_correlation(rho) ==
        doctest::Approx(sum - von_neumann_entropy(rho)).epsilon(1e-12));
}

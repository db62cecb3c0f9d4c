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
#include <complex>
#include <vector>

#include "qorrel/operators.hpp"
#include "qorrel/states.hpp"
#include "qorrel/tensor.hpp"

using namespace qorrel;

namespace {

constexpr double kPi4 = 0.78539816339744831;

FamilyParams pure_params(int n, double theta, double phi, int m = 1) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.theta = theta;
  p.phi = phi;
  p.alpha = 0.6;
  p.c = spherical_coeff(theta, phi);
  return p;
}

}  // namespace

TEST_CASE("coefficient validation accepts physical matrices and rejects the rest") {
  CHECK_NOTHROW(validate_coeff(spherical_coeff(0.5, 0.4)));
  CHECK_NOTHROW(validate_coeff(random_psd_coeff(3)));

  Mat3 bad_trace = Mat3::Identity();
  CHECK_THROWS_AS(validate_coeff(bad_trace), std::invalid_argument);

  Mat3 nonherm = Mat3::Identity() / 3.0;
  nonherm(0, 2) = Cd(0.2, 0.0);
  CHECK_THROWS_AS(validate_coeff(nonherm), std::invalid_argument);

  Mat3 negative = Mat3::Zero();
  negative(0, 0) = 1.3;
  negative(1, 1) = -0.3;
  CHECK_THROWS_AS(validate_coeff(negative), std::invalid_argument);
}

TEST_CASE("spherical coefficients round-trip through the angle extraction") {
  for (double theta : {0.2, 0.5, kPi4, 1.2}) {
    for (double phi : {0.1, 0.4, kPi4, 1.3}) {
      Mat3 c = spherical_coeff(theta, phi);
      CHECK(std::abs(c.trace().real() - 1.0) < 1e-15);
      double t = 0.0, p = 0.0;
      spherical_angles(c, t, p);
      CHECK(t == doctest::Approx(theta).epsilon(1e-12));
      CHECK(p == doctest::Approx(phi).epsilon(1e-12));
    }
  }
}

TEST_CASE("random coefficient draws are reproducible full-rank density matrices") {
  Mat3 a = random_psd_coeff(11);
  Mat3 b = random_psd_coeff(11);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  Eigen::SelfAdjointEigenSolver<Mat3> es(a);
  CHECK(es.eigenvalues().minCoeff() > 1e-8);
  CHECK(std::abs(a.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("pure family-1 construction matches the coefficient form") {
  const int n = 3;
  const double theta = 0.5, phi = 0.4;
  DensityMatrix direct = ghz1_pure(n, theta, phi);

  // amplitude convention: cos(t) on |0..0>, sin(t)cos(p) on |1..1>
  Vec psi = std::cos(theta) * repeated_ket(n, 0) +
            std::sin(theta) * std::cos(phi) * repeated_ket(n, 1) +
            std::sin(theta) * std::sin(phi) * repeated_ket(n, 2);
  CHECK((direct.data - projector(psi)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(ghz1_pure(n, -0.2, phi), std::invalid_argument);
  CHECK_THROWS_AS(ghz1_pure(n, theta, 1.8), std::invalid_argument);
}

TEST_CASE("mixed family-1 state carries the coefficient matrix on its strings") {
  FamilyParams p;
  p.n = 3;
  p.c = random_psd_coeff(21);
  DensityMatrix rho = ghz1(p);
  CHECK(rho.dim() == 27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const long ri = i * 13;  // 13 = 9 + 3 + 1, index of |iii>
      const long cj = j * 13;
      CHECK(std::abs(rho.data(ri, cj) - p.c(i, j)) < 1e-14);
    }
  // everything off the string block vanishes
  CHECK(std::abs(rho.data(1, 1)) == 0.0);
  CHECK(std::abs(rho.data(0, 5)) == 0.0);
}

TEST_CASE("family-2 basis replaces the third string by the split string") {
  const int n = 4, m = 2;
  FamilyParams p = pure_params(n, kPi4, 0.9, m);
  DensityMatrix rho = ghz2(p);

  // |b2> = |0 0 2 2> lives at index 0*27 + 0*9 + 2*3 + 2 = 8
  const long b2 = 8;
  CHECK(std::abs(rho.data(b2, b2) - p.c(2, 2)) < 1e-14);
  const long b0 = 0, b1 = 27 + 9 + 3 + 1;
  CHECK(std::abs(rho.data(b0, b2) - p.c(0, 2)) < 1e-14);
  CHECK(std::abs(rho.data(b1, b1) - p.c(1, 1)) < 1e-14);

  CHECK_THROWS_AS([&] {
    FamilyParams bad = p;
    bad.m = n;  // split string would have no tail
    ghz2(bad);
  }(), std::invalid_argument);
}

TEST_CASE("pure family-2 state matches its amplitude definition") {
  const int n = 3, m = 1;
  const double theta = 0.7, phi = 0.3;
  DensityMatrix rho = ghz2_pure(n, m, theta, phi);
  Vec psi = std::sin(theta) * std::cos(phi) * repeated_ket(n, 0) +
            std::cos(theta) * repeated_ket(n, 1) +
            std::sin(theta) * std::sin(phi) * basis_ket(n, {0, 2, 2});
  CHECK((rho.data - projector(psi)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("slice strings are orthonormal and assemble into a pure state") {
  const int n = 4;
  for (double alpha : {0.3, 0.6, 0.9553166181245093}) {
    std::vector<Vec> kets = ms_basis_kets(n, alpha);
    REQUIRE(kets.size() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Cd ov = kets[i].dot(kets[j]);
        CHECK(std::abs(ov - (i == j ? Cd(1, 0) : Cd(0, 0))) < 1e-13);
      }

    DensityMatrix rho = ms_state(n, alpha);
    CHECK(von_neumann_entropy(rho) < 1e-10);
    Vec sum = (kets[0] + kets[1] + kets[2]) / std::sqrt(3.0);
    CHECK(pure_state_fidelity(rho.data, sum) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ms_state(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ms_state(4, 1.2), std::invalid_argument);  // past arctan(sqrt 2)
}

TEST_CASE("diagonal companions dephase in the right basis") {
  FamilyParams p = pure_params(3, 0.5, 0.4);
  DensityMatrix dg = diagonal_companion(p, Family::Ghz1);
  // diagonal part of the coefficient matrix on the repeated strings
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(dg.data(i * 13, i * 13) - p.c(i, i)) < 1e-14);
  CHECK(dg.data.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));

  // family 2 with the retained coherence keeps exactly the 0-2 block
  FamilyParams q = pure_params(4, kPi4, kPi4, 2);
  q.c(0, 2) = Cd(0.1, 0.05);
  q.c(2, 0) = std::conj(q.c(0, 2));
  validate_coeff(q.c);
  DensityMatrix b2 = diagonal_companion(q, Family::Ghz2, true);
  const long i0 = 0, i2 = 8;
  CHECK(std::abs(b2.data(i0, i2) - q.c(0, 2)) < 1e-14);
  CHECK(std::abs(b2.data(i2, i0) - q.c(2, 0)) < 1e-14);

  CHECK_THROWS_AS(diagonal_companion(p, Family::Ghz1, true), std::invalid_argument);

  // slice family: equal mixture of the slice strings
  DensityMatrix ds = diagonal_companion(p, Family::Ms);
  std::vector<Vec> kets = ms_basis_kets(3, p.alpha);
  Mat expect = Mat::Zero(27, 27);
  for (const auto& k : kets) expect += projector(k) / 3.0;
  CHECK((ds.data - expect).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("family-1 interpolation normalizes exactly as the closed form says") {
  // The partition function factorizes over the tail sites, giving
  // eta = ln(c11) - (n-1) ln(e^gamma + 2) for the digit-weighted field.
  const int n = 3;
  FamilyParams p = pure_params(n, 0.5, 0.4);
  const double gamma = 2.0;
  GammaState g = sigma_g_detail(p, gamma);

  const double c11 = p.c(1, 1).real();
  CHECK(g.knobs.eta ==
        doctest::Approx(std::log(c11) - (n - 1) * std::log(std::exp(gamma) + 2.0))
            .epsilon(1e-12));

  // knobs reproduce the log-ratios of the target weights
  CHECK(g.knobs.gamma2 ==
        doctest::Approx(0.5 * std::log(p.c(0, 0).real() / p.c(2, 2).real())));
  const double g1 = -0.5 * std::log(p.c(0, 0).real() * p.c(2, 2).real() /
                                    (c11 * c11));
  CHECK(g.knobs.gamma1 == doctest::Approx(g1).epsilon(1e-12));

  // direct check of rho = exp(A + eta)
  Mat rebuilt = herm_exp(g.exponent + g.knobs.eta * Mat::Identity(27, 27));
  CHECK((rebuilt - g.rho.data).cwiseAbs().maxCoeff() < 1e-12);

  // boundary angles have no finite field and must be rejected
  CHECK_THROWS_AS(sigma_g_detail(pure_params(n, 0.5, 0.0), gamma),
                  std::invalid_argument);
  CHECK_THROWS_AS(sigma_g_detail(pure_params(n, 0.0, 0.4), gamma),
                  std::invalid_argument);
}

TEST_CASE("family-2 interpolation normalization counts head and tail factors") {
  // Head sites contribute 2 cosh(gamma) + 1 each, tail sites e^gamma + 2 each.
  const int n = 4, m = 2;
  FamilyParams p = pure_params(n, 0.6, 0.5, m);
  const double gamma = 1.7;
  GammaState g = sigma_2_detail(p, gamma);

  const double expected_eta = std::log(p.c(1, 1).real()) -
                              m * std::log(2.0 * std::cosh(gamma) + 1.0) -
                              (n - m - 1) * std::log(std::exp(gamma) + 2.0);
  CHECK(g.knobs.eta == doctest::Approx(expected_eta).epsilon(1e-12));

  Mat rebuilt = herm_exp(g.exponent +
                         g.knobs.eta * Mat::Identity(g.rho.dim(), g.rho.dim()));
  CHECK((rebuilt - g.rho.data).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("interpolating states approach their companions monotonically") {
  const int n = 3;
  FamilyParams p = pure_params(n, kPi4, kPi4);

  SUBCASE("family 1") {
    DensityMatrix target = diagonal_companion(p, Family::Ghz1);
    double prev = 1.0;
    for (double gamma : {5.0, 10.0, 20.0}) {
      const double d = trace_distance(sigma_g(p, gamma), target);
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 1e-6);
  }

  SUBCASE("family 2 dephased") {
    FamilyParams q = pure_params(4, kPi4, kPi4, 1);
    DensityMatrix target = diagonal_companion(q, Family::Ghz2);
    CHECK(trace_distance(sigma_2(q, 25.0), target) < 1e-9);
  }

  SUBCASE("family 2 with retained coherence") {
    FamilyParams q = pure_params(3, kPi4, kPi4, 1);
    q.c(0, 2) = Cd(0.2, 0.0);
    q.c(2, 0) = Cd(0.2, 0.0);
    validate_coeff(q.c);
    DensityMatrix target = diagonal_companion(q, Family::Ghz2, true);
    CHECK(trace_distance(tau_2(q, 25.0), target) < 1e-9);
  }

  SUBCASE("slice family mixture") {
    DensityMatrix target = diagonal_companion(p, Family::Ms);
    CHECK(trace_distance(sigma_s(3, p.alpha, 25.0), target) < 1e-9);
  }

  SUBCASE("slice family exponential") {
    const double alpha = 0.9553166181245093;  // arctan(sqrt 2)
    DensityMatrix target = ms_state(3, alpha);
    CHECK(trace_distance(ms_exp_limit(3, alpha, 25.0), target) < 1e-9);
  }
}

TEST_CASE("interpolating states match the target marginals at the claimed level") {
  const int n = 3;
  FamilyParams p = pure_params(n, kPi4, kPi4);

  DensityMatrix rho1 = ghz1(p);
  DensityMatrix sg = sigma_g(p, 22.0);
  CHECK(max_marginal_residual(sg.data, rho1.data, n, n - 1) < 1e-8);

  DensityMatrix rho2 = ghz2(p);
  DensityMatrix s2 = sigma_2(p, 22.0);
  CHECK(max_marginal_residual(s2.data, rho2.data, n, n - p.m - 1) < 1e-8);

  // the exponential family converges at the rate of its spectral gap, which
  // is widest at the maximal slice angle
  const double top = 0.9553166181245093;
  DensityMatrix sliced = ms_state(n, top);
  DensityMatrix se = ms_exp_limit(n, top, 22.0);
  CHECK(max_marginal_residual(se.data, sliced.data, n, n) < 1e-8);
}

TEST_CASE("coherence-keeping interpolation rejects parameters without a finite field") {
  FamilyParams p = pure_params(3, 0.5, 0.4);
  // a pure coefficient matrix saturates the rotated-angle bound
  const double a0 = std::sin(0.5) * std::cos(0.4);
  const double a1 = std::cos(0.5);
  const double a2 = std::sin(0.5) * std::sin(0.4);
  const double amp[3] = {a0, a1, a2};
  Mat3 pure = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pure(i, j) = amp[i] * amp[j];
  p.c = pure;
  CHECK_THROWS_AS(tau_2_detail(p, 2.0), std::invalid_argument);
}

TEST_CASE("rotated-field knobs recover the coherence data") {
  FamilyParams p = pure_params(3, kPi4, kPi4, 1);
  p.c(0, 2) = Cd(0.15, 0.1);
  p.c(2, 0) = std::conj(p.c(0, 2));
  validate_coeff(p.c);
  GammaState t = tau_2_detail(p, 3.0);

  // the rotated split must reproduce |c02| through the stated identity
  const double s2t = 1.0 - p.c(1, 1).real();  // sin^2 theta
  const double c2p = (p.c(0, 0).real() - p.c(2, 2).real()) / s2t;
  const double c2vp = std::sqrt(c2p * c2p + 4.0 * std::norm(p.c(0, 2)) / (s2t * s2t));
  CHECK(std::tanh(t.knobs.gamma2) == doctest::Approx(c2vp).epsilon(1e-12));
  const double expected_zeta = 0.5 * std::arg(p.c(2, 0) / p.c(0, 2));
  CHECK(t.knobs.zeta == doctest::Approx(expected_zeta).epsilon(1e-12));
  CHECK(std::cos(t.knobs.xi) == doctest::Approx(c2p / c2vp).epsilon(1e-12));

  Mat rebuilt = herm_exp(t.exponent +
                         t.knobs.eta * Mat::Identity(t.rho.dim(), t.rho.dim()));
  CHECK((rebuilt - t.rho.data).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("site subset enumeration is complete and ordered") {
  auto subs = site_subsets(4, 2);
  CHECK(subs.size() == 6);
  CHECK(subs.front() == std::vector<int>{1, 2});
  CHECK(subs.back() == std::vector<int>{3, 4});
  CHECK(site_subsets(5, 3).size() == 10);

  FamilyParams p = pure_params(3, 0.5, 0.4);
  DensityMatrix rho = ghz1(p);
  CHECK(max_marginal_residual(rho.data, rho.data, 3, 2) == 0.0);
}

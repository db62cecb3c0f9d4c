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

#include "qorrel/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qorrel {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

void check_angle_range(double value, const char* who) {
  if (!(value >= -1e-12 && value <= kHalfPi + 1e-12)) {
    std::ostringstream msg;
    msg << who << ": angle " << value << " outside [0, pi/2]";
    throw std::invalid_argument(msg.str());
  }
}

// ln(2 cosh x) without overflow for large |x|
double log_2cosh(double x) {
  return std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x)));
}

// Spherical angles of the c-diagonal, guarded so the log-ratios below stay
// finite. The interpolating exponents need every diagonal weight strictly
// positive; callers with boundary angles get a clear rejection instead of
// infinities.
void guarded_angles(const Mat3& c, const char* who, double& theta, double& phi) {
  spherical_angles(c, theta, phi);
  if (theta < kAngleFloor || theta > kHalfPi - kAngleFloor) {
    std::ostringstream msg;
    msg << who << ": theta = " << theta << " too close to the degenerate boundary";
    throw std::invalid_argument(msg.str());
  }
  if (phi < kAngleFloor || phi > kHalfPi - kAngleFloor) {
    std::ostringstream msg;
    msg << who << ": phi = " << phi
        << " gives a rank-deficient diagonal; take the limit state instead";
    throw std::invalid_argument(msg.str());
  }
}

GammaKnobs field_knobs(double gamma, double theta, double phi) {
  GammaKnobs k;
  k.gamma = gamma;
  const double c2p = std::cos(2.0 * phi);
  if (std::abs(c2p) >= 1.0 - 1e-12)
    throw std::invalid_argument("gamma knobs: |cos 2phi| at 1 has no finite field");
  k.gamma2 = std::atanh(c2p);
  k.gamma1 = log_2cosh(k.gamma2) + 2.0 * std::log(1.0 / std::tan(theta));
  return k;
}

// Assembles rho = exp(A)/tr exp(A) plus the log-normalizer, shift-stable.
void finish_gamma_state(int n, const Mat& exponent, GammaState& out) {
  Spectrum s = eigh(exponent);
  RealVec shifted = (s.w.array() - s.w(0)).exp();
  const double z = shifted.sum();
  RealVec p = shifted / z;
  Mat rho = s.v * p.asDiagonal() * s.v.adjoint();
  out.rho = DensityMatrix{n, 0.5 * (rho + rho.adjoint())};
  out.knobs.eta = -(s.w(0) + std::log(z));
  out.exponent = exponent;
}

Vec family2_basis_ket(int n, int m, int which) {
  if (which == 0) return repeated_ket(n, 0);
  if (which == 1) return repeated_ket(n, 1);
  std::vector<int> digits(n, 2);
  for (int j = 0; j < m; ++j) digits[j] = 0;
  return basis_ket(n, digits);
}

DensityMatrix coefficients_over_basis(int n, const Mat3& c, const std::vector<Vec>& kets) {
  const long dim = pow3(n);
  Mat g = Mat::Zero(dim, dim);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (c(i, j) == Cd(0.0, 0.0)) continue;
      g += c(i, j) * (kets[i] * kets[j].adjoint());
    }
  return make_density(n, std::move(g));
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Ghz1: return "ghz1";
    case Family::Ghz2: return "ghz2";
    case Family::Ms: return "ms";
  }
  return "unknown";
}

void validate_coeff(const Mat3& c) {
  const double hdev = (c - c.adjoint()).cwiseAbs().maxCoeff();
  if (hdev > kHermTol) {
    std::ostringstream msg;
    msg << "coefficient matrix: Hermiticity deviation " << hdev;
    throw std::invalid_argument(msg.str());
  }
  const double tdev = std::abs(c.trace() - Cd(1.0, 0.0));
  if (tdev > kHermTol) {
    std::ostringstream msg;
    msg << "coefficient matrix: trace deviates from 1 by " << tdev;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(c, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kHermTol) {
    std::ostringstream msg;
    msg << "coefficient matrix: negative eigenvalue " << es.eigenvalues().minCoeff();
    throw std::invalid_argument(msg.str());
  }
}

Mat3 spherical_coeff(double theta, double phi) {
  Mat3 c = Mat3::Zero();
  const double st2 = std::sin(theta) * std::sin(theta);
  c(0, 0) = st2 * std::cos(phi) * std::cos(phi);
  c(1, 1) = std::cos(theta) * std::cos(theta);
  c(2, 2) = st2 * std::sin(phi) * std::sin(phi);
  return c;
}

void spherical_angles(const Mat3& c, double& theta, double& phi) {
  const double c00 = std::max(0.0, c(0, 0).real());
  const double c11 = std::max(0.0, c(1, 1).real());
  const double c22 = std::max(0.0, c(2, 2).real());
  theta = std::atan2(std::sqrt(c00 + c22), std::sqrt(c11));
  phi = std::atan2(std::sqrt(c22), std::sqrt(c00));
}

Mat3 random_psd_coeff(std::uint64_t seed) {
  Rng rng(seed);
  Mat3 g;
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 3; ++col) g(r, col) = Cd(rng.normal(), rng.normal());
  Mat3 c = g * g.adjoint();
  c /= c.trace().real();
  return c;
}

DensityMatrix ghz1(const FamilyParams& params) {
  if (params.n < 2) throw std::invalid_argument("ghz1: need n >= 2");
  validate_coeff(params.c);
  std::vector<Vec> kets = {repeated_ket(params.n, 0), repeated_ket(params.n, 1),
                           repeated_ket(params.n, 2)};
  return coefficients_over_basis(params.n, params.c, kets);
}

DensityMatrix ghz1_pure(int n, double theta, double phi) {
  if (n < 2) throw std::invalid_argument("ghz1_pure: need n >= 2");
  check_angle_range(theta, "ghz1_pure");
  check_angle_range(phi, "ghz1_pure");
  Vec psi = std::cos(theta) * repeated_ket(n, 0) +
            std::sin(theta) * std::cos(phi) * repeated_ket(n, 1) +
            std::sin(theta) * std::sin(phi) * repeated_ket(n, 2);
  return make_density(n, projector(psi));
}

DensityMatrix ghz2(const FamilyParams& params) {
  if (params.n < 2) throw std::invalid_argument("ghz2: need n >= 2");
  if (params.m < 1 || params.m > params.n - 1)
    throw std::invalid_argument("ghz2: need 1 <= m <= n-1");
  validate_coeff(params.c);
  std::vector<Vec> kets = {family2_basis_ket(params.n, params.m, 0),
                           family2_basis_ket(params.n, params.m, 1),
                           family2_basis_ket(params.n, params.m, 2)};
  return coefficients_over_basis(params.n, params.c, kets);
}

DensityMatrix ghz2_pure(int n, int m, double theta, double phi) {
  if (n < 2) throw std::invalid_argument("ghz2_pure: need n >= 2");
  if (m < 1 || m > n - 1) throw std::invalid_argument("ghz2_pure: need 1 <= m <= n-1");
  check_angle_range(theta, "ghz2_pure");
  check_angle_range(phi, "ghz2_pure");
  Vec psi = std::sin(theta) * std::cos(phi) * family2_basis_ket(n, m, 0) +
            std::cos(theta) * family2_basis_ket(n, m, 1) +
            std::sin(theta) * std::sin(phi) * family2_basis_ket(n, m, 2);
  return make_density(n, projector(psi));
}

std::vector<Vec> ms_basis_kets(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("ms_basis_kets: need n >= 2");
  const double amax = std::atan(std::sqrt(2.0));
  if (alpha <= 0.0 || alpha > amax + 1e-12)
    throw std::invalid_argument("ms_basis_kets: alpha outside (0, atan(sqrt 2)]");
  const Mat3 m1 = slice_mixer(alpha);
  std::vector<Vec> kets;
  for (int i = 0; i < 3; ++i) {
    Vec tail = repeated_ket(n - 1, i);
    Vec head = m1.col(i);  // M |i>
    Vec full(pow3(n));
    for (int d = 0; d < 3; ++d) full.segment(d * pow3(n - 1), pow3(n - 1)) = head(d) * tail;
    kets.push_back(std::move(full));
  }
  return kets;
}

DensityMatrix ms_state(int n, double alpha) {
  auto kets = ms_basis_kets(n, alpha);
  Vec psi = (kets[0] + kets[1] + kets[2]) / std::sqrt(3.0);
  return make_density(n, projector(psi));
}

DensityMatrix diagonal_companion(const FamilyParams& params, Family family, bool keep_02) {
  switch (family) {
    case Family::Ghz1: {
      if (keep_02)
        throw std::invalid_argument("diagonal_companion: keep_02 applies to family 2 only");
      validate_coeff(params.c);
      std::vector<Vec> kets = {repeated_ket(params.n, 0), repeated_ket(params.n, 1),
                               repeated_ket(params.n, 2)};
      Mat3 d = Mat3::Zero();
      for (int i = 0; i < 3; ++i) d(i, i) = params.c(i, i);
      return coefficients_over_basis(params.n, d, kets);
    }
    case Family::Ghz2: {
      validate_coeff(params.c);
      if (params.m < 1 || params.m > params.n - 1)
        throw std::invalid_argument("diagonal_companion: need 1 <= m <= n-1");
      std::vector<Vec> kets = {family2_basis_ket(params.n, params.m, 0),
                               family2_basis_ket(params.n, params.m, 1),
                               family2_basis_ket(params.n, params.m, 2)};
      Mat3 d = Mat3::Zero();
      for (int i = 0; i < 3; ++i) d(i, i) = params.c(i, i);
      if (keep_02) {
        d(0, 2) = params.c(0, 2);
        d(2, 0) = params.c(2, 0);
      }
      return coefficients_over_basis(params.n, d, kets);
    }
    case Family::Ms: {
      if (keep_02)
        throw std::invalid_argument("diagonal_companion: keep_02 applies to family 2 only");
      auto kets = ms_basis_kets(params.n, params.alpha);
      const long dim = pow3(params.n);
      Mat d = Mat::Zero(dim, dim);
      for (const auto& k : kets) d += (1.0 / 3.0) * (k * k.adjoint());
      return make_density(params.n, std::move(d));
    }
  }
  throw std::invalid_argument("diagonal_companion: unknown family");
}

GammaState sigma_g_detail(const FamilyParams& params, double gamma) {
  if (params.n < 2) throw std::invalid_argument("sigma_g: need n >= 2");
  validate_coeff(params.c);
  double theta = 0.0, phi = 0.0;
  guarded_angles(params.c, "sigma_g", theta, phi);

  GammaState out;
  out.knobs = field_knobs(gamma, theta, phi);

  const int n = params.n;
  const long dim = pow3(n);
  Mat a = Mat::Zero(dim, dim);
  for (int j = 2; j <= n; ++j) a += gamma * embed(q_pair(1, j), n);
  const Mat3 z = spin_z();
  Mat3 field = -out.knobs.gamma1 * (z * z) + out.knobs.gamma2 * z;
  a += embed(SiteOperator({1}, field), n);

  finish_gamma_state(n, a, out);
  return out;
}

DensityMatrix sigma_g(const FamilyParams& params, double gamma) {
  return sigma_g_detail(params, gamma).rho;
}

GammaState sigma_2_detail(const FamilyParams& params, double gamma) {
  if (params.n < 2) throw std::invalid_argument("sigma_2: need n >= 2");
  if (params.m < 1 || params.m > params.n - 1)
    throw std::invalid_argument("sigma_2: need 1 <= m <= n-1");
  validate_coeff(params.c);
  double theta = 0.0, phi = 0.0;
  guarded_angles(params.c, "sigma_2", theta, phi);

  GammaState out;
  out.knobs = field_knobs(gamma, theta, phi);

  const int n = params.n;
  Mat a = gamma * omega(n, params.m).total;
  const Mat3 z = spin_z();
  Mat3 field = -out.knobs.gamma1 * (z * z) + out.knobs.gamma2 * z;
  a += embed(SiteOperator({params.m + 1}, field), n);

  finish_gamma_state(n, a, out);
  return out;
}

DensityMatrix sigma_2(const FamilyParams& params, double gamma) {
  return sigma_2_detail(params, gamma).rho;
}

GammaState tau_2_detail(const FamilyParams& params, double gamma) {
  if (params.n < 2) throw std::invalid_argument("tau_2: need n >= 2");
  if (params.m < 1 || params.m > params.n - 1)
    throw std::invalid_argument("tau_2: need 1 <= m <= n-1");
  validate_coeff(params.c);
  double theta = 0.0, phi = 0.0;
  guarded_angles(params.c, "tau_2", theta, phi);

  const double s2t = std::sin(theta) * std::sin(theta);
  const double c2p = std::cos(2.0 * phi);
  const Cd c02 = params.c(0, 2);
  const double cos2vp_sq = c2p * c2p + 4.0 * std::norm(c02) / (s2t * s2t);
  if (cos2vp_sq > 1.0 + 1e-12)
    throw std::invalid_argument("tau_2: coherence violates the positivity bound");
  const double cos2vp = std::sqrt(std::min(1.0, cos2vp_sq));
  if (cos2vp >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "tau_2: saturated coherence (pure-slice case) has no finite field; "
        "use the limit state directly");

  GammaState out;
  out.knobs.gamma = gamma;
  out.knobs.varphi = 0.5 * std::acos(cos2vp);
  out.knobs.gamma2 = std::atanh(cos2vp);
  out.knobs.gamma1 = log_2cosh(out.knobs.gamma2) + 2.0 * std::log(1.0 / std::tan(theta));
  out.knobs.zeta = std::abs(c02) > 0.0 ? 0.5 * std::arg(params.c(2, 0) / c02) : 0.0;
  // When both the coherence and cos(2 phi) vanish the field strength gamma2
  // is zero, so the rotation axis is arbitrary; fix xi = 0.
  const double axis_ratio = cos2vp > 1e-15 ? c2p / cos2vp : 1.0;
  out.knobs.xi = std::acos(std::clamp(axis_ratio, -1.0, 1.0));

  const int n = params.n;
  Mat a = gamma * omega(n, params.m).total;
  SiteOperator sr = sigma_r(out.knobs.xi, out.knobs.zeta, n, params.m);
  Mat field = -out.knobs.gamma1 * (sr.data * sr.data) + out.knobs.gamma2 * sr.data;
  a += embed(SiteOperator(sr.support, 0.5 * (field + field.adjoint().eval())), n);

  finish_gamma_state(n, a, out);
  return out;
}

DensityMatrix tau_2(const FamilyParams& params, double gamma) {
  return tau_2_detail(params, gamma).rho;
}

GammaState sigma_s_detail(int n, double alpha, double gamma) {
  GammaState out;
  out.knobs.gamma = gamma;
  Mat a = gamma * (q_string(n, 2).total + embed(r_pair(1, 2, alpha), n));
  finish_gamma_state(n, a, out);
  return out;
}

DensityMatrix sigma_s(int n, double alpha, double gamma) {
  return sigma_s_detail(n, alpha, gamma).rho;
}

GammaState ms_exp_limit_detail(int n, double alpha, double gamma) {
  GammaState out;
  out.knobs.gamma = gamma;
  Mat a = gamma * ms_generator(n, alpha).combined().total;
  finish_gamma_state(n, a, out);
  return out;
}

DensityMatrix ms_exp_limit(int n, double alpha, double gamma) {
  return ms_exp_limit_detail(n, alpha, gamma).rho;
}

std::vector<std::vector<int>> site_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // simple odometer over ascending k-subsets of {1..n}
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int s = next; s <= n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

double max_marginal_residual(const Mat& a, const Mat& b, int n, int k) {
  double worst = 0.0;
  for (const auto& keep : site_subsets(n, k)) {
    SiteIndexer ix = SiteIndexer::build(n, keep);
    Mat da = kernels::partial_trace(a, ix);
    Mat db = kernels::partial_trace(b, ix);
    worst = std::max(worst, (da - db).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace qorrel

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

#include "qorrel/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qorrel {

namespace {

double plogp(double p) {
  if (p < kEntropyCutoff) return 0.0;
  return -p * std::log(p);
}

double shannon3(double a, double b, double c) { return plogp(a) + plogp(b) + plogp(c); }

// Eigenvalues of the 0-2 block of c; the pair that replaces (c00, c22) once
// the 0-2 coherence has to be reproduced.
void coherent_pair(const Mat3& c, double& hi, double& lo) {
  const double c00 = c(0, 0).real();
  const double c22 = c(2, 2).real();
  const double avg = 0.5 * (c00 + c22);
  const double dev = std::sqrt(0.25 * (c00 - c22) * (c00 - c22) + std::norm(c(0, 2)));
  hi = avg + dev;
  lo = std::max(0.0, avg - dev);
}

void fill_levels(CorrelationSpectrum& s) {
  for (int k = 2; k <= s.n; ++k)
    if (!s.values.count(k)) s.values[k] = 0.0;
  s.total = 0.0;
  for (const auto& kv : s.values) s.total += kv.second;
}

}  // namespace

double CorrelationSpectrum::level(int k) const {
  auto it = values.find(k);
  return it == values.end() ? 0.0 : it->second;
}

double h2(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return plogp(c * c) + plogp(s * s);
}

double h3(double theta, double phi) {
  const double st2 = std::sin(theta) * std::sin(theta);
  return h2(theta) + st2 * h2(phi);
}

double shannon_diag(const Mat3& c) {
  return shannon3(c(0, 0).real(), c(1, 1).real(), c(2, 2).real());
}

double coeff_entropy(const Mat3& c) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(c, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (int i = 0; i < 3; ++i) h += plogp(std::max(0.0, es.eigenvalues()(i)));
  return h;
}

double chi_of_alpha(double alpha) {
  const double c2 = std::cos(2.0 * alpha), s2 = std::sin(2.0 * alpha);
  const double cchi_sq = (3.0 - c2 + 2.0 * std::sqrt(2.0) * s2) / 6.0;
  return std::acos(std::sqrt(std::clamp(cchi_sq, 0.0, 1.0)));
}

CorrelationSpectrum ghz1_spectrum(const FamilyParams& params) {
  if (params.n < 2) throw std::invalid_argument("ghz1_spectrum: need n >= 2");
  validate_coeff(params.c);

  // Tracing out any site kills every coherence between distinct repeated
  // strings, so each site contributes the diagonal entropy once and nothing
  // moves between levels 2 and n.
  const double hd = shannon_diag(params.c);
  CorrelationSpectrum s;
  s.n = params.n;
  s.method = "closed-form";
  s.values[2] = (params.n - 1) * hd;
  s.values[params.n] += hd - coeff_entropy(params.c);
  if (params.n == 2) s.notes.push_back("levels 2 and n coincide");
  fill_levels(s);
  return s;
}

CorrelationSpectrum ghz2_spectrum(const FamilyParams& params) {
  const int n = params.n, m = params.m;
  if (n < 2) throw std::invalid_argument("ghz2_spectrum: need n >= 2");
  if (m < 1 || m > n - 1) throw std::invalid_argument("ghz2_spectrum: need 1 <= m <= n-1");
  validate_coeff(params.c);

  const double c00 = params.c(0, 0).real();
  const double c11 = params.c(1, 1).real();
  const double c22 = params.c(2, 2).real();

  // Head sites cannot tell the all-0 string from the 0^m 2^(n-m) string, so
  // their marginal entropy collapses the 0 and 2 weights into one.
  const double head_h = shannon3(c00 + c22, c11, 0.0);
  const double diag_h = shannon3(c00, c11, c22);

  double hi = 0.0, lo = 0.0;
  coherent_pair(params.c, hi, lo);
  const double coh_h = shannon3(hi, c11, lo);
  const double jump = diag_h - coh_h;  // released when the 0-2 coherence binds

  CorrelationSpectrum s;
  s.n = n;
  s.method = "closed-form";
  s.values[2] = m * head_h + (n - m - 1) * diag_h;
  if (jump > 1e-12) {
    const int coherence_level = n - m;
    if (coherence_level < 2)
      throw std::invalid_argument(
          "ghz2_spectrum: 0-2 coherence with a single tail site has no level "
          "decomposition of this form");
    s.values[coherence_level] += jump;
    if (coherence_level == 2) s.notes.push_back("coherence jump merged into level 2");
  }
  s.values[n] += coh_h - coeff_entropy(params.c);
  fill_levels(s);
  return s;
}

CorrelationSpectrum ms_spectrum(int n, double alpha) {
  if (n < 3) throw std::invalid_argument("ms_spectrum: need n >= 3");
  const double amax = std::atan(std::sqrt(2.0));
  if (alpha <= 0.0 || alpha > amax + 1e-12)
    throw std::invalid_argument("ms_spectrum: alpha outside (0, atan(sqrt 2)]");

  const double chi = chi_of_alpha(alpha);
  const double head_h = h3(chi, std::atan(1.0));  // phi = pi/4: equal 0/2 split
  const double ln3 = std::log(3.0);

  CorrelationSpectrum s;
  s.n = n;
  s.method = "closed-form";
  s.values[2] = head_h + (n - 2) * ln3;
  s.values[n - 1] += ln3;  // the marginals pin the state one level early
  if (n == 3) s.notes.push_back("levels 2 and n-1 coincide");
  fill_levels(s);
  return s;
}

double total_correlation(const DensityMatrix& rho) {
  double sum = 0.0;
  for (int site = 1; site <= rho.n; ++site)
    sum += von_neumann_entropy(partial_trace(rho, {site}));
  return sum - von_neumann_entropy(rho);
}

}  // namespace qorrel

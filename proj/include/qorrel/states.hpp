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

#ifndef QORREL_STATES_HPP
#define QORREL_STATES_HPP

#include <vector>

#include "qorrel/operators.hpp"
#include "qorrel/tensor.hpp"
#include "qorrel/types.hpp"

namespace qorrel {

enum class Family { Ghz1, Ghz2, Ms };

const char* to_string(Family family);

/* Parameters shared by the three families.
 *
 * The 3x3 coefficient matrix c is the authority for the GHZ-type families
 * (Hermitian, PSD, unit trace). theta/phi record the literal angles a pure
 * constructor was called with; the gamma-state builders always rederive their
 * spherical angles from the diagonal of c, so mixed inputs work the same way.
 */
struct FamilyParams {
  int n = 0;
  int m = 1;
  Mat3 c = Mat3::Zero();
  double theta = 0.0;
  double phi = 0.0;
  double alpha = 0.0;
};

void validate_coeff(const Mat3& c);

// diag(sin^2 t cos^2 p, cos^2 t, sin^2 t sin^2 p)
Mat3 spherical_coeff(double theta, double phi);

// Inverse of spherical_coeff on the diagonal: theta from the middle entry,
// phi from the 0/2 split.
void spherical_angles(const Mat3& c, double& theta, double& phi);

// G G^dag / tr(G G^dag) for a seeded complex Gaussian G: full rank almost surely.
Mat3 random_psd_coeff(std::uint64_t seed);

// sum_ij c_ij |i..i><j..j|
DensityMatrix ghz1(const FamilyParams& params);

// Projector onto cos(t)|0..0> + sin(t)cos(p)|1..1> + sin(t)sin(p)|2..2>.
DensityMatrix ghz1_pure(int n, double theta, double phi);

// Same coefficients over the split basis |0..0>, |1..1>, |0^m 2^(n-m)>.
DensityMatrix ghz2(const FamilyParams& params);

// Projector onto sin(t)cos(p)|b0> + cos(t)|b1> + sin(t)sin(p)|b2>.
DensityMatrix ghz2_pure(int n, int m, double theta, double phi);

// Equal mixture amplitudes over the three mixed strings M_1|i..i>.
DensityMatrix ms_state(int n, double alpha);

// The three (orthonormal) slice strings M_1 |i..i>.
std::vector<Vec> ms_basis_kets(int n, double alpha);

// The dephased partner reached by the diverging-coupling limit: diagonal part
// of the family in its own string basis. keep_02 additionally retains the
// 0-2 coherence (family 2 only).
DensityMatrix diagonal_companion(const FamilyParams& params, Family family,
                                 bool keep_02 = false);

// Field strengths entering the finite-coupling interpolating states, plus the
// normalization actually used. varphi/xi/zeta only apply to the tau variant.
struct GammaKnobs {
  double gamma = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double eta = 0.0;
  double varphi = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
};

struct GammaState {
  DensityMatrix rho;
  GammaKnobs knobs;
  Mat exponent;  // the Hermitian A with rho = exp(A + eta)
};

// Interpolating state for family 1: pair projectors from site 1 plus a
// single-site field tuned so the diverging limit is the dephased companion.
GammaState sigma_g_detail(const FamilyParams& params, double gamma);
DensityMatrix sigma_g(const FamilyParams& params, double gamma);

// Family-2 analogue built on the omega coupling, field on site m+1.
GammaState sigma_2_detail(const FamilyParams& params, double gamma);
DensityMatrix sigma_2(const FamilyParams& params, double gamma);

// Family-2 variant whose tail field is rotated so the limit keeps the 0-2
// coherence.
GammaState tau_2_detail(const FamilyParams& params, double gamma);
DensityMatrix tau_2(const FamilyParams& params, double gamma);

// Slice-family interpolation through the anchored pair projectors plus the
// mixed pair projector; limit is the uniform slice mixture.
GammaState sigma_s_detail(int n, double alpha, double gamma);
DensityMatrix sigma_s(int n, double alpha, double gamma);

// Normalized exp(gamma(Q + X)); the large-gamma limit is the slice state itself.
GammaState ms_exp_limit_detail(int n, double alpha, double gamma);
DensityMatrix ms_exp_limit(int n, double alpha, double gamma);

// Largest absolute entry difference over all size-k reduced states.
double max_marginal_residual(const Mat& a, const Mat& b, int n, int k);

std::vector<std::vector<int>> site_subsets(int n, int k);

}  // namespace qorrel

#endif

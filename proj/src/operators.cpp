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

#include "qorrel/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace qorrel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Z eigenvalue carried by digit d.
double zval(int d) { return d == 0 ? 1.0 : (d == 1 ? 0.0 : -1.0); }

// diag(1, -1, 0) eigenvalue carried by digit d.
double lam3val(int d) { return d == 0 ? 1.0 : (d == 1 ? -1.0 : 0.0); }

Mat kron_chain(const std::vector<Mat3>& factors) {
  Mat out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kernels::kron(out, factors[i]);
  return out;
}

}  // namespace

const char* to_string(OperatorName name) {
  switch (name) {
    case OperatorName::SpinZ: return "spin_z";
    case OperatorName::GellMann: return "gell_mann";
    case OperatorName::ShiftX: return "shift_x";
    case OperatorName::QPair: return "q_pair";
    case OperatorName::PPair: return "p_pair";
    case OperatorName::Omega: return "omega";
    case OperatorName::SigmaPauli: return "sigma_pauli";
    case OperatorName::SigmaR: return "sigma_r";
    case OperatorName::RPair: return "r_pair";
    case OperatorName::MsGenerator: return "ms_generator";
    case OperatorName::QString: return "q_string";
  }
  return "unknown";
}

OperatorSum::OperatorSum(int n_sites, std::vector<SiteOperator> term_list)
    : n(n_sites), terms(std::move(term_list)) {
  if (terms.empty()) throw std::invalid_argument("OperatorSum: no terms");
  const long dim = pow3(n);
  total = Mat::Zero(dim, dim);
  for (const auto& t : terms) total += embed(t, n);
}

int OperatorSum::max_support() const {
  std::size_t k = 0;
  for (const auto& t : terms) k = std::max(k, t.support.size());
  return static_cast<int>(k);
}

Mat3 spin_z() {
  Mat3 z = Mat3::Zero();
  z(0, 0) = 1.0;
  z(2, 2) = -1.0;
  return z;
}

Mat3 gell_mann(int j) {
  Mat3 g = Mat3::Zero();
  const Cd i(0.0, 1.0);
  switch (j) {
    case 1: g(0, 1) = 1.0; g(1, 0) = 1.0; break;
    case 2: g(0, 1) = -i;  g(1, 0) = i;   break;
    case 3: g(0, 0) = 1.0; g(1, 1) = -1.0; break;
    case 4: g(0, 2) = 1.0; g(2, 0) = 1.0; break;
    case 5: g(0, 2) = -i;  g(2, 0) = i;   break;
    case 6: g(1, 2) = 1.0; g(2, 1) = 1.0; break;
    case 7: g(1, 2) = -i;  g(2, 1) = i;   break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      g(0, 0) = s;
      g(1, 1) = s;
      g(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw std::invalid_argument("gell_mann: index must be in 1..8");
  }
  return g;
}

Mat3 shift_x() {
  Mat3 x = Mat3::Zero();
  x(0, 1) = 1.0;
  x(1, 2) = 1.0;
  x(2, 0) = 1.0;
  return x;
}

SiteOperator q_pair(int i, int j) {
  if (i == j) throw std::invalid_argument("q_pair: sites must differ");
  const int lo = std::min(i, j), hi = std::max(i, j);
  Mat q = Mat::Zero(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double d = zval(a) - zval(b);
      q(a * 3 + b, a * 3 + b) = (2.0 / 3.0) * (0.5 + std::cos(2.0 * kPi / 3.0 * d));
    }
  return SiteOperator({lo, hi}, q);
}

SiteOperator p_pair(int i, int j) {
  if (i == j) throw std::invalid_argument("p_pair: sites must differ");
  if (i > j) {
    // the factors are diagonal, so swapping sites just swaps the digit roles
    Mat p = Mat::Zero(9, 9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        p(a * 3 + b, a * 3 + b) = lam3val(a) * (2.0 * zval(b) * zval(b) - 1.0);
    return SiteOperator({j, i}, p);
  }
  Mat p = Mat::Zero(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      p(a * 3 + b, a * 3 + b) = (2.0 * zval(a) * zval(a) - 1.0) * lam3val(b);
  return SiteOperator({i, j}, p);
}

OperatorSum omega(int n, int m) {
  if (m < 1 || m > n - 1) throw std::invalid_argument("omega: need 1 <= m <= n-1");
  std::vector<SiteOperator> terms;
  for (int j = 1; j <= m; ++j) terms.push_back(p_pair(m + 1, j));
  for (int l = m + 2; l <= n; ++l) terms.push_back(q_pair(m + 1, l));
  return OperatorSum(n, std::move(terms));
}

SiteOperator sigma_pauli(int alpha, int n, int m) {
  if (alpha < 1 || alpha > 3) throw std::invalid_argument("sigma_pauli: alpha must be 1, 2 or 3");
  if (m < 0 || m > n - 1) throw std::invalid_argument("sigma_pauli: need 0 <= m <= n-1");
  const int len = n - m;
  std::vector<Mat3> factors(len);
  const Mat3 z = spin_z();
  switch (alpha) {
    case 1:
      for (int p = 0; p < len; ++p) factors[p] = gell_mann(4);
      break;
    case 2:
      factors[0] = gell_mann(5);
      for (int p = 1; p < len; ++p) factors[p] = gell_mann(4);
      break;
    case 3:
      factors[0] = z;
      for (int p = 1; p < len; ++p) factors[p] = z * z;
      break;
  }
  std::vector<int> support(len);
  for (int p = 0; p < len; ++p) support[p] = m + 1 + p;
  return SiteOperator(std::move(support), kron_chain(factors));
}

SiteOperator sigma_r(double xi, double zeta, int n, int m) {
  Mat r = std::cos(xi) * sigma_pauli(3, n, m).data +
          std::sin(xi) * std::cos(zeta) * sigma_pauli(1, n, m).data +
          std::sin(xi) * std::sin(zeta) * sigma_pauli(2, n, m).data;
  std::vector<int> support(n - m);
  for (int p = 0; p < n - m; ++p) support[p] = m + 1 + p;
  return SiteOperator(std::move(support), std::move(r));
}

Mat3 slice_mixer(double alpha) {
  const Mat3 x = shift_x();
  Mat3 m = std::cos(alpha) * Mat3::Identity() +
           std::sin(alpha) / std::sqrt(2.0) * (x + x.adjoint().eval());
  return m;
}

SiteOperator r_pair(int i, int j, double alpha) {
  if (i >= j) throw std::invalid_argument("r_pair: need i < j (mixer acts on site i)");
  const double amax = std::atan(std::sqrt(2.0));
  if (alpha <= 0.0 || alpha > amax + 1e-12)
    throw std::invalid_argument("r_pair: alpha outside (0, atan(sqrt 2)]");
  Mat m1 = kernels::kron(slice_mixer(alpha), Mat3::Identity());
  Mat r = m1 * q_pair(1, 2).data * m1;
  return SiteOperator({i, j}, 0.5 * (r + r.adjoint().eval()));
}

OperatorSum MsGeneratorParts::combined() const {
  std::vector<SiteOperator> all = q.terms;
  all.insert(all.end(), x.terms.begin(), x.terms.end());
  return OperatorSum(q.n, std::move(all));
}

MsGeneratorParts ms_generator(int n, double alpha) {
  if (n < 3) throw std::invalid_argument("ms_generator: need n >= 3");
  const double amax = std::atan(std::sqrt(2.0));
  if (alpha <= 0.0 || alpha > amax + 1e-12)
    throw std::invalid_argument("ms_generator: alpha outside (0, atan(sqrt 2)]");

  const double cot_beta = std::sqrt(2.0) * (1.0 / std::tan(alpha) - std::tan(alpha)) + 1.0;
  const double beta = std::atan2(1.0, cot_beta);  // lands in (0, pi)

  const Mat3 x = shift_x();
  std::vector<SiteOperator> xterms;
  xterms.push_back(SiteOperator({1, 2}, std::cos(beta) * q_pair(1, 2).data));
  xterms.push_back(SiteOperator({1}, 0.5 * std::sin(beta) * (x + x.adjoint().eval())));
  {
    std::vector<Mat3> factors(n - 1, x);
    Mat chain = kron_chain(factors);
    std::vector<int> support(n - 1);
    for (int p = 0; p < n - 1; ++p) support[p] = 2 + p;
    xterms.push_back(
        SiteOperator(std::move(support), 0.5 * std::sin(beta) * (chain + chain.adjoint().eval())));
  }

  MsGeneratorParts parts{q_string(n, 2), OperatorSum(n, std::move(xterms)), beta};
  return parts;
}

OperatorSum q_string(int n, int anchor) {
  if (n < 3) throw std::invalid_argument("q_string: need n >= 3");
  if (anchor < 2 || anchor > n) throw std::invalid_argument("q_string: anchor must be in 2..n");
  std::vector<SiteOperator> terms;
  for (int j = 2; j <= n; ++j)
    if (j != anchor) terms.push_back(q_pair(anchor, j));
  return OperatorSum(n, std::move(terms));
}

}  // namespace qorrel

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

#ifndef QORREL_SPECTRA_HPP
#define QORREL_SPECTRA_HPP

#include <map>
#include <string>
#include <vector>

#include "qorrel/states.hpp"
#include "qorrel/tensor.hpp"
#include "qorrel/types.hpp"

namespace qorrel {

/* Irreducible correlation per level (nats). Level k holds the entropy drop
 * between the maximum-entropy extensions of the (k-1)- and k-party marginals,
 * so the levels telescope to the total correlation. Every level from 2 to n
 * is present in `values`, zeros included.
 */
struct CorrelationSpectrum {
  int n = 0;
  std::map<int, double> values;
  double total = 0.0;
  std::string method;               // "closed-form" or "maxent"
  std::vector<std::string> notes;   // coincidence merges and similar caveats

  double level(int k) const;        // 0 for levels outside the map
};

// -cos^2 a ln cos^2 a - sin^2 a ln sin^2 a
double h2(double angle);

// h2(theta) + sin^2(theta) h2(phi): Shannon entropy of the weights
// (sin^2 t cos^2 p, cos^2 t, sin^2 t sin^2 p).
double h3(double theta, double phi);

// Shannon entropy of the diagonal of a coefficient matrix.
double shannon_diag(const Mat3& c);

// von Neumann entropy of the 3x3 coefficient block itself.
double coeff_entropy(const Mat3& c);

// Head-site mixing angle of the slice family: the site-1 marginal has
// eigenvalues (cos^2 chi, sin^2 chi / 2, sin^2 chi / 2).
double chi_of_alpha(double alpha);

/* Closed-form spectra. Each takes the same inputs as the matching state
 * constructor and returns the exact level decomposition, valid for any
 * admissible coefficient matrix (pure or mixed).
 *
 * ghz1: all correlation sits at levels 2 and n.
 * ghz2: additionally a coherence jump at level n-m; when n-m == 2 it merges
 *       into level 2 (noted), and when m == n-1 with a genuine 0-2 coherence
 *       the decomposition does not apply and the call throws.
 * ms:   jump of ln 3 at level n-1; for n == 3 it merges into level 2 (noted).
 */
CorrelationSpectrum ghz1_spectrum(const FamilyParams& params);
CorrelationSpectrum ghz2_spectrum(const FamilyParams& params);
CorrelationSpectrum ms_spectrum(int n, double alpha);

// Sum of single-site marginal entropies minus the global entropy. Equals the
// telescoped sum of any valid level decomposition of the same state.
double total_correlation(const DensityMatrix& rho);

}  // namespace qorrel

#endif

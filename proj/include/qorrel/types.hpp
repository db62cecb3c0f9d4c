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

#ifndef QORREL_TYPES_HPP
#define QORREL_TYPES_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qorrel {

using Cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3cd;

inline constexpr int kLocalDim = 3;  // qutrits throughout

// Numerical contract constants shared across modules.
inline constexpr double kHermTol = 1e-10;       // max allowed |A - A^dag| before erroring
inline constexpr double kEntropyCutoff = 1e-12; // eigenvalues below this contribute 0 to entropy
inline constexpr double kAngleFloor = 1e-6;     // gamma-state constructors reject angles below this

inline const char* version_string() { return "0.1.0"; }

inline long pow3(int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

/* Deterministic normal/uniform generator.
 *
 * std::normal_distribution is implementation-defined, so a fixed seed would
 * not pin bytes across standard libraries. Box-Muller over explicitly
 * constructed 53-bit uniforms keeps every draw reproducible anywhere.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // log1p avoids log(0)
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Combines a base seed with stream indices so independent draws (witness
// samples, subset operators) stay decoupled and reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xbf58476d1ce4e5b9ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace qorrel

#endif

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

#ifndef QORREL_REPORT_HPP
#define QORREL_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "qorrel/types.hpp"

/* Machine-readable output with stable bytes.
 *
 * Serialization is hand-rolled on purpose: keys keep insertion order and
 * every floating-point number prints as %.17g, so rerunning a command with
 * the same inputs yields identical files on any platform. Parsing of input
 * files stays on the vendored JSON library; only the writer is custom.
 */

namespace qorrel {
namespace report {

// %.17g, round-trip exact. Throws on NaN or infinity (not representable).
std::string format_double(double v);

class Json {
 public:
  static Json object();
  static Json array();
  static Json str(std::string v);
  static Json num(double v);
  static Json integer(long v);
  static Json boolean(bool v);

  // Object field (insertion order preserved). Returns *this for chaining.
  Json& add(std::string key, Json v);
  // Array element.
  Json& push(Json v);

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Object, Array, String, Number, Integer, Bool };
  Kind kind_ = Kind::Object;
  std::string str_;
  double num_ = 0.0;
  long int_ = 0;
  bool bool_ = false;
  std::vector<std::pair<std::string, Json>> fields_;
  std::vector<Json> items_;

  void write(std::string& out, int indent, int depth) const;
};

// RFC-compliant string escaping (quotes, backslash, control characters).
std::string escape_string(const std::string& s);

// Joins fields with commas, quoting any field that needs it.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace report

// 3x3 coefficient matrix from a JSON file {"c": [[entry x3] x3]}, where an
// entry is a number or an [re, im] pair. Validated before returning.
Mat3 load_coeff_file(const std::string& path);

}  // namespace qorrel

#endif

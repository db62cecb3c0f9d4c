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

#include "qorrel/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qorrel/states.hpp"

namespace qorrel {
namespace report {

std::string format_double(double v) {
  if (!std::isfinite(v))
    throw std::invalid_argument("format_double: non-finite value has no JSON form");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape_string(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  return out;
}

Json Json::object() { return Json{}; }

Json Json::array() {
  Json j;
  j.kind_ = Kind::Array;
  return j;
}

Json Json::str(std::string v) {
  Json j;
  j.kind_ = Kind::String;
  j.str_ = std::move(v);
  return j;
}

Json Json::num(double v) {
  Json j;
  j.kind_ = Kind::Number;
  j.num_ = v;
  return j;
}

Json Json::integer(long v) {
  Json j;
  j.kind_ = Kind::Integer;
  j.int_ = v;
  return j;
}

Json Json::boolean(bool v) {
  Json j;
  j.kind_ = Kind::Bool;
  j.bool_ = v;
  return j;
}

Json& Json::add(std::string key, Json v) {
  if (kind_ != Kind::Object) throw std::logic_error("Json::add on a non-object");
  fields_.emplace_back(std::move(key), std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  if (kind_ != Kind::Array) throw std::logic_error("Json::push on a non-array");
  items_.push_back(std::move(v));
  return *this;
}

void Json::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (kind_) {
    case Kind::Object: {
      if (fields_.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        out += pad_in;
        out += '"';
        out += escape_string(fields_[i].first);
        out += "\": ";
        fields_[i].second.write(out, indent, depth + 1);
        if (i + 1 < fields_.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += '}';
      return;
    }
    case Kind::Array: {
      if (items_.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad_in;
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += ']';
      return;
    }
    case Kind::String:
      out += '"';
      out += escape_string(str_);
      out += '"';
      return;
    case Kind::Number:
      out += format_double(num_);
      return;
    case Kind::Integer:
      out += std::to_string(int_);
      return;
    case Kind::Bool:
      out += bool_ ? "true" : "false";
      return;
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    const bool quote = f.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      out += '"';
      for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    } else {
      out += f;
    }
    if (i + 1 < fields.size()) out += ',';
  }
  out += '\n';
  return out;
}

}  // namespace report

Mat3 load_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_coeff_file: cannot open " + path);

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_coeff_file: " + path + ": " + e.what());
  }

  if (!doc.is_object() || !doc.contains("c"))
    throw std::invalid_argument("load_coeff_file: " + path + ": missing \"c\" key");
  const auto& rows = doc["c"];
  if (!rows.is_array() || rows.size() != 3)
    throw std::invalid_argument("load_coeff_file: " + path + ": \"c\" must be a 3x3 array");

  Mat3 c;
  for (int r = 0; r < 3; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("load_coeff_file: " + path + ": \"c\" must be a 3x3 array");
    for (int col = 0; col < 3; ++col) {
      const auto& entry = row[col];
      if (entry.is_number()) {
        c(r, col) = Cd(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                 entry[1].is_number()) {
        c(r, col) = Cd(entry[0].get<double>(), entry[1].get<double>());
      } else {
        std::ostringstream msg;
        msg << "load_coeff_file: " << path << ": entry (" << r << "," << col
            << ") must be a number or an [re, im] pair";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  validate_coeff(c);
  return c;
}

}  // namespace qorrel

// Copyright 2026 The frakpascal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <regex>
#include <string>

#include <json.hpp>

#include "frakpascal/cli/cli.hpp"
#include "frakpascal/exact.hpp"
#include "frakpascal/format.hpp"

namespace frakpascal::cli {

namespace {

using exact::BigInt;
using exact::Rational;

// Exponents beyond this are rejected rather than expanded into huge integers.
constexpr long kMaxDecimalExponent = 4000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Rational parse_decimal(std::string_view text) {
  static const std::regex pattern(
      R"(([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?)");
  const std::string s(trim(text));
  std::smatch m;
  if (!std::regex_match(s, m, pattern) ||
      (m[2].length() == 0 && m[3].length() == 0)) {
    throw UsageError("not a decimal number: '" + s + "'");
  }
  std::string digits = m[2].str() + m[3].str();
  const auto first = digits.find_first_not_of('0');
  // cpp_int reads a leading 0 as an octal prefix.
  digits = (first == std::string::npos) ? "0" : digits.substr(first);

  long exponent = 0;
  if (m[4].length() > 0) {
    const std::string e = m[4].str();
    const char* begin = e.data() + (e.front() == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(begin, e.data() + e.size(), exponent);
    if (ec != std::errc() || std::labs(exponent) > kMaxDecimalExponent) {
      throw UsageError("decimal exponent out of range: '" + s + "'");
    }
  }
  exponent -= static_cast<long>(m[3].length());
  if (std::labs(exponent) > kMaxDecimalExponent) {
    throw UsageError("decimal exponent out of range: '" + s + "'");
  }

  Rational value{BigInt(digits)};
  const BigInt scale = boost::multiprecision::pow(
      BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  value = exponent >= 0 ? Rational(value * scale) : Rational(value / scale);
  return m[1] == "-" ? Rational(-value) : value;
}

bool names_non_finite(std::string_view token) {
  std::string t;
  for (char c : token) {
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    t.erase(0, 1);
  }
  return t == "nan" || t == "inf" || t == "infinity";
}

double parse_value_token(std::string_view token) {
  if (names_non_finite(token)) {
    throw NonFiniteInput("non-finite value '" + std::string(token) + "'");
  }
  const std::string_view digits =
      (!token.empty() && token.front() == '+') ? token.substr(1) : token;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ptr != digits.data() + digits.size() ||
      (ec != std::errc() && ec != std::errc::result_out_of_range)) {
    throw UsageError("cannot parse value '" + std::string(token) + "'");
  }
  if (ec == std::errc::result_out_of_range) {
    // Overflow becomes inf, underflow a (sub)normal or zero.
    value = std::strtod(std::string(digits).c_str(), nullptr);
  }
  if (!std::isfinite(value)) {
    throw NonFiniteInput("value '" + std::string(token) +
                         "' is not representable as a finite double");
  }
  return value;
}

std::string meta_string(const nlohmann::json& v, const char* key) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_number_integer()) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_number()) {
    return format_shortest(v.get<double>());
  }
  throw UsageError(std::string("meta.") + key + " must be a number or string");
}

SequenceFile parse_json_sequence(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::out_of_range& e) {
    // 406: a literal such as 1e999 overflows a double.
    if (e.id == 406) {
      throw NonFiniteInput("value overflows a double in JSON input");
    }
    throw UsageError(std::string("invalid JSON: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") ||
      !doc["values"].is_array()) {
    throw UsageError("JSON input needs a \"values\" array");
  }
  SequenceFile file;
  for (const auto& v : doc["values"]) {
    if (v.is_number()) {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        throw NonFiniteInput("non-finite value in \"values\"");
      }
      file.values.push_back(x);
    } else if (v.is_string()) {
      // nan/inf have no JSON literal; accept them as strings only to reject.
      file.values.push_back(parse_value_token(v.get<std::string>()));
    } else {
      throw UsageError("\"values\" entries must be numbers");
    }
  }
  if (doc.contains("meta")) {
    const auto& meta = doc["meta"];
    if (!meta.is_object()) {
      throw UsageError("\"meta\" must be an object");
    }
    if (meta.contains("name")) {
      file.name = meta_string(meta["name"], "name");
    }
    if (meta.contains("tau")) {
      file.tau = meta_string(meta["tau"], "tau");
    }
    if (meta.contains("p")) {
      file.p = meta_string(meta["p"], "p");
    }
  }
  return file;
}

}  // namespace

double parse_order(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Rational value;
  if (slash == std::string_view::npos) {
    value = parse_decimal(s);
  } else {
    const Rational num = parse_decimal(s.substr(0, slash));
    const Rational den = parse_decimal(s.substr(slash + 1));
    if (den == 0) {
      throw UsageError("zero denominator in order '" + std::string(s) + "'");
    }
    value = num / den;
  }
  const double tau = value.convert_to<double>();
  if (!std::isfinite(tau)) {
    throw UsageError("order '" + std::string(s) + "' overflows a double");
  }
  return tau;
}

SequenceFile parse_sequence_file(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    return parse_json_sequence(body);
  }
  SequenceFile file;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() &&
           std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[j]))) {
      ++j;
    }
    if (j > i) {
      file.values.push_back(parse_value_token(body.substr(i, j - i)));
    }
    i = j;
  }
  return file;
}

std::size_t max_n_from_env() {
  const char* raw = std::getenv("FRAKPASCAL_MAX_N");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxN;
  }
  const std::string_view s(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw UsageError("FRAKPASCAL_MAX_N must be a positive integer, got '" +
                     std::string(s) + "'");
  }
  return value;
}

}  // namespace frakpascal::cli

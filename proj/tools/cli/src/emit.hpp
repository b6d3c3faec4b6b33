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

#pragma once

// Text encodings shared by the commands. Every number goes through
// format_shortest (CSV) or nlohmann's shortest round-trip printer (JSON), so
// both decode to the same doubles.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "frakpascal/duals.hpp"
#include "frakpascal/exact.hpp"
#include "frakpascal/spaces.hpp"
#include "frakpascal/triangular.hpp"

namespace frakpascal::cli {

enum class Format { kCsv, kJson };

using Json = nlohmann::ordered_json;

/// Finite doubles as JSON numbers, nan/inf as the strings "nan"/"inf"/"-inf".
Json json_number(double v);
Json json_exponent(const PExponent& p);
std::string text_exponent(const PExponent& p);

/// CSV: one line per row, lower triangle only, zeros written out.
/// JSON: `header` plus "rows".
std::string render_matrix(const DenseTriangle& m, Format f, Json header);
std::string render_matrix(const exact::ExactTriangle& m, Format f,
                          Json header);

/// CSV: one value per line (readable back as a sequence file).
/// JSON: `header` plus "values".
std::string render_sequence(std::span<const double> values, Format f,
                            Json header);

/// CSV: a header line and one line of values. JSON: header plus the fields.
std::string render_record(const std::vector<std::string>& keys,
                          const std::vector<Json>& values, Format f,
                          Json header);

struct Check {
  enum class Status { kPass, kFail, kInfo };
  std::string name;
  double value;
  std::string relation;  // "<=", ">=", ">", "==" or empty for info rows
  double bound;
  Status status;
};

/// Pass/fail row; the status is derived from the relation.
Check make_check(std::string name, double value, std::string relation,
                 double bound);
Check make_info(std::string name, double value);

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// CSV: check,value,relation,bound,status. JSON: header, "checks", "passed".
std::string render_verify(const VerifyReport& r, Format f, Json header);

/// CSV (long form): set,statistic,horizon,verdict,index,value.
/// JSON: header plus "reports".
std::string render_dual(const std::vector<ConditionReport>& reports,
                        const std::vector<std::string>& sets, Format f,
                        Json header);

}  // namespace frakpascal::cli

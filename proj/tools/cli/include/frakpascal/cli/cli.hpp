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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frakpascal::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;  // bad order, parse or config error
inline constexpr int kExitRange = 3;  // exact-integer range exceeded
inline constexpr int kExitNonFinite = 4;

inline constexpr std::size_t kDefaultMaxN = 4096;
inline constexpr std::size_t kDefaultN = 32;

/// Bad command line, config or input document.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input carried nan or inf.
class NonFiniteInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal ("0.5", "-1.25e-1") or rational ("1/3", "-2.5/7") literal,
/// evaluated exactly and rounded once to the nearest double.
double parse_order(std::string_view text);

struct SequenceFile {
  std::vector<double> values;
  std::optional<std::string> name;
  std::optional<std::string> tau;
  std::optional<std::string> p;
};

/// Either {"values": [...], "meta": {...}} or whitespace-separated decimals;
/// a leading '{' selects JSON. UsageError on malformed input,
/// NonFiniteInput when any value is nan or inf.
SequenceFile parse_sequence_file(std::string_view text);

/// Runs one command line (without the program name) and returns the exit code.
/// `max_n` caps --n; main() fills it from FRAKPASCAL_MAX_N.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::size_t max_n = kDefaultMaxN);

/// FRAKPASCAL_MAX_N if set to a positive integer, else kDefaultMaxN.
/// UsageError for a malformed value.
std::size_t max_n_from_env();

}  // namespace frakpascal::cli

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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emit.hpp"
#include "frakpascal/coeffs.hpp"
#include "frakpascal/spaces.hpp"

namespace frakpascal::cli {

enum class Mode {
  kFloat,
  kWide,   // 192-bit binary floating point where a wide path exists
  kExact,  // exact integers/rationals where an exact path exists
};

std::string_view to_string(Mode m);

struct Config {
  double tau;
  std::size_t n;
  PExponent p;
  Format format;
  Mode mode;
};

/// tau = 0 maps to the identity order; everything else goes through FracOrder.
FracOrder order_of(double tau);

std::string cmd_matrix(const Config& c, std::string_view which);
std::string cmd_transform(const Config& c, const std::vector<double>& input,
                          bool inverse);
std::string cmd_norm(const Config& c, const std::vector<double>& x);
std::string cmd_basis(const Config& c, std::size_t k);

struct VerifyOutcome {
  std::string text;
  bool passed;
};
VerifyOutcome cmd_verify(const Config& c, std::string_view suite,
                         bool report_star,
                         const std::optional<std::vector<double>>& input);

std::string cmd_dual(const Config& c, std::string_view which,
                     const std::vector<double>& a);

}  // namespace frakpascal::cli

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
#include <map>
#include <span>
#include <vector>

namespace frakpascal {

/// Leading terms (x_0, ..., x_{N-1}) of a real sequence.
using Prefix = std::vector<double>;

/// Finitely supported real sequence; indices not stored are zero.
/// Stored values are never zero.
class FiniteSequence {
 public:
  FiniteSequence() = default;

  static FiniteSequence from_prefix(std::span<const double> values);
  /// The unit sequence e^(k).
  static FiniteSequence unit(std::size_t k);

  double operator[](std::size_t i) const;
  void set(std::size_t i, double value);

  /// One past the largest nonzero index; 0 for the zero sequence.
  std::size_t extent() const noexcept;
  bool is_zero() const noexcept { return values_.empty(); }
  const std::map<std::size_t, double>& support() const noexcept {
    return values_;
  }

  Prefix prefix(std::size_t n) const;
  /// Entrywise absolute values.
  FiniteSequence abs() const;

  FiniteSequence& operator+=(const FiniteSequence& other);
  FiniteSequence& operator-=(const FiniteSequence& other);
  FiniteSequence& operator*=(double alpha);

  friend FiniteSequence operator+(FiniteSequence a, const FiniteSequence& b) {
    return a += b;
  }
  friend FiniteSequence operator-(FiniteSequence a, const FiniteSequence& b) {
    return a -= b;
  }
  friend FiniteSequence operator*(double alpha, FiniteSequence a) {
    return a *= alpha;
  }
  friend bool operator==(const FiniteSequence&,
                         const FiniteSequence&) = default;

 private:
  std::map<std::size_t, double> values_;
};

}  // namespace frakpascal

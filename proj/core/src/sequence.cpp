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

#include "frakpascal/sequence.hpp"

#include <cmath>
#include <iterator>

namespace frakpascal {

FiniteSequence FiniteSequence::from_prefix(std::span<const double> values) {
  FiniteSequence s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.set(i, values[i]);
  }
  return s;
}

FiniteSequence FiniteSequence::unit(std::size_t k) {
  FiniteSequence s;
  s.set(k, 1.0);
  return s;
}

double FiniteSequence::operator[](std::size_t i) const {
  const auto it = values_.find(i);
  return it == values_.end() ? 0.0 : it->second;
}

void FiniteSequence::set(std::size_t i, double value) {
  if (value == 0.0) {
    values_.erase(i);
  } else {
    values_[i] = value;
  }
}

std::size_t FiniteSequence::extent() const noexcept {
  return values_.empty() ? 0 : values_.rbegin()->first + 1;
}

Prefix FiniteSequence::prefix(std::size_t n) const {
  Prefix out(n, 0.0);
  for (const auto& [i, v] : values_) {
    if (i >= n) {
      break;
    }
    out[i] = v;
  }
  return out;
}

FiniteSequence FiniteSequence::abs() const {
  FiniteSequence out;
  for (const auto& [i, v] : values_) {
    out.values_.emplace(i, std::abs(v));
  }
  return out;
}

FiniteSequence& FiniteSequence::operator+=(const FiniteSequence& other) {
  for (const auto& [i, v] : other.values_) {
    set(i, (*this)[i] + v);
  }
  return *this;
}

FiniteSequence& FiniteSequence::operator-=(const FiniteSequence& other) {
  for (const auto& [i, v] : other.values_) {
    set(i, (*this)[i] - v);
  }
  return *this;
}

FiniteSequence& FiniteSequence::operator*=(double alpha) {
  for (auto it = values_.begin(); it != values_.end();) {
    it->second *= alpha;
    it = (it->second == 0.0) ? values_.erase(it) : std::next(it);
  }
  return *this;
}

}  // namespace frakpascal

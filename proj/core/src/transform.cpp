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

#include "frakpascal/transform.hpp"

#include <algorithm>
#include <string>

#include "frakpascal/errors.hpp"

namespace frakpascal {

namespace {

Prefix lower_times(const DenseTriangle& m, std::span<const double> v) {
  const std::size_t n = m.size();
  const std::size_t used = std::min(n, v.size());
  Prefix out(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = m.row(r);
    double sum = 0.0;
    const std::size_t end = std::min(r + 1, used);
    for (std::size_t k = 0; k < end; ++k) {
      sum += row[k] * v[k];
    }
    out[r] = sum;
  }
  return out;
}

}  // namespace

PhatTransform::PhatTransform(const FracOrder& tau, std::size_t n)
    : tau_(tau),
      forward_(truncate(phat_operator(tau), n)),
      inverse_(truncate(phat_inv_operator(tau), n)) {}

Prefix PhatTransform::apply(std::span<const double> x) const {
  return lower_times(forward_, x);
}

Prefix PhatTransform::apply(const FiniteSequence& x) const {
  return apply(x.prefix(horizon()));
}

Prefix PhatTransform::inverse_apply(std::span<const double> y) const {
  return lower_times(inverse_, y);
}

BasisVector PhatTransform::basis_vector(std::size_t k) const {
  if (k >= horizon()) {
    throw PreconditionError("basis index " + std::to_string(k) +
                            " must be below the horizon " +
                            std::to_string(horizon()));
  }
  BasisVector b{k, Prefix(horizon(), 0.0)};
  for (std::size_t n = k; n < horizon(); ++n) {
    b.values[n] = inverse_(n, k);
  }
  return b;
}

Prefix PhatTransform::reconstruct(const FiniteSequence& x,
                                  std::size_t max_index) const {
  if (max_index >= horizon()) {
    throw PreconditionError("reconstruction order " +
                            std::to_string(max_index) +
                            " must be below the horizon " +
                            std::to_string(horizon()));
  }
  const Prefix mu = apply(x);
  Prefix out(horizon(), 0.0);
  for (std::size_t k = 0; k <= max_index; ++k) {
    if (mu[k] == 0.0) {
      continue;
    }
    for (std::size_t n = k; n < horizon(); ++n) {
      out[n] += mu[k] * inverse_(n, k);
    }
  }
  return out;
}

Prefix apply(const FracOrder& tau, const FiniteSequence& x, std::size_t n) {
  return PhatTransform(tau, n).apply(x);
}

Prefix inverse_apply(const FracOrder& tau, std::span<const double> y,
                     std::size_t n) {
  return PhatTransform(tau, n).inverse_apply(y);
}

BasisVector basis_vector(const FracOrder& tau, std::size_t k, std::size_t n) {
  if (k >= n) {
    throw PreconditionError("basis index " + std::to_string(k) +
                            " must be below the horizon " + std::to_string(n));
  }
  return PhatTransform(tau, n).basis_vector(k);
}

Prefix reconstruct(const FracOrder& tau, const FiniteSequence& x,
                   std::size_t max_index, std::size_t n) {
  return PhatTransform(tau, n).reconstruct(x, max_index);
}

}  // namespace frakpascal

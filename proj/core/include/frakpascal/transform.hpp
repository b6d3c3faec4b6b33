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

// Sequence transforms induced by P_hat = P Delta^(tau).
//
// Every sum involved is row-finite, so a length-N prefix of a transform is
// exact (up to rounding) and only needs the first N inputs. Nothing here
// claims membership of an infinite sequence in a sequence space.

#include <cstddef>
#include <span>

#include "frakpascal/coeffs.hpp"
#include "frakpascal/sequence.hpp"
#include "frakpascal/triangular.hpp"

namespace frakpascal {

/// Column k of P_hat^{-1}, truncated to N terms.
struct BasisVector {
  std::size_t k;
  Prefix values;
};

/// Truncations of P_hat and its closed-form inverse at one (tau, N),
/// reusable across many transforms.
class PhatTransform {
 public:
  /// PreconditionError when n == 0.
  PhatTransform(const FracOrder& tau, std::size_t n);

  const FracOrder& order() const noexcept { return tau_; }
  std::size_t horizon() const noexcept { return forward_.size(); }
  const DenseTriangle& forward_matrix() const noexcept { return forward_; }
  const DenseTriangle& inverse_matrix() const noexcept { return inverse_; }

  /// y_n = sum_{k<=n} P_hat(n, k) x_k for n < N. Inputs past N are ignored,
  /// missing ones are zero.
  Prefix apply(std::span<const double> x) const;
  Prefix apply(const FiniteSequence& x) const;

  /// x_k = sum_{j<=k} P_hat^{-1}(k, j) y_j for k < N.
  Prefix inverse_apply(std::span<const double> y) const;

  /// b^(k); PreconditionError when k >= N.
  BasisVector basis_vector(std::size_t k) const;

  /// sum_{k<=K} mu_k b^(k) with mu = P_hat x; PreconditionError when K >= N.
  Prefix reconstruct(const FiniteSequence& x, std::size_t max_index) const;

 private:
  FracOrder tau_;
  DenseTriangle forward_;
  DenseTriangle inverse_;
};

Prefix apply(const FracOrder& tau, const FiniteSequence& x, std::size_t n);
Prefix inverse_apply(const FracOrder& tau, std::span<const double> y,
                     std::size_t n);
BasisVector basis_vector(const FracOrder& tau, std::size_t k, std::size_t n);
Prefix reconstruct(const FracOrder& tau, const FiniteSequence& x,
                   std::size_t max_index, std::size_t n);

}  // namespace frakpascal

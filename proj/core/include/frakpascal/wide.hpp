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

// Transforms in 192-bit binary floating point.
//
// P_hat and its inverse have entries of size ~2^n with alternating signs, so
// a double-precision round trip x -> P_hat x -> x loses about n*log10(3)
// digits; by n ~ 25 nothing of x's 53 bits survives. Rounding y to double is
// already enough to lose x, whatever algorithm inverts it afterwards. This
// path keeps 192 bits throughout, which covers horizons up to a few hundred
// terms with room to spare.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstddef>
#include <span>
#include <vector>

#include "frakpascal/coeffs.hpp"
#include "frakpascal/sequence.hpp"

namespace frakpascal::wide {

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<
        192, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

std::vector<Real> widen(std::span<const double> x);
/// Rounds each entry to the nearest double.
Prefix narrow(std::span<const Real> x);

/// P_hat = P Delta^(tau) applied factor by factor: O(N) memory, O(N^2) work.
class WideTransform {
 public:
  /// PreconditionError when n == 0.
  WideTransform(const FracOrder& tau, std::size_t n);

  std::size_t horizon() const noexcept { return n_; }

  std::vector<Real> apply(std::span<const Real> x) const;
  std::vector<Real> inverse_apply(std::span<const Real> y) const;
  /// b^(k) = P_hat^{-1} e^(k); PreconditionError when k >= N.
  std::vector<Real> basis_vector(std::size_t k) const;
  /// sum_{k<=K} mu_k b^(k) with mu = P_hat x; PreconditionError when K >= N.
  std::vector<Real> reconstruct(std::span<const Real> x,
                                std::size_t max_index) const;

 private:
  std::size_t n_;
  std::vector<Real> forward_;  // (-1)^i C(tau, i)
  std::vector<Real> inverse_;  // (-1)^i C(-tau, i)
};

}  // namespace frakpascal::wide

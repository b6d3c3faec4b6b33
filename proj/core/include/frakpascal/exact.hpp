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

// Exact integer evaluation of the truncated triangles for integer orders.
//
// For tau = m in {0, 1, 2, ...} every entry of Delta^(+-m), P, P^{-1}, P_hat
// and P_hat^{-1} is an integer, so truncations can be formed and multiplied
// without rounding. Truncation sizes are limited to the exact Pascal range
// (rows 0..kExactPascalMaxRow).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frakpascal/coeffs.hpp"

namespace frakpascal::exact {

using BigInt = boost::multiprecision::cpp_int;

class ExactTriangle {
 public:
  explicit ExactTriangle(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  BigInt operator()(std::size_t n, std::size_t k) const;
  BigInt& at(std::size_t n, std::size_t k);
  std::span<const BigInt> row(std::size_t n) const;

  friend bool operator==(const ExactTriangle&, const ExactTriangle&) = default;

 private:
  static std::size_t offset(std::size_t n) { return n * (n + 1) / 2; }

  std::size_t size_;
  std::vector<BigInt> packed_;
};

/// Largest truncation size accepted by the exact path.
inline constexpr std::size_t kMaxExactSize = kExactPascalMaxRow + 1;

/// Integer value of an integral order; PreconditionError otherwise.
long long integer_order(const FracOrder& tau);

ExactTriangle pascal(std::size_t n);
ExactTriangle pascal_inv(std::size_t n);
/// Binomial difference triangle of integer order m (m may be negative).
ExactTriangle delta(long long m, std::size_t n);
ExactTriangle phat(const FracOrder& tau, std::size_t n);
ExactTriangle phat_inv(const FracOrder& tau, std::size_t n);

ExactTriangle multiply(const ExactTriangle& a, const ExactTriangle& b);

/// max |(P_hat P_hat^{-1})(n, k) - delta_nk| in exact arithmetic.
BigInt identity_residual(const FracOrder& tau, std::size_t n);

/// Narrowing with RangeError when the value leaves the int64 range.
std::int64_t to_int64(const BigInt& value);

// ---------------------------------------------------------------------------
// Exact rational transforms.
//
// Every finite double is a dyadic rational, so any order admits an exact
// evaluation of the transforms. The factorizations P_hat = P Delta^(tau) and
// P_hat^{-1} = Delta^(-tau) P^{-1} keep the cost at O(N^2) rational
// operations; denominators grow with the binary length of tau.

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double; PreconditionError for nan/inf.
Rational to_rational(double value);

/// Leading n terms of P_hat x. Sizes are not limited by the Pascal range.
std::vector<Rational> apply(const FracOrder& tau, std::span<const Rational> x,
                            std::size_t n);

/// Leading n terms of P_hat^{-1} y.
std::vector<Rational> inverse_apply(const FracOrder& tau,
                                    std::span<const Rational> y,
                                    std::size_t n);

}  // namespace frakpascal::exact

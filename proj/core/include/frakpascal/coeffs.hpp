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
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace frakpascal {

/// Order tau of the fractional difference operator.
///
/// Admissible orders are finite reals outside {0, -1, -2, ...}. Positive
/// integers are accepted; they reproduce the classical m-th order
/// differences. The zero order is reachable only through identity(), where
/// the difference triangle collapses to the identity and the product
/// operator reduces to the plain Pascal matrix.
class FracOrder {
 public:
  /// Throws InvalidOrder for non-finite tau, tau == 0 or a negative integer.
  explicit FracOrder(double tau);

  /// The degenerate order tau = 0.
  static FracOrder identity() noexcept { return FracOrder(0.0, Unchecked{}); }

  double value() const noexcept { return tau_; }

  /// True when tau is a (nonnegative) integer.
  bool is_integer() const noexcept;

  friend bool operator==(const FracOrder&, const FracOrder&) = default;

 private:
  struct Unchecked {};
  FracOrder(double tau, Unchecked) noexcept : tau_(tau) {}

  double tau_;
};

/// Generalized binomial coefficient C(order, i) = Gamma(order+1) /
/// (i! Gamma(order-i+1)), evaluated by the multiplicative recurrence
/// C(order, i) = C(order, i-1) (order-i+1) / i. Total for every real order;
/// removable Gamma singularities come out as exact zeros.
double frac_binom(double order, std::size_t i);

/// Lazily grown table of frac_binom(order, i) for i = 0, 1, ...
///
/// Published prefixes are immutable. Growth happens under a mutex by
/// publishing a longer copy, so snapshots handed out earlier stay valid and
/// unchanged. Safe to share between threads.
class CoeffTable {
 public:
  explicit CoeffTable(double order);
  explicit CoeffTable(const FracOrder& tau) : CoeffTable(tau.value()) {}

  CoeffTable(const CoeffTable& other);
  CoeffTable& operator=(const CoeffTable&) = delete;

  double order() const noexcept { return order_; }

  /// Coefficient i, extending the table if needed.
  double operator[](std::size_t i) const;

  /// Snapshot holding at least `count` coefficients.
  std::shared_ptr<const std::vector<double>> snapshot(std::size_t count) const;

 private:
  double order_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const std::vector<double>> coeffs_;
};

/// (Delta^(tau))_{nk} = (-1)^{n-k} C(tau, n-k) for k <= n, else 0.
double delta_entry(const FracOrder& tau, std::size_t n, std::size_t k);

/// (Delta^(-tau))_{nk} = (-1)^{n-k} C(-tau, n-k) for k <= n, else 0.
double delta_inv_entry(const FracOrder& tau, std::size_t n, std::size_t k);

/// Largest row index whose Pascal entries are evaluated in exact integer
/// arithmetic (binom(64, 32) still fits in 64 unsigned bits).
inline constexpr std::size_t kExactPascalMaxRow = 64;

enum class PascalMode {
  /// Exact integers up to kExactPascalMaxRow, log-Gamma beyond.
  kFloatFallback,
  /// Throw RangeError past kExactPascalMaxRow.
  kExactOnly,
};

/// binom(n, n-k) as an exact integer; RangeError when n > kExactPascalMaxRow.
std::uint64_t pascal_exact(std::size_t n, std::size_t k);

/// p_{nk} = binom(n, n-k) for k <= n, else 0.
///
/// Rows up to kExactPascalMaxRow are the correctly rounded exact integer.
/// Larger rows use exp(lgamma) in extended precision, relative error below
/// 1e-12 while the value is representable.
double pascal_entry(std::size_t n, std::size_t k,
                    PascalMode mode = PascalMode::kFloatFallback);

/// (P^{-1})_{nk} = (-1)^{n-k} binom(n, n-k) for k <= n, else 0.
double pascal_inv_entry(std::size_t n, std::size_t k,
                        PascalMode mode = PascalMode::kFloatFallback);

}  // namespace frakpascal

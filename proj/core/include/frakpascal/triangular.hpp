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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frakpascal/coeffs.hpp"

namespace frakpascal {

/// N x N lower-triangular matrix stored row-packed (row n holds n+1 values).
class DenseTriangle {
 public:
  /// Zero matrix of the given size; PreconditionError when size == 0.
  explicit DenseTriangle(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  /// Entry (n, k); zero above the diagonal. Requires n < size().
  double operator()(std::size_t n, std::size_t k) const;

  /// Mutable entry on or below the diagonal.
  double& at(std::size_t n, std::size_t k);

  std::span<const double> row(std::size_t n) const;
  std::span<double> row(std::size_t n);

  friend bool operator==(const DenseTriangle&, const DenseTriangle&) = default;

 private:
  static std::size_t offset(std::size_t n) { return n * (n + 1) / 2; }

  std::size_t size_;
  std::vector<double> packed_;
};

/// Product of two truncations of equal size.
DenseTriangle multiply(const DenseTriangle& a, const DenseTriangle& b);

/// Infinite lower-triangular matrix given by an entry rule.
///
/// The rule is only consulted for k <= n. Rows are evaluated on first use and
/// cached for the lifetime of the operator; copies share the cache. Entry
/// evaluation is deterministic and safe to call from several threads.
class TriangularOperator {
 public:
  using EntryRule = std::function<double(std::size_t n, std::size_t k)>;
  using Row = std::shared_ptr<const std::vector<double>>;

  TriangularOperator(EntryRule rule, std::string descriptor);

  /// Entry (n, k), 0 whenever k > n.
  double operator()(std::size_t n, std::size_t k) const;

  /// Row n as n+1 values (columns 0..n).
  Row row(std::size_t n) const;

  const std::string& descriptor() const noexcept;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

TriangularOperator identity_operator();
TriangularOperator pascal_operator();
TriangularOperator pascal_inv_operator();
TriangularOperator delta_operator(const FracOrder& tau);
TriangularOperator delta_inv_operator(const FracOrder& tau);
/// The product P Delta^(tau), entries from phat_entry.
TriangularOperator phat_operator(const FracOrder& tau);
/// Closed-form inverse Delta^(-tau) P^{-1}, entries from phat_inv_entry.
TriangularOperator phat_inv_operator(const FracOrder& tau);

/// C(n, k) = sum_{j=k}^{n} A(n, j) B(j, k), evaluated lazily.
TriangularOperator compose(const TriangularOperator& a,
                           const TriangularOperator& b);

/// Leading N x N block; PreconditionError when n == 0.
DenseTriangle truncate(const TriangularOperator& op, std::size_t n);

/// (P Delta^(tau))_{nk} = sum_{i=k}^{n} binom(n, n-i) (-1)^{i-k} C(tau, i-k).
double phat_entry(const FracOrder& tau, std::size_t n, std::size_t k);

/// (P Delta^(tau))^{-1}_{nk}
///   = sum_{j=k}^{n} (-1)^{n-j} C(-tau, n-j) (-1)^{j-k} binom(j, j-k).
double phat_inv_entry(const FracOrder& tau, std::size_t n, std::size_t k);

/// Max over n, k of |(A B)(n, k) - delta_nk| / scale(n, k), where
/// scale(n, k) = max(1, max_j |A(n, j) B(j, k)|). Sizes must match.
double identity_residual(const DenseTriangle& a, const DenseTriangle& b);

/// Relative residual of P_hat times its closed-form inverse on N x N.
double identity_residual(const FracOrder& tau, std::size_t n);

}  // namespace frakpascal

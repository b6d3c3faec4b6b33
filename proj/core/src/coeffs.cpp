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

#include "frakpascal/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_map>

#include "frakpascal/errors.hpp"
#include "frakpascal/format.hpp"

namespace frakpascal {

namespace {

constexpr std::size_t kRows = kExactPascalMaxRow + 1;
using PascalTable = std::array<std::array<std::uint64_t, kRows>, kRows>;

const PascalTable& exact_pascal_table() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (std::size_t n = 0; n < kRows; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
      }
    }
    return t;
  }();
  return table;
}

double sign_of(std::size_t d) { return (d % 2 == 0) ? 1.0 : -1.0; }

double log_gamma_binom(std::size_t n, std::size_t k) {
  const long double ln = std::lgamma(static_cast<long double>(n) + 1.0L) -
                         std::lgamma(static_cast<long double>(k) + 1.0L) -
                         std::lgamma(static_cast<long double>(n - k) + 1.0L);
  // The exact value is an integer, so rounding can only remove error.
  return static_cast<double>(std::round(std::exp(ln)));
}

// Rows past the exact range are built once each; lgamma dominates otherwise.
const std::vector<double>& fallback_pascal_row(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t,
                            std::unique_ptr<const std::vector<double>>>
      rows;
  std::lock_guard lock(mutex);
  auto& slot = rows[n];
  if (!slot) {
    std::vector<double> row(n + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) {
      row[k] = row[n - k] = log_gamma_binom(n, k);
    }
    slot = std::make_unique<const std::vector<double>>(std::move(row));
  }
  return *slot;
}

}  // namespace

FracOrder::FracOrder(double tau) : tau_(tau) {
  if (!std::isfinite(tau)) {
    throw InvalidOrder("order must be finite");
  }
  if (tau <= 0.0 && std::floor(tau) == tau) {
    throw InvalidOrder("order " + format_shortest(tau) +
                       " is zero or a negative integer");
  }
}

bool FracOrder::is_integer() const noexcept {
  return std::floor(tau_) == tau_;
}

double frac_binom(double order, std::size_t i) {
  double c = 1.0;
  for (std::size_t j = 1; j <= i; ++j) {
    // tau - (j-1) rounds once; (tau - j) + 1 would round twice.
    c *= (order - static_cast<double>(j - 1)) / static_cast<double>(j);
  }
  return c;
}

CoeffTable::CoeffTable(double order)
    : order_(order),
      coeffs_(std::make_shared<const std::vector<double>>(1, 1.0)) {}

CoeffTable::CoeffTable(const CoeffTable& other) : order_(other.order_) {
  std::lock_guard lock(other.mutex_);
  coeffs_ = other.coeffs_;
}

double CoeffTable::operator[](std::size_t i) const {
  return (*snapshot(i + 1))[i];
}

std::shared_ptr<const std::vector<double>> CoeffTable::snapshot(
    std::size_t count) const {
  std::lock_guard lock(mutex_);
  if (coeffs_->size() >= count) {
    return coeffs_;
  }
  auto grown = std::make_shared<std::vector<double>>(*coeffs_);
  const std::size_t target = std::max(count, 2 * grown->size());
  grown->reserve(target);
  while (grown->size() < target) {
    const auto j = static_cast<double>(grown->size());
    // Same factor grouping as frac_binom, so both paths are bit-identical.
    grown->push_back(grown->back() * ((order_ - (j - 1.0)) / j));
  }
  coeffs_ = std::move(grown);
  return coeffs_;
}

double delta_entry(const FracOrder& tau, std::size_t n, std::size_t k) {
  if (k > n) {
    return 0.0;
  }
  return sign_of(n - k) * frac_binom(tau.value(), n - k);
}

double delta_inv_entry(const FracOrder& tau, std::size_t n, std::size_t k) {
  if (k > n) {
    return 0.0;
  }
  return sign_of(n - k) * frac_binom(-tau.value(), n - k);
}

std::uint64_t pascal_exact(std::size_t n, std::size_t k) {
  if (n > kExactPascalMaxRow) {
    throw RangeError("Pascal row " + std::to_string(n) +
                     " exceeds the exact-integer range (max " +
                     std::to_string(kExactPascalMaxRow) + ")");
  }
  if (k > n) {
    return 0;
  }
  return exact_pascal_table()[n][k];
}

double pascal_entry(std::size_t n, std::size_t k, PascalMode mode) {
  if (k > n) {
    return 0.0;
  }
  if (n <= kExactPascalMaxRow || mode == PascalMode::kExactOnly) {
    return static_cast<double>(pascal_exact(n, k));
  }
  return fallback_pascal_row(n)[k];
}

double pascal_inv_entry(std::size_t n, std::size_t k, PascalMode mode) {
  if (k > n) {
    return 0.0;
  }
  return sign_of(n - k) * pascal_entry(n, k, mode);
}

}  // namespace frakpascal

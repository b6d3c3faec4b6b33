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

#include "frakpascal/triangular.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "frakpascal/errors.hpp"
#include "frakpascal/format.hpp"

namespace frakpascal {

// ---------------------------------------------------------------------------
// DenseTriangle

DenseTriangle::DenseTriangle(std::size_t size) : size_(size) {
  if (size == 0) {
    throw PreconditionError("truncation size must be at least 1");
  }
  packed_.assign(offset(size), 0.0);
}

double DenseTriangle::operator()(std::size_t n, std::size_t k) const {
  return k > n ? 0.0 : packed_[offset(n) + k];
}

double& DenseTriangle::at(std::size_t n, std::size_t k) {
  if (n >= size_ || k > n) {
    throw PreconditionError("DenseTriangle::at outside the lower triangle");
  }
  return packed_[offset(n) + k];
}

std::span<const double> DenseTriangle::row(std::size_t n) const {
  return {packed_.data() + offset(n), n + 1};
}

std::span<double> DenseTriangle::row(std::size_t n) {
  return {packed_.data() + offset(n), n + 1};
}

DenseTriangle multiply(const DenseTriangle& a, const DenseTriangle& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("multiply: size mismatch");
  }
  DenseTriangle c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto arow = a.row(n);
    auto crow = c.row(n);
    for (std::size_t j = 0; j <= n; ++j) {
      const double anj = arow[j];
      if (anj == 0.0) {
        continue;
      }
      const auto brow = b.row(j);
      for (std::size_t k = 0; k <= j; ++k) {
        crow[k] += anj * brow[k];
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// TriangularOperator

struct TriangularOperator::State {
  EntryRule rule;
  std::string descriptor;
  std::mutex mutex;
  std::unordered_map<std::size_t, Row> rows;
};

TriangularOperator::TriangularOperator(EntryRule rule, std::string descriptor)
    : state_(std::make_shared<State>()) {
  state_->rule = std::move(rule);
  state_->descriptor = std::move(descriptor);
}

double TriangularOperator::operator()(std::size_t n, std::size_t k) const {
  if (k > n) {
    return 0.0;
  }
  return (*row(n))[k];
}

TriangularOperator::Row TriangularOperator::row(std::size_t n) const {
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->rows.find(n); it != state_->rows.end()) {
      return it->second;
    }
  }
  // Evaluated outside the lock: composed rules recurse into other operators.
  auto values = std::make_shared<std::vector<double>>(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    (*values)[k] = state_->rule(n, k);
  }
  std::lock_guard lock(state_->mutex);
  // A concurrent evaluation may have won; both are bit-identical.
  return state_->rows.try_emplace(n, std::move(values)).first->second;
}

const std::string& TriangularOperator::descriptor() const noexcept {
  return state_->descriptor;
}

namespace {

double sign_of(std::size_t d) { return (d % 2 == 0) ? 1.0 : -1.0; }

std::string with_order(const char* name, const FracOrder& tau) {
  return std::string(name) + "(tau=" + format_shortest(tau.value()) + ")";
}

}  // namespace

TriangularOperator identity_operator() {
  return TriangularOperator(
      [](std::size_t n, std::size_t k) { return n == k ? 1.0 : 0.0; }, "I");
}

TriangularOperator pascal_operator() {
  return TriangularOperator(
      [](std::size_t n, std::size_t k) { return pascal_entry(n, k); }, "P");
}

TriangularOperator pascal_inv_operator() {
  return TriangularOperator(
      [](std::size_t n, std::size_t k) { return pascal_inv_entry(n, k); },
      "Pinv");
}

TriangularOperator delta_operator(const FracOrder& tau) {
  auto table = std::make_shared<CoeffTable>(tau);
  return TriangularOperator(
      [table](std::size_t n, std::size_t k) {
        return sign_of(n - k) * (*table)[n - k];
      },
      with_order("Delta", tau));
}

TriangularOperator delta_inv_operator(const FracOrder& tau) {
  auto table = std::make_shared<CoeffTable>(-tau.value());
  return TriangularOperator(
      [table](std::size_t n, std::size_t k) {
        return sign_of(n - k) * (*table)[n - k];
      },
      with_order("DeltaInv", tau));
}

TriangularOperator phat_operator(const FracOrder& tau) {
  auto table = std::make_shared<CoeffTable>(tau);
  return TriangularOperator(
      [table](std::size_t n, std::size_t k) {
        const auto c = table->snapshot(n - k + 1);
        double sum = 0.0;
        for (std::size_t i = k; i <= n; ++i) {
          sum += pascal_entry(n, i) * (sign_of(i - k) * (*c)[i - k]);
        }
        return sum;
      },
      with_order("Phat", tau));
}

TriangularOperator phat_inv_operator(const FracOrder& tau) {
  auto table = std::make_shared<CoeffTable>(-tau.value());
  return TriangularOperator(
      [table](std::size_t n, std::size_t k) {
        const auto c = table->snapshot(n - k + 1);
        double sum = 0.0;
        for (std::size_t j = k; j <= n; ++j) {
          sum += (sign_of(n - j) * (*c)[n - j]) * pascal_inv_entry(j, k);
        }
        return sum;
      },
      with_order("PhatInv", tau));
}

TriangularOperator compose(const TriangularOperator& a,
                           const TriangularOperator& b) {
  return TriangularOperator(
      [a, b](std::size_t n, std::size_t k) {
        const auto arow = a.row(n);
        double sum = 0.0;
        for (std::size_t j = k; j <= n; ++j) {
          sum += (*arow)[j] * (*b.row(j))[k];
        }
        return sum;
      },
      "(" + a.descriptor() + ")*(" + b.descriptor() + ")");
}

DenseTriangle truncate(const TriangularOperator& op, std::size_t n) {
  DenseTriangle out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto src = op.row(r);
    std::copy(src->begin(), src->end(), out.row(r).begin());
  }
  return out;
}

double phat_entry(const FracOrder& tau, std::size_t n, std::size_t k) {
  if (k > n) {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t i = k; i <= n; ++i) {
    sum += pascal_entry(n, i) * delta_entry(tau, i, k);
  }
  return sum;
}

double phat_inv_entry(const FracOrder& tau, std::size_t n, std::size_t k) {
  if (k > n) {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t j = k; j <= n; ++j) {
    sum += delta_inv_entry(tau, n, j) * pascal_inv_entry(j, k);
  }
  return sum;
}

double identity_residual(const DenseTriangle& a, const DenseTriangle& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("identity_residual: size mismatch");
  }
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto arow = a.row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      double sum = 0.0;
      double scale = 1.0;
      for (std::size_t j = k; j <= n; ++j) {
        const double term = arow[j] * b(j, k);
        sum += term;
        scale = std::max(scale, std::abs(term));
      }
      const double target = (n == k) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - target) / scale);
    }
  }
  return worst;
}

double identity_residual(const FracOrder& tau, std::size_t n) {
  return identity_residual(truncate(phat_operator(tau), n),
                           truncate(phat_inv_operator(tau), n));
}

}  // namespace frakpascal

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

#include "frakpascal/wide.hpp"

#include <string>

#include "frakpascal/errors.hpp"

namespace frakpascal::wide {

namespace {

std::vector<Real> signed_binoms(const Real& order, std::size_t n) {
  std::vector<Real> c(n);
  Real value = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      value = value * (order - Real(i) + 1) / Real(i);
    }
    c[i] = (i % 2 == 0) ? value : Real(-value);
  }
  return c;
}

// z_r = sum_{i<=r} c[r-i] x_i
std::vector<Real> difference(const std::vector<Real>& c,
                             std::span<const Real> x, std::size_t n) {
  std::vector<Real> z(n);
  for (std::size_t r = 0; r < n; ++r) {
    Real sum = 0;
    const std::size_t last = std::min(r + 1, x.size());
    for (std::size_t i = 0; i < last; ++i) {
      if (x[i] != 0) {
        sum += c[r - i] * x[i];
      }
    }
    z[r] = sum;
  }
  return z;
}

// (P z)_r or (P^{-1} z)_r. Pascal rows roll forward by addition, so every
// binomial below 2^192 is held exactly.
std::vector<Real> pascal_times(std::span<const Real> z, std::size_t n,
                               bool inverse) {
  std::vector<Real> out(n);
  std::vector<Real> row(n);
  const std::size_t used = std::min(z.size(), n);
  for (std::size_t r = 0; r < n; ++r) {
    row[r] = 1;
    for (std::size_t k = r; k-- > 1;) {
      row[k] += row[k - 1];
    }
    Real sum = 0;
    const std::size_t last = std::min(r + 1, used);
    for (std::size_t k = 0; k < last; ++k) {
      if (z[k] == 0) {
        continue;
      }
      if (inverse && (r - k) % 2 == 1) {
        sum -= row[k] * z[k];
      } else {
        sum += row[k] * z[k];
      }
    }
    out[r] = sum;
  }
  return out;
}

}  // namespace

std::vector<Real> widen(std::span<const double> x) {
  return std::vector<Real>(x.begin(), x.end());
}

Prefix narrow(std::span<const Real> x) {
  Prefix out;
  out.reserve(x.size());
  for (const Real& v : x) {
    out.push_back(v.convert_to<double>());
  }
  return out;
}

WideTransform::WideTransform(const FracOrder& tau, std::size_t n) : n_(n) {
  if (n == 0) {
    throw PreconditionError("transform horizon must be at least 1");
  }
  const Real order = tau.value();
  forward_ = signed_binoms(order, n);
  inverse_ = signed_binoms(-order, n);
}

std::vector<Real> WideTransform::apply(std::span<const Real> x) const {
  const std::vector<Real> z = difference(forward_, x, n_);
  return pascal_times(z, n_, /*inverse=*/false);
}

std::vector<Real> WideTransform::inverse_apply(std::span<const Real> y) const {
  const std::vector<Real> z = pascal_times(y, n_, /*inverse=*/true);
  return difference(inverse_, z, n_);
}

std::vector<Real> WideTransform::basis_vector(std::size_t k) const {
  if (k >= n_) {
    throw PreconditionError("basis index " + std::to_string(k) +
                            " outside the horizon " + std::to_string(n_));
  }
  std::vector<Real> unit(k + 1, Real(0));
  unit[k] = 1;
  return inverse_apply(unit);
}

std::vector<Real> WideTransform::reconstruct(std::span<const Real> x,
                                             std::size_t max_index) const {
  if (max_index >= n_) {
    throw PreconditionError("reconstruction index " +
                            std::to_string(max_index) +
                            " outside the horizon " + std::to_string(n_));
  }
  std::vector<Real> mu = apply(x);
  mu.resize(max_index + 1);
  return inverse_apply(mu);
}

}  // namespace frakpascal::wide

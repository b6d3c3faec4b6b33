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

#include "frakpascal/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frakpascal/errors.hpp"
#include "frakpascal/exact.hpp"

namespace frakpascal {

PExponent::PExponent(double p) : p_(p) {
  if (std::isnan(p) || p < 1.0) {
    throw PreconditionError("exponent p must be >= 1");
  }
  if (std::isinf(p)) {
    q_ = 1.0;
  } else if (p == 1.0) {
    q_ = std::numeric_limits<double>::infinity();
  } else {
    q_ = p / (p - 1.0);
  }
}

PExponent PExponent::infinity() {
  return PExponent(std::numeric_limits<double>::infinity());
}

bool PExponent::is_infinite() const noexcept { return std::isinf(p_); }

double p_norm(std::span<const double> x, const PExponent& p) {
  double largest = 0.0;
  for (double v : x) {
    largest = std::max(largest, std::abs(v));
  }
  if (largest == 0.0 || p.is_infinite()) {
    return largest;
  }
  if (p.p() == 1.0) {
    double sum = 0.0;
    for (double v : x) {
      sum += std::abs(v);
    }
    return sum;
  }
  // Scaled by the largest magnitude so |x_k|^p cannot overflow.
  double sum = 0.0;
  if (p.p() == 2.0) {
    for (double v : x) {
      const double r = v / largest;
      sum += r * r;
    }
    return largest * std::sqrt(sum);
  }
  for (double v : x) {
    sum += std::pow(std::abs(v) / largest, p.p());
  }
  return largest * std::pow(sum, 1.0 / p.p());
}

TruncatedNorm phat_norm(const PhatTransform& t, const FiniteSequence& x,
                        const PExponent& p) {
  return {p_norm(t.apply(x), p), t.horizon()};
}

TruncatedNorm phat_norm(const FracOrder& tau, const FiniteSequence& x,
                        const PExponent& p, std::size_t n) {
  return phat_norm(PhatTransform(tau, n), x, p);
}

namespace {

ParallelogramSides exact_parallelogram(const FracOrder& tau,
                                       const PExponent& p, std::size_t n) {
  using exact::Rational;
  const std::vector<Rational> sum_image = {1, 1};
  const std::vector<Rational> diff_image = {1, -1};
  const auto u = exact::inverse_apply(tau, sum_image, n);
  const auto v = exact::inverse_apply(tau, diff_image, n);
  const auto sq = [&](const std::vector<Rational>& s) {
    Prefix image(n);
    const auto exact_image = exact::apply(tau, s, n);
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = exact_image[i].convert_to<double>();
    }
    const double norm = p_norm(image, p);
    return norm * norm;
  };
  std::vector<Rational> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = u[i] + v[i];
    minus[i] = u[i] - v[i];
  }
  return {sq(plus) + sq(minus), 2.0 * (sq(u) + sq(v))};
}

}  // namespace

ParallelogramSides parallelogram_gap(const FracOrder& tau, const PExponent& p,
                                     std::size_t n, Precision precision) {
  if (n < 2) {
    throw PreconditionError("parallelogram witnesses need a horizon >= 2");
  }
  if (precision == Precision::kExact) {
    return exact_parallelogram(tau, p, n);
  }
  const PhatTransform t(tau, n);
  const double sum_image[] = {1.0, 1.0};
  const double diff_image[] = {1.0, -1.0};
  const auto u = FiniteSequence::from_prefix(t.inverse_apply(sum_image));
  const auto v = FiniteSequence::from_prefix(t.inverse_apply(diff_image));
  const auto sq = [&](const FiniteSequence& s) {
    const double norm = phat_norm(t, s, p).value;
    return norm * norm;
  };
  return {sq(u + v) + sq(u - v), 2.0 * (sq(u) + sq(v))};
}

double absoluteness_gap(const FracOrder& tau, const PExponent& p,
                        const FiniteSequence& w, std::size_t n) {
  const PhatTransform t(tau, n);
  return std::abs(phat_norm(t, w, p).value - phat_norm(t, w.abs(), p).value);
}

double inclusion_bound(const FracOrder& tau, const PExponent& p,
                       std::size_t n) {
  const DenseTriangle m = truncate(phat_operator(tau), n);
  Prefix row_sums(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    // Compensated (Neumaier) so Pascal rows still sum to exactly 2^r once
    // the binomials themselves are no longer exact in double.
    double sum = 0.0, carry = 0.0;
    for (double v : m.row(r)) {
      const double a = std::abs(v);
      const double t = sum + a;
      carry += (std::abs(sum) >= a) ? (sum - t) + a : (a - t) + sum;
      sum = t;
    }
    row_sums[r] = sum + carry;
  }
  return p_norm(row_sums, p);
}

}  // namespace frakpascal

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

#include "frakpascal/exact.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "frakpascal/errors.hpp"

namespace frakpascal::exact {

namespace {

void check_size(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("truncation size must be at least 1");
  }
  if (n > kMaxExactSize) {
    throw RangeError("exact truncation size " + std::to_string(n) +
                     " exceeds the exact-integer range (max " +
                     std::to_string(kMaxExactSize) + ")");
  }
}

BigInt signed_unit(std::size_t d) { return (d % 2 == 0) ? 1 : -1; }

}  // namespace

ExactTriangle::ExactTriangle(std::size_t size) : size_(size) {
  check_size(size);
  packed_.assign(offset(size), BigInt(0));
}

BigInt ExactTriangle::operator()(std::size_t n, std::size_t k) const {
  return k > n ? BigInt(0) : packed_[offset(n) + k];
}

BigInt& ExactTriangle::at(std::size_t n, std::size_t k) {
  if (n >= size_ || k > n) {
    throw PreconditionError("ExactTriangle::at outside the lower triangle");
  }
  return packed_[offset(n) + k];
}

std::span<const BigInt> ExactTriangle::row(std::size_t n) const {
  return {packed_.data() + offset(n), n + 1};
}

long long integer_order(const FracOrder& tau) {
  if (!tau.is_integer()) {
    throw PreconditionError("exact evaluation needs an integer order");
  }
  return static_cast<long long>(tau.value());
}

ExactTriangle pascal(std::size_t n) {
  ExactTriangle out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      out.at(r, k) = pascal_exact(r, k);
    }
  }
  return out;
}

ExactTriangle pascal_inv(std::size_t n) {
  ExactTriangle out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      out.at(r, k) = signed_unit(r - k) * BigInt(pascal_exact(r, k));
    }
  }
  return out;
}

ExactTriangle delta(long long m, std::size_t n) {
  ExactTriangle out(n);
  // C(m, i) by the recurrence; every division is exact for integer m.
  std::vector<BigInt> c(n, BigInt(0));
  c[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    c[i] = c[i - 1] * (BigInt(m) - BigInt(i) + 1) / BigInt(i);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      out.at(r, k) = signed_unit(r - k) * c[r - k];
    }
  }
  return out;
}

ExactTriangle multiply(const ExactTriangle& a, const ExactTriangle& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("multiply: size mismatch");
  }
  ExactTriangle c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (std::size_t j = k; j <= n; ++j) {
        sum += a(n, j) * b(j, k);
      }
      c.at(n, k) = std::move(sum);
    }
  }
  return c;
}

ExactTriangle phat(const FracOrder& tau, std::size_t n) {
  return multiply(pascal(n), delta(integer_order(tau), n));
}

ExactTriangle phat_inv(const FracOrder& tau, std::size_t n) {
  return multiply(delta(-integer_order(tau), n), pascal_inv(n));
}

BigInt identity_residual(const FracOrder& tau, std::size_t n) {
  const ExactTriangle product = multiply(phat(tau, n), phat_inv(tau, n));
  BigInt worst = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      BigInt d = product(r, k) - (r == k ? 1 : 0);
      if (d < 0) {
        d = -d;
      }
      if (d > worst) {
        worst = d;
      }
    }
  }
  return worst;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw RangeError("exact value " + value.str() +
                     " exceeds the 64-bit integer range");
  }
  return value.convert_to<std::int64_t>();
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) {
    throw PreconditionError("only finite values have an exact rational form");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // 53 significant bits: value = m * 2^(exponent - 53) with integer m.
  const auto m = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(m);
  const int shift = exponent - 53;
  const BigInt power = BigInt(1) << std::abs(shift);
  return shift >= 0 ? Rational(r * power) : Rational(r / power);
}

namespace {

// Generalized binomials C(order, i), i < n, from the exact recurrence.
std::vector<Rational> rational_binoms(const Rational& order, std::size_t n) {
  std::vector<Rational> c(n);
  if (n == 0) {
    return c;
  }
  c[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    c[i] = c[i - 1] * (order - Rational(i) + 1) / Rational(i);
  }
  return c;
}

// z_n = sum_{i<=n} (-1)^{n-i} C(order, n-i) x_i.
std::vector<Rational> difference(const Rational& order,
                                 std::span<const Rational> x, std::size_t n) {
  const std::vector<Rational> c = rational_binoms(order, n);
  std::vector<Rational> z(n);
  for (std::size_t r = 0; r < n; ++r) {
    Rational sum = 0;
    for (std::size_t i = 0; i <= r && i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      const Rational term = c[r - i] * x[i];
      if ((r - i) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    z[r] = std::move(sum);
  }
  return z;
}

// (P z)_n or (P^{-1} z)_n with binomial rows built by the exact recurrence.
std::vector<Rational> pascal_times(std::span<const Rational> z, std::size_t n,
                                   bool inverse) {
  std::vector<Rational> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    BigInt binom = 1;  // binom(r, 0)
    Rational sum = 0;
    for (std::size_t k = 0; k <= r; ++k) {
      if (k > 0) {
        binom = binom * BigInt(r - k + 1) / BigInt(k);
      }
      if (k < z.size() && z[k] != 0) {
        const Rational term = z[k] * Rational(binom);
        if (inverse && (r - k) % 2 == 1) {
          sum -= term;
        } else {
          sum += term;
        }
      }
    }
    out[r] = std::move(sum);
  }
  return out;
}

}  // namespace

std::vector<Rational> apply(const FracOrder& tau, std::span<const Rational> x,
                            std::size_t n) {
  const std::vector<Rational> z = difference(to_rational(tau.value()), x, n);
  return pascal_times(z, n, /*inverse=*/false);
}

std::vector<Rational> inverse_apply(const FracOrder& tau,
                                    std::span<const Rational> y,
                                    std::size_t n) {
  const std::vector<Rational> z = pascal_times(y, n, /*inverse=*/true);
  return difference(-to_rational(tau.value()), z, n);
}

}  // namespace frakpascal::exact

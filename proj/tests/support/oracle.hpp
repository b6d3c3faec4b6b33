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

// Independent reference values for the tests. Nothing here calls into the
// library: coefficients come from Gamma ratios, Pascal entries from the
// addition rule, inverses from forward substitution, all in 50 digits.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Hp = boost::multiprecision::cpp_bin_float_50;
using Matrix = std::vector<std::vector<Hp>>;  // square, row-major

inline bool is_integer(double x) { return std::floor(x) == x; }

/// Gamma(t+1) / (i! Gamma(t-i+1)). Integer orders use the finite binomial
/// forms, where the Gamma ratio has removable singularities.
inline Hp gamma_binom(double t, unsigned i) {
  if (is_integer(t)) {
    const long m = static_cast<long>(t);
    Hp v = 1;
    if (m >= 0) {
      if (static_cast<long>(i) > m) {
        return 0;
      }
      for (unsigned j = 1; j <= i; ++j) {
        v = v * Hp(m - static_cast<long>(i) + static_cast<long>(j)) / Hp(j);
      }
      return v;
    }
    // C(-m, i) = (-1)^i binom(m + i - 1, i)
    const long mm = -m;
    for (unsigned j = 1; j <= i; ++j) {
      v = v * Hp(mm - 1 + static_cast<long>(j)) / Hp(j);
    }
    return (i % 2 == 0) ? v : Hp(-v);
  }
  using boost::math::tgamma;
  const Hp tau = t;
  return tgamma(tau + 1) / (tgamma(Hp(i) + 1) * tgamma(tau - Hp(i) + 1));
}

inline Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Hp>(n, Hp(0))); }

inline Matrix pascal(std::size_t n) {
  Matrix p = zeros(n);
  for (std::size_t r = 0; r < n; ++r) {
    p[r][0] = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      p[r][k] = p[r - 1][k - 1] + p[r - 1][k];
    }
  }
  return p;
}

/// (-1)^{n-k} Gamma-ratio binomial of order t.
inline Matrix delta(double t, std::size_t n) {
  Matrix d = zeros(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      const Hp c = gamma_binom(t, static_cast<unsigned>(r - k));
      d[r][k] = ((r - k) % 2 == 0) ? c : Hp(-c);
    }
  }
  return d;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      Hp s = 0;
      for (std::size_t j = k; j <= i; ++j) {
        s += a[i][j] * b[j][k];
      }
      c[i][k] = s;
    }
  }
  return c;
}

/// Inverse of a lower-triangular matrix by forward substitution.
inline Matrix invert_lower(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix x = zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k][k] = 1 / a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Hp s = 0;
      for (std::size_t j = k; j < i; ++j) {
        s += a[i][j] * x[j][k];
      }
      x[i][k] = -s / a[i][i];
    }
  }
  return x;
}

inline Matrix phat(double t, std::size_t n) { return multiply(pascal(n), delta(t, n)); }

/// Matrix-vector product on the first n entries of x (missing entries are 0).
inline std::vector<Hp> apply(const Matrix& a, const std::vector<double>& x) {
  const std::size_t n = a.size();
  std::vector<Hp> y(n, Hp(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i && k < x.size(); ++k) {
      y[i] += a[i][k] * Hp(x[k]);
    }
  }
  return y;
}

inline double to_double(const Hp& v) { return v.convert_to<double>(); }

/// |got - want| / |want|, or |got| when want is 0.
inline double rel_error(double got, const Hp& want) {
  const Hp diff = abs(Hp(got) - want);
  return to_double(want == 0 ? diff : Hp(diff / abs(want)));
}

}  // namespace oracle

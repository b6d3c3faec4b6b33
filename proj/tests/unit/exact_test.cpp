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

#include <gtest/gtest.h>

#include "frakpascal/errors.hpp"
#include "frakpascal/exact.hpp"
#include "frakpascal/triangular.hpp"
#include "oracle.hpp"

namespace frakpascal {
namespace {

using exact::BigInt;
using exact::Rational;

TEST(Exact, SizeLimits) {
  EXPECT_THROW(exact::pascal(0), PreconditionError);
  EXPECT_THROW(exact::pascal(exact::kMaxExactSize + 1), RangeError);
  EXPECT_NO_THROW(exact::pascal(exact::kMaxExactSize));
  EXPECT_THROW(exact::integer_order(FracOrder(0.5)), PreconditionError);
  EXPECT_EQ(exact::integer_order(FracOrder(3.0)), 3);
}

TEST(Exact, PascalMatchesAdditionRule) {
  const auto p = exact::pascal(65);
  const oracle::Matrix want = oracle::pascal(65);
  for (std::size_t n = 0; n < 65; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(p(n, k), BigInt(want[n][k].convert_to<std::uint64_t>()));
    }
  }
}

TEST(Exact, PascalTimesInverseIsIdentity) {
  const auto prod = exact::multiply(exact::pascal(65), exact::pascal_inv(65));
  for (std::size_t n = 0; n < 65; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(prod(n, k), n == k ? 1 : 0);
    }
  }
}

TEST(Exact, IntegerOrdersHaveZeroResidual) {
  for (double t : {1.0, 2.0, 3.0, 7.0}) {
    EXPECT_EQ(exact::identity_residual(FracOrder(t), 65), 0) << t;
  }
  EXPECT_EQ(exact::identity_residual(FracOrder::identity(), 32), 0);
}

TEST(Exact, TauZeroIsPascalBitExact) {
  EXPECT_EQ(exact::phat(FracOrder::identity(), 32), exact::pascal(32));
  const DenseTriangle f = truncate(phat_operator(FracOrder::identity()), 32);
  const auto e = exact::pascal(32);
  for (std::size_t n = 0; n < 32; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(f(n, k), static_cast<double>(exact::to_int64(e(n, k))));
    }
  }
}

TEST(Exact, FloatPathAgreesForIntegerOrders) {
  for (double t : {1.0, 2.0, 3.0}) {
    const auto e = exact::phat(FracOrder(t), 40);
    const DenseTriangle f = truncate(phat_operator(FracOrder(t)), 40);
    for (std::size_t n = 0; n < 40; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const double want = static_cast<double>(exact::to_int64(e(n, k)));
        EXPECT_LE(std::abs(f(n, k) - want), 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST(Exact, DeltaOfNegativeOrderInvertsDelta) {
  const auto prod = exact::multiply(exact::delta(3, 30), exact::delta(-3, 30));
  for (std::size_t n = 0; n < 30; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(prod(n, k), n == k ? 1 : 0);
    }
  }
}

TEST(Exact, ToInt64Range) {
  EXPECT_EQ(exact::to_int64(BigInt(-42)), -42);
  EXPECT_THROW(exact::to_int64(BigInt(1) << 70), RangeError);
}

TEST(Exact, ToRationalIsExact) {
  EXPECT_EQ(exact::to_rational(0.5), Rational(1, 2));
  EXPECT_EQ(exact::to_rational(-3.0), Rational(-3));
  EXPECT_EQ(exact::to_rational(0.1), Rational(BigInt(3602879701896397),
                                              BigInt(1) << 55));
  EXPECT_EQ(exact::to_rational(0x1p-1074).convert_to<double>(), 0x1p-1074);
  EXPECT_THROW(exact::to_rational(INFINITY), PreconditionError);
}

TEST(Exact, RationalTransformsRoundTrip) {
  const std::vector<Rational> x = {Rational(1, 3), Rational(-2), Rational(5, 7)};
  for (double t : {0.5, 0.3, -1.7, 2.0}) {
    const auto y = exact::apply(FracOrder(t), x, 20);
    const auto back = exact::inverse_apply(FracOrder(t), y, 20);
    for (std::size_t i = 0; i < 20; ++i) {
      EXPECT_EQ(back[i], i < x.size() ? x[i] : Rational(0));
    }
  }
}

TEST(Exact, RationalApplyMatchesOracle) {
  const double t = 0.5;
  const std::vector<double> x = {0.25, -1.0, 0.5, 0.0, 2.0};
  const oracle::Matrix m = oracle::phat(t, 16);
  const auto want = oracle::apply(m, x);
  std::vector<Rational> xr;
  for (double v : x) {
    xr.push_back(exact::to_rational(v));
  }
  const auto got = exact::apply(FracOrder(t), xr, 16);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_LE(oracle::rel_error(got[i].convert_to<double>(), want[i]), 1e-15);
  }
}

}  // namespace
}  // namespace frakpascal

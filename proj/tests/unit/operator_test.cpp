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

#include <cmath>
#include <thread>
#include <vector>

#include "frakpascal/errors.hpp"
#include "frakpascal/triangular.hpp"
#include "oracle.hpp"

namespace frakpascal {
namespace {

const double kGrid[] = {0.5, 1.5, -0.5, 1.0, 2.0};

TEST(DenseTriangle, StorageAndShape) {
  DenseTriangle m(3);
  m.at(2, 1) = 4.0;
  EXPECT_EQ(m(2, 1), 4.0);
  EXPECT_EQ(m(1, 2), 0.0);
  EXPECT_EQ(m.row(2).size(), 3u);
  EXPECT_THROW(DenseTriangle(0), PreconditionError);
  EXPECT_THROW(m.at(0, 1), PreconditionError);
}

TEST(Truncate, SmallTriangles) {
  const DenseTriangle p = truncate(pascal_operator(), 3);
  const std::vector<std::vector<double>> want = {{1}, {1, 1}, {1, 2, 1}};
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(p(n, k), want[n][k]);
    }
  }
  const DenseTriangle d = truncate(delta_operator(FracOrder(1.0)), 2);
  EXPECT_EQ(d(0, 0), 1.0);
  EXPECT_EQ(d(1, 0), -1.0);
  EXPECT_EQ(d(1, 1), 1.0);
  EXPECT_EQ(truncate(phat_operator(FracOrder::identity()), 3), p);
}

TEST(PhatEntry, SmallEntries) {
  for (double t : {0.5, 0.3, 2.7, -1.25}) {
    const FracOrder tau(t);
    EXPECT_EQ(phat_entry(tau, 0, 0), 1.0);
    EXPECT_EQ(phat_entry(tau, 1, 3), 0.0);
    EXPECT_DOUBLE_EQ(phat_entry(tau, 1, 0), 1.0 - t);
    EXPECT_DOUBLE_EQ(phat_entry(tau, 2, 1), 2.0 - t);
    EXPECT_NEAR(phat_entry(tau, 2, 0), 1.0 - 2.0 * t + t * (t - 1.0) / 2.0,
                1e-15 * std::max(1.0, t * t));
  }
  EXPECT_EQ(phat_entry(FracOrder(0.5), 1, 0), 0.5);
}

TEST(PhatInvEntry, SmallEntries) {
  EXPECT_EQ(phat_inv_entry(FracOrder(0.5), 1, 0), -0.5);
  EXPECT_EQ(phat_inv_entry(FracOrder(1.0), 2, 0), 1.0);
  for (std::size_t n = 0; n < 20; ++n) {
    EXPECT_EQ(phat_inv_entry(FracOrder(0.7), n, n), 1.0);
    EXPECT_EQ(phat_entry(FracOrder(0.7), n, n), 1.0);
  }
}

TEST(PhatEntry, MatchesGammaOracle) {
  constexpr std::size_t n = 32;
  for (double t : kGrid) {
    const oracle::Matrix want = oracle::phat(t, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        EXPECT_LE(oracle::rel_error(phat_entry(FracOrder(t), r, k), want[r][k]),
                  1e-12)
            << "tau=" << t << " (" << r << "," << k << ")";
      }
    }
  }
}

TEST(PhatInvEntry, MatchesDenseInverse) {
  constexpr std::size_t n = 32;
  for (double t : kGrid) {
    const oracle::Matrix want = oracle::invert_lower(oracle::phat(t, n));
    const TriangularOperator composed =
        compose(delta_inv_operator(FracOrder(t)), pascal_inv_operator());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        const double got = phat_inv_entry(FracOrder(t), r, k);
        EXPECT_LE(oracle::rel_error(got, want[r][k]), 1e-10);
        EXPECT_LE(oracle::rel_error(composed(r, k), want[r][k]), 1e-10);
      }
    }
  }
}

TEST(Compose, PascalTimesDeltaIsPhat) {
  for (double t : kGrid) {
    const FracOrder tau(t);
    const TriangularOperator c = compose(pascal_operator(), delta_operator(tau));
    for (std::size_t r = 0; r < 32; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        const double want = phat_entry(tau, r, k);
        EXPECT_LE(std::abs(c(r, k) - want), 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST(Compose, IdentityIsNeutral) {
  const TriangularOperator b = phat_operator(FracOrder(0.4));
  EXPECT_EQ(truncate(compose(identity_operator(), b), 20), truncate(b, 20));
  EXPECT_EQ(truncate(compose(b, identity_operator()), 20), truncate(b, 20));
}

TEST(Compose, AssociativeAtTruncation) {
  const TriangularOperator a = pascal_operator();
  const TriangularOperator b = delta_operator(FracOrder(0.5));
  const TriangularOperator c = delta_inv_operator(FracOrder(1.5));
  constexpr std::size_t n = 24;
  const DenseTriangle left = truncate(compose(a, compose(b, c)), n);
  const DenseTriangle right = truncate(compose(compose(a, b), c), n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      EXPECT_LE(std::abs(left(r, k) - right(r, k)),
                1e-12 * std::max(1.0, std::abs(right(r, k))));
    }
  }
}

TEST(Operator, UpperTriangleIsZeroAndEntriesAreStable) {
  const TriangularOperator op = phat_inv_operator(FracOrder(-0.5));
  for (std::size_t n = 0; n < 30; ++n) {
    for (std::size_t k = n + 1; k < 35; ++k) {
      EXPECT_EQ(op(n, k), 0.0);
    }
    const auto first = op.row(n);
    const auto again = op.row(n);
    EXPECT_EQ(*first, *again);
  }
  EXPECT_EQ(op.descriptor(), "PhatInv(tau=-0.5)");
}

TEST(Operator, ConcurrentRowsAreIdentical) {
  const TriangularOperator op = phat_operator(FracOrder(0.5));
  const DenseTriangle serial = truncate(phat_operator(FracOrder(0.5)), 40);
  std::vector<std::thread> pool;
  std::vector<DenseTriangle> parallel(6, DenseTriangle(40));
  for (int t = 0; t < 6; ++t) {
    pool.emplace_back([&, t] { parallel[t] = truncate(op, 40); });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (const auto& m : parallel) {
    EXPECT_EQ(m, serial);
  }
}

TEST(Reductions, TauZeroIsPascal) {
  const FracOrder zero = FracOrder::identity();
  EXPECT_EQ(truncate(phat_operator(zero), 32), truncate(pascal_operator(), 32));
  EXPECT_EQ(truncate(phat_inv_operator(zero), 32),
            truncate(pascal_inv_operator(), 32));
}

TEST(Reductions, IntegerOrdersAreBinomialDifferences) {
  for (int m = 1; m <= 3; ++m) {
    const oracle::Matrix want = oracle::phat(m, 32);
    const DenseTriangle got = truncate(phat_operator(FracOrder(m)), 32);
    for (std::size_t r = 0; r < 32; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        EXPECT_LE(oracle::rel_error(got(r, k), want[r][k]), 1e-12);
      }
    }
  }
}

TEST(IdentityResidual, SmallAndTrivialCases) {
  EXPECT_EQ(identity_residual(FracOrder(0.9), 1), 0.0);
  EXPECT_LE(identity_residual(FracOrder(1.0), 8), 1e-12);
  EXPECT_LE(identity_residual(FracOrder(0.5), 32), 1e-8);
}

TEST(IdentityResidual, GridAtSixtyFour) {
  for (double t : kGrid) {
    EXPECT_LE(identity_residual(FracOrder(t), 64), 1e-8) << t;
  }
}

TEST(IdentityResidual, StarredEntriesBreakTheIdentity) {
  const double t = 0.5;
  DenseTriangle starred = truncate(phat_operator(FracOrder(t)), 3);
  starred.at(1, 0) = 2.0 - t;
  starred.at(2, 0) = 3.0 - 3.0 * t + t * (t - 1.0) / 2.0;
  starred.at(2, 1) = 3.0 - t;
  const DenseTriangle inverse = truncate(phat_inv_operator(FracOrder(t)), 3);
  EXPECT_GE(identity_residual(starred, inverse), 0.5);
  EXPECT_LE(identity_residual(truncate(phat_operator(FracOrder(t)), 3), inverse),
            1e-10);
}

}  // namespace
}  // namespace frakpascal

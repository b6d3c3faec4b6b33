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
#include <limits>
#include <random>
#include <vector>

#include "frakpascal/errors.hpp"
#include "frakpascal/spaces.hpp"
#include "oracle.hpp"

namespace frakpascal {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_prefix(std::mt19937_64& g, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(len(g));
  for (double& v : x) {
    v = u(g);
  }
  return x;
}

TEST(PExponent, Conjugates) {
  EXPECT_EQ(PExponent(2).q(), 2.0);
  EXPECT_EQ(PExponent(1).q(), kInf);
  EXPECT_EQ(PExponent::infinity().q(), 1.0);
  EXPECT_TRUE(PExponent::infinity().is_infinite());
  EXPECT_DOUBLE_EQ(PExponent(4).q(), 4.0 / 3.0);
  EXPECT_THROW(PExponent(0.5), PreconditionError);
  EXPECT_THROW(PExponent(std::nan("")), PreconditionError);
}

TEST(PNorm, Basics) {
  const std::vector<double> a = {1, -1};
  EXPECT_DOUBLE_EQ(p_norm(a, PExponent(2)), std::sqrt(2.0));
  EXPECT_EQ(p_norm(std::vector<double>{1, -1, 0}, PExponent::infinity()), 1.0);
  EXPECT_EQ(p_norm(std::vector<double>{3, 4}, PExponent(1)), 7.0);
  EXPECT_EQ(p_norm(std::vector<double>{3, 4}, PExponent(2)), 5.0);
  EXPECT_EQ(p_norm(std::vector<double>{0, 0}, PExponent(3)), 0.0);
  // No overflow on large entries.
  EXPECT_DOUBLE_EQ(p_norm(std::vector<double>{3e200, 4e200}, PExponent(2)),
                   5e200);
}

TEST(PNorm, Homogeneity) {
  std::mt19937_64 g(31);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
    for (int s = 0; s < 50; ++s) {
      auto x = random_prefix(g, 20);
      const double alpha = u(g);
      const double before = p_norm(x, PExponent(p));
      for (double& v : x) {
        v *= alpha;
      }
      EXPECT_NEAR(p_norm(x, PExponent(p)), std::abs(alpha) * before,
                  1e-12 * std::abs(alpha) * before);
    }
  }
}

TEST(PhatNorm, Examples) {
  const FracOrder tau(0.5);
  for (double p : {1.0, 2.0, 3.0, kInf}) {
    const auto b0 = FiniteSequence::from_prefix(basis_vector(tau, 0, 16).values);
    const TruncatedNorm nb = phat_norm(tau, b0, PExponent(p), 16);
    EXPECT_NEAR(nb.value, 1.0, 1e-12);
    EXPECT_EQ(nb.horizon, 16u);
    EXPECT_EQ(phat_norm(tau, FiniteSequence(), PExponent(p), 16).value, 0.0);
  }
  const PhatTransform tr(tau, 16);
  const auto u = FiniteSequence::from_prefix(tr.inverse_apply(std::vector<double>{1, 1}));
  EXPECT_NEAR(phat_norm(tr, u, PExponent(2)).value, std::sqrt(2.0), 1e-9);
}

TEST(PhatNorm, IsTheNormOfTheTransform) {
  std::mt19937_64 g(32);
  const PhatTransform tr(FracOrder(1.5), 24);
  for (int s = 0; s < 20; ++s) {
    const auto x = FiniteSequence::from_prefix(random_prefix(g, 24));
    for (double p : {1.0, 2.0, kInf}) {
      EXPECT_EQ(phat_norm(tr, x, PExponent(p)).value,
                p_norm(tr.apply(x), PExponent(p)));
    }
  }
}

TEST(PhatNorm, TriangleInequality) {
  std::mt19937_64 g(33);
  const PhatTransform tr(FracOrder(0.5), 24);
  for (int s = 0; s < 50; ++s) {
    const auto x = FiniteSequence::from_prefix(random_prefix(g, 24));
    const auto z = FiniteSequence::from_prefix(random_prefix(g, 24));
    for (double p : {1.0, 2.0, kInf}) {
      const PExponent e(p);
      const double lhs = phat_norm(tr, x + z, e).value;
      const double rhs = phat_norm(tr, x, e).value + phat_norm(tr, z, e).value;
      EXPECT_LE(lhs, rhs * (1 + 1e-12));
    }
  }
}

TEST(Parallelogram, ExactSides) {
  for (double t : {0.5, 1.5, -0.5, 1.0, 2.0}) {
    for (double p : {1.0, 2.0, 4.0, kInf}) {
      const auto s = parallelogram_gap(FracOrder(t), PExponent(p), 32,
                                       Precision::kExact);
      const double expected = std::isinf(p) ? 4.0 : 4.0 * std::exp2(2.0 / p);
      EXPECT_EQ(s.lhs, 8.0) << "tau=" << t << " p=" << p;
      EXPECT_NEAR(s.rhs, expected, 1e-12 * expected);
      if (p != 2.0) {
        EXPECT_GE(std::abs(s.lhs - s.rhs), 2.0 - 1e-12);
      }
    }
  }
}

TEST(Parallelogram, FloatPathIsClose) {
  for (double t : {0.5, -0.5}) {
    const auto s = parallelogram_gap(FracOrder(t), PExponent(2), 16);
    EXPECT_NEAR(s.lhs, 8.0, 1e-6);
    EXPECT_NEAR(s.rhs, 8.0, 1e-6);
  }
  EXPECT_THROW(parallelogram_gap(FracOrder(0.5), PExponent(2), 1),
               PreconditionError);
}

TEST(Absoluteness, Examples) {
  const FracOrder tau(0.5);
  const auto ones = FiniteSequence::from_prefix(std::vector<double>{1, 1});
  EXPECT_EQ(absoluteness_gap(tau, PExponent(2), ones, 16), 0.0);
  EXPECT_EQ(absoluteness_gap(tau, PExponent(2), FiniteSequence(), 16), 0.0);
}

TEST(Absoluteness, SignedWitnessAgainstOracle) {
  const auto w = FiniteSequence::from_prefix(std::vector<double>{1, -1});
  const double got = absoluteness_gap(FracOrder(0.5), PExponent(2), w, 16);

  const oracle::Matrix m = oracle::phat(0.5, 16);
  const auto yw = oracle::apply(m, {1.0, -1.0});
  const auto ya = oracle::apply(m, {1.0, 1.0});
  oracle::Hp sw = 0, sa = 0;
  for (std::size_t n = 0; n < 16; ++n) {
    sw += yw[n] * yw[n];
    sa += ya[n] * ya[n];
  }
  const oracle::Hp want = abs(sqrt(sw) - sqrt(sa));
  EXPECT_LE(oracle::rel_error(got, want), 1e-12);
  EXPECT_NEAR(got, 1392.9541732819171, 1e-12 * 1392.9541732819171);
  EXPECT_GT(got, 0.1);
}

TEST(Inclusion, Examples) {
  EXPECT_EQ(inclusion_bound(FracOrder::identity(), PExponent::infinity(), 4),
            8.0);
  for (double p : {1.0, 2.0, kInf}) {
    EXPECT_EQ(inclusion_bound(FracOrder(0.7), PExponent(p), 1), 1.0);
  }
  for (std::size_t n = 1; n <= 64; ++n) {
    EXPECT_EQ(inclusion_bound(FracOrder::identity(), PExponent::infinity(), n),
              std::ldexp(1.0, static_cast<int>(n) - 1));
  }
}

TEST(Inclusion, BoundHolds) {
  std::mt19937_64 g(34);
  const FracOrder tau(0.5);
  const PhatTransform tr(tau, 32);
  for (double p : {1.0, 2.0, kInf}) {
    const PExponent e(p);
    const double bound = inclusion_bound(tau, e, 32);
    for (int s = 0; s < 100; ++s) {
      const auto x = random_prefix(g, 32);
      EXPECT_LE(phat_norm(tr, FiniteSequence::from_prefix(x), e).value,
                bound * p_norm(x, e));
    }
  }
}

TEST(Inclusion, StrictnessWitness) {
  // P_hat^{-1} e^(0) grows in l_p while its image stays the unit vector.
  const FracOrder tau(0.5);
  const PExponent e(2);
  double previous = 0.0;
  for (std::size_t n = 1; n <= 32; ++n) {
    const PhatTransform tr(tau, n);
    const Prefix x = tr.inverse_apply(std::vector<double>{1});
    const double size = p_norm(x, e);
    EXPECT_GE(size, previous);
    previous = size;
    EXPECT_NEAR(phat_norm(tr, FiniteSequence::from_prefix(x), e).value, 1.0,
                1e-6);
  }
  EXPECT_GT(previous, 4.0);
}

}  // namespace
}  // namespace frakpascal

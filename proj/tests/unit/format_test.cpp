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

#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "frakpascal/format.hpp"

namespace frakpascal {
namespace {

TEST(FormatShortest, Values) {
  EXPECT_EQ(format_shortest(1.0), "1");
  EXPECT_EQ(format_shortest(0.5), "0.5");
  EXPECT_EQ(format_shortest(0.1), "0.1");
  EXPECT_EQ(format_shortest(-2.0), "-2");
  EXPECT_EQ(format_shortest(0.0), "0");
  EXPECT_EQ(format_shortest(-0.0), "0");
  EXPECT_EQ(format_shortest(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_shortest(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_shortest(std::nan("")), "nan");
}

TEST(FormatShortest, RoundTrips) {
  std::mt19937_64 g(51);
  std::uniform_int_distribution<int> e(-300, 300);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 10000; ++s) {
    const double v = std::ldexp(u(g), e(g));
    const std::string text = format_shortest(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    EXPECT_EQ(back, v) << text;
  }
}

}  // namespace
}  // namespace frakpascal

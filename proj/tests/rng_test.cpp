// Copyright 2026 The indist Authors
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

#include "indist/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "indist/errors.hpp"

namespace indist {
namespace {

TEST(CounterStream, RandomAccessMatchesSequential) {
  CounterStream s(derive_key({7, 1}));
  for (std::uint64_t i = 0; i < 100; ++i) {
    EXPECT_EQ(s.next(), CounterStream::word_at(s.key(), i));
    EXPECT_EQ(CounterStream::word_at(s.key(), i), CounterStream::word_at(s.key(), BigInt(static_cast<unsigned long>(i))));
  }
}

TEST(CounterStream, KeysSeparateStreams) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t a = 0; a < 20; ++a)
    for (std::uint64_t b = 0; b < 20; ++b) keys.insert(derive_key({a, b}));
  EXPECT_EQ(keys.size(), 400u);
  EXPECT_NE(derive_key({1, 2}), derive_key({2, 1}));
}

TEST(UniformBelow, RangeAndFrequencies) {
  CounterStream s(derive_key({42}));
  const int bound = 7;
  const int draws = 70000;
  std::vector<int> counts(bound, 0);
  for (int i = 0; i < draws; ++i) {
    const BigInt v = uniform_below(s, BigInt(bound));
    ASSERT_GE(v, 0);
    ASSERT_LT(v, bound);
    ++counts[v.get_ui()];
  }
  // Each cell is Binomial(draws, 1/7); allow five standard deviations.
  const double mean = draws / double(bound);
  const double sd = std::sqrt(draws * (1.0 / bound) * (1 - 1.0 / bound));
  for (int c : counts) EXPECT_NEAR(c, mean, 5 * sd);
}

TEST(UniformBelow, HugeBoundsStayInRange) {
  CounterStream s(derive_key({3}));
  const BigInt bound = pow2(300) + 12345;
  for (int i = 0; i < 200; ++i) {
    const BigInt v = uniform_below(s, bound);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, bound);
  }
  EXPECT_THROW(uniform_below(s, BigInt(0)), DomainError);
}

TEST(UniformBetween, Inclusive) {
  CounterStream s(derive_key({4}));
  std::set<long> seen;
  for (int i = 0; i < 500; ++i) seen.insert(uniform_between(s, BigInt(-2), BigInt(2)).get_si());
  EXPECT_EQ(seen, (std::set<long>{-2, -1, 0, 1, 2}));
}

TEST(Bernoulli, ExactRationalProbability) {
  CounterStream s(derive_key({5}));
  const Rational p = make_rational(3, 10);
  const int draws = 50000;
  int hits = 0;
  for (int i = 0; i < draws; ++i) hits += bernoulli(s, p);
  EXPECT_NEAR(hits, 0.3 * draws, 5 * std::sqrt(draws * 0.21));
  EXPECT_FALSE(bernoulli(s, 0));
  EXPECT_TRUE(bernoulli(s, 1));
}

TEST(UniformUnit, InUnitInterval) {
  CounterStream s(derive_key({6}));
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform_unit(s);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

}  // namespace
}  // namespace indist

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

#include "indist/exact_dist.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "indist/errors.hpp"

namespace indist {
namespace {

// Independent oracle: half the L1 distance over the union of supports.
Rational half_l1(const ExactDist& a, const ExactDist& b) {
  std::map<Tuple, Rational> diff;
  for (const auto& [x, p] : a) diff[x] += p;
  for (const auto& [x, p] : b) diff[x] -= p;
  Rational s = 0;
  for (const auto& [x, v] : diff) s += abs(v);
  return s / 2;
}

ExactDist random_scalar(std::mt19937_64& rng, int support, int max_value) {
  std::vector<std::pair<Tuple, Rational>> atoms;
  std::vector<long> weights;
  long total = 0;
  for (int i = 0; i < support; ++i) {
    weights.push_back(1 + static_cast<long>(rng() % 9));
    total += weights.back();
  }
  for (int i = 0; i < support; ++i) {
    atoms.push_back({{BigInt(static_cast<long>(rng() % max_value))}, make_rational(weights[i], total)});
  }
  return ExactDist(ValueKind::kScalar, 1, atoms);
}

TEST(ExactDist, CanonicalisesAndValidates) {
  ExactDist d(ValueKind::kScalar, 1,
              {{{BigInt(2)}, make_rational(1, 4)}, {{BigInt(1)}, make_rational(1, 2)},
               {{BigInt(2)}, make_rational(1, 4)}});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.prob({BigInt(2)}), make_rational(1, 2));
  EXPECT_EQ(d.prob({BigInt(7)}), Rational(0));
  EXPECT_EQ(d.begin()->first, Tuple{BigInt(1)});
  EXPECT_THROW(ExactDist(ValueKind::kScalar, 1, {{{BigInt(1)}, make_rational(1, 3)}}),
               NormalizationError);
  EXPECT_THROW(ExactDist(ValueKind::kTuple, 2, {{{BigInt(1)}, Rational(1)}}), KindError);
  EXPECT_THROW(ExactDist(ValueKind::kScalar, 1,
                         {{{BigInt(1)}, Rational(2)}, {{BigInt(2)}, Rational(-1)}}),
               DomainError);
}

TEST(Tvd, UniformShiftClosedFormEnumeration) {
  for (int n1 = 2; n1 <= 12; ++n1) {
    for (int n2 = 1; n2 < n1; ++n2) {
      const ExactDist u1 = uniform_int(1, n1);
      const ExactDist sum = convolve(u1, uniform_int(1, n2));
      EXPECT_EQ(tvd(u1, sum), make_rational(n2 + 1, 2 * n1)) << n1 << " " << n2;
      EXPECT_EQ(uniform_shift_tvd_closed_form(n1, n2), make_rational(n2 + 1, 2 * n1));
    }
  }
}

TEST(Tvd, MatchesHalfL1AndIsAMetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactDist a = random_scalar(rng, 1 + trial % 6, 8);
    const ExactDist b = random_scalar(rng, 1 + trial % 5, 8);
    const ExactDist c = random_scalar(rng, 3, 8);
    const Rational ab = tvd(a, b);
    EXPECT_EQ(ab, half_l1(a, b));
    EXPECT_EQ(ab, tvd(b, a));
    EXPECT_GE(ab, 0);
    EXPECT_LE(ab, 1);
    EXPECT_EQ(tvd(a, a), 0);
    EXPECT_LE(ab, tvd(a, c) + tvd(c, b));
  }
}

TEST(Tvd, DataProcessingInequality) {
  std::mt19937_64 rng(5);
  const ValueMap halve = [](const Tuple& x) -> std::optional<Tuple> {
    return Tuple{BigInt(x[0] / 2)};
  };
  const ValueMap parity = [](const Tuple& x) -> std::optional<Tuple> {
    return Tuple{BigInt(x[0] % 2)};
  };
  for (int trial = 0; trial < 100; ++trial) {
    const ExactDist a = random_scalar(rng, 4, 10);
    const ExactDist b = random_scalar(rng, 4, 10);
    EXPECT_LE(tvd(pushforward(a, halve), pushforward(b, halve)), tvd(a, b));
    EXPECT_LE(tvd(pushforward(a, parity), pushforward(b, parity)), tvd(a, b));
  }
}

TEST(Pushforward, RejectsUnmappedValues) {
  const ValueMap partial = [](const Tuple& x) -> std::optional<Tuple> {
    if (x[0] == 3) return std::nullopt;
    return x;
  };
  EXPECT_THROW(pushforward(uniform_int(1, 4), partial), MappingError);
}

TEST(Mixture, WeightsCombine) {
  const ExactDist m = mixture({{make_rational(1, 4), ExactDist::point(BigInt(1))},
                               {make_rational(3, 4), uniform_int(1, 3)}});
  EXPECT_EQ(m.prob({BigInt(1)}), make_rational(1, 2));
  EXPECT_EQ(m.prob({BigInt(3)}), make_rational(1, 4));
}

TEST(Convolve, MatchesNestedLoopOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactDist a = random_scalar(rng, 3, 6);
    const ExactDist b = random_scalar(rng, 4, 6);
    std::map<BigInt, Rational> oracle;
    for (const auto& [x, p] : a)
      for (const auto& [y, q] : b) oracle[x[0] + y[0]] += p * q;
    const ExactDist c = convolve(a, b);
    ASSERT_EQ(c.size(), oracle.size());
    for (const auto& [v, p] : oracle) EXPECT_EQ(c.prob({v}), p);
  }
}

TEST(CouplingFlag, MarginalAndFlagMass) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const ExactDist a = random_scalar(rng, 4, 7);
    const ExactDist b = random_scalar(rng, 4, 7);
    const ExactDist joint = coupling_flag(a, b);
    EXPECT_EQ(joint.kind(), ValueKind::kFlagged);
    EXPECT_EQ(drop_flag(joint), a);
    EXPECT_EQ(flag_zero_probability(joint), tvd(a, b));
    if (tvd(a, b) < 1) {
      // Given S = 1 the value is distributed as min(p1, p2) normalised.
      const ExactDist cond = condition_on_flag(joint);
      for (const auto& [x, p] : cond) {
        EXPECT_EQ(p, std::min<Rational>(a.prob(x), b.prob(x)) / (1 - tvd(a, b)));
      }
    }
  }
}

TEST(ConditioningBound, FormulaAndDomain) {
  EXPECT_EQ(conditioning_bound(make_rational(1, 10), make_rational(1, 10)), make_rational(2, 9));
  EXPECT_EQ(conditioning_bound(0, 0), Rational(0));
  EXPECT_THROW(conditioning_bound(0, 1), DomainError);
}

TEST(ConditioningBound, HoldsOnRandomEvents) {
  // Conditioning X and Y on events of mass at least 1 - eps moves them at
  // most (delta + eps)/(1 - eps) apart.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactDist a = random_scalar(rng, 5, 8);
    const ExactDist b = random_scalar(rng, 5, 8);
    const BigInt cut(static_cast<long>(rng() % 8));
    const ValueMap keep = [&](const Tuple& x) -> std::optional<Tuple> {
      return Tuple{x[0], BigInt(x[0] != cut ? 1 : 0)};
    };
    const ExactDist fa = pushforward(a, keep, ValueKind::kFlagged);
    const ExactDist fb = pushforward(b, keep, ValueKind::kFlagged);
    const Rational ea = flag_zero_probability(fa);
    const Rational eb = flag_zero_probability(fb);
    const Rational eps = std::max<Rational>(ea, eb);
    if (eps >= 1) continue;
    EXPECT_LE(tvd(condition_on_flag(fa), condition_on_flag(fb)),
              conditioning_bound(tvd(a, b), eps));
  }
}

TEST(Expectation, GapLowerBoundNeverExceedsTvd) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactDist a = random_scalar(rng, 4, 9);
    const ExactDist b = random_scalar(rng, 4, 9);
    const Rational lb = expectation_gap_lower_bound(a, b, 0, 8);
    EXPECT_LE(lb, tvd(a, b));
    EXPECT_EQ(lb, positive_part(expectation(b) - expectation(a)) / 8);
  }
  EXPECT_EQ(expectation(uniform_int(1, 4)), make_rational(5, 2));
}

}  // namespace
}  // namespace indist

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

#include "indist/subsets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "indist/errors.hpp"

namespace indist {
namespace {

// Random law over strictly increasing n-tuples in [1..horizon].
ExactDist random_increasing(std::mt19937_64& rng, std::size_t n, int horizon, int support) {
  std::vector<std::pair<Tuple, Rational>> atoms;
  long total = 0;
  std::vector<long> w;
  std::vector<Tuple> xs;
  for (int k = 0; k < support; ++k) {
    std::vector<int> pool;
    for (int v = 1; v <= horizon; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> pick(pool.begin(), pool.begin() + n);
    std::sort(pick.begin(), pick.end());
    Tuple t;
    for (int v : pick) t.emplace_back(v);
    xs.push_back(t);
    w.push_back(1 + static_cast<long>(rng() % 5));
    total += w.back();
  }
  for (int k = 0; k < support; ++k) atoms.push_back({xs[k], make_rational(w[k], total)});
  return ExactDist(ValueKind::kTuple, n, atoms);
}

// Oracle: tvd between projections computed with explicit maps.
Rational projected_tvd(const ExactDist& d, const SubsetIndex& a, const SubsetIndex& b) {
  std::map<Tuple, Rational> diff;
  for (const auto& [x, p] : d) {
    Tuple ya, yb;
    for (auto i : a) ya.push_back(x[i - 1]);
    for (auto i : b) yb.push_back(x[i - 1]);
    diff[ya] += p;
    diff[yb] -= p;
  }
  Rational s = 0;
  for (const auto& [k, v] : diff) s += abs(v);
  return s / 2;
}

TEST(Projection, DropAndProject) {
  const ExactDist d = uniform_over(ValueKind::kTuple, 3,
                                   {{BigInt(1), BigInt(2), BigInt(5)}, {BigInt(1), BigInt(3), BigInt(5)}});
  const ExactDist dropped = drop_index(d, 2);
  EXPECT_EQ(dropped.size(), 1u);
  EXPECT_EQ(dropped.prob({BigInt(1), BigInt(5)}), Rational(1));
  const ExactDist middle = project(d, {2});
  EXPECT_EQ(middle.kind(), ValueKind::kScalar);
  EXPECT_EQ(middle.prob({BigInt(3)}), make_rational(1, 2));
  EXPECT_THROW(drop_index(d, 4), DomainError);
  EXPECT_THROW(drop_index(d, 0), DomainError);
}

TEST(Subsets, Enumeration) {
  EXPECT_EQ(subsets_of_size(5, 2).size(), 10u);
  EXPECT_EQ(subsets_of_size(4, 4).size(), 1u);
  EXPECT_EQ(all_but(4, 2), (SubsetIndex{1, 3, 4}));
}

TEST(SubsetDistances, MatchOracleAndWitness) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const ExactDist d = random_increasing(rng, n, 9, 6);
    Rational neighbor = 0, all = 0;
    for (std::size_t i = 1; i < n; ++i) {
      neighbor = std::max<Rational>(neighbor, projected_tvd(d, all_but(n, i), all_but(n, i + 1)));
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        all = std::max<Rational>(all, projected_tvd(d, all_but(n, i), all_but(n, j)));
    const SubsetWitness wn = neighboring_nm1_max_tvd(d);
    const SubsetWitness wa = all_nm1_max_tvd(d);
    EXPECT_EQ(wn.tvd, neighbor);
    EXPECT_EQ(wa.tvd, all);
    EXPECT_EQ(projected_tvd(d, wa.first, wa.second), wa.tvd);
    // Amplification bounds.
    EXPECT_LE(wa.tvd, Rational(n - 1) * wn.tvd);
    for (std::size_t m = 1; m < n; ++m) {
      const SubsetWitness wm = all_m_subset_max_tvd(d, m);
      EXPECT_LE(wm.tvd, Rational(n * n) * wn.tvd);
      EXPECT_EQ(projected_tvd(d, wm.first, wm.second), wm.tvd);
    }
  }
}

TEST(SubsetDistances, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(12);
  const ExactDist d = random_increasing(rng, 6, 12, 30);
  SubsetOptions one, many;
  many.workers = 4;
  for (std::size_t m = 1; m < 6; ++m) {
    const SubsetWitness a = all_m_subset_max_tvd(d, m, one);
    const SubsetWitness b = all_m_subset_max_tvd(d, m, many);
    EXPECT_EQ(a.tvd, b.tvd);
    EXPECT_EQ(a.first, b.first);
    EXPECT_EQ(a.second, b.second);
  }
}

TEST(SubsetDistances, ArityCap) {
  SubsetOptions opt;
  opt.max_arity = 3;
  std::mt19937_64 rng(1);
  EXPECT_THROW(all_nm1_max_tvd(random_increasing(rng, 4, 8, 3), opt), CapacityError);
}

}  // namespace
}  // namespace indist

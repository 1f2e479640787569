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

#include "indist/matrix_game.hpp"

#include <gtest/gtest.h>

#include <random>

#include "indist/errors.hpp"

namespace indist {
namespace {

using Matrix = std::vector<std::vector<Rational>>;  // [column][row]

// Optimality certificate: the row mixture holds every column to at most the
// value and the column mixture earns at least the value against every row.
void expect_certificate(const Matrix& cols, const RestrictedMatrixGame::Solution& s) {
  const std::size_t rows = cols[0].size();
  Rational sum_r = 0, sum_c = 0;
  for (const auto& p : s.row_mix) {
    EXPECT_GE(p, 0);
    sum_r += p;
  }
  for (const auto& q : s.column_mix) {
    EXPECT_GE(q, 0);
    sum_c += q;
  }
  EXPECT_EQ(sum_r, 1);
  EXPECT_EQ(sum_c, 1);
  for (const auto& col : cols) {
    Rational v = 0;
    for (std::size_t r = 0; r < rows; ++r) v += s.row_mix[r] * col[r];
    EXPECT_LE(v, s.value);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    Rational v = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) v += s.column_mix[c] * cols[c][r];
    EXPECT_GE(v, s.value);
  }
}

TEST(RestrictedMatrixGame, MatchingPennies) {
  RestrictedMatrixGame g(2);
  g.add_column({Rational(1), Rational(-1)});
  g.add_column({Rational(-1), Rational(1)});
  const auto s = g.solve();
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.row_mix[0], make_rational(1, 2));
  EXPECT_EQ(s.column_mix[1], make_rational(1, 2));
}

TEST(RestrictedMatrixGame, TwoByTwoClosedForm) {
  // Column payoffs a, b against rows; no saddle point.
  const Rational a = make_rational(1, 2), b = make_rational(-1, 3), c = make_rational(-1, 4),
                 d = make_rational(2, 5);
  RestrictedMatrixGame g(2);
  g.add_column({a, c});
  g.add_column({b, d});
  // Standard formula (ad - bc) / (a + d - b - c).
  const Rational expected = (a * d - b * c) / (a + d - b - c);
  EXPECT_EQ(g.solve().value, expected);
}

TEST(RestrictedMatrixGame, IncrementalColumnsRandom) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + trial % 5;
    RestrictedMatrixGame g(rows);
    Matrix cols;
    Rational last = -5;
    for (int c = 0; c < 6; ++c) {
      std::vector<Rational> col;
      for (std::size_t r = 0; r < rows; ++r) {
        col.push_back(make_rational(static_cast<long>(rng() % 9) - 4, 4));
      }
      g.add_column(col);
      cols.push_back(col);
      const auto s = g.solve();
      expect_certificate(cols, s);
      // More options for the maximiser never lower the value.
      EXPECT_GE(s.value, last);
      last = s.value;
    }
  }
}

TEST(RestrictedMatrixGame, RejectsBadInput) {
  EXPECT_THROW(RestrictedMatrixGame(0), DomainError);
  RestrictedMatrixGame g(2);
  EXPECT_THROW(g.solve(), DomainError);
  EXPECT_THROW(g.add_column({Rational(1)}), DomainError);
  EXPECT_THROW(g.add_column({Rational(2), Rational(0)}), DomainError);
}

}  // namespace
}  // namespace indist

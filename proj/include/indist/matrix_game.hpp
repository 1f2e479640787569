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

#pragma once

#include <cstddef>
#include <vector>

#include "indist/numeric.hpp"

namespace indist {

/// Exact solver for a zero-sum matrix game whose row set is fixed and whose
/// columns arrive one at a time (the restricted game of a double-oracle
/// loop). Rows minimize, columns maximize the payoff.
///
/// The game is solved as the linear program max sum(u) s.t. B^T u <= 1,
/// u >= 0 with B = A + 2 > 0, in a dense rational tableau with Bland's rule.
/// A new column is a new constraint; the previous optimum stays dual
/// feasible, so the dual simplex restores optimality from there. Payoffs
/// must lie in [-1, 1].
class RestrictedMatrixGame {
 public:
  explicit RestrictedMatrixGame(std::size_t rows);

  /// payoff[r] is the column player's payoff against row r.
  void add_column(const std::vector<Rational>& payoff);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }

  struct Solution {
    Rational value;
    std::vector<Rational> row_mix;
    std::vector<Rational> column_mix;
  };

  /// Requires at least one column.
  Solution solve();

  /// Pivots performed so far, across all solves.
  std::size_t pivots() const { return pivots_; }

 private:
  void pivot(std::size_t row, std::size_t col);
  void primal_simplex();
  void dual_simplex();

  std::size_t rows_;
  std::size_t columns_ = 0;
  // Variables: u_0..u_{rows-1}, then one slack per column.
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;  // c_j - z_j
  Rational objective_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace indist

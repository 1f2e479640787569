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

#include "indist/errors.hpp"

namespace indist {

RestrictedMatrixGame::RestrictedMatrixGame(std::size_t rows) : rows_(rows) {
  if (rows == 0) throw DomainError("a matrix game needs at least one row");
  reduced_.assign(rows, Rational(1));
}

void RestrictedMatrixGame::add_column(const std::vector<Rational>& payoff) {
  if (payoff.size() != rows_) throw DomainError("column length does not match the row count");
  for (const auto& a : payoff) {
    if (a < -1 || a > 1) throw DomainError("payoffs must lie in [-1, 1]");
  }
  const std::size_t slack = rows_ + columns_;
  for (auto& row : tableau_) row.emplace_back(0);
  reduced_.emplace_back(0);
  std::vector<Rational> row(slack + 1, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) row[r] = payoff[r] + 2;
  row[slack] = 1;
  Rational b = 1;
  // Express the new constraint in the current nonbasic variables.
  for (std::size_t i = 0; i < tableau_.size(); ++i) {
    const Rational factor = row[basis_[i]];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(tableau_[i][j]) != 0) row[j] -= factor * tableau_[i][j];
    }
    b -= factor * rhs_[i];
  }
  tableau_.push_back(std::move(row));
  rhs_.push_back(b);
  basis_.push_back(slack);
  ++columns_;
}

void RestrictedMatrixGame::pivot(std::size_t r, std::size_t c) {
  ++pivots_;
  auto& prow = tableau_[r];
  const Rational inv = 1 / prow[c];
  for (auto& v : prow) {
    if (sgn(v) != 0) v *= inv;
  }
  rhs_[r] *= inv;
  for (std::size_t i = 0; i < tableau_.size(); ++i) {
    if (i == r) continue;
    const Rational factor = tableau_[i][c];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (sgn(prow[j]) != 0) tableau_[i][j] -= factor * prow[j];
    }
    rhs_[i] -= factor * rhs_[r];
  }
  const Rational factor = reduced_[c];
  if (sgn(factor) != 0) {
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (sgn(prow[j]) != 0) reduced_[j] -= factor * prow[j];
    }
    objective_ += factor * rhs_[r];
  }
  basis_[r] = c;
}

void RestrictedMatrixGame::primal_simplex() {
  for (;;) {
    std::size_t enter = reduced_.size();
    for (std::size_t j = 0; j < reduced_.size(); ++j) {
      if (sgn(reduced_[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == reduced_.size()) return;
    std::size_t leave = tableau_.size();
    Rational best;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (sgn(tableau_[i][enter]) <= 0) continue;
      Rational ratio = rhs_[i] / tableau_[i][enter];
      if (leave == tableau_.size() || ratio < best ||
          (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == tableau_.size()) throw Error("restricted game LP is unbounded");
    pivot(leave, enter);
  }
}

void RestrictedMatrixGame::dual_simplex() {
  for (;;) {
    std::size_t leave = tableau_.size();
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (sgn(rhs_[i]) < 0 && (leave == tableau_.size() || basis_[i] < basis_[leave])) leave = i;
    }
    if (leave == tableau_.size()) return;
    std::size_t enter = reduced_.size();
    Rational best;
    const auto& row = tableau_[leave];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) >= 0) continue;
      Rational ratio = reduced_[j] / row[j];
      if (enter == reduced_.size() || ratio < best) {
        enter = j;
        best = std::move(ratio);
      }
    }
    if (enter == reduced_.size()) throw Error("restricted game LP is infeasible");
    pivot(leave, enter);
  }
}

RestrictedMatrixGame::Solution RestrictedMatrixGame::solve() {
  if (columns_ == 0) throw DomainError("solve needs at least one column");
  dual_simplex();
  primal_simplex();
  Solution s;
  std::vector<Rational> u(rows_, Rational(0));
  for (std::size_t i = 0; i < tableau_.size(); ++i) {
    if (basis_[i] < rows_) u[basis_[i]] = rhs_[i];
  }
  s.value = 1 / objective_ - 2;
  s.row_mix.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r) s.row_mix[r] = u[r] / objective_;
  s.column_mix.resize(columns_);
  for (std::size_t c = 0; c < columns_; ++c) s.column_mix[c] = -reduced_[rows_ + c] / objective_;
  return s;
}

}  // namespace indist

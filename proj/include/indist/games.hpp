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
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "indist/exact_dist.hpp"
#include "indist/rng.hpp"

namespace indist {

// ---------------------------------------------------------------------------
// The one-shot distinguishing game: a fair coin picks d1 or d2, a value is
// drawn from it, the player guesses which, and wins or loses one.

/// Maps an observed value to a guess in {1, 2}.
using GuessStrategy = std::function<int(const Tuple&)>;

/// MAP rule: guess 1 iff p1(x) >= p2(x). Ties go to 1.
GuessStrategy optimal_guesser(const ExactDist& d1, const ExactDist& d2);

/// Exact expected payoff of a guess rule, by summation over both supports.
Rational exact_advantage(const ExactDist& d1, const ExactDist& d2, const GuessStrategy& g);

/// Exact sampler: atoms are scaled to a common denominator and chosen by an
/// unbiased integer draw.
class DistSampler {
 public:
  explicit DistSampler(const ExactDist& d);
  const Tuple& draw(CounterStream& stream) const;

 private:
  std::vector<Tuple> values_;
  std::vector<BigInt> cumulative_;  // numerators over total_
  BigInt total_;
};

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};

/// Simulated mean payoff and its standard error. Trials are split into
/// fixed blocks with seed-derived streams, so the result does not depend on
/// the worker count.
MonteCarloEstimate play_betting_game(const ExactDist& d1, const ExactDist& d2,
                                     const GuessStrategy& g, std::uint64_t trials,
                                     std::uint64_t seed, std::size_t workers = 1);

// ---------------------------------------------------------------------------
// Dealer strategies for Games 1 and 2: mixtures over increasing n-tuples in
// [1..N].

/// Every strictly increasing n-tuple drawn from [1..N], lexicographic.
std::vector<Tuple> dealer_tuples(int n, int horizon);

/// Throws DomainError unless every atom is an increasing n-tuple in [1..N].
void validate_dealer(const ExactDist& dealer, int horizon);

/// max over position pairs of tvd(X_{-i}, X_{-j}): the best Game 2 payoff
/// against this dealer.
Rational game2_value_of_dealer(const ExactDist& dealer);

/// Game 2 pure strategy: precommit positions (i, j); on seeing x with one of
/// them removed, guess 2 ("j was hidden") iff the observation is listed.
struct Game2Pure {
  std::size_t i = 1;
  std::size_t j = 2;
  std::set<Tuple> guess_two;

  int guess(const Tuple& observation) const { return guess_two.count(observation) ? 2 : 1; }
  bool operator==(const Game2Pure&) const = default;
};

/// Game 1 pure strategy: an observation of n-1 values maps to a pair
/// (win index, lose index), distinct. Unlisted observations play (1, 2).
struct Game1Pure {
  std::map<Tuple, std::pair<std::size_t, std::size_t>> table;

  std::pair<std::size_t, std::size_t> bet(const Tuple& observation) const {
    auto it = table.find(observation);
    return it == table.end() ? std::pair<std::size_t, std::size_t>{1, 2} : it->second;
  }
  bool operator==(const Game1Pure&) const = default;
};

/// Tuple x with 1-based position i removed.
Tuple without(const Tuple& x, std::size_t i);

/// Payoffs of a pure gambler strategy against one dealer tuple.
Rational game2_payoff(const Game2Pure& s, const Tuple& x);
Rational game1_payoff(const Game1Pure& s, const Tuple& x);

/// Expected payoffs against a dealer mixture.
Rational game2_payoff(const Game2Pure& s, const ExactDist& dealer);
Rational game1_payoff(const Game1Pure& s, const ExactDist& dealer);

/// Exact best responses and their values.
std::pair<Game2Pure, Rational> game2_best_response(const ExactDist& dealer);
std::pair<Game1Pure, Rational> game1_best_response(const ExactDist& dealer);

// ---------------------------------------------------------------------------
// Minimax solvers.

enum class SolverMethod { kDoubleOracle, kMultiplicativeWeights };

struct SolveOptions {
  Rational tolerance = make_rational(1, 1000);
  std::size_t max_iters = 100'000;
  std::size_t max_dealer_tuples = 5'000;
  SolverMethod method = SolverMethod::kDoubleOracle;
};

/// value lies in [lower, upper]. The dealer mixture holds the gambler to at
/// most upper; the gambler mixture earns at least lower against every
/// dealer tuple.
struct ValueReport {
  int game = 2;
  int n = 0;
  int horizon = 0;
  std::string method;
  Rational lower;
  Rational upper;
  Rational value;  // midpoint of [lower, upper]
  Rational gap;
  Rational tolerance;
  std::size_t iterations = 0;
  bool converged = false;
  ExactDist dealer = ExactDist::point(ValueKind::kTuple, {BigInt(1), BigInt(2)});
  std::vector<std::pair<Rational, Game2Pure>> gambler2;
  std::vector<std::pair<Rational, Game1Pure>> gambler1;
};

ValueReport solve_game2(int n, int horizon, const SolveOptions& options = {});
ValueReport solve_game1(int n, int horizon, const SolveOptions& options = {});

/// (2/n) (eps0 - eps_tol) - v1_tol <= v1 <= (n - 1) (eps0 + eps_tol) + v1_tol.
bool sandwich_check(const Rational& v1, const Rational& eps0, int n,
                    const Rational& v1_tol = 0, const Rational& eps_tol = 0);

// ---------------------------------------------------------------------------
// Strategy adapters between the games.

/// Game 1 play derived from a Game 2 strategy s = (i1, i2, g): on seeing o,
/// bet (i1, i2) if g(o) = 1, else (i2, i1). Its Game 1 payoff is exactly 2/n
/// times the Game 2 payoff of s.
std::pair<std::size_t, std::size_t> adapted_game1_bet(const Game2Pure& s, const Tuple& observation);

/// Exact Game 1 payoff of the adapted strategy.
Rational adapted_game1_payoff(const Game2Pure& s, const ExactDist& dealer);

/// Game 2 play derived from a Game 1 strategy: precommit a uniformly random
/// unordered pair {a, b}; on seeing o, if the Game 1 bet (i, j) is {a, b}
/// guess i, otherwise guess uniformly. Its Game 2 payoff is exactly 1/(n-1)
/// times the Game 1 payoff of s.
Rational adapted_game2_payoff(const Game1Pure& s, const ExactDist& dealer);

/// Paired simulation: each trial draws one dealer tuple and plays both the
/// base game and the adapted game on it with independent inner randomness.
struct PairedEstimate {
  MonteCarloEstimate base;
  MonteCarloEstimate adapted;
  /// adapted - factor * base, per trial.
  MonteCarloEstimate difference;
  Rational factor;
};

PairedEstimate simulate_game2_to_game1(const Game2Pure& s, const ExactDist& dealer,
                                       std::uint64_t trials, std::uint64_t seed,
                                       std::size_t workers = 1);
PairedEstimate simulate_game1_to_game2(const Game1Pure& s, const ExactDist& dealer,
                                       std::uint64_t trials, std::uint64_t seed,
                                       std::size_t workers = 1);

}  // namespace indist

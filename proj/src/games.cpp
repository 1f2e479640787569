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

#include "indist/games.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "indist/errors.hpp"
#include "indist/matrix_game.hpp"
#include "indist/subsets.hpp"

namespace indist {
namespace {

constexpr std::uint64_t kBlockTrials = 4096;

// Running sums for up to three per-trial statistics.
struct Moments {
  std::array<double, 3> sum{};
  std::array<double, 3> sum_sq{};
  std::uint64_t count = 0;

  void add(std::size_t k, double v) {
    sum[k] += v;
    sum_sq[k] += v * v;
  }
};

MonteCarloEstimate finish(const Moments& m, std::size_t k) {
  MonteCarloEstimate e;
  e.trials = m.count;
  if (m.count == 0) return e;
  const double t = static_cast<double>(m.count);
  e.mean = m.sum[k] / t;
  if (m.count > 1) {
    const double var = std::max(0.0, (m.sum_sq[k] - m.sum[k] * m.sum[k] / t) / (t - 1));
    e.std_error = std::sqrt(var / t);
  }
  return e;
}

// Runs trial(stream, moments) `trials` times in fixed-size blocks. Block b
// always uses the stream keyed by (seed, b) and blocks are summed in order.
Moments run_blocks(std::uint64_t trials, std::uint64_t seed, std::size_t workers,
                   const std::function<void(CounterStream&, Moments&)>& trial) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<Moments> per_block(blocks);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t b = begin; b < end; ++b) {
      CounterStream stream(derive_key({seed, b}));
      const std::uint64_t count = std::min(kBlockTrials, trials - b * kBlockTrials);
      for (std::uint64_t k = 0; k < count; ++k) trial(stream, per_block[b]);
      per_block[b].count = count;
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, blocks);
  if (workers == 1) {
    work(0, blocks);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (blocks + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(blocks, w * chunk);
      pool.emplace_back(work, begin, std::min<std::uint64_t>(blocks, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  Moments total;
  for (const auto& m : per_block) {
    for (std::size_t k = 0; k < 3; ++k) {
      total.sum[k] += m.sum[k];
      total.sum_sq[k] += m.sum_sq[k];
    }
    total.count += m.count;
  }
  return total;
}

std::size_t uniform_index(CounterStream& s, std::size_t n) {
  return static_cast<std::size_t>(uniform_below(s, static_cast<std::uint64_t>(n)));
}

ExactDist dealer_from_mix(const std::vector<Tuple>& rows, const std::vector<Rational>& mix) {
  std::vector<std::pair<Tuple, Rational>> atoms;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (sgn(mix[r]) > 0) atoms.emplace_back(rows[r], mix[r]);
  }
  return ExactDist(ValueKind::kTuple, rows.front().size(), std::move(atoms));
}

void require_game(int n, int horizon, const SolveOptions& options) {
  if (n < 2 || horizon < n) throw DomainError("games need N >= n >= 2");
  BigInt count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(horizon),
               static_cast<unsigned long>(n));
  if (count > options.max_dealer_tuples) {
    throw CapacityError("C(" + std::to_string(horizon) + ", " + std::to_string(n) + ") = " +
                        to_string(count) + " dealer tuples exceeds the cap of " +
                        std::to_string(options.max_dealer_tuples));
  }
}

template <class Pure>
struct Solved {
  ExactDist dealer;
  std::vector<std::pair<Rational, Pure>> gambler;
  Rational lower;
  Rational upper;
  std::size_t iterations = 0;
  bool converged = false;
};

template <class Pure, class Payoff, class BestResponse>
Solved<Pure> double_oracle(const std::vector<Tuple>& rows, Payoff payoff, BestResponse best,
                           const SolveOptions& options) {
  RestrictedMatrixGame game(rows.size());
  std::vector<Pure> columns;
  auto add = [&](Pure col) {
    std::vector<Rational> column(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) column[r] = payoff(col, rows[r]);
    game.add_column(column);
    columns.push_back(std::move(col));
  };
  add(best(uniform_over(ValueKind::kTuple, rows.front().size(), rows)).first);
  Solved<Pure> out{uniform_over(ValueKind::kTuple, rows.front().size(), rows), {}, Rational(-1),
                   Rational(1)};
  for (std::size_t iter = 1; iter <= options.max_iters; ++iter) {
    const auto sol = game.solve();
    ExactDist dealer = dealer_from_mix(rows, sol.row_mix);
    auto [response, response_value] = best(dealer);
    out.iterations = iter;
    if (sol.value > out.lower || out.gambler.empty()) {
      out.lower = sol.value;
      out.gambler.clear();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (sgn(sol.column_mix[c]) > 0) out.gambler.emplace_back(sol.column_mix[c], columns[c]);
      }
    }
    if (response_value < out.upper || iter == 1) {
      out.upper = response_value;
      out.dealer = std::move(dealer);
    }
    if (out.upper - out.lower <= options.tolerance) {
      out.converged = true;
      break;
    }
    if (response_value > sol.value) add(std::move(response));
  }
  return out;
}

template <class Pure, class Payoff, class BestResponse>
Solved<Pure> multiplicative_weights(const std::vector<Tuple>& rows, Payoff payoff,
                                    BestResponse best, const SolveOptions& options) {
  const std::size_t r_count = rows.size();
  const double eta = std::sqrt(8.0 * std::log(std::max<double>(2.0, r_count)) /
                               static_cast<double>(std::max<std::size_t>(options.max_iters, 1)));
  std::vector<double> log_w(r_count, 0.0);
  std::vector<double> avg(r_count, 0.0);
  std::vector<Pure> columns;
  std::vector<std::vector<Rational>> column_payoffs;
  std::vector<std::size_t> counts;
  Solved<Pure> out{uniform_over(ValueKind::kTuple, rows.front().size(), rows), {}, Rational(-1),
                   Rational(1)};
  auto rationalize = [&](const std::vector<double>& w) {
    std::vector<Rational> mix(r_count);
    Rational total = 0;
    for (std::size_t r = 0; r < r_count; ++r) {
      mix[r] = rational_from_double(w[r]);
      total += mix[r];
    }
    for (auto& m : mix) m /= total;
    return mix;
  };
  const std::size_t check_every = 25;
  for (std::size_t iter = 1; iter <= options.max_iters; ++iter) {
    const double top = *std::max_element(log_w.begin(), log_w.end());
    std::vector<double> w(r_count);
    double total = 0;
    for (std::size_t r = 0; r < r_count; ++r) total += (w[r] = std::exp(log_w[r] - top));
    for (std::size_t r = 0; r < r_count; ++r) avg[r] += w[r] / total;
    auto response = best(dealer_from_mix(rows, rationalize(w))).first;
    auto found = std::find(columns.begin(), columns.end(), response);
    std::size_t idx = found - columns.begin();
    if (found == columns.end()) {
      std::vector<Rational> col(r_count);
      for (std::size_t r = 0; r < r_count; ++r) col[r] = payoff(response, rows[r]);
      column_payoffs.push_back(std::move(col));
      columns.push_back(std::move(response));
      counts.push_back(0);
    }
    ++counts[idx];
    for (std::size_t r = 0; r < r_count; ++r) {
      log_w[r] -= eta * column_payoffs[idx][r].get_d();
    }
    out.iterations = iter;
    if (iter % check_every == 0 || iter == options.max_iters) {
      ExactDist dealer = dealer_from_mix(rows, rationalize(avg));
      const Rational upper = best(dealer).second;
      Rational lower;
      for (std::size_t r = 0; r < r_count; ++r) {
        Rational v = 0;
        for (std::size_t c = 0; c < columns.size(); ++c) v += counts[c] * column_payoffs[c][r];
        v /= static_cast<unsigned long>(iter);
        if (r == 0 || v < lower) lower = v;
      }
      if (upper < out.upper) {
        out.upper = upper;
        out.dealer = std::move(dealer);
      }
      if (lower > out.lower) {
        out.lower = lower;
        out.gambler.clear();
        for (std::size_t c = 0; c < columns.size(); ++c) {
          out.gambler.emplace_back(make_rational(counts[c], iter), columns[c]);
        }
      }
      if (out.upper - out.lower <= options.tolerance) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

template <class Pure>
void fill_report(ValueReport& report, Solved<Pure>&& solved, const SolveOptions& options) {
  report.method =
      options.method == SolverMethod::kDoubleOracle ? "double-oracle" : "multiplicative-weights";
  report.lower = solved.lower;
  report.upper = solved.upper;
  report.gap = solved.upper - solved.lower;
  report.value = (solved.upper + solved.lower) / 2;
  report.tolerance = options.tolerance;
  report.iterations = solved.iterations;
  report.converged = solved.converged;
  report.dealer = std::move(solved.dealer);
}

}  // namespace

std::pair<std::size_t, std::size_t> adapted_game1_bet(const Game2Pure& s, const Tuple& observation) {
  return s.guess(observation) == 1 ? std::pair{s.i, s.j} : std::pair{s.j, s.i};
}

GuessStrategy optimal_guesser(const ExactDist& d1, const ExactDist& d2) {
  return [&d1, &d2](const Tuple& x) { return d1.prob(x) >= d2.prob(x) ? 1 : 2; };
}

Rational exact_advantage(const ExactDist& d1, const ExactDist& d2, const GuessStrategy& g) {
  if (d1.kind() != d2.kind() || d1.arity() != d2.arity()) {
    throw KindError("exact_advantage: value kinds differ");
  }
  Rational total = 0;
  for (const auto& [x, p] : d1) total += g(x) == 1 ? p : Rational(-p);
  for (const auto& [x, p] : d2) total += g(x) == 2 ? p : Rational(-p);
  return total / 2;
}

DistSampler::DistSampler(const ExactDist& d) {
  total_ = 1;
  for (const auto& [x, p] : d) mpz_lcm(total_.get_mpz_t(), total_.get_mpz_t(), p.get_den().get_mpz_t());
  BigInt running = 0;
  for (const auto& [x, p] : d) {
    running += p.get_num() * (total_ / p.get_den());
    values_.push_back(x);
    cumulative_.push_back(running);
  }
}

const Tuple& DistSampler::draw(CounterStream& stream) const {
  const BigInt u = uniform_below(stream, total_);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return values_[it - cumulative_.begin()];
}

MonteCarloEstimate play_betting_game(const ExactDist& d1, const ExactDist& d2,
                                     const GuessStrategy& g, std::uint64_t trials,
                                     std::uint64_t seed, std::size_t workers) {
  const DistSampler s1(d1);
  const DistSampler s2(d2);
  const Moments m = run_blocks(trials, seed, workers, [&](CounterStream& s, Moments& acc) {
    const int source = (s.next() & 1) ? 2 : 1;
    const Tuple& x = source == 1 ? s1.draw(s) : s2.draw(s);
    acc.add(0, g(x) == source ? 1.0 : -1.0);
  });
  return finish(m, 0);
}

std::vector<Tuple> dealer_tuples(int n, int horizon) {
  std::vector<Tuple> out;
  for (const auto& s : subsets_of_size(static_cast<std::size_t>(horizon),
                                       static_cast<std::size_t>(n))) {
    Tuple t;
    for (std::size_t v : s) t.emplace_back(static_cast<unsigned long>(v));
    out.push_back(std::move(t));
  }
  return out;
}

void validate_dealer(const ExactDist& dealer, int horizon) {
  if (dealer.kind() != ValueKind::kTuple || dealer.arity() < 2) {
    throw KindError("a dealer strategy is a distribution over tuples of arity >= 2");
  }
  for (const auto& [x, p] : dealer) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < 1 || x[k] > horizon || (k > 0 && x[k] <= x[k - 1])) {
        throw DomainError("dealer atom is not an increasing tuple in [1.." +
                          std::to_string(horizon) + "]");
      }
    }
  }
}

Tuple without(const Tuple& x, std::size_t i) {
  Tuple out;
  out.reserve(x.size() - 1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k + 1 != i) out.push_back(x[k]);
  }
  return out;
}

Rational game2_value_of_dealer(const ExactDist& dealer) { return game2_best_response(dealer).second; }

Rational game2_payoff(const Game2Pure& s, const Tuple& x) {
  const int a = s.guess(without(x, s.i)) == 1 ? 1 : -1;
  const int b = s.guess(without(x, s.j)) == 2 ? 1 : -1;
  return make_rational(a + b, 2);
}

Rational game1_payoff(const Game1Pure& s, const Tuple& x) {
  const std::size_t n = x.size();
  long total = 0;
  for (std::size_t i0 = 1; i0 <= n; ++i0) {
    const auto [i, j] = s.bet(without(x, i0));
    total += (i == i0) - (j == i0);
  }
  return make_rational(total, static_cast<unsigned long>(n));
}

Rational game2_payoff(const Game2Pure& s, const ExactDist& dealer) {
  Rational total = 0;
  for (const auto& [x, p] : dealer) total += p * game2_payoff(s, x);
  return total;
}

Rational game1_payoff(const Game1Pure& s, const ExactDist& dealer) {
  Rational total = 0;
  for (const auto& [x, p] : dealer) total += p * game1_payoff(s, x);
  return total;
}

std::pair<Game2Pure, Rational> game2_best_response(const ExactDist& dealer) {
  if (dealer.kind() != ValueKind::kTuple || dealer.arity() < 2) {
    throw KindError("Game 2 needs a dealer over tuples of arity >= 2");
  }
  const std::size_t n = dealer.arity();
  std::vector<ExactDist> views;
  for (std::size_t i = 1; i <= n; ++i) views.push_back(drop_index(dealer, i));
  Game2Pure best;
  Rational best_value = -1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Rational v = tvd(views[i - 1], views[j - 1]);
      if (v > best_value) {
        best_value = v;
        best.i = i;
        best.j = j;
      }
    }
  }
  const ExactDist& vi = views[best.i - 1];
  const ExactDist& vj = views[best.j - 1];
  for (const auto& [o, p] : vj) {
    if (p > vi.prob(o)) best.guess_two.insert(o);
  }
  return {std::move(best), best_value};
}

std::pair<Game1Pure, Rational> game1_best_response(const ExactDist& dealer) {
  if (dealer.kind() != ValueKind::kTuple || dealer.arity() < 2) {
    throw KindError("Game 1 needs a dealer over tuples of arity >= 2");
  }
  const std::size_t n = dealer.arity();
  std::map<Tuple, std::vector<Rational>> weight;
  for (const auto& [x, p] : dealer) {
    for (std::size_t i0 = 1; i0 <= n; ++i0) {
      auto& w = weight[without(x, i0)];
      if (w.empty()) w.assign(n, Rational(0));
      w[i0 - 1] += p;
    }
  }
  Game1Pure best;
  Rational value = 0;
  for (const auto& [o, w] : weight) {
    std::size_t i = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (w[k] > w[i]) i = k;
    }
    std::size_t j = i == 0 ? 1 : 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && w[k] < w[j]) j = k;
    }
    value += w[i] - w[j];
    best.table[o] = {i + 1, j + 1};
  }
  return {std::move(best), value / static_cast<unsigned long>(n)};
}

ValueReport solve_game2(int n, int horizon, const SolveOptions& options) {
  require_game(n, horizon, options);
  const auto rows = dealer_tuples(n, horizon);
  auto payoff = [](const Game2Pure& s, const Tuple& x) { return game2_payoff(s, x); };
  auto best = [](const ExactDist& d) { return game2_best_response(d); };
  ValueReport report;
  report.game = 2;
  report.n = n;
  report.horizon = horizon;
  auto solved = options.method == SolverMethod::kDoubleOracle
                    ? double_oracle<Game2Pure>(rows, payoff, best, options)
                    : multiplicative_weights<Game2Pure>(rows, payoff, best, options);
  report.gambler2 = solved.gambler;
  fill_report(report, std::move(solved), options);
  return report;
}

ValueReport solve_game1(int n, int horizon, const SolveOptions& options) {
  require_game(n, horizon, options);
  const auto rows = dealer_tuples(n, horizon);
  auto payoff = [](const Game1Pure& s, const Tuple& x) { return game1_payoff(s, x); };
  auto best = [](const ExactDist& d) { return game1_best_response(d); };
  ValueReport report;
  report.game = 1;
  report.n = n;
  report.horizon = horizon;
  auto solved = options.method == SolverMethod::kDoubleOracle
                    ? double_oracle<Game1Pure>(rows, payoff, best, options)
                    : multiplicative_weights<Game1Pure>(rows, payoff, best, options);
  report.gambler1 = solved.gambler;
  fill_report(report, std::move(solved), options);
  return report;
}

bool sandwich_check(const Rational& v1, const Rational& eps0, int n, const Rational& v1_tol,
                    const Rational& eps_tol) {
  if (n < 2) throw DomainError("sandwich check needs n >= 2");
  const Rational lo = make_rational(2, n) * (eps0 - eps_tol) - v1_tol;
  const Rational hi = Rational(n - 1) * (eps0 + eps_tol) + v1_tol;
  return lo <= v1 && v1 <= hi;
}

Rational adapted_game1_payoff(const Game2Pure& s, const ExactDist& dealer) {
  const std::size_t n = dealer.arity();
  Rational total = 0;
  for (const auto& [x, p] : dealer) {
    long sum = 0;
    for (std::size_t i0 = 1; i0 <= n; ++i0) {
      const auto [i, j] = adapted_game1_bet(s, without(x, i0));
      sum += (i == i0) - (j == i0);
    }
    total += p * make_rational(sum, static_cast<unsigned long>(n));
  }
  return total;
}

Rational adapted_game2_payoff(const Game1Pure& s, const ExactDist& dealer) {
  const std::size_t n = dealer.arity();
  const unsigned long pairs = n * (n - 1) / 2;
  Rational total = 0;
  for (const auto& [x, p] : dealer) {
    long sum = 0;  // in units of 1 / (2 * pairs)
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = a + 1; b <= n; ++b) {
        for (std::size_t h : {a, b}) {
          const auto [i, j] = s.bet(without(x, h));
          if (std::min(i, j) == a && std::max(i, j) == b) sum += i == h ? 1 : -1;
        }
      }
    }
    total += p * make_rational(sum, 2 * pairs);
  }
  return total;
}

PairedEstimate simulate_game2_to_game1(const Game2Pure& s, const ExactDist& dealer,
                                       std::uint64_t trials, std::uint64_t seed,
                                       std::size_t workers) {
  const std::size_t n = dealer.arity();
  const DistSampler sampler(dealer);
  PairedEstimate out;
  out.factor = make_rational(2, static_cast<unsigned long>(n));
  const double factor = out.factor.get_d();
  const Moments m = run_blocks(trials, seed, workers, [&](CounterStream& st, Moments& acc) {
    const Tuple& x = sampler.draw(st);
    const int coin = (st.next() & 1) ? 2 : 1;
    const double base = s.guess(without(x, coin == 1 ? s.i : s.j)) == coin ? 1.0 : -1.0;
    const std::size_t i0 = uniform_index(st, n) + 1;
    const auto [i, j] = adapted_game1_bet(s, without(x, i0));
    const double adapted = static_cast<double>((i == i0) - (j == i0));
    acc.add(0, base);
    acc.add(1, adapted);
    acc.add(2, adapted - factor * base);
  });
  out.base = finish(m, 0);
  out.adapted = finish(m, 1);
  out.difference = finish(m, 2);
  return out;
}

PairedEstimate simulate_game1_to_game2(const Game1Pure& s, const ExactDist& dealer,
                                       std::uint64_t trials, std::uint64_t seed,
                                       std::size_t workers) {
  const std::size_t n = dealer.arity();
  if (n < 2) throw DomainError("Game 1 needs arity >= 2");
  const DistSampler sampler(dealer);
  PairedEstimate out;
  out.factor = make_rational(1, static_cast<unsigned long>(n - 1));
  const double factor = out.factor.get_d();
  const Moments m = run_blocks(trials, seed, workers, [&](CounterStream& st, Moments& acc) {
    const Tuple& x = sampler.draw(st);
    const std::size_t i0 = uniform_index(st, n) + 1;
    const auto [bi, bj] = s.bet(without(x, i0));
    const double base = static_cast<double>((bi == i0) - (bj == i0));
    // Game 1.5 precommitment: a uniform unordered pair a < b.
    std::size_t a = uniform_index(st, n) + 1;
    std::size_t b = uniform_index(st, n - 1) + 1;
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    const std::size_t hidden = (st.next() & 1) ? b : a;
    const auto [i, j] = s.bet(without(x, hidden));
    double adapted;
    if (std::min(i, j) == a && std::max(i, j) == b) {
      adapted = i == hidden ? 1.0 : -1.0;
    } else {
      adapted = (st.next() & 1) ? 1.0 : -1.0;
    }
    acc.add(0, base);
    acc.add(1, adapted);
    acc.add(2, adapted - factor * base);
  });
  out.base = finish(m, 0);
  out.adapted = finish(m, 1);
  out.difference = finish(m, 2);
  return out;
}

}  // namespace indist

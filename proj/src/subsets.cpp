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

#include <algorithm>
#include <string>
#include <thread>

#include "indist/errors.hpp"

namespace indist {
namespace {

void require_positions(const ExactDist& d) {
  if (d.kind() == ValueKind::kFlagged) throw KindError("subset operations need unflagged tuples");
}

void require_arity_limit(const ExactDist& d, const SubsetOptions& options) {
  if (d.arity() > options.max_arity) {
    throw CapacityError("subset enumeration refused for arity " + std::to_string(d.arity()) +
                        " (limit " + std::to_string(options.max_arity) + ")");
  }
}

using Pair = std::pair<std::size_t, std::size_t>;

// Scans the given pairs of projections and returns the first pair (in list
// order) attaining the maximum.
SubsetWitness max_over_pairs(const std::vector<SubsetIndex>& subsets,
                             const std::vector<ExactDist>& projections,
                             const std::vector<Pair>& pairs, std::size_t workers) {
  std::vector<Rational> values(pairs.size());
  auto scan = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      values[k] = tvd(projections[pairs[k].first], projections[pairs[k].second]);
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(pairs.size(), 1));
  if (workers == 1) {
    scan(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(pairs.size(), w * chunk);
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      pool.emplace_back(scan, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  SubsetWitness best;
  bool have = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!have || values[k] > best.tvd) {
      best = {values[k], subsets[pairs[k].first], subsets[pairs[k].second]};
      have = true;
    }
  }
  return best;
}

std::vector<ExactDist> project_all(const ExactDist& d, const std::vector<SubsetIndex>& subsets) {
  std::vector<ExactDist> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(project(d, s));
  return out;
}

}  // namespace

std::vector<SubsetIndex> subsets_of_size(std::size_t n, std::size_t m) {
  std::vector<SubsetIndex> out;
  if (m > n) return out;
  SubsetIndex current(m);
  for (std::size_t k = 0; k < m; ++k) current[k] = k + 1;
  for (;;) {
    out.push_back(current);
    std::size_t k = m;
    while (k > 0 && current[k - 1] == n - m + k) --k;
    if (k == 0) break;
    ++current[k - 1];
    for (std::size_t r = k; r < m; ++r) current[r] = current[r - 1] + 1;
  }
  return out;
}

SubsetIndex all_but(std::size_t n, std::size_t i) {
  SubsetIndex s;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k != i) s.push_back(k);
  }
  return s;
}

ExactDist project(const ExactDist& d, const SubsetIndex& s) {
  require_positions(d);
  if (s.empty()) throw DomainError("empty subset");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > d.arity()) {
      throw DomainError("position " + std::to_string(s[k]) + " outside [1, " +
                        std::to_string(d.arity()) + "]");
    }
    if (k > 0 && s[k] <= s[k - 1]) throw DomainError("subset positions must be increasing");
  }
  const ValueKind kind = s.size() == 1 ? ValueKind::kScalar : ValueKind::kTuple;
  return pushforward(
      d,
      [&s](const Tuple& v) {
        Tuple out;
        out.reserve(s.size());
        for (std::size_t pos : s) out.push_back(v[pos - 1]);
        return std::optional<Tuple>(std::move(out));
      },
      kind);
}

ExactDist drop_index(const ExactDist& d, std::size_t i) {
  require_positions(d);
  if (d.arity() < 2) throw DomainError("drop_index needs arity at least 2");
  if (i < 1 || i > d.arity()) {
    throw DomainError("position " + std::to_string(i) + " outside [1, " +
                      std::to_string(d.arity()) + "]");
  }
  return project(d, all_but(d.arity(), i));
}

SubsetWitness neighboring_nm1_max_tvd(const ExactDist& d, const SubsetOptions& options) {
  require_positions(d);
  require_arity_limit(d, options);
  const std::size_t n = d.arity();
  if (n < 2) throw DomainError("neighbouring subsets need arity at least 2");
  std::vector<SubsetIndex> subsets;
  for (std::size_t i = 1; i <= n; ++i) subsets.push_back(all_but(n, i));
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return max_over_pairs(subsets, project_all(d, subsets), pairs, options.workers);
}

SubsetWitness all_m_subset_max_tvd(const ExactDist& d, std::size_t m,
                                   const SubsetOptions& options) {
  require_positions(d);
  require_arity_limit(d, options);
  const std::size_t n = d.arity();
  if (m < 1 || m >= n) {
    throw DomainError("subset size " + std::to_string(m) + " outside [1, " +
                      std::to_string(n - 1) + "]");
  }
  const auto subsets = subsets_of_size(n, m);
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) pairs.emplace_back(a, b);
  }
  return max_over_pairs(subsets, project_all(d, subsets), pairs, options.workers);
}

SubsetWitness all_nm1_max_tvd(const ExactDist& d, const SubsetOptions& options) {
  require_positions(d);
  if (d.arity() < 2) throw DomainError("subsets need arity at least 2");
  return all_m_subset_max_tvd(d, d.arity() - 1, options);
}

}  // namespace indist

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

#include "indist/exact_dist.hpp"

namespace indist {

/// Positions are 1-based throughout, as in the usual X_1 < ... < X_n
/// notation.
using SubsetIndex = std::vector<std::size_t>;

/// Law of X with coordinate i removed. d must be a tuple distribution of
/// arity n >= 2 and 1 <= i <= n.
ExactDist drop_index(const ExactDist& d, std::size_t i);

/// Law of the selected coordinates, kept in increasing position order.
/// A single position yields a scalar distribution.
ExactDist project(const ExactDist& d, const SubsetIndex& s);

/// A maximal distance together with the subset pair attaining it.
struct SubsetWitness {
  Rational tvd = 0;
  SubsetIndex first;
  SubsetIndex second;
};

struct SubsetOptions {
  /// Refuse arities above this; pair counts grow like C(n, m)^2.
  std::size_t max_arity = 12;
  /// Concurrent workers for the pair scan. The result does not depend on it.
  std::size_t workers = 1;
};

/// max over i in [n-1] of tvd(X_{-i}, X_{-(i+1)}).
SubsetWitness neighboring_nm1_max_tvd(const ExactDist& d, const SubsetOptions& options = {});

/// max over i < j of tvd(X_{-i}, X_{-j}).
SubsetWitness all_nm1_max_tvd(const ExactDist& d, const SubsetOptions& options = {});

/// max over all pairs of m-element position sets of the projection
/// distance. Requires 1 <= m < n.
SubsetWitness all_m_subset_max_tvd(const ExactDist& d, std::size_t m,
                                   const SubsetOptions& options = {});

/// All m-element subsets of [n] in lexicographic order.
std::vector<SubsetIndex> subsets_of_size(std::size_t n, std::size_t m);

/// The complement of {i} in [n].
SubsetIndex all_but(std::size_t n, std::size_t i);

}  // namespace indist

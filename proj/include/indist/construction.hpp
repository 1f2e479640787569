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

#include <cstdint>
#include <optional>
#include <vector>

#include "indist/exact_dist.hpp"
#include "indist/symbolic_int.hpp"

namespace indist {

/// eps rounded down to a power of two 2^-t.
struct DyadicEps {
  Rational requested;
  Rational value;
  std::uint64_t t = 0;
  bool rounded = false;
};

/// Throws DomainError unless 0 < eps <= 1.
DyadicEps normalize_dyadic(const Rational& eps);

/// Constants guaranteed by the level-n construction at dyadic eps = 2^-t,
/// with c = ceil(1/eps):
///   X_n <= exp2^(n-2)(4c + 6) - 4n - 2 - 2t,
///   P(X_{i+1} - X_i < n + 4 + t) <= eps 2^(-n-3) for each i,
///   neighbouring (n-1)-subsets within eps (1 - 2^-n).
struct ConstructionCertificate {
  int n = 0;
  DyadicEps eps;
  int bound_tower_height = 0;  // n - 2
  BigInt bound_tower_top;      // 4c + 6
  BigInt bound_offset;         // 4n + 2 + 2t, subtracted from the tower
  Rational spacing_threshold;
  Rational spacing_prob_bound;
  Rational neighbor_bound;

  /// The bound as a number. Throws CapacityError when even its exponent
  /// cannot be held (n >= 6, or n = 5 with small eps).
  SymbolicInt bound() const;
};

/// Requires n >= 3; a non-dyadic eps is rounded down and flagged.
ConstructionCertificate certificate(int n, const Rational& eps);

/// X1 uniform on [1..ceil(1/eps)], X2 = X1 + 1.
ExactDist build_n2(const Rational& eps);

/// Parameters of the three-point base: X1 uniform on [1..x1_max], K uniform
/// on [k_lo..k_hi], X2 = X1 + 2^K, X3 = X1 + 2^(K+1).
struct BaseParams {
  BigInt x1_max;
  long k_lo = 0;
  long k_hi = 0;
};

/// Given X = (X_1..X_n): D_i uniform on [1..2^(X_i + d_offset)], Y1 uniform
/// on [1..y1_max], Y_{i+1} = Y_i + D_i.
struct StepParams {
  long d_offset = 0;
  BigInt y1_max;
};

/// Small replacement constants for exact enumeration of the induction step.
struct ToyOverride {
  BaseParams base;
  StepParams step;
};

/// The faithful constants at c = ceil(1/eps), t = -log2 eps.
BaseParams faithful_base(const DyadicEps& eps);
/// Throws CapacityError when y1_max would be too large to write down.
StepParams faithful_step(int n, const DyadicEps& eps);

enum class ConstructionMode { kExact, kSample };

struct ConstructionParams {
  int n = 2;
  Rational eps = 1;
  ConstructionMode mode = ConstructionMode::kExact;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = 10'000'000;
  std::optional<ToyOverride> toy;
};

/// Full joint law of the base. Throws CapacityError, quoting the predicted
/// atom count, when it exceeds cap.
ExactDist build_n3_exact(const BaseParams& base, std::uint64_t cap);
ExactDist build_n3_exact(const Rational& eps, std::uint64_t cap = 10'000'000);

/// Exact law of (Y_1..Y_{n+1}) from the exact law of (X_1..X_n).
ExactDist exact_step(const ExactDist& x, const StepParams& step, std::uint64_t cap);

/// Number of atoms (before merging) exact_step would enumerate.
BigInt predicted_step_atoms(const ExactDist& x, const StepParams& step);

/// Exact law of the level-n construction, or of the toy instance when
/// params.toy is set (n = 3 uses toy.base, n = 4 adds one toy step).
ExactDist exact_joint(const ConstructionParams& params);

/// Terms of the three-part triangle bound on one induction step, for the
/// step from arity n to n + 1:
///   a[j]  = E (m_j + 1) / (2 m_{j+1}), distance from merging D_j into
///           D_{j+1}; a[n] = 0,
///   b[j]  = tvd(X_{-j}, X_{-(j+1)}) at level n,
///   c     = E tvd(Y1, Y1 + D1) given X1,
/// and budget[i] bounds tvd(Y_{-i}, Y_{-(i+1)}): c + a[1] for i = 1,
/// a[i-1] + b[i-1] + a[i] otherwise. All vectors are indexed from 1.
struct StepBudget {
  std::vector<Rational> a;
  std::vector<Rational> b;
  Rational c;
  std::vector<Rational> budget;
};

StepBudget induction_budget(const ExactDist& x, const StepParams& step);

using SymbolicTuple = std::vector<SymbolicInt>;

struct LatentTrace {
  SymbolicTuple x_prev;
  SymbolicTuple d_values;
  SymbolicInt y1;
};

struct StepSample {
  SymbolicTuple tuple;
  LatentTrace trace;
};

/// One faithful induction step from a level-n tuple, drawing from streams
/// derived from key. Requires explicit x_prev values once they exceed what
/// a bit length can hold symbolically (level 4 at eps < 1/2).
StepSample recursive_step_sample(const SymbolicTuple& x_prev, int n, const Rational& eps,
                                 std::uint64_t key);

/// Draw number index of the level-n construction. Deterministic in
/// (params.seed, index).
SymbolicTuple sample_tuple(const ConstructionParams& params, std::uint64_t index);

bool strictly_increasing(const SymbolicTuple& x);
/// Number of i with x_{i+1} - x_i < threshold.
std::size_t spacing_failures(const SymbolicTuple& x, const Rational& threshold);

}  // namespace indist

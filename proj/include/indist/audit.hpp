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
#include <optional>
#include <string>
#include <vector>

#include "indist/exact_dist.hpp"
#include "indist/subsets.hpp"
#include "indist/symbolic_int.hpp"

namespace indist {

/// exp2^height(top): the least value the largest coordinate must reach.
/// For n = 2 it is 1/eps, for n = 3 it is 2^(1/eps), and for n >= 4 it is
/// exp2^(n-2)(1 / (18^(n-3) (n-2)! eps)), valid only while
/// eps < 1 / (18^(n-3) (n-2)!).
struct TowerBound {
  int n = 0;
  int height = 0;
  Rational top;
  bool applicable = true;
  /// eps = 0: no finite value suffices.
  bool infinite = false;
};

/// Throws DomainError for eps < 0 or n < 2.
TowerBound tower_bound(int n, const Rational& eps);

/// sign(m - exp2^height(top)) for m >= 0 and top >= 0, computed exactly.
/// Throws CapacityError if the comparison would need more than the MPFR
/// precision budget.
int compare_with_tower(const BigInt& m, int height, const Rational& top);

enum class GapCase { kIncreasing, kDecreasing, kNeither };

const char* to_string(GapCase c);

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(const SymbolicInt& x) { return x.sign(); }

/// Classifies a strictly increasing 4-window: increasing iff
/// (x3 - x2)/(x4 - x1) < 1/4, x3 < (x1 + x4)/2 and x2 <= (x1 + x3)/2;
/// decreasing iff the ratio is < 1/4, x2 > (x1 + x4)/2 and
/// x3 > (x2 + x4)/2.
template <class T>
GapCase classify_gap_case(const T& x1, const T& x2, const T& x3, const T& x4);

/// Throws DomainError unless x1 < x2 < x3 < x4.
GapCase classify_gap_case(const Rational& x1, const Rational& x2, const Rational& x3,
                          const Rational& x4);
GapCase classify_gap_case(const SymbolicInt& x1, const SymbolicInt& x2, const SymbolicInt& x3,
                          const SymbolicInt& x4);

struct BiasedCaseReport {
  Rational probability;  // P(window is not neither)
  Rational eps_star;
  Rational required;     // 1 - 9 eps_star
  bool vacuous = false;  // required <= 0
  bool consistent = true;
};

/// For a distribution over strictly increasing 4-tuples.
BiasedCaseReport biased_case_probability(const ExactDist& d, const SubsetOptions& options = {});

struct MonotonicityVerdict {
  enum class Status { kPass, kHypothesisFailed, kCounterexample };
  Status status = Status::kPass;
  GapCase gap_case = GapCase::kNeither;
  /// 1-based window start (hypothesis failure, mixed cases) or index i of
  /// the violated gap inequality.
  std::size_t index = 0;
  std::string detail;
};

const char* to_string(MonotonicityVerdict::Status s);

/// Checks that every 4-window shares one case and, if increasing,
/// x_{i+1} - x_i >= x_i - x_1, or if decreasing, x_i - x_{i-1} >= x_n - x_i,
/// for every i in 2..n-1. Requires length >= 4, strictly increasing.
MonotonicityVerdict check_gap_monotonicity(const std::vector<Rational>& x);

enum class AuditVerdict { kConsistent, kViolation, kNotApplicable };

const char* to_string(AuditVerdict v);

struct AuditReport {
  int n = 0;
  Rational eps_star;
  SubsetIndex witness_first;
  SubsetIndex witness_second;
  BigInt max_value;
  TowerBound bound;
  bool applicable = true;
  AuditVerdict verdict = AuditVerdict::kConsistent;
  std::string note;
  std::optional<BiasedCaseReport> case_probability;  // n = 4 only
};

/// Measures eps* exactly and compares the largest value with the tower
/// bound. A violation means the measurement pipeline is wrong.
AuditReport audit_distribution(const ExactDist& d, const SubsetOptions& options = {});

/// The same verdict logic on supplied numbers.
AuditReport audit_injected(const Rational& eps_star, int n, const BigInt& max_value);

// ---------------------------------------------------------------------------

template <class T>
GapCase classify_gap_case(const T& x1, const T& x2, const T& x3, const T& x4) {
  const bool narrow = sign_of(T(x4 - x1) - T(4 * T(x3 - x2))) > 0;
  if (!narrow) return GapCase::kNeither;
  if (sign_of(T(x1 + x4) - T(2 * x3)) > 0 && sign_of(T(x1 + x3) - T(2 * x2)) >= 0) {
    return GapCase::kIncreasing;
  }
  if (sign_of(T(2 * x2) - T(x1 + x4)) > 0 && sign_of(T(2 * x3) - T(x2 + x4)) > 0) {
    return GapCase::kDecreasing;
  }
  return GapCase::kNeither;
}

}  // namespace indist

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
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indist/numeric.hpp"

namespace indist {

/// A support point. Scalars are length-1 tuples; flagged values carry the
/// flag bit as one extra trailing coordinate.
using Tuple = std::vector<BigInt>;

enum class ValueKind { kScalar, kTuple, kFlagged };

const char* to_string(ValueKind kind);
ValueKind parse_value_kind(std::string_view text);

/// Finite probability distribution with exact rational weights.
///
/// Invariants (established by every constructor): all stored probabilities
/// are strictly positive, they sum to exactly one, and every support point
/// has the same width (arity, plus one for the flag of flagged values).
/// Atoms are kept ordered lexicographically by value, so iteration order and
/// equality are canonical.
class ExactDist {
 public:
  using Atoms = std::map<Tuple, Rational>;
  using const_iterator = Atoms::const_iterator;

  /// Merges duplicate values by exact addition and drops zero masses.
  /// Throws NormalizationError unless the masses sum to 1, KindError on a
  /// width mismatch, DomainError on a negative mass.
  ExactDist(ValueKind kind, std::size_t arity, std::vector<std::pair<Tuple, Rational>> atoms);

  static ExactDist point(ValueKind kind, Tuple value);
  static ExactDist point(const BigInt& value);

  ValueKind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  /// Number of coordinates stored per support point.
  std::size_t width() const { return arity_ + (kind_ == ValueKind::kFlagged ? 1 : 0); }
  std::size_t size() const { return atoms_.size(); }
  const Atoms& atoms() const { return atoms_; }
  const_iterator begin() const { return atoms_.begin(); }
  const_iterator end() const { return atoms_.end(); }

  /// Zero for points outside the support.
  Rational prob(const Tuple& value) const;

  /// Largest coordinate appearing in the support (flag excluded).
  BigInt max_value() const;

  friend bool operator==(const ExactDist& a, const ExactDist& b) {
    return a.kind_ == b.kind_ && a.arity_ == b.arity_ && a.atoms_ == b.atoms_;
  }

 private:
  ExactDist() = default;
  ValueKind kind_ = ValueKind::kScalar;
  std::size_t arity_ = 1;
  Atoms atoms_;
};

/// Uniform law on the integers lo..hi.
ExactDist uniform_int(const BigInt& lo, const BigInt& hi);

/// Uniform law over the listed values (duplicates count with multiplicity).
ExactDist uniform_over(ValueKind kind, std::size_t arity, const std::vector<Tuple>& values);

/// Total variation distance sum_x max(p1(x) - p2(x), 0) via a sorted merge.
Rational tvd(const ExactDist& d1, const ExactDist& d2);

using ValueMap = std::function<std::optional<Tuple>(const Tuple&)>;

/// Law of f(X). The result kind defaults to the input kind; images must all
/// have one width. Throws MappingError where f returns nullopt.
ExactDist pushforward(const ExactDist& d, const ValueMap& f,
                      std::optional<ValueKind> result_kind = std::nullopt);

/// Law of X_I where I has the given weights.
ExactDist mixture(const std::vector<std::pair<Rational, ExactDist>>& components);

/// Law of X + Y for independent scalar X, Y.
ExactDist convolve(const ExactDist& d1, const ExactDist& d2);

/// (n2 + 1) / (2 n1): distance between U[1..n1] and U[1..n1] + U[1..n2].
/// Requires n1 > n2 >= 1.
Rational uniform_shift_tvd_closed_form(const BigInt& n1, const BigInt& n2);

/// Joint law of (X1, S) with P(S = 1 | X1 = x) = min(1, p2(x) / p1(x)).
/// The marginal of X1 is d1 and P(S = 0) = tvd(d1, d2).
ExactDist coupling_flag(const ExactDist& d1, const ExactDist& d2);

/// P(flag = 0) of a flagged distribution.
Rational flag_zero_probability(const ExactDist& joint);

/// Marginal on the value, forgetting the flag.
ExactDist drop_flag(const ExactDist& joint);

/// Law of the value given flag = 1. Throws DomainError when P(flag = 1) = 0.
ExactDist condition_on_flag(const ExactDist& joint);

/// (delta + eps) / (1 - eps): the distance bound after conditioning two
/// variables on an event of probability 1 - eps. Requires 0 <= eps < 1.
Rational conditioning_bound(const Rational& delta, const Rational& eps);

/// E[f(X)].
Rational expectation(const ExactDist& d, const std::function<Rational(const Tuple&)>& f);
/// E[X] for a scalar distribution.
Rational expectation(const ExactDist& d);

/// max(0, E[d2] - E[d1]) / (b - a) for scalar distributions supported in
/// [a, b]; never exceeds tvd(d1, d2).
Rational expectation_gap_lower_bound(const ExactDist& d1, const ExactDist& d2, const Rational& a,
                                     const Rational& b);

/// Same bound for the real-valued statistic f, which must map both supports
/// into [a, b].
Rational expectation_gap_lower_bound(const ExactDist& d1, const ExactDist& d2,
                                     const std::function<Rational(const Tuple&)>& f,
                                     const Rational& a, const Rational& b);

}  // namespace indist

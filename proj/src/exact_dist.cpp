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

#include "indist/exact_dist.hpp"

#include <algorithm>
#include <string>

#include "indist/errors.hpp"

namespace indist {
namespace {

std::size_t width_of(ValueKind kind, std::size_t arity) {
  return arity + (kind == ValueKind::kFlagged ? 1 : 0);
}

void require_same_kind(const ExactDist& a, const ExactDist& b, const char* op) {
  if (a.kind() != b.kind() || a.arity() != b.arity()) {
    throw KindError(std::string(op) + ": value kinds differ (" + to_string(a.kind()) + "/" +
                    std::to_string(a.arity()) + " vs " + to_string(b.kind()) + "/" +
                    std::to_string(b.arity()) + ")");
  }
}

void require_scalar(const ExactDist& d, const char* op) {
  if (d.kind() != ValueKind::kScalar) {
    throw KindError(std::string(op) + " needs a scalar distribution");
  }
}

}  // namespace

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kScalar:
      return "scalar";
    case ValueKind::kTuple:
      return "tuple";
    case ValueKind::kFlagged:
      return "flagged";
  }
  return "?";
}

ValueKind parse_value_kind(std::string_view text) {
  if (text == "scalar") return ValueKind::kScalar;
  if (text == "tuple") return ValueKind::kTuple;
  if (text == "flagged") return ValueKind::kFlagged;
  throw ParseError("unknown value kind '" + std::string(text) + "'");
}

ExactDist::ExactDist(ValueKind kind, std::size_t arity,
                     std::vector<std::pair<Tuple, Rational>> atoms)
    : kind_(kind), arity_(arity) {
  if (kind == ValueKind::kScalar && arity != 1) throw KindError("scalar values have arity 1");
  const std::size_t width = width_of(kind, arity);
  for (const auto& [value, p] : atoms) {
    if (value.size() != width) {
      throw KindError("support point of width " + std::to_string(value.size()) +
                      " in a distribution of width " + std::to_string(width));
    }
    if (kind == ValueKind::kFlagged && value.back() != 0 && value.back() != 1) {
      throw KindError("flag coordinate must be 0 or 1");
    }
    if (sgn(p) < 0) throw DomainError("negative probability");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total = 0;
  auto hint = atoms_.end();
  for (std::size_t i = 0; i < atoms.size();) {
    Rational mass = atoms[i].second;
    std::size_t j = i + 1;
    while (j < atoms.size() && atoms[j].first == atoms[i].first) mass += atoms[j++].second;
    if (sgn(mass) > 0) {
      total += mass;
      hint = atoms_.emplace_hint(hint, std::move(atoms[i].first), std::move(mass));
    }
    i = j;
  }
  if (total != 1) {
    throw NormalizationError("probabilities sum to " + to_string(total) + ", not 1");
  }
}

ExactDist ExactDist::point(ValueKind kind, Tuple value) {
  const std::size_t arity = value.size() - (kind == ValueKind::kFlagged ? 1 : 0);
  return ExactDist(kind, arity, {{std::move(value), Rational(1)}});
}

ExactDist ExactDist::point(const BigInt& value) { return point(ValueKind::kScalar, {value}); }

Rational ExactDist::prob(const Tuple& value) const {
  auto it = atoms_.find(value);
  return it == atoms_.end() ? Rational(0) : it->second;
}

BigInt ExactDist::max_value() const {
  BigInt best;
  bool first = true;
  for (const auto& [value, p] : atoms_) {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (first || value[i] > best) best = value[i];
      first = false;
    }
  }
  return best;
}

ExactDist uniform_int(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw DomainError("uniform_int: empty range [" + to_string(lo) + ", " +
                                 to_string(hi) + "]");
  BigInt count = hi - lo + 1;
  if (count > 100'000'000) throw CapacityError("uniform_int: range too large to enumerate");
  const Rational p = make_rational(1, count);
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(count.get_ui());
  for (BigInt x = lo; x <= hi; ++x) atoms.push_back({{x}, p});
  return ExactDist(ValueKind::kScalar, 1, std::move(atoms));
}

ExactDist uniform_over(ValueKind kind, std::size_t arity, const std::vector<Tuple>& values) {
  if (values.empty()) throw DomainError("uniform_over: no values");
  const Rational p = make_rational(1, static_cast<unsigned long>(values.size()));
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(values.size());
  for (const auto& v : values) atoms.push_back({v, p});
  return ExactDist(kind, arity, std::move(atoms));
}

Rational tvd(const ExactDist& d1, const ExactDist& d2) {
  require_same_kind(d1, d2, "tvd");
  Rational total = 0;
  auto a = d1.begin();
  auto b = d2.begin();
  while (a != d1.end()) {
    if (b == d2.end() || a->first < b->first) {
      total += a->second;
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      if (a->second > b->second) total += a->second - b->second;
      ++a;
      ++b;
    }
  }
  return total;
}

ExactDist pushforward(const ExactDist& d, const ValueMap& f, std::optional<ValueKind> result_kind) {
  const ValueKind kind = result_kind.value_or(d.kind());
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(d.size());
  std::optional<std::size_t> width;
  for (const auto& [value, p] : d) {
    std::optional<Tuple> image = f(value);
    if (!image) throw MappingError("pushforward: map undefined on a support point");
    if (width && *width != image->size()) {
      throw KindError("pushforward: images of differing widths");
    }
    width = image->size();
    atoms.emplace_back(std::move(*image), p);
  }
  std::size_t arity = *width - (kind == ValueKind::kFlagged ? 1 : 0);
  return ExactDist(kind, arity, std::move(atoms));
}

ExactDist mixture(const std::vector<std::pair<Rational, ExactDist>>& components) {
  if (components.empty()) throw DomainError("mixture: no components");
  Rational total = 0;
  std::vector<std::pair<Tuple, Rational>> atoms;
  for (const auto& [w, d] : components) {
    if (sgn(w) <= 0) throw DomainError("mixture: weights must be positive");
    require_same_kind(components.front().second, d, "mixture");
    total += w;
    for (const auto& [value, p] : d) atoms.emplace_back(value, w * p);
  }
  if (total != 1) throw NormalizationError("mixture weights sum to " + to_string(total));
  const auto& first = components.front().second;
  return ExactDist(first.kind(), first.arity(), std::move(atoms));
}

ExactDist convolve(const ExactDist& d1, const ExactDist& d2) {
  require_scalar(d1, "convolve");
  require_scalar(d2, "convolve");
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(d1.size() * d2.size());
  for (const auto& [x, p] : d1) {
    for (const auto& [y, q] : d2) atoms.push_back({{x[0] + y[0]}, p * q});
  }
  return ExactDist(ValueKind::kScalar, 1, std::move(atoms));
}

Rational uniform_shift_tvd_closed_form(const BigInt& n1, const BigInt& n2) {
  if (n2 < 1 || n1 <= n2) {
    throw DomainError("uniform shift closed form needs n1 > n2 >= 1 (got n1=" + to_string(n1) +
                      ", n2=" + to_string(n2) + ")");
  }
  return make_rational(n2 + 1, 2 * n1);
}

ExactDist coupling_flag(const ExactDist& d1, const ExactDist& d2) {
  require_same_kind(d1, d2, "coupling_flag");
  if (d1.kind() == ValueKind::kFlagged) throw KindError("coupling_flag: input already flagged");
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(2 * d1.size());
  for (const auto& [x, p1] : d1) {
    const Rational p2 = d2.prob(x);
    // P(S=1, X=x) = p1 * min(1, p2/p1) = min(p1, p2)
    const Rational keep = p1 < p2 ? p1 : p2;
    Tuple with_flag = x;
    with_flag.emplace_back(1);
    atoms.emplace_back(with_flag, keep);
    with_flag.back() = 0;
    atoms.emplace_back(std::move(with_flag), p1 - keep);
  }
  return ExactDist(ValueKind::kFlagged, d1.arity(), std::move(atoms));
}

Rational flag_zero_probability(const ExactDist& joint) {
  if (joint.kind() != ValueKind::kFlagged) throw KindError("expected a flagged distribution");
  Rational total = 0;
  for (const auto& [value, p] : joint) {
    if (value.back() == 0) total += p;
  }
  return total;
}

ExactDist drop_flag(const ExactDist& joint) {
  if (joint.kind() != ValueKind::kFlagged) throw KindError("expected a flagged distribution");
  const ValueKind base = joint.arity() == 1 ? ValueKind::kScalar : ValueKind::kTuple;
  return pushforward(
      joint, [](const Tuple& v) { return std::optional<Tuple>(Tuple(v.begin(), v.end() - 1)); },
      base);
}

ExactDist condition_on_flag(const ExactDist& joint) {
  const Rational one_mass = 1 - flag_zero_probability(joint);
  if (sgn(one_mass) == 0) throw DomainError("conditioning on a null event (P(flag=1) = 0)");
  const ValueKind base = joint.arity() == 1 ? ValueKind::kScalar : ValueKind::kTuple;
  std::vector<std::pair<Tuple, Rational>> atoms;
  for (const auto& [value, p] : joint) {
    if (value.back() == 1) atoms.emplace_back(Tuple(value.begin(), value.end() - 1), p / one_mass);
  }
  return ExactDist(base, joint.arity(), std::move(atoms));
}

Rational conditioning_bound(const Rational& delta, const Rational& eps) {
  if (sgn(eps) < 0 || eps >= 1) throw DomainError("conditioning bound needs 0 <= eps < 1");
  return (delta + eps) / (1 - eps);
}

Rational expectation(const ExactDist& d, const std::function<Rational(const Tuple&)>& f) {
  Rational total = 0;
  for (const auto& [value, p] : d) total += p * f(value);
  return total;
}

Rational expectation(const ExactDist& d) {
  require_scalar(d, "expectation");
  return expectation(d, [](const Tuple& v) { return Rational(v[0]); });
}

Rational expectation_gap_lower_bound(const ExactDist& d1, const ExactDist& d2,
                                     const std::function<Rational(const Tuple&)>& f,
                                     const Rational& a, const Rational& b) {
  require_same_kind(d1, d2, "expectation_gap_lower_bound");
  if (!(a < b)) throw DomainError("expectation gap bound needs a < b");
  for (const ExactDist* d : {&d1, &d2}) {
    for (const auto& [value, p] : *d) {
      const Rational y = f(value);
      if (y < a || y > b) throw DomainError("statistic leaves the interval [a, b]");
    }
  }
  return positive_part(expectation(d2, f) - expectation(d1, f)) / (b - a);
}

Rational expectation_gap_lower_bound(const ExactDist& d1, const ExactDist& d2, const Rational& a,
                                     const Rational& b) {
  require_scalar(d1, "expectation_gap_lower_bound");
  return expectation_gap_lower_bound(
      d1, d2, [](const Tuple& v) { return Rational(v[0]); }, a, b);
}

}  // namespace indist

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

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "indist/audit.hpp"
#include "indist/construction.hpp"
#include "indist/exact_dist.hpp"
#include "indist/games.hpp"
#include "indist/subsets.hpp"
#include "indist/symbolic_int.hpp"

namespace indist {

using Json = nlohmann::ordered_json;

// Distribution files are JSON lines. The first line is
//   {"kind": "scalar"|"tuple"|"flagged", "arity": k}
// and each further line is one atom,
//   {"value": "5", "p": "1/4"}                      scalar
//   {"value": ["1", "3"], "p": "1/4"}                tuple
//   {"value": ["1", "3"], "flag": 1, "p": "1/4"}      flagged
// in increasing numeric order of value.

void write_dist(std::ostream& out, const ExactDist& d);

/// Throws ParseError on malformed input and NormalizationError unless the
/// masses sum to exactly one.
ExactDist read_dist(std::istream& in);

void save_dist(const std::string& path, const ExactDist& d);
ExactDist load_dist(const std::string& path);

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const Tuple& v);

/// Decimal string when explicit, otherwise
///   {"offset": "...", "terms": [{"kind": "pow2", "exponent": "E",
///    "coeff": "c"}, {"kind": "uniform_bits", "bits": "L", "key": "k",
///    "coeff": "c"}]}.
Json to_json(const SymbolicInt& v);
Json to_json(const SymbolicTuple& v);

Json to_json(const SubsetWitness& w);
Json to_json(const ConstructionCertificate& c);
Json to_json(const TowerBound& b);
Json to_json(const BiasedCaseReport& r);
Json to_json(const MonotonicityVerdict& v);
Json to_json(const AuditReport& r);
Json to_json(const MonteCarloEstimate& e);
Json to_json(const PairedEstimate& e);
Json to_json(const ValueReport& r);

/// Reads a tuple of decimal strings (or integers).
Tuple tuple_from_json(const Json& j);

}  // namespace indist

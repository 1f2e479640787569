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

#include "indist/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "indist/errors.hpp"

namespace indist {
namespace {

constexpr std::uint64_t kPrintableBits = std::uint64_t{1} << 16;

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  throw ParseError("expected a decimal integer string");
}

Json value_json(const Tuple& value, std::size_t arity) {
  if (arity == 1) return to_json(value[0]);
  Json arr = Json::array();
  for (std::size_t i = 0; i < arity; ++i) arr.push_back(to_json(value[i]));
  return arr;
}

Json exponent_json(const Rational& top) {
  return top.get_den() == 1 ? to_json(top.get_num()) : to_json(top);
}

}  // namespace

Json to_json(const BigInt& v) { return to_string(v); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const Tuple& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Tuple tuple_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of decimal strings");
  Tuple t;
  for (const auto& e : j) t.push_back(bigint_from_json(e));
  return t;
}

void write_dist(std::ostream& out, const ExactDist& d) {
  Json meta;
  meta["kind"] = to_string(d.kind());
  meta["arity"] = d.arity();
  out << meta.dump() << '\n';
  for (const auto& [value, p] : d) {
    Json line;
    line["value"] = value_json(value, d.arity());
    if (d.kind() == ValueKind::kFlagged) line["flag"] = value.back().get_si();
    line["p"] = to_json(p);
    out << line.dump() << '\n';
  }
}

ExactDist read_dist(std::istream& in) {
  std::string text;
  if (!std::getline(in, text)) throw ParseError("empty distribution file");
  ValueKind kind;
  std::size_t arity;
  try {
    const Json meta = Json::parse(text);
    kind = parse_value_kind(meta.at("kind").get<std::string>());
    arity = meta.at("arity").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad metadata line: ") + e.what());
  }
  if (arity == 0) throw ParseError("arity must be positive");
  if (kind == ValueKind::kScalar && arity != 1) throw ParseError("scalar arity must be 1");
  std::vector<std::pair<Tuple, Rational>> atoms;
  std::set<Tuple> seen;
  std::size_t line_no = 1;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Tuple value;
    Rational p;
    try {
      const Json line = Json::parse(text);
      const Json& v = line.at("value");
      if (v.is_array()) {
        value = tuple_from_json(v);
      } else {
        value = {bigint_from_json(v)};
      }
      if (value.size() != arity) throw ParseError("value has the wrong arity");
      if (kind == ValueKind::kFlagged) {
        const Json& f = line.at("flag");
        const long long flag = f.is_string() ? std::stoll(f.get<std::string>()) : f.get<long long>();
        if (flag != 0 && flag != 1) throw ParseError("flag must be 0 or 1");
        value.emplace_back(static_cast<long>(flag));
      }
      p = parse_rational(line.at("p").get<std::string>());
    } catch (const Json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (sgn(p) <= 0) throw ParseError("line " + std::to_string(line_no) + ": mass must be positive");
    if (!seen.insert(value).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate value");
    }
    atoms.emplace_back(std::move(value), std::move(p));
  }
  return ExactDist(kind, arity, std::move(atoms));
}

void save_dist(const std::string& path, const ExactDist& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  write_dist(out, d);
  if (!out) throw DomainError("failed writing " + path);
}

ExactDist load_dist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return read_dist(in);
}

Json to_json(const SymbolicInt& v) {
  if (v.is_explicit()) return to_json(v.offset());
  Json j;
  j["offset"] = to_json(v.offset());
  Json terms = Json::array();
  for (const auto& t : v.terms()) {
    Json e;
    if (t.kind == SymbolicInt::TermKind::kPow2) {
      e["kind"] = "pow2";
      e["exponent"] = to_json(t.size);
    } else {
      e["kind"] = "uniform_bits";
      e["bits"] = to_json(t.size);
      e["key"] = std::to_string(t.key);
    }
    e["coeff"] = to_json(t.coeff);
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const SymbolicTuple& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const SubsetWitness& w) {
  Json j;
  j["tvd"] = to_json(w.tvd);
  j["first"] = w.first;
  j["second"] = w.second;
  return j;
}

Json to_json(const ConstructionCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["eps_requested"] = to_json(c.eps.requested);
  j["eps"] = to_json(c.eps.value);
  j["log2_inverse_eps"] = std::to_string(c.eps.t);
  j["eps_rounded"] = c.eps.rounded;
  Json bound;
  bound["tower_height"] = c.bound_tower_height;
  bound["top_exponent"] = to_json(c.bound_tower_top);
  bound["minus"] = to_json(c.bound_offset);
  try {
    const BigInt value =
        exp2_tower(c.bound_tower_height, c.bound_tower_top, kPrintableBits) - c.bound_offset;
    bound["value"] = to_json(value);
  } catch (const CapacityError&) {
  }
  j["bound"] = std::move(bound);
  j["spacing_threshold"] = to_json(c.spacing_threshold);
  j["spacing_prob_bound"] = to_json(c.spacing_prob_bound);
  j["neighbor_bound"] = to_json(c.neighbor_bound);
  return j;
}

Json to_json(const TowerBound& b) {
  Json j;
  j["n"] = b.n;
  if (b.infinite) {
    j["infinite"] = true;
    return j;
  }
  j["tower_height"] = b.height;
  j["top_exponent"] = exponent_json(b.top);
  j["applicable"] = b.applicable;
  if (b.height == 0) {
    j["value"] = to_json(b.top);
  } else if (b.top.get_den() == 1 && b.top.get_num().fits_ulong_p()) {
    try {
      j["value"] = to_json(exp2_tower(b.height, b.top.get_num(), kPrintableBits));
    } catch (const CapacityError&) {
    }
  }
  return j;
}

Json to_json(const BiasedCaseReport& r) {
  Json j;
  j["probability"] = to_json(r.probability);
  j["eps_star"] = to_json(r.eps_star);
  j["required"] = to_json(r.required);
  j["vacuous"] = r.vacuous;
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const MonotonicityVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["case"] = to_string(v.gap_case);
  j["index"] = v.index;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["n"] = r.n;
  j["eps_star"] = to_json(r.eps_star);
  if (!r.witness_first.empty()) j["witness"] = {r.witness_first, r.witness_second};
  j["max_value"] = to_json(r.max_value);
  j["bound"] = to_json(r.bound);
  j["applicable"] = r.applicable;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.case_probability) j["case_probability"] = to_json(*r.case_probability);
  return j;
}

Json to_json(const MonteCarloEstimate& e) {
  Json j;
  j["estimate"] = e.mean;
  j["stderr"] = e.std_error;
  j["trials"] = e.trials;
  return j;
}

Json to_json(const PairedEstimate& e) {
  Json j;
  j["base"] = to_json(e.base);
  j["adapted"] = to_json(e.adapted);
  j["difference"] = to_json(e.difference);
  j["factor"] = to_json(e.factor);
  return j;
}

Json to_json(const ValueReport& r) {
  Json j;
  j["game"] = r.game;
  j["n"] = r.n;
  j["horizon"] = r.horizon;
  j["method"] = r.method;
  j["lower"] = to_json(r.lower);
  j["upper"] = to_json(r.upper);
  j["value"] = to_json(r.value);
  j["gap"] = to_json(r.gap);
  j["tolerance"] = to_json(r.tolerance);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  Json dealer = Json::array();
  for (const auto& [x, p] : r.dealer) dealer.push_back({{"tuple", to_json(x)}, {"p", to_json(p)}});
  j["dealer"] = std::move(dealer);
  Json gambler = Json::array();
  for (const auto& [w, s] : r.gambler2) {
    Json guess = Json::array();
    for (const auto& o : s.guess_two) guess.push_back(to_json(o));
    gambler.push_back({{"weight", to_json(w)}, {"i", s.i}, {"j", s.j}, {"guess_two", guess}});
  }
  for (const auto& [w, s] : r.gambler1) {
    Json table = Json::array();
    for (const auto& [o, bet] : s.table) {
      table.push_back({{"observation", to_json(o)}, {"win", bet.first}, {"lose", bet.second}});
    }
    gambler.push_back({{"weight", to_json(w)}, {"table", table}});
  }
  j["gambler"] = std::move(gambler);
  return j;
}

}  // namespace indist

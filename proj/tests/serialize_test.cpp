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

#include <gtest/gtest.h>

#include <sstream>

#include "indist/construction.hpp"
#include "indist/errors.hpp"

namespace indist {
namespace {

ExactDist round_trip(const ExactDist& d) {
  std::stringstream s;
  write_dist(s, d);
  return read_dist(s);
}

TEST(DistFiles, RoundTripEveryKind) {
  EXPECT_EQ(round_trip(uniform_int(-3, 4)), uniform_int(-3, 4));
  EXPECT_EQ(round_trip(build_n3_exact(1)), build_n3_exact(1));
  const ExactDist flagged = coupling_flag(uniform_int(1, 4), uniform_int(2, 6));
  EXPECT_EQ(round_trip(flagged), flagged);
  const ExactDist huge = ExactDist::point(ValueKind::kTuple, {BigInt(1), pow2(500)});
  EXPECT_EQ(round_trip(huge), huge);
}

TEST(DistFiles, Format) {
  std::stringstream s;
  write_dist(s, uniform_over(ValueKind::kTuple, 2, {{BigInt(1), BigInt(2)}, {BigInt(1), BigInt(3)}}));
  EXPECT_EQ(s.str(),
            "{\"kind\":\"tuple\",\"arity\":2}\n"
            "{\"value\":[\"1\",\"2\"],\"p\":\"1/2\"}\n"
            "{\"value\":[\"1\",\"3\"],\"p\":\"1/2\"}\n");
  std::stringstream t;
  write_dist(t, ExactDist::point(BigInt(7)));
  EXPECT_EQ(t.str(), "{\"kind\":\"scalar\",\"arity\":1}\n{\"value\":\"7\",\"p\":\"1/1\"}\n");
}

TEST(DistFiles, RejectsBadFiles) {
  auto parse = [](const std::string& text) {
    std::stringstream s(text);
    return read_dist(s);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("{\"kind\":\"scalar\",\"arity\":1}\n{\"value\":\"1\",\"p\":\"1/2\"}\n"),
               NormalizationError);
  EXPECT_THROW(parse("{\"kind\":\"scalar\",\"arity\":1}\n{\"value\":\"1\",\"p\":\"1/2\"}\n"
                     "{\"value\":\"1\",\"p\":\"1/2\"}\n"),
               ParseError);
  EXPECT_THROW(parse("{\"kind\":\"tuple\",\"arity\":2}\n{\"value\":[\"1\"],\"p\":\"1\"}\n"), ParseError);
  EXPECT_THROW(parse("{\"kind\":\"blob\",\"arity\":1}\n"), Error);
  EXPECT_THROW(parse("{\"kind\":\"scalar\",\"arity\":1}\nnot json\n"), ParseError);
  EXPECT_THROW(parse("{\"kind\":\"scalar\",\"arity\":1}\n{\"value\":\"x\",\"p\":\"1\"}\n"), ParseError);
  EXPECT_NO_THROW(parse("{\"kind\":\"scalar\",\"arity\":1}\n{\"value\":\"1\",\"p\":\"0.5\"}\n"
                        "{\"value\":\"2\",\"p\":\"1/2\"}\n"));
}

TEST(Json, SymbolicValues) {
  EXPECT_EQ(to_json(SymbolicInt(BigInt(12))), Json("12"));
  const Json j = to_json(SymbolicInt::pow2(pow2(100)) - SymbolicInt(3));
  EXPECT_EQ(j["offset"], "-3");
  EXPECT_EQ(j["terms"][0]["kind"], "pow2");
  EXPECT_EQ(j["terms"][0]["exponent"], to_string(pow2(100)));
}

TEST(Json, Reports) {
  const Json c = to_json(certificate(3, 1));
  EXPECT_EQ(c["bound"]["tower_height"], 1);
  EXPECT_EQ(c["bound"]["top_exponent"], "10");
  EXPECT_EQ(c["bound"]["value"], "1010");
  EXPECT_EQ(c["neighbor_bound"], "7/8");
  const Json a = to_json(audit_injected(make_rational(1, 10), 3, BigInt(100)));
  EXPECT_EQ(a["verdict"], "violation");
  EXPECT_EQ(a["bound"]["value"], "1024");
  const Json t = to_json(tower_bound(4, make_rational(1, 720)));
  EXPECT_EQ(t["tower_height"], 2);
  EXPECT_EQ(t["top_exponent"], "20");
  EXPECT_FALSE(t.contains("value"));
}

}  // namespace
}  // namespace indist

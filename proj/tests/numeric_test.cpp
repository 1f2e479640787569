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

#include "indist/numeric.hpp"

#include <gtest/gtest.h>

#include "indist/errors.hpp"

namespace indist {
namespace {

TEST(ParseRational, AcceptsIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("1/3"), make_rational(1, 3));
  EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
  EXPECT_EQ(parse_rational("2/4"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+1.5"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "0x10", "1e5", " 1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(ParseRational, CanonicalStringForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
}

TEST(BigInts, BitLengthAndPowers) {
  EXPECT_EQ(bit_length(BigInt(0)), 0u);
  EXPECT_EQ(bit_length(BigInt(1)), 1u);
  EXPECT_EQ(bit_length(BigInt(255)), 8u);
  EXPECT_EQ(bit_length(pow2(100)), 101u);
  EXPECT_EQ(to_string(pow2(10)), "1024");
}

TEST(BigInts, TowerValues) {
  EXPECT_EQ(exp2_tower(0, BigInt(5)), BigInt(5));
  EXPECT_EQ(exp2_tower(1, BigInt(5)), BigInt(32));
  EXPECT_EQ(exp2_tower(2, BigInt(3)), BigInt(256));
  EXPECT_EQ(exp2_tower(3, BigInt(2)), BigInt(65536));
  EXPECT_THROW(exp2_tower(2, BigInt(30), 1 << 20), CapacityError);
}

TEST(Epsilons, CeilInverseAndDyadicFloor) {
  EXPECT_EQ(ceil_inverse(make_rational(1, 3)), BigInt(3));
  EXPECT_EQ(ceil_inverse(make_rational(2, 7)), BigInt(4));
  EXPECT_EQ(ceil_inverse(Rational(1)), BigInt(1));
  EXPECT_EQ(dyadic_floor_exponent(Rational(1)), 0u);
  EXPECT_EQ(dyadic_floor_exponent(make_rational(1, 2)), 1u);
  EXPECT_EQ(dyadic_floor_exponent(make_rational(1, 3)), 2u);
  EXPECT_EQ(dyadic_floor_exponent(make_rational(1, 10)), 4u);
}

TEST(Doubles, ExactConversion) {
  EXPECT_EQ(rational_from_double(0.375), make_rational(3, 8));
  EXPECT_EQ(rational_from_double(-2.0), Rational(-2));
}

}  // namespace
}  // namespace indist

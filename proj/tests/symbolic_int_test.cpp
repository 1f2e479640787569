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

#include "indist/symbolic_int.hpp"

#include <gtest/gtest.h>

#include <random>

#include "indist/errors.hpp"
#include "indist/rng.hpp"

namespace indist {
namespace {

// Independent oracle: the full value of a uniform term, assembled word by
// word from the stream.
BigInt materialise(std::uint64_t key, std::uint64_t bits) {
  BigInt v = 0;
  const std::uint64_t words = (bits + 63) / 64;
  for (std::uint64_t j = words; j-- > 0;) {
    v <<= 64;
    const std::uint64_t w = CounterStream::word_at(key, j);
    v += BigInt(static_cast<unsigned long>(w));
  }
  v &= pow2(bits) - 1;
  return v;
}

TEST(SymbolicInt, SmallValuesAreExplicit) {
  const SymbolicInt a = SymbolicInt::pow2(BigInt(100)) + SymbolicInt(5);
  EXPECT_TRUE(a.is_explicit());
  EXPECT_EQ(*a.to_bigint(), pow2(100) + 5);
  const SymbolicInt u = SymbolicInt::uniform_bits(BigInt(200), 9);
  ASSERT_TRUE(u.is_explicit());
  EXPECT_EQ(*u.to_bigint(), materialise(9, 200));
}

TEST(SymbolicInt, WindowMatchesMaterialisedBits) {
  const std::uint64_t bits = 70'001;
  const BigInt full = materialise(77, bits);
  for (unsigned long shift : {0ul, 1ul, 63ul, 64ul, 1000ul, 69'999ul, 70'000ul, 70'001ul}) {
    EXPECT_EQ(uniform_bits_window(77, BigInt(bits), BigInt(shift)), full >> shift) << shift;
  }
}

TEST(SymbolicInt, SignAgreesWithMaterialisedOracle) {
  std::mt19937_64 rng(1);
  const std::uint64_t big = SymbolicInt::kExplicitBits + 1000;
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t la = big + rng() % 3;
    const std::uint64_t lb = big + rng() % 3;
    const std::uint64_t ka = rng(), kb = rng();
    const long off = static_cast<long>(rng() % 2001) - 1000;
    const SymbolicInt x = SymbolicInt::uniform_bits(BigInt(static_cast<unsigned long>(la)), ka) -
                          SymbolicInt::uniform_bits(BigInt(static_cast<unsigned long>(lb)), kb) +
                          SymbolicInt(off);
    const BigInt oracle = materialise(ka, la) - materialise(kb, lb) + off;
    EXPECT_EQ(x.sign(), sgn(oracle)) << trial;
  }
}

TEST(SymbolicInt, PowersAgainstUniformTerms) {
  const std::uint64_t bits = SymbolicInt::kExplicitBits + 64;
  const BigInt lb(static_cast<unsigned long>(bits));
  const SymbolicInt u = SymbolicInt::uniform_bits(lb, 123);
  // u < 2^bits always; u + 1 <= 2^bits.
  EXPECT_LT(u, SymbolicInt::pow2(lb));
  EXPECT_LE(u + SymbolicInt(1), SymbolicInt::pow2(lb));
  const BigInt top_bit = materialise(123, bits) >> (bits - 1);
  EXPECT_EQ(u >= SymbolicInt::pow2(BigInt(static_cast<unsigned long>(bits - 1))), top_bit == 1);
}

TEST(SymbolicInt, TowerScaleComparisons) {
  const BigInt e = pow2(200);  // 2^(2^200): far beyond explicit storage
  const SymbolicInt t = SymbolicInt::pow2(e);
  EXPECT_FALSE(t.is_explicit());
  EXPECT_GT(t, SymbolicInt::pow2(e - 1));
  EXPECT_GT(t - SymbolicInt(1'000'000), SymbolicInt(0));
  EXPECT_EQ((t + SymbolicInt(7)) - t, SymbolicInt(7));
  const SymbolicInt u = SymbolicInt::uniform_bits(e, 5);
  EXPECT_LT(u, t);
  EXPECT_GT(u + t, t);
  EXPECT_EQ((u + SymbolicInt(3)) - u, SymbolicInt(3));
  EXPECT_EQ(2 * u - u - u, SymbolicInt(0));
  EXPECT_GT(SymbolicInt::pow2(e + 1) - u - u, SymbolicInt(0));
}

TEST(SymbolicInt, BitLengthBound) {
  const BigInt e = pow2(80);
  const SymbolicInt t = SymbolicInt::pow2(e) + SymbolicInt::uniform_bits(e, 2);
  EXPECT_GE(t.bit_length_bound(), e + 1);
  EXPECT_LE(t.bit_length_bound(), e + 3);
}

}  // namespace
}  // namespace indist

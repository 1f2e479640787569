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
#include <initializer_list>

#include "indist/numeric.hpp"

namespace indist {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a list of words into one stream key. Used to derive independent,
/// reproducible streams from (seed, sample index, role, attempt, ...).
std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts);

/// Counter-based generator: word i of the stream keyed by k is a fixed hash
/// of (k, i). Any word can be read without producing the ones before it,
/// which is what lets a uniform integer with astronomically many bits be
/// inspected lazily from its high end. Platform independent.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t key() const { return key_; }
  std::uint64_t next() { return word_at(key_, counter_++); }

  static std::uint64_t word_at(std::uint64_t key, std::uint64_t index);
  /// Word at an arbitrary-precision index.
  static std::uint64_t word_at(std::uint64_t key, const BigInt& index);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform integer in [0, 2^bits) from the next words of the stream.
BigInt random_bits(CounterStream& stream, std::uint64_t bits);

/// Uniform integer in [0, bound) by rejection on bit_length(bound - 1)-bit
/// blocks. Requires bound >= 1.
BigInt uniform_below(CounterStream& stream, const BigInt& bound);

/// Uniform integer in [lo, hi].
BigInt uniform_between(CounterStream& stream, const BigInt& lo, const BigInt& hi);

std::uint64_t uniform_below(CounterStream& stream, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(CounterStream& stream);

/// True with probability exactly p (a rational in [0, 1]).
bool bernoulli(CounterStream& stream, const Rational& p);

}  // namespace indist

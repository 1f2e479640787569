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

#include "indist/numeric.hpp"

namespace indist {

/// Integer that may be far too large to write out in binary.
///
/// The value is offset + sum_k coeff_k * term_k where each term is either
/// 2^E (exponent E held as a big integer) or a uniform random integer in
/// [0, 2^L) whose 64-bit words are read on demand from a CounterStream key.
/// Terms small enough to hold explicitly are folded into the offset, so a
/// SymbolicInt built from modest inputs is simply a big integer.
///
/// sign() is exact: it inspects the top bits of every term, widening the
/// window until the sum's sign is forced for every possible value of the
/// remaining low bits. Identical terms cancel structurally, so the
/// difference of two values built from shared terms reduces to the terms
/// they do not share.
class SymbolicInt {
 public:
  enum class TermKind { kPow2, kUniformBits };

  struct Term {
    TermKind kind;
    BigInt size;  // exponent for kPow2, bit length for kUniformBits
    std::uint64_t key = 0;
    BigInt coeff;
  };

  /// Terms with at most this many bits are stored explicitly.
  static constexpr std::uint64_t kExplicitBits = std::uint64_t{1} << 16;

  SymbolicInt() = default;
  SymbolicInt(BigInt value) : offset_(std::move(value)) {}  // NOLINT: implicit by design of arithmetic
  SymbolicInt(long value) : offset_(value) {}               // NOLINT

  static SymbolicInt pow2(const BigInt& exponent);
  /// Uniform integer in [0, 2^bit_length) drawn from stream key.
  static SymbolicInt uniform_bits(const BigInt& bit_length, std::uint64_t key);

  const BigInt& offset() const { return offset_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_explicit() const { return terms_.empty(); }
  /// The plain value, when it has no symbolic terms.
  std::optional<BigInt> to_bigint() const;

  /// -1, 0 or +1. Throws CapacityError if the sign cannot be forced within
  /// the precision budget (a probability-zero event for random terms).
  int sign() const;

  /// Upper bound on log2 of |value| + 1, as a (possibly huge) integer.
  BigInt bit_length_bound() const;

  SymbolicInt& operator+=(const SymbolicInt& other);
  SymbolicInt& operator-=(const SymbolicInt& other);
  SymbolicInt& operator*=(long factor);

  friend SymbolicInt operator+(SymbolicInt a, const SymbolicInt& b) { return a += b; }
  friend SymbolicInt operator-(SymbolicInt a, const SymbolicInt& b) { return a -= b; }
  friend SymbolicInt operator*(long k, SymbolicInt a) { return a *= k; }
  friend SymbolicInt operator-(SymbolicInt a) { return a *= -1; }

  friend bool operator<(const SymbolicInt& a, const SymbolicInt& b) { return (a - b).sign() < 0; }
  friend bool operator>(const SymbolicInt& a, const SymbolicInt& b) { return b < a; }
  friend bool operator<=(const SymbolicInt& a, const SymbolicInt& b) { return !(b < a); }
  friend bool operator>=(const SymbolicInt& a, const SymbolicInt& b) { return !(a < b); }
  friend bool operator==(const SymbolicInt& a, const SymbolicInt& b) { return (a - b).sign() == 0; }

 private:
  void add_term(Term term);
  void normalize();

  BigInt offset_;
  std::vector<Term> terms_;  // sorted by (kind, size, key), nonzero coefficients
};

/// floor(value / 2^shift) of the uniform term (key, bit_length): the bits
/// at positions >= shift.
BigInt uniform_bits_window(std::uint64_t key, const BigInt& bit_length, const BigInt& shift);

}  // namespace indist

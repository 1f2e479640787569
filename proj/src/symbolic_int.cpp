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

#include <algorithm>
#include <tuple>

#include "indist/errors.hpp"
#include "indist/rng.hpp"

namespace indist {
namespace {

constexpr std::uint64_t kInitialWindowBits = 128;
constexpr std::uint64_t kMaxWindowBits = std::uint64_t{1} << 22;

// Bit length of the largest value the term can take (coefficient excluded).
BigInt term_top(const SymbolicInt::Term& t) {
  return t.kind == SymbolicInt::TermKind::kPow2 ? BigInt(t.size + 1) : t.size;
}

bool fits_explicitly(const SymbolicInt::Term& t) {
  return term_top(t) <= SymbolicInt::kExplicitBits;
}

// floor(term / 2^shift) for shift >= 0.
BigInt term_window(const SymbolicInt::Term& t, const BigInt& shift) {
  if (t.kind == SymbolicInt::TermKind::kPow2) {
    if (t.size < shift) return 0;
    BigInt diff = t.size - shift;
    return pow2(diff.get_ui());
  }
  return uniform_bits_window(t.key, t.size, shift);
}

}  // namespace

BigInt uniform_bits_window(std::uint64_t key, const BigInt& bit_length, const BigInt& shift) {
  if (shift >= bit_length || bit_length <= 0) return 0;
  const BigInt lo_word = shift >> 6;
  const BigInt hi_word = BigInt(bit_length - 1) >> 6;
  const BigInt span = hi_word - lo_word + 1;
  if (span > (kMaxWindowBits / 64) + 2) throw CapacityError("symbolic window too wide");
  const std::size_t words = span.get_ui();
  std::vector<std::uint64_t> buf(words);
  if (mpz_fits_ulong_p(hi_word.get_mpz_t())) {
    const std::uint64_t base = lo_word.get_ui();
    for (std::size_t i = 0; i < words; ++i) buf[i] = CounterStream::word_at(key, base + i);
  } else {
    BigInt j = lo_word;
    for (std::size_t i = 0; i < words; ++i, ++j) buf[i] = CounterStream::word_at(key, j);
  }
  const BigInt top_bits_big = bit_length - (hi_word << 6);
  const unsigned long top_bits = top_bits_big.get_ui();
  if (top_bits < 64) buf.back() &= (std::uint64_t{1} << top_bits) - 1;
  BigInt value;
  mpz_import(value.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  const BigInt drop = shift - (lo_word << 6);
  value >>= drop.get_ui();
  return value;
}

SymbolicInt SymbolicInt::pow2(const BigInt& exponent) {
  if (exponent < 0) throw DomainError("negative power of two");
  SymbolicInt r;
  r.add_term({TermKind::kPow2, exponent, 0, BigInt(1)});
  r.normalize();
  return r;
}

SymbolicInt SymbolicInt::uniform_bits(const BigInt& bit_length, std::uint64_t key) {
  if (bit_length < 0) throw DomainError("negative bit length");
  SymbolicInt r;
  r.add_term({TermKind::kUniformBits, bit_length, key, BigInt(1)});
  r.normalize();
  return r;
}

std::optional<BigInt> SymbolicInt::to_bigint() const {
  if (!terms_.empty()) return std::nullopt;
  return offset_;
}

void SymbolicInt::add_term(Term term) { terms_.push_back(std::move(term)); }

void SymbolicInt::normalize() {
  std::vector<Term> kept;
  kept.reserve(terms_.size());
  for (auto& t : terms_) {
    if (fits_explicitly(t)) {
      offset_ += t.coeff * term_window(t, 0);
    } else {
      kept.push_back(std::move(t));
    }
  }
  auto key_of = [](const Term& t) { return std::tie(t.kind, t.size, t.key); };
  std::sort(kept.begin(), kept.end(),
            [&](const Term& a, const Term& b) { return key_of(a) < key_of(b); });
  terms_.clear();
  for (auto& t : kept) {
    if (!terms_.empty() && key_of(terms_.back()) == key_of(t)) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

SymbolicInt& SymbolicInt::operator+=(const SymbolicInt& other) {
  offset_ += other.offset_;
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

SymbolicInt& SymbolicInt::operator-=(const SymbolicInt& other) {
  offset_ -= other.offset_;
  for (Term t : other.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  normalize();
  return *this;
}

SymbolicInt& SymbolicInt::operator*=(long factor) {
  offset_ *= factor;
  for (auto& t : terms_) t.coeff *= factor;
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
  return *this;
}

BigInt SymbolicInt::bit_length_bound() const {
  if (terms_.empty()) return bit_length(offset_);
  // |value| < (sum |coeff| + 1) * 2^top with top the widest part.
  BigInt top = bit_length(offset_);
  BigInt weight = sgn(offset_) != 0 ? 1 : 0;
  for (const auto& t : terms_) {
    top = std::max(top, term_top(t));
    weight += abs(t.coeff);
  }
  return top + static_cast<long>(bit_length(weight));
}

int SymbolicInt::sign() const {
  if (terms_.empty()) return sgn(offset_);
  BigInt top = 0;
  BigInt positive = 0;
  BigInt negative = 0;
  for (const auto& t : terms_) {
    top = std::max(top, term_top(t));
    (t.coeff > 0 ? positive : negative) += abs(t.coeff);
  }
  // Terms are nonnegative, so a one-signed sum with a same-signed nonzero
  // offset is decided without reading any bits.
  if (negative == 0 && offset_ > 0) return 1;
  if (positive == 0 && offset_ < 0) return -1;
  for (std::uint64_t window = kInitialWindowBits;; window *= 2) {
    if (window > kMaxWindowBits) {
      throw CapacityError("symbolic comparison undecided within " +
                          std::to_string(kMaxWindowBits) + " bits of precision");
    }
    BigInt shift = top - static_cast<unsigned long>(window);
    if (shift < 0) shift = 0;
    // value = 2^shift * high + offset + sum coeff * low_k, low_k in [0, 2^shift)
    BigInt high = 0;
    for (const auto& t : terms_) high += t.coeff * term_window(t, shift);
    if (shift == 0) return sgn(BigInt(high + offset_));
    if (shift <= kMaxWindowBits) {
      const BigInt unit = indist::pow2(shift.get_ui());
      const BigInt lowest = high * unit + offset_ - negative * (unit - 1);
      const BigInt highest = high * unit + offset_ + positive * (unit - 1);
      if (lowest > 0) return 1;
      if (highest < 0) return -1;
      if (lowest == 0 && highest == 0) return 0;
      continue;
    }
    if (bit_length(offset_) >= shift) throw CapacityError("symbolic offset too large");
    // |offset| < 2^shift, so value lies strictly between
    // 2^shift (high - negative - 1) and 2^shift (high + positive + 1).
    if (high >= negative + 1) return 1;
    if (high <= -(positive + 1)) return -1;
  }
}

}  // namespace indist

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

#include "indist/rng.hpp"

#include <vector>

#include "indist/errors.hpp"

namespace indist {

std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p));
  return h;
}

std::uint64_t CounterStream::word_at(std::uint64_t key, std::uint64_t index) {
  return mix64(mix64(key ^ 0xa0761d6478bd642fULL) ^ index);
}

std::uint64_t CounterStream::word_at(std::uint64_t key, const BigInt& index) {
  if (mpz_fits_ulong_p(index.get_mpz_t())) return word_at(key, mpz_get_ui(index.get_mpz_t()));
  // Export as little-endian 64-bit limbs so the hash is independent of GMP's
  // native limb size.
  std::size_t count = 0;
  std::vector<std::uint64_t> limbs((mpz_sizeinbase(index.get_mpz_t(), 2) + 63) / 64);
  mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0, index.get_mpz_t());
  std::uint64_t h = mix64(key ^ 0xa0761d6478bd642fULL);
  for (std::size_t i = 0; i < count; ++i) h = mix64(h ^ limbs[i]) + 0xe7037ed1a0b428dbULL;
  return mix64(h ^ count);
}

BigInt random_bits(CounterStream& stream, std::uint64_t bits) {
  BigInt r;
  if (bits == 0) return r;
  const std::uint64_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = stream.next();
  if (bits % 64) buf.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return r;
}

BigInt uniform_below(CounterStream& stream, const BigInt& bound) {
  if (bound < 1) throw DomainError("uniform_below needs a positive bound");
  if (bound == 1) return 0;
  const std::uint64_t bits = bit_length(BigInt(bound - 1));
  for (;;) {
    BigInt r = random_bits(stream, bits);
    if (r < bound) return r;
  }
}

BigInt uniform_between(CounterStream& stream, const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw DomainError("uniform_between: empty range");
  return lo + uniform_below(stream, BigInt(hi - lo + 1));
}

std::uint64_t uniform_below(CounterStream& stream, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs a positive bound");
  // rejection on the full word
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
  for (;;) {
    std::uint64_t w = stream.next();
    if (w < limit) return w % bound;
  }
}

double uniform_unit(CounterStream& stream) {
  return static_cast<double>(stream.next() >> 11) * 0x1.0p-53;
}

bool bernoulli(CounterStream& stream, const Rational& p) {
  if (sgn(p) <= 0) return false;
  if (p >= 1) return true;
  return uniform_below(stream, p.get_den()) < p.get_num();
}

}  // namespace indist

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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace indist {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "±digits", "digits/digits" or a terminating decimal such as
/// "0.25" into an exact rational in lowest terms. Binary floating point is
/// never involved.
Rational parse_rational(std::string_view text);

/// Parses a (possibly signed) decimal integer.
BigInt parse_bigint(std::string_view text);

/// Builds num/den in canonical form. Throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);

/// Always "p/q", including integers ("0/1", "3/1").
std::string to_string(const Rational& value);

/// Number of bits in |value|; zero for zero.
std::uint64_t bit_length(const BigInt& value);

BigInt pow2(std::uint64_t exponent);

/// exp2^height(top): top with 2^ applied height times. Throws CapacityError
/// when the result would exceed max_bits bits.
BigInt exp2_tower(int height, const BigInt& top, std::uint64_t max_bits = std::uint64_t{1} << 24);

/// ceil(1/eps) for eps > 0.
BigInt ceil_inverse(const Rational& eps);

/// Largest power of two 2^-t with 2^-t <= eps, for eps in (0, 1].
/// Returns t.
std::uint64_t dyadic_floor_exponent(const Rational& eps);

/// max(0, x)
inline Rational positive_part(const Rational& x) { return sgn(x) > 0 ? x : Rational(0); }

/// Rational with the exact value of a finite double.
Rational rational_from_double(double value);

}  // namespace indist

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

#include <cctype>
#include <cmath>

#include "indist/errors.hpp"

namespace indist {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw ParseError("malformed integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(body), 10);
  return negative ? BigInt(-value) : value;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = make_rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) digits = "0";
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = make_rational(BigInt(digits, 10), den);
  } else {
    if (!all_digits(body)) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    value = Rational(BigInt(std::string(body), 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::uint64_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt pow2(std::uint64_t exponent) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), exponent);
  return r;
}

BigInt exp2_tower(int height, const BigInt& top, std::uint64_t max_bits) {
  if (height < 0) throw DomainError("negative tower height");
  BigInt value = top;
  for (int k = 0; k < height; ++k) {
    if (value < 0) throw DomainError("negative exponent in a tower");
    if (value >= max_bits) {
      throw CapacityError("tower of height " + std::to_string(height) + " over " +
                          to_string(top) + " exceeds " + std::to_string(max_bits) + " bits");
    }
    value = pow2(value.get_ui());
  }
  return value;
}

BigInt ceil_inverse(const Rational& eps) {
  if (sgn(eps) <= 0) throw DomainError("ceil(1/eps) needs eps > 0");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), eps.get_den().get_mpz_t(), eps.get_num().get_mpz_t());
  return q;
}

std::uint64_t dyadic_floor_exponent(const Rational& eps) {
  if (sgn(eps) <= 0 || eps > 1) throw DomainError("eps must lie in (0, 1]");
  // smallest t with num * 2^t >= den
  std::uint64_t t = 0;
  BigInt lhs = eps.get_num();
  while (lhs < eps.get_den()) {
    lhs <<= 1;
    ++t;
  }
  return t;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  Rational r(value);
  r.canonicalize();
  return r;
}

}  // namespace indist

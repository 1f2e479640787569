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

#include "indist/construction.hpp"

#include <string>

#include "indist/errors.hpp"
#include "indist/rng.hpp"
#include "indist/subsets.hpp"

namespace indist {
namespace {

// Role tags mixed into stream keys so that every random quantity of a draw
// has its own stream.
enum : std::uint64_t {
  kRoleN2 = 0x6e32,
  kRoleBaseX1 = 0x7831,
  kRoleBaseK = 0x6b,
  kRoleY1 = 0x7931,
  kRoleD = 0x64,
  kRoleLevel = 0x6c76,
};

// Level values enter exponents; those must be small to enumerate.
constexpr unsigned long kMaxEnumeratedExponent = 40;

BigInt c_of(const DyadicEps& eps) { return pow2(eps.t); }

void require_cap(const BigInt& predicted, std::uint64_t cap, const std::string& what) {
  if (predicted > cap) {
    throw CapacityError(what + ": predicted " + to_string(predicted) +
                        " atoms exceeds the enumeration cap of " + std::to_string(cap));
  }
}

BigInt step_width(const BigInt& x, long d_offset) {
  BigInt e = x + d_offset;
  if (e < 0) throw DomainError("negative exponent in a step range");
  if (e > kMaxEnumeratedExponent) {
    throw CapacityError("step range 2^" + to_string(e) + " is too large to enumerate");
  }
  return pow2(e.get_ui());
}

}  // namespace

DyadicEps normalize_dyadic(const Rational& eps) {
  if (sgn(eps) <= 0 || eps > 1) {
    throw DomainError("eps must lie in (0, 1], got " + to_string(eps));
  }
  DyadicEps d;
  d.requested = eps;
  d.t = dyadic_floor_exponent(eps);
  d.value = make_rational(1, pow2(d.t));
  d.rounded = d.value != eps;
  return d;
}

SymbolicInt ConstructionCertificate::bound() const {
  SymbolicInt tower;
  if (bound_tower_height == 0) {
    tower = bound_tower_top;
  } else {
    // 2^E with E = exp2^(h-1)(top) held explicitly.
    tower = SymbolicInt::pow2(exp2_tower(bound_tower_height - 1, bound_tower_top));
  }
  return tower - SymbolicInt(bound_offset);
}

ConstructionCertificate certificate(int n, const Rational& eps) {
  if (n < 3) throw DomainError("certificate needs n >= 3; the n = 2 chain has no certificate");
  ConstructionCertificate cert;
  cert.n = n;
  cert.eps = normalize_dyadic(eps);
  const BigInt c = c_of(cert.eps);
  const long t = static_cast<long>(cert.eps.t);
  cert.bound_tower_height = n - 2;
  cert.bound_tower_top = 4 * c + 6;
  cert.bound_offset = BigInt(4L * n + 2 + 2 * t);
  cert.spacing_threshold = Rational(n + 4 + t);
  cert.spacing_prob_bound = cert.eps.value / Rational(pow2(static_cast<std::uint64_t>(n) + 3));
  cert.neighbor_bound =
      cert.eps.value * (1 - make_rational(1, pow2(static_cast<std::uint64_t>(n))));
  return cert;
}

ExactDist build_n2(const Rational& eps) {
  if (sgn(eps) <= 0 || eps > 1) throw DomainError("eps must lie in (0, 1]");
  const BigInt c = ceil_inverse(eps);
  require_cap(c, 100'000'000, "n = 2 chain");
  const Rational p = make_rational(1, c);
  std::vector<std::pair<Tuple, Rational>> atoms;
  for (BigInt x = 1; x <= c; ++x) atoms.push_back({{x, x + 1}, p});
  return ExactDist(ValueKind::kTuple, 2, std::move(atoms));
}

BaseParams faithful_base(const DyadicEps& eps) {
  const BigInt c = c_of(eps);
  if (c > 1'000'000) throw CapacityError("eps too small for the base construction");
  const long cl = c.get_si();
  if (4 * cl + 4 > static_cast<long>(std::uint64_t{1} << 20)) {
    throw CapacityError("base range too large");
  }
  return {pow2(4 * cl + 4), cl + 3, 4 * cl + 3};
}

StepParams faithful_step(int n, const DyadicEps& eps) {
  if (n < 3) throw DomainError("the induction step starts from n = 3");
  const BigInt c = c_of(eps);
  const long t = static_cast<long>(eps.t);
  StepParams step;
  step.d_offset = 4L * n + 2 * t;
  // y1_max = exp2^(n-1)(4c + 6) / 2 - 4n - 6 - 2t = 2^L - (4n + 6 + 2t)
  const BigInt length = exp2_tower(n - 2, BigInt(4 * c + 6)) - 1;
  step.y1_max = exp2_tower(1, length) - (4L * n + 6 + 2 * t);
  if (step.y1_max < 1) throw DomainError("Y1 range exp2^(n-1)(4c+6)/2 - 4n - 6 + 2 log eps is empty");
  return step;
}

ExactDist build_n3_exact(const BaseParams& base, std::uint64_t cap) {
  if (base.x1_max < 1 || base.k_lo < 0 || base.k_hi < base.k_lo) {
    throw DomainError("empty base range");
  }
  if (base.k_hi + 1 > static_cast<long>(kMaxEnumeratedExponent)) {
    throw CapacityError("base exponent range too large to enumerate");
  }
  const BigInt k_count = BigInt(base.k_hi - base.k_lo + 1);
  require_cap(BigInt(base.x1_max * k_count), cap, "three-point base");
  const Rational p = make_rational(1, base.x1_max * k_count);
  std::vector<std::pair<Tuple, Rational>> atoms;
  atoms.reserve(BigInt(base.x1_max * k_count).get_ui());
  for (BigInt x1 = 1; x1 <= base.x1_max; ++x1) {
    for (long k = base.k_lo; k <= base.k_hi; ++k) {
      const BigInt gap = pow2(static_cast<std::uint64_t>(k));
      atoms.push_back({{x1, x1 + gap, x1 + 2 * gap}, p});
    }
  }
  return ExactDist(ValueKind::kTuple, 3, std::move(atoms));
}

ExactDist build_n3_exact(const Rational& eps, std::uint64_t cap) {
  const DyadicEps dy = normalize_dyadic(eps);
  const BigInt c = c_of(dy);
  if (c > 64) throw CapacityError("base joint at eps = " + to_string(eps) + " is far beyond the cap");
  const long cl = c.get_si();
  const BigInt predicted = pow2(4 * cl + 4) * (3 * cl + 1);
  require_cap(predicted, cap, "three-point base");
  return build_n3_exact(faithful_base(dy), cap);
}

BigInt predicted_step_atoms(const ExactDist& x, const StepParams& step) {
  BigInt total = 0;
  for (const auto& [value, p] : x) {
    BigInt exponent = 0;
    for (const auto& xi : value) exponent += xi + step.d_offset;
    if (exponent > 4096) return pow2(4096) * step.y1_max;  // a floor, enough to refuse
    total += step.y1_max * pow2(exponent.get_ui());
  }
  return total;
}

ExactDist exact_step(const ExactDist& x, const StepParams& step, std::uint64_t cap) {
  if (x.kind() != ValueKind::kTuple) throw KindError("exact_step needs a tuple distribution");
  if (step.y1_max < 1) throw DomainError("empty Y1 range");
  require_cap(predicted_step_atoms(x, step), cap, "induction step");
  const std::size_t n = x.arity();
  std::vector<std::pair<Tuple, Rational>> atoms;
  std::vector<std::uint64_t> widths(n);
  std::vector<std::uint64_t> d(n);
  const std::uint64_t y1_max = step.y1_max.get_ui();
  for (const auto& [value, p] : x) {
    BigInt cells = step.y1_max;
    for (std::size_t i = 0; i < n; ++i) {
      widths[i] = step_width(value[i], step.d_offset).get_ui();
      cells *= widths[i];
    }
    const Rational mass = p / Rational(cells);
    for (std::uint64_t y1 = 1; y1 <= y1_max; ++y1) {
      std::fill(d.begin(), d.end(), 1);
      for (;;) {
        Tuple y(n + 1);
        y[0] = BigInt(static_cast<unsigned long>(y1));
        for (std::size_t i = 0; i < n; ++i) y[i + 1] = y[i] + static_cast<unsigned long>(d[i]);
        atoms.emplace_back(std::move(y), mass);
        std::size_t k = 0;
        while (k < n && d[k] == widths[k]) d[k++] = 1;
        if (k == n) break;
        ++d[k];
      }
    }
  }
  return ExactDist(ValueKind::kTuple, n + 1, std::move(atoms));
}

ExactDist exact_joint(const ConstructionParams& params) {
  if (params.n < 2) throw DomainError("n must be at least 2");
  if (params.n == 2) return build_n2(params.eps);
  if (params.toy) {
    ExactDist level = build_n3_exact(params.toy->base, params.enumeration_cap);
    for (int k = 3; k < params.n; ++k) {
      level = exact_step(level, params.toy->step, params.enumeration_cap);
    }
    return level;
  }
  if (params.n == 3) return build_n3_exact(params.eps, params.enumeration_cap);
  // Every faithful level above three has at least 2^(2^10 - 1) atoms.
  const DyadicEps dy = normalize_dyadic(params.eps);
  const BigInt exponent = exp2_tower(1, BigInt(4 * c_of(dy) + 6), 1 << 20) - 1;
  throw CapacityError("exact level-" + std::to_string(params.n) + " joint has more than 2^" +
                      to_string(exponent) + " atoms (cap " +
                      std::to_string(params.enumeration_cap) + ")");
}

StepBudget induction_budget(const ExactDist& x, const StepParams& step) {
  if (x.kind() != ValueKind::kTuple) throw KindError("induction_budget needs a tuple distribution");
  const std::size_t n = x.arity();
  StepBudget out;
  out.a.assign(n + 1, Rational(0));
  out.b.assign(n, Rational(0));
  out.budget.assign(n + 1, Rational(0));
  for (const auto& [value, p] : x) {
    for (std::size_t j = 1; j < n; ++j) {
      const BigInt mj = step_width(value[j - 1], step.d_offset);
      const BigInt mk = step_width(value[j], step.d_offset);
      out.a[j] += p * uniform_shift_tvd_closed_form(mk, mj);
    }
  }
  for (std::size_t j = 1; j < n; ++j) out.b[j] = tvd(drop_index(x, j), drop_index(x, j + 1));
  const ExactDist x1 = project(x, {1});
  const ExactDist y1 = uniform_int(1, step.y1_max);
  out.c = 0;
  for (const auto& [value, p] : x1) {
    const BigInt m = step_width(value[0], step.d_offset);
    const Rational shift = step.y1_max > m
                               ? uniform_shift_tvd_closed_form(step.y1_max, m)
                               : tvd(y1, convolve(y1, uniform_int(1, m)));
    out.c += p * shift;
  }
  out.budget[1] = out.c + out.a[1];
  for (std::size_t i = 2; i <= n; ++i) out.budget[i] = out.a[i - 1] + out.b[i - 1] + out.a[i];
  return out;
}

StepSample recursive_step_sample(const SymbolicTuple& x_prev, int n, const Rational& eps,
                                 std::uint64_t key) {
  if (n < 3 || x_prev.size() != static_cast<std::size_t>(n)) {
    throw DomainError("recursive step needs a level-n tuple with n >= 3");
  }
  const DyadicEps dy = normalize_dyadic(eps);
  const long t = static_cast<long>(dy.t);
  const long d_offset = 4L * n + 2 * t;
  const BigInt length = exp2_tower(n - 2, BigInt(4 * c_of(dy) + 6)) - 1;
  const BigInt removed = BigInt(4L * n + 6 + 2 * t);
  if (length < 64 && pow2(length.get_ui()) <= removed) {
    throw DomainError("Y1 range exp2^(n-1)(4c+6)/2 - 4n - 6 + 2 log eps is empty");
  }
  std::vector<BigInt> xs;
  for (const auto& v : x_prev) {
    auto plain = v.to_bigint();
    if (!plain) {
      throw CapacityError("level-" + std::to_string(n + 1) +
                          " sampling needs explicit level-" + std::to_string(n) + " values");
    }
    xs.push_back(std::move(*plain));
  }
  StepSample out;
  out.trace.x_prev = x_prev;
  // Y1 uniform on [1..2^length - removed]: reject U >= 2^length - removed.
  const SymbolicInt limit = SymbolicInt::pow2(length) - SymbolicInt(removed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    SymbolicInt u = SymbolicInt::uniform_bits(length, derive_key({key, kRoleY1, attempt}));
    if ((u - limit).sign() < 0) {
      out.trace.y1 = u + SymbolicInt(1L);
      break;
    }
  }
  out.tuple.push_back(out.trace.y1);
  for (int i = 0; i < n; ++i) {
    SymbolicInt di = SymbolicInt::uniform_bits(BigInt(xs[i] + d_offset),
                                               derive_key({key, kRoleD, std::uint64_t(i)})) +
                     SymbolicInt(1L);
    out.tuple.push_back(out.tuple.back() + di);
    out.trace.d_values.push_back(std::move(di));
  }
  return out;
}

SymbolicTuple sample_tuple(const ConstructionParams& params, std::uint64_t index) {
  if (params.n < 2) throw DomainError("n must be at least 2");
  const std::uint64_t key = derive_key({params.seed, index});
  if (params.n == 2) {
    if (sgn(params.eps) <= 0 || params.eps > 1) throw DomainError("eps must lie in (0, 1]");
    CounterStream s(derive_key({key, kRoleN2}));
    const BigInt x1 = uniform_between(s, 1, ceil_inverse(params.eps));
    return {SymbolicInt(x1), SymbolicInt(BigInt(x1 + 1))};
  }
  const DyadicEps dy = normalize_dyadic(params.eps);
  const BaseParams base = faithful_base(dy);
  CounterStream sx(derive_key({key, kRoleBaseX1}));
  CounterStream sk(derive_key({key, kRoleBaseK}));
  const BigInt x1 = uniform_between(sx, 1, base.x1_max);
  const long k = uniform_between(sk, base.k_lo, base.k_hi).get_si();
  const BigInt gap = pow2(static_cast<std::uint64_t>(k));
  SymbolicTuple x = {SymbolicInt(x1), SymbolicInt(BigInt(x1 + gap)),
                     SymbolicInt(BigInt(x1 + 2 * gap))};
  for (int level = 3; level < params.n; ++level) {
    x = recursive_step_sample(x, level, params.eps,
                              derive_key({key, kRoleLevel, std::uint64_t(level)}))
            .tuple;
  }
  return x;
}

bool strictly_increasing(const SymbolicTuple& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if ((x[i + 1] - x[i]).sign() <= 0) return false;
  }
  return true;
}

std::size_t spacing_failures(const SymbolicTuple& x, const Rational& threshold) {
  // gap < threshold  <=>  gap < ceil(threshold) for integer gaps
  BigInt ceil_thr;
  mpz_cdiv_q(ceil_thr.get_mpz_t(), threshold.get_num().get_mpz_t(),
             threshold.get_den().get_mpz_t());
  std::size_t failures = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if ((x[i + 1] - x[i] - SymbolicInt(ceil_thr)).sign() < 0) ++failures;
  }
  return failures;
}

}  // namespace indist

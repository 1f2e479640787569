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

#include "indist/audit.hpp"

#include <mpfr.h>

#include <algorithm>

#include "indist/errors.hpp"

namespace indist {
namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 16;
constexpr std::uint64_t kExactPowerBits = std::uint64_t{1} << 22;

bool is_power_of_two(const BigInt& m) {
  return sgn(m) > 0 && mpz_scan1(m.get_mpz_t(), 0) == bit_length(m) - 1;
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// sign(log2(m) - exp2^(height-1)(top)) by interval arithmetic, where the
// two sides are known to differ.
int compare_log_with_tower(const BigInt& m, int height, const Rational& top) {
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Mpfr log_lo(prec), log_hi(prec), t_lo(prec), t_hi(prec);
    mpfr_set_z(log_lo.get(), m.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(log_hi.get(), m.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(log_lo.get(), log_lo.get(), MPFR_RNDD);
    mpfr_log2(log_hi.get(), log_hi.get(), MPFR_RNDU);
    mpfr_set_q(t_lo.get(), top.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(t_hi.get(), top.get_mpq_t(), MPFR_RNDU);
    for (int i = 1; i < height; ++i) {
      mpfr_exp2(t_lo.get(), t_lo.get(), MPFR_RNDD);
      mpfr_exp2(t_hi.get(), t_hi.get(), MPFR_RNDU);
    }
    if (mpfr_less_p(log_hi.get(), t_lo.get())) return -1;
    if (mpfr_greater_p(log_lo.get(), t_hi.get())) return 1;
  }
  throw CapacityError("tower comparison exceeds the precision budget");
}

}  // namespace

TowerBound tower_bound(int n, const Rational& eps) {
  if (n < 2) throw DomainError("tower bound needs n >= 2");
  if (sgn(eps) <= 0) throw DomainError("tower bound needs eps > 0");
  TowerBound b;
  b.n = n;
  if (n <= 3) {
    b.height = n - 2;
    b.top = 1 / eps;
    return b;
  }
  BigInt scale = 1;
  for (int i = 0; i < n - 3; ++i) scale *= 18;
  for (int i = 2; i <= n - 2; ++i) scale *= i;
  b.height = n - 2;
  b.top = make_rational(1, 1) / (scale * eps);
  b.top.canonicalize();
  b.applicable = eps * scale < 1;
  return b;
}

int compare_with_tower(const BigInt& m, int height, const Rational& top) {
  if (sgn(m) < 0 || sgn(top) < 0 || height < 0) {
    throw DomainError("tower comparison needs m >= 0, top >= 0 and height >= 0");
  }
  if (height == 0) return cmp(Rational(m), top) > 0 ? 1 : (cmp(Rational(m), top) < 0 ? -1 : 0);
  if (sgn(m) == 0) return -1;
  const std::uint64_t k = bit_length(m);
  // 2^(k-1) <= m < 2^k, so compare k and k-1 with the exponent T one level
  // down.
  if (compare_with_tower(BigInt(static_cast<unsigned long>(k)), height - 1, top) <= 0) return -1;
  const int below = compare_with_tower(BigInt(static_cast<unsigned long>(k - 1)), height - 1, top);
  if (below > 0) return 1;
  if (below == 0) return is_power_of_two(m) ? 0 : 1;
  // k - 1 < T < k, so T is not an integer.
  if (is_power_of_two(m)) return -1;
  if (height == 1) {
    const BigInt& a = top.get_num();
    const BigInt& b = top.get_den();
    if (b.fits_ulong_p() && a.fits_ulong_p() && k * b.get_ui() <= kExactPowerBits) {
      BigInt lhs;
      mpz_pow_ui(lhs.get_mpz_t(), m.get_mpz_t(), b.get_ui());
      const int c = cmp(lhs, pow2(a.get_ui()));
      return c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
  }
  return compare_log_with_tower(m, height, top);
}

const char* to_string(GapCase c) {
  switch (c) {
    case GapCase::kIncreasing:
      return "increasing";
    case GapCase::kDecreasing:
      return "decreasing";
    case GapCase::kNeither:
      return "neither";
  }
  return "neither";
}

GapCase classify_gap_case(const Rational& x1, const Rational& x2, const Rational& x3,
                          const Rational& x4) {
  if (!(x1 < x2 && x2 < x3 && x3 < x4)) throw DomainError("gap case needs x1 < x2 < x3 < x4");
  return classify_gap_case<Rational>(x1, x2, x3, x4);
}

GapCase classify_gap_case(const SymbolicInt& x1, const SymbolicInt& x2, const SymbolicInt& x3,
                          const SymbolicInt& x4) {
  if (!(x1 < x2 && x2 < x3 && x3 < x4)) throw DomainError("gap case needs x1 < x2 < x3 < x4");
  return classify_gap_case<SymbolicInt>(x1, x2, x3, x4);
}

BiasedCaseReport biased_case_probability(const ExactDist& d, const SubsetOptions& options) {
  if (d.kind() != ValueKind::kTuple || d.arity() != 4) {
    throw DomainError("case probability needs a distribution over 4-tuples");
  }
  BiasedCaseReport r;
  r.probability = 0;
  for (const auto& [x, p] : d) {
    const GapCase c =
        classify_gap_case(Rational(x[0]), Rational(x[1]), Rational(x[2]), Rational(x[3]));
    if (c != GapCase::kNeither) r.probability += p;
  }
  r.eps_star = all_nm1_max_tvd(d, options).tvd;
  r.required = 1 - 9 * r.eps_star;
  r.vacuous = sgn(r.required) <= 0;
  r.consistent = r.probability >= r.required;
  return r;
}

const char* to_string(MonotonicityVerdict::Status s) {
  switch (s) {
    case MonotonicityVerdict::Status::kPass:
      return "pass";
    case MonotonicityVerdict::Status::kHypothesisFailed:
      return "hypothesis-failed";
    case MonotonicityVerdict::Status::kCounterexample:
      return "counterexample";
  }
  return "pass";
}

MonotonicityVerdict check_gap_monotonicity(const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  if (n < 4) throw DomainError("gap monotonicity needs at least four values");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x[i - 1] < x[i])) throw DomainError("gap monotonicity needs strictly increasing values");
  }
  using Status = MonotonicityVerdict::Status;
  MonotonicityVerdict v;
  for (std::size_t w = 0; w + 3 < n; ++w) {
    const GapCase c = classify_gap_case<Rational>(x[w], x[w + 1], x[w + 2], x[w + 3]);
    if (c == GapCase::kNeither) {
      v.status = Status::kHypothesisFailed;
      v.index = w + 1;
      v.detail = "window " + std::to_string(w + 1) + " is neither";
      return v;
    }
    if (w == 0) {
      v.gap_case = c;
    } else if (c != v.gap_case) {
      v.status = Status::kCounterexample;
      v.index = w + 1;
      v.detail = "window " + std::to_string(w + 1) + " is " + to_string(c);
      return v;
    }
  }
  // 0-based i runs over the 1-based positions 2..n-1.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool ok = v.gap_case == GapCase::kIncreasing ? x[i + 1] - x[i] >= x[i] - x[0]
                                                        : x[i] - x[i - 1] >= x[n - 1] - x[i];
    if (!ok) {
      v.status = Status::kCounterexample;
      v.index = i + 1;
      v.detail = "gap inequality fails at i = " + std::to_string(i + 1);
      return v;
    }
  }
  return v;
}

const char* to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::kConsistent:
      return "consistent";
    case AuditVerdict::kViolation:
      return "violation";
    case AuditVerdict::kNotApplicable:
      return "not-applicable";
  }
  return "consistent";
}

namespace {

void decide(AuditReport& r) {
  if (sgn(r.eps_star) == 0) {
    r.bound = TowerBound{};
    r.bound.n = r.n;
    r.bound.height = std::max(r.n - 2, 0);
    r.bound.infinite = true;
    r.applicable = true;
    r.verdict = AuditVerdict::kViolation;
    r.note = "eps_star = 0 admits no finite support";
    return;
  }
  r.bound = tower_bound(r.n, r.eps_star);
  r.applicable = r.bound.applicable;
  if (!r.applicable) {
    r.verdict = AuditVerdict::kNotApplicable;
    r.note = "eps_star is outside the range of the tower bound";
    return;
  }
  const int c = compare_with_tower(r.max_value, r.bound.height, r.bound.top);
  r.verdict = c < 0 ? AuditVerdict::kViolation : AuditVerdict::kConsistent;
}

}  // namespace

AuditReport audit_distribution(const ExactDist& d, const SubsetOptions& options) {
  if (d.kind() != ValueKind::kTuple || d.arity() < 2) {
    throw DomainError("audit needs a distribution over tuples of arity >= 2");
  }
  AuditReport r;
  r.n = static_cast<int>(d.arity());
  r.max_value = d.max_value();
  bool monotone = true;
  for (const auto& [x, p] : d) {
    if (sgn(x[0]) < 0) monotone = false;
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (!(x[i - 1] < x[i])) monotone = false;
    }
  }
  const SubsetWitness w = all_nm1_max_tvd(d, options);
  r.eps_star = w.tvd;
  r.witness_first = w.first;
  r.witness_second = w.second;
  if (!monotone) {
    r.applicable = false;
    r.verdict = AuditVerdict::kNotApplicable;
    r.note = "support is not strictly increasing and non-negative";
    if (sgn(r.eps_star) > 0) r.bound = tower_bound(r.n, r.eps_star);
    return r;
  }
  decide(r);
  if (r.n == 4) r.case_probability = biased_case_probability(d, options);
  return r;
}

AuditReport audit_injected(const Rational& eps_star, int n, const BigInt& max_value) {
  if (n < 2) throw DomainError("audit needs n >= 2");
  if (sgn(eps_star) < 0 || eps_star > 1) throw DomainError("eps_star must lie in [0, 1]");
  if (sgn(max_value) < 0) throw DomainError("max value must be non-negative");
  AuditReport r;
  r.n = n;
  r.eps_star = eps_star;
  r.max_value = max_value;
  decide(r);
  return r;
}

}  // namespace indist

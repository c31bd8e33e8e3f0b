// Copyright 2026 The Arith Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arith/indicator.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "arith/compensated.h"
#include "arith/errors.h"
#include "arith/integrals.h"
#include "arith/kernels.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

double Parity(std::int64_t n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void RequireArgs(std::int64_t k, double t) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (!(t > 0.0)) throw DomainError("t must be positive");
}

// Integer power with saturation at `cap` + 1.
std::int64_t PowCapped(std::int64_t base, std::int64_t exp, std::int64_t cap) {
  __int128 acc = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(acc);
}

TruncationPolicy Rescaled(const TruncationPolicy& policy, double tol) {
  TruncationPolicy p = policy;
  p.abs_tol = std::max(tol, 1e-300);
  return p;
}

}  // namespace

TruncationPolicy default_indicator_policy(double tol) {
  TruncationPolicy p = TruncationPolicy::Polynomial(2.0, tol);
  p.quiet_run = 8;
  return p;
}

std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto m = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (static_cast<__int128>(m) * m > n) --m;
  while (static_cast<__int128>(m + 1) * (m + 1) <= n) ++m;
  return static_cast<__int128>(m) * m == n ? m : -1;
}

int q_bruteforce(std::int64_t k, std::int64_t s, std::int64_t n) {
  if (k < 1 || s < 1) throw DomainError("k and s must be >= 1");
  if (n <= 0 || n % k != 0) return 0;
  const std::int64_t target = n / k;
  std::int64_t lo = 1;
  std::int64_t hi = target;
  while (lo <= hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const std::int64_t p = PowCapped(mid, 2 * s, target);
    if (p == target) return 1;
    if (p < target) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return 0;
}

CoefficientTable::CoefficientTable(std::int64_t k, double t)
    : k_(k), t_(t), coth_(0.0) {
  RequireArgs(k, t);
  coth_ = 1.0 / std::tanh(kPi * t);
}

double CoefficientTable::mu(std::int64_t n) const {
  const double kd = static_cast<double>(k_);
  const double c = coth_;
  const double pi2 = kPi * kPi;
  if (n == 0) {
    return pi2 * pi2 / (90.0 * kd * kd) + pi2 / 12.0 - pi2 / 4.0 +
           pi2 * c * c / 2.0 - pi2 * c / 4.0;
  }
  const double nd = static_cast<double>(n);
  double v = 1.0 / (2.0 * nd * nd) - pi2 / (6.0 * nd * kd);
  if (n % 2 != 0) v += 2.0 * (pi2 * c / (6.0 * nd * kd) - c / (2.0 * nd * nd));
  return v;
}

double CoefficientTable::U(std::int64_t r, bool* dropped) const {
  const double kd = static_cast<double>(k_);
  const double c = coth_;
  const double t = t_;
  const double pi2 = kPi * kPi;
  if (dropped != nullptr) *dropped = false;
  if (r == 0) return mu(0) + pi2 * c / (48.0 * t * t);
  const double rd = static_cast<double>(r);
  double v = pi2 / (3.0 * rd * kd * std::expm1(2.0 * kPi * t)) +
             (1.0 - c) / (2.0 * rd * rd);
  const double x = kPi * rd / (2.0 * t);
  if (std::fabs(x) <= kOverflowGuard) {
    const double sh = std::sinh(x);
    v += -Parity(r) * kPi * pi2 * c / (12.0 * kd * t * sh) +
         Parity(r) * pi2 * c * std::cosh(x) / (8.0 * t * t * sh * sh);
  } else if (dropped != nullptr) {
    *dropped = true;
  }
  return v;
}

Evaluation CoefficientTable::shifted_rational(std::int64_t r, double tol) const {
  const double kd = static_cast<double>(k_);
  const double c = coth_;
  const double rd = static_cast<double>(r);
  const double c1 = kPi * kPi * rd * c / (3.0 * kd);
  const double c2 = 2.0 * kPi * t_ * c;
  const double c3 = c;
  const ExponentialSeries s =
      exponential_series(rd, t_, tol / (std::fabs(c1) + c2 + c3));
  Evaluation out;
  bool dropped = false;
  out.value = U(r, &dropped) - c1 * s.s1 - c2 * s.s2 - c3 * s.s3;
  out.error_estimate = (std::fabs(c1) + c2 + c3) * s.error_estimate;
  out.terms_used["exp-series"] = s.terms;
  out.guards_engaged = dropped;
  return out;
}

double LazyTable::Extend(std::int64_t i, std::vector<double>& v,
                         std::size_t idx) {
  while (v.size() <= idx) {
    const auto next = static_cast<std::int64_t>(v.size());
    v.push_back(f_(i >= 0 ? next : -next - 1));
  }
  return v[idx];
}

ShiftedIndicator::ShiftedIndicator(std::int64_t k, std::int64_t n, double t)
    : table_(k, t),
      n_(n),
      g_([this](std::int64_t r) {
        const KernelValue g = kernel_G(static_cast<double>(r - n_), table_.t(),
                                       table_.k());
        guarded_ = guarded_ || g.overflow_guarded;
        return g.value;
      }),
      j_([this](std::int64_t q) {
        return integral_J(q, table_.t(), 1e-16).value;
      }) {}

Evaluation ShiftedIndicator::KernelPart(std::int64_t c, double tol) {
  const double pref = Parity(c) * std::sinh(kPi * table_.t()) /
                      (4.0 * std::sqrt(static_cast<double>(table_.k())));
  const std::int64_t lo = std::min(n_, -c) - 16;
  const std::int64_t hi = std::max(n_, -c) + 16;
  Evaluation e = sum_two_sided(
      [&](std::int64_t r) { return Parity(r) * g_(r) * J(r + c); }, lo, hi,
      default_indicator_policy(tol / std::fabs(pref)), "lattice");
  e.value *= pref;
  e.error_estimate *= std::fabs(pref);
  e.guards_engaged = guarded_;
  return e;
}

Evaluation ShiftedIndicator::Evaluate(std::int64_t c, double tol) {
  Evaluation out = table_.shifted_rational(n_ + c, 0.25 * tol);
  const Evaluation kernel = KernelPart(c, 0.5 * tol);
  out.value += kernel.value;
  out.Absorb(kernel);
  return out;
}

namespace {

// The unshifted representation, valid at every integer N.
Evaluation UnshiftedRepresentation(std::int64_t k, std::int64_t n, double t,
                                   const TruncationPolicy& policy) {
  RequireArgs(k, t);
  const CoefficientTable table(k, t);
  const double kd = static_cast<double>(k);
  const double c = table.coth();
  const double tol = policy.abs_tol;
  const IntegralValue iv = integral_I(n, t, 1e-3 * tol);
  const IntegralValue kv = integral_K(n, t, 1e-3 * tol);
  const double ci = Parity(n) * kPi * kPi * kPi * c / (3.0 * kd);
  const double ck = Parity(n) * kPi * kPi * c;

  const double pref = std::sinh(kPi * t) / (4.0 * std::sqrt(kd));
  bool guarded = false;
  const double jtol = 1e-16;
  Evaluation lattice = sum_two_sided(
      [&](std::int64_t r) {
        const KernelValue g = kernel_G(static_cast<double>(r - n), t, k);
        guarded = guarded || g.overflow_guarded;
        return Parity(r) * g.value * integral_J(r, t, jtol).value;
      },
      std::min<std::int64_t>(0, n) - 16, std::max<std::int64_t>(0, n) + 16,
      Rescaled(policy, 0.5 * tol / pref), "lattice");

  Evaluation out;
  out.value = table.mu(n) + ci * iv.value + ck * kv.value + pref * lattice.value;
  out.error_estimate = std::fabs(ci) * iv.error_estimate +
                       std::fabs(ck) * kv.error_estimate +
                       pref * lattice.error_estimate;
  out.terms_used = lattice.terms_used;
  out.terms_used["integral-I"] = iv.series_terms_used;
  out.terms_used["integral-K"] = kv.series_terms_used;
  out.guards_engaged = guarded;
  return out;
}

}  // namespace

Evaluation q_analytic(std::int64_t k, std::int64_t n, double t,
                      const TruncationPolicy& policy) {
  if (n < 1) throw DomainError("q_analytic: N must be >= 1");
  return UnshiftedRepresentation(k, n, t, policy);
}

Classification q_classify(std::int64_t k, std::int64_t n, double t,
                          const TruncationPolicy& policy) {
  Classification out;
  out.analytic = q_analytic(k, n, t, policy);
  const double nd = static_cast<double>(n);
  const double scaled = nd * nd * out.analytic.value;
  out.value = scaled >= 0.5 ? 1 : 0;
  out.residual = std::fabs(scaled - out.value);
  if (out.residual >= 0.25) {
    throw AmbiguousClassification(
        "q_classify: N=" + std::to_string(n) + " k=" + std::to_string(k) +
            " is not resolvable at this precision",
        scaled, out.residual);
  }
  return out;
}

double zero_identity_residual(std::int64_t k, std::int64_t n, double t,
                              const TruncationPolicy& policy) {
  if (n > 0) throw DomainError("zero_identity_residual: N must be <= 0");
  return std::fabs(UnshiftedRepresentation(k, n, t, policy).value);
}

Evaluation q_shifted_analytic(std::int64_t k, std::int64_t n, std::int64_t c,
                              double t, const TruncationPolicy& policy) {
  RequireArgs(k, t);
  if (n < 1) throw DomainError("q_shifted_analytic: N must be >= 1");
  ShiftedIndicator shifted(k, n, t);
  return shifted.Evaluate(c, policy.abs_tol);
}

Evaluation q_general_analytic(std::int64_t k, std::int64_t s, std::int64_t n,
                              double t, const TruncationPolicy& policy) {
  RequireArgs(k, t);
  if (s < 1) throw DomainError("s must be >= 1");
  if (n < 1) throw DomainError("q_general_analytic: N must be >= 1");
  const double kd = static_cast<double>(k);
  const double p = 4.0 * static_cast<double>(s) + 2.0;
  const double htol = 1e-3 * policy.abs_tol;
  std::int64_t inner_terms = 0;
  // D(x) = t sum_m 1/(k^2 m^4s ((k m^2s + x)^2 + t^2)).
  const auto jump = [&](double x) {
    CompensatedSum h;
    for (std::int64_t m = 1;; ++m) {
      const double md = static_cast<double>(m);
      const double pw = std::pow(md, 2.0 * static_cast<double>(s));
      const double lattice = kd * pw;
      const double shift = lattice + x;
      const double term = 1.0 / (kd * kd * pw * pw * (shift * shift + t * t));
      h.Add(term);
      ++inner_terms;
      if (lattice >= 2.0 * std::fabs(x) && term * md / (p - 1.0) < htol) break;
    }
    return t * h.Value();
  };
  TruncationPolicy outer = policy;
  outer.tail_kind = TailKind::kPolynomial;
  outer.tail_parameter = 3.0;
  Evaluation out = invert_jump(jump, n, t, outer);
  out.terms_used["inner"] = inner_terms;
  return out;
}

}  // namespace arith

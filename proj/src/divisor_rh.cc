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

#include "arith/divisor_rh.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "arith/compensated.h"
#include "arith/errors.h"
#include "arith/indicator.h"

namespace arith {

namespace {

void CheckN(std::int64_t n, std::int64_t min) {
  if (n < min) {
    throw DomainError("N must be >= " + std::to_string(min) + ", got " +
                      std::to_string(n));
  }
}

// Shift tolerances below this are not resolvable in binary64 for the
// magnitudes involved; the shortfall shows up in error_estimate.
constexpr double kShiftTolFloor = 1e-22;

}  // namespace

std::uint64_t sigma_bruteforce(std::int64_t n) {
  CheckN(n, 1);
  std::uint64_t s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += static_cast<std::uint64_t>(d);
    if (d * d != n) s += static_cast<std::uint64_t>(n / d);
  }
  return s;
}

double sigma_decomposition_check(std::int64_t n) {
  CheckN(n, 1);
  std::int64_t rhs = std::max<std::int64_t>(exact_sqrt(n), 0);
  for (std::int64_t a = 1; a < n; ++a) {
    rhs += std::max<std::int64_t>(exact_sqrt(4 * n + a * a), 0);
  }
  const auto lhs = static_cast<std::int64_t>(sigma_bruteforce(n));
  return static_cast<double>(lhs > rhs ? lhs - rhs : rhs - lhs);
}

TruncationPolicy default_sigma_policy(double tol) {
  TruncationPolicy p = TruncationPolicy::Polynomial(2.0, tol);
  p.quiet_run = 8;
  return p;
}

Evaluation sigma_analytic(std::int64_t n, double t,
                          const TruncationPolicy& policy) {
  CheckN(n, 1);
  policy.Validate();
  Evaluation out;
  // The N itself term is a plain square test.
  const std::int64_t root = exact_sqrt(n);
  CompensatedSum acc;
  if (root > 0) acc.Add(static_cast<double>(root));
  if (n >= 2) {
    ShiftedIndicator shifted(1, 4 * n, t);
    const double share = policy.abs_tol / static_cast<double>(n - 1);
    std::int64_t terms = 0;
    for (std::int64_t a = 1; a < n; ++a) {
      const double m = static_cast<double>(4 * n + a * a);
      // (4N + a^2)^(5/2) in log space; it is about 1e10 by N = 100.
      const double scale = std::exp(2.5 * std::log(m));
      const double shift_tol = std::max(share / scale, kShiftTolFloor);
      const Evaluation e = shifted.Evaluate(a * a, shift_tol);
      acc.Add(scale * e.value);
      out.error_estimate += scale * e.error_estimate;
      for (const auto& [label, count] : e.terms_used) terms += count;
      out.guards_engaged = out.guards_engaged || e.guards_engaged;
    }
    out.terms_used["shifts"] = n - 1;
    out.terms_used["lattice"] = terms;
  }
  out.value = acc.Value();
  out.error_estimate += acc.RoundingBound();
  const double residual = std::fabs(out.value - std::round(out.value));
  if (residual >= 0.25) {
    throw AmbiguousClassification(
        "sigma_analytic(" + std::to_string(n) + ") = " +
            std::to_string(out.value) + " does not round cleanly",
        out.value, residual);
  }
  return out;
}

double harmonic(std::int64_t n) {
  CheckN(n, 1);
  CompensatedSum acc;
  for (std::int64_t r = 1; r <= n; ++r) acc.Add(1.0 / static_cast<double>(r));
  return acc.Value();
}

double lagarias_rhs(std::int64_t n) {
  const double h = harmonic(n);
  return h + std::exp(h) * std::log(h);
}

double robin_rhs(std::int64_t n) {
  if (n < kRobinThreshold) {
    throw DomainError("robin_rhs needs N >= 5041, got " + std::to_string(n));
  }
  const double x = static_cast<double>(n);
  return std::exp(kEulerGamma) * x * std::log(std::log(x));
}

RHRecord rh_check(std::int64_t n, double t, SigmaMode mode,
                  const TruncationPolicy& policy) {
  CheckN(n, 2);
  RHRecord rec;
  rec.n = n;
  rec.sigma_exact = sigma_bruteforce(n);
  if (mode == SigmaMode::kAnalytic) {
    const Evaluation e = sigma_analytic(n, t, policy);
    rec.sigma_analytic = e.value;
    rec.sigma_error = e.error_estimate;
    for (const auto& [label, count] : e.terms_used) rec.terms += count;
    rec.guards_engaged = e.guards_engaged;
  } else {
    rec.sigma_analytic = static_cast<double>(rec.sigma_exact);
  }
  rec.harmonic = harmonic(n);
  rec.lagarias_rhs = lagarias_rhs(n);
  if (n >= kRobinThreshold) rec.robin_rhs = robin_rhs(n);
  rec.margin = rec.lagarias_rhs - rec.sigma_analytic;
  return rec;
}

}  // namespace arith

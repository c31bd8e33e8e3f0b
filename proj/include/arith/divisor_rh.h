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

#ifndef ARITH_DIVISOR_RH_H_
#define ARITH_DIVISOR_RH_H_

#include <cstdint>
#include <optional>

#include "arith/series.h"

namespace arith {

// Euler-Mascheroni constant, fixed to 17 digits.
inline constexpr double kEulerGamma = 0.5772156649015329;
// Smallest N covered by the Robin form of the inequality.
inline constexpr std::int64_t kRobinThreshold = 5041;

// Divisor sum by trial division up to sqrt(N).
std::uint64_t sigma_bruteforce(std::int64_t n);

// |sigma(N) - [N square] sqrt(N) - sum_{a<N} [4N + a^2 square] sqrt(4N + a^2)|
// in integer arithmetic; zero whenever the decomposition holds.
double sigma_decomposition_check(std::int64_t n);

// Tolerance on sigma itself. The per-shift tolerances are scaled down by the
// (4N + a^2)^(5/2) amplification.
TruncationPolicy default_sigma_policy(double tol = 1e-2);

// ~sigma(N) from the analytic square indicator at the shifted points
// 4N + a^2. Throws AmbiguousClassification if the value is 0.25 or more
// away from the nearest integer.
Evaluation sigma_analytic(std::int64_t n, double t,
                          const TruncationPolicy& policy = default_sigma_policy());

double harmonic(std::int64_t n);
// H_N + e^{H_N} log H_N.
double lagarias_rhs(std::int64_t n);
// e^gamma N log log N; N >= 5041.
double robin_rhs(std::int64_t n);

enum class SigmaMode { kAnalytic, kExact };

struct RHRecord {
  std::int64_t n = 0;
  double sigma_analytic = 0.0;  // equals sigma_exact in exact mode
  double sigma_error = 0.0;     // error estimate of sigma_analytic
  std::uint64_t sigma_exact = 0;
  double lagarias_rhs = 0.0;
  std::optional<double> robin_rhs;
  double margin = 0.0;  // lagarias_rhs - lhs
  double harmonic = 0.0;
  std::int64_t terms = 0;
  bool guards_engaged = false;
};

RHRecord rh_check(std::int64_t n, double t, SigmaMode mode,
                  const TruncationPolicy& policy = default_sigma_policy());

}  // namespace arith

#endif  // ARITH_DIVISOR_RH_H_

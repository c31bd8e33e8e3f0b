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

#ifndef ARITH_DIOPHANTINE_H_
#define ARITH_DIOPHANTINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith/series.h"

namespace arith {

// A bounded weight g (or h) with its declared bound M >= sup |g|.
struct WeightSpec {
  std::function<double(std::int64_t)> weight;
  double bound = 1.0;
  std::string label;
  // Optional bound on sum_{a>A} |weight(a)|/(N+a)^2, used to stop the
  // infinite shifted sum. Defaults to bound/(N+A).
  std::function<double(std::int64_t a, std::int64_t n)> shifted_tail;

  double operator()(std::int64_t a) const { return weight(a); }
  double ShiftedTail(std::int64_t a, std::int64_t n) const;
  // Spot-checks |weight(a)| <= bound for a in [1, horizon]; throws
  // DomainError on violation.
  void Validate(std::int64_t horizon) const;

  static WeightSpec Unit();
  static WeightSpec Alternating();   // (-1)^a
  static WeightSpec Reciprocal();    // 1/(a+1)
  static WeightSpec Zero();
  static WeightSpec Geometric();     // 2^-a
  static WeightSpec SquareIndicator();  // 1 iff a is a perfect square
  // unit | alternating | reciprocal | zero | geometric | squares.
  static std::optional<WeightSpec> Named(const std::string& name);
};

enum class EquationKind {
  kSum,         // d a^2 + k b^2 = N
  kDifference,  // k b^2 - d a^2 = N
};

struct DiophantineInstance {
  std::int64_t n = 1;
  std::int64_t d = 1;
  std::int64_t k = 1;
  EquationKind kind = EquationKind::kSum;
  void Validate() const;
};

struct SolutionList {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (a, b)
  std::optional<std::int64_t> truncated_at_b;  // difference kind only
  // Bound on sum_{b > horizon} b^-4 per unit of weight bound.
  double tail_bound = 0.0;
};

struct BoundedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

inline constexpr std::int64_t kDefaultPellHorizon = 10000;

// All solutions with a, b >= 1 (b <= b_horizon for the difference kind).
SolutionList enumerate_solutions(const DiophantineInstance& inst,
                                 std::int64_t b_horizon = kDefaultPellHorizon);

// sum g(a)/b^4 over the (complete) solution set of d a^2 + k b^2 = N.
double sum_squares_bruteforce(const DiophantineInstance& inst,
                              const WeightSpec& g);
// sum g(a)/b^4 over solutions of k b^2 - d a^2 = N with b <= horizon, plus
// the bound g.bound / (3 horizon^3) on what lies beyond.
BoundedValue sum_diff_bruteforce(const DiophantineInstance& inst,
                                 const WeightSpec& g,
                                 std::int64_t b_horizon = kDefaultPellHorizon);
// sum over d | N with N/d > d of g(N/d - d)/(N/d + d)^4.
double divisor_pair_bruteforce(const WeightSpec& g, std::int64_t n);

// Default policy for the sums below: abs_tol 1e-8.
TruncationPolicy default_sum_policy(double tol = 1e-8);

// ~ sum_{a=1}^{N-1} h(a) q_k(N-a)/(N-a)^2.
Evaluation weighted_finite_analytic(const WeightSpec& h, std::int64_t k,
                                    std::int64_t n, double t,
                                    const TruncationPolicy& policy = default_sum_policy());
// ~ sum_{a>=1} h(a) q_k(N+a)/(N+a)^2.
Evaluation weighted_infinite_analytic(const WeightSpec& h, std::int64_t k,
                                      std::int64_t n, double t,
                                      const TruncationPolicy& policy = default_sum_policy());

// ~ (1/k^2) sum_{d a^2 + k b^2 = N} g(a)/b^4, one shifted indicator per a.
Evaluation sum_squares_analytic(const WeightSpec& g,
                                const DiophantineInstance& inst, double t,
                                const TruncationPolicy& policy = default_sum_policy());
// ~ (1/k^2) sum_{k b^2 - d a^2 = N} g(a)/b^4 over the full solution set.
Evaluation sum_diff_analytic(const WeightSpec& g,
                             const DiophantineInstance& inst, double t,
                             const TruncationPolicy& policy = default_sum_policy());

// Both kinds for several weights sharing one pass over the shifts.
std::vector<Evaluation> shifted_weighted_sums(
    const std::vector<WeightSpec>& weights, const DiophantineInstance& inst,
    double t, const TruncationPolicy& policy = default_sum_policy());

// Same quantities for g = 1 (or g = (-1)^a) with the a-sums inside the
// kernel lattice sum done in closed form by T (or V). Independent of the
// per-a organization above.
enum class KernelWeight { kUnit, kAlternating };
Evaluation kernel_weighted_sum(const DiophantineInstance& inst,
                               KernelWeight weight, double t,
                               const TruncationPolicy& policy = default_sum_policy());
Evaluation unit_sum_squares(const DiophantineInstance& inst, double t,
                            const TruncationPolicy& policy = default_sum_policy());
Evaluation unit_sum_diff(const DiophantineInstance& inst, double t,
                         const TruncationPolicy& policy = default_sum_policy());

// ~ sum over d | N, N/d > d of g(N/d - d)/(N/d + d)^4, via b^2 - a^2 = 4N.
Evaluation divisor_pair_sum_analytic(const WeightSpec& g, std::int64_t n,
                                     double t,
                                     const TruncationPolicy& policy = default_sum_policy());

}  // namespace arith

#endif  // ARITH_DIOPHANTINE_H_

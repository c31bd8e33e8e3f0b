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

#include "arith/diophantine.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "arith/compensated.h"
#include "arith/errors.h"
#include "arith/indicator.h"
#include "arith/kernels.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

double Parity(std::int64_t n) { return (n % 2 == 0) ? 1.0 : -1.0; }

double Pow4(double x) { return (x * x) * (x * x); }

// Extra indices summed past the last physically relevant shift. Their terms
// are instances of the vanishing identity, so they only measure noise.
constexpr std::int64_t kIdentityRun = 4;

// Tolerance handed to each of `count` shifted evaluations weighted by at
// most `bound`, so their summed errors stay within `tol`.
double PerTermTol(double tol, std::int64_t count, double bound) {
  return tol / (static_cast<double>(std::max<std::int64_t>(count, 1)) *
                std::max(bound, 1e-300));
}

void CheckT(double t) {
  if (!(t > 0.0)) throw DomainError("t must be positive");
}

}  // namespace

double WeightSpec::ShiftedTail(std::int64_t a, std::int64_t n) const {
  if (shifted_tail) return shifted_tail(a, n);
  return bound / static_cast<double>(n + a);
}

void WeightSpec::Validate(std::int64_t horizon) const {
  if (!weight) throw DomainError("weight '" + label + "' has no function");
  if (!(bound >= 0.0)) throw DomainError("weight bound must be >= 0");
  for (std::int64_t a = 1; a <= horizon; ++a) {
    if (std::fabs(weight(a)) > bound * (1.0 + 1e-12)) {
      throw DomainError("weight '" + label + "' exceeds its bound at a=" +
                        std::to_string(a));
    }
  }
}

WeightSpec WeightSpec::Unit() {
  return {[](std::int64_t) { return 1.0; }, 1.0, "unit", nullptr};
}

WeightSpec WeightSpec::Alternating() {
  return {[](std::int64_t a) { return Parity(a); }, 1.0, "alternating",
          nullptr};
}

WeightSpec WeightSpec::Reciprocal() {
  return {[](std::int64_t a) { return 1.0 / static_cast<double>(a + 1); }, 0.5,
          "reciprocal", nullptr};
}

WeightSpec WeightSpec::Zero() {
  return {[](std::int64_t) { return 0.0; }, 0.0, "zero",
          [](std::int64_t, std::int64_t) { return 0.0; }};
}

WeightSpec WeightSpec::Geometric() {
  return {[](std::int64_t a) { return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(a, 2000))); },
          0.5, "geometric",
          [](std::int64_t a, std::int64_t n) {
            const double m = static_cast<double>(n + a);
            return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(a, 2000))) / (m * m);
          }};
}

WeightSpec WeightSpec::SquareIndicator() {
  return {[](std::int64_t a) { return exact_sqrt(a) > 0 ? 1.0 : 0.0; }, 1.0,
          "squares",
          [](std::int64_t a, std::int64_t) {
            // sum_{m^2 > A} m^-4 <= 1/(3 (m0 - 1)^3), m0 = first m past sqrt(A).
            const double m0 = std::floor(std::sqrt(static_cast<double>(a))) + 1.0;
            return m0 > 1.0 ? 1.0 / (3.0 * std::pow(m0 - 1.0, 3.0)) : 2.0;
          }};
}

std::optional<WeightSpec> WeightSpec::Named(const std::string& name) {
  if (name == "unit") return Unit();
  if (name == "alternating") return Alternating();
  if (name == "reciprocal") return Reciprocal();
  if (name == "zero") return Zero();
  if (name == "geometric") return Geometric();
  if (name == "squares") return SquareIndicator();
  return std::nullopt;
}

void DiophantineInstance::Validate() const {
  if (n < 1 || d < 1 || k < 1) throw DomainError("N, d, k must be >= 1");
}

SolutionList enumerate_solutions(const DiophantineInstance& inst,
                                 std::int64_t b_horizon) {
  inst.Validate();
  SolutionList out;
  if (inst.kind == EquationKind::kSum) {
    for (std::int64_t a = 1; inst.d * a * a < inst.n; ++a) {
      const std::int64_t rest = inst.n - inst.d * a * a;
      if (rest % inst.k != 0) continue;
      const std::int64_t b = exact_sqrt(rest / inst.k);
      if (b >= 1) out.pairs.emplace_back(a, b);
    }
    return out;
  }
  if (b_horizon < 1) throw DomainError("b_horizon must be >= 1");
  for (std::int64_t b = 1; b <= b_horizon; ++b) {
    const __int128 rest = static_cast<__int128>(inst.k) * b * b - inst.n;
    if (rest <= 0 || rest % inst.d != 0) continue;
    const std::int64_t a = exact_sqrt(static_cast<std::int64_t>(rest / inst.d));
    if (a >= 1) out.pairs.emplace_back(a, b);
  }
  out.truncated_at_b = b_horizon;
  out.tail_bound = 1.0 / (3.0 * std::pow(static_cast<double>(b_horizon), 3.0));
  return out;
}

double sum_squares_bruteforce(const DiophantineInstance& inst,
                              const WeightSpec& g) {
  if (inst.kind != EquationKind::kSum) throw DomainError("expected sum kind");
  CompensatedSum acc;
  for (const auto& [a, b] : enumerate_solutions(inst).pairs) {
    acc.Add(g(a) / Pow4(static_cast<double>(b)));
  }
  return acc.Value();
}

BoundedValue sum_diff_bruteforce(const DiophantineInstance& inst,
                                 const WeightSpec& g, std::int64_t b_horizon) {
  if (inst.kind != EquationKind::kDifference) {
    throw DomainError("expected difference kind");
  }
  const SolutionList sols = enumerate_solutions(inst, b_horizon);
  CompensatedSum acc;
  for (const auto& [a, b] : sols.pairs) acc.Add(g(a) / Pow4(static_cast<double>(b)));
  return {acc.Value(), g.bound * sols.tail_bound};
}

double divisor_pair_bruteforce(const WeightSpec& g, std::int64_t n) {
  if (n < 1) throw DomainError("N must be >= 1");
  CompensatedSum acc;
  for (std::int64_t d = 1; d * d < n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    acc.Add(g(e - d) / Pow4(static_cast<double>(e + d)));
  }
  return acc.Value();
}

TruncationPolicy default_sum_policy(double tol) {
  TruncationPolicy p = TruncationPolicy::Polynomial(2.0, tol);
  p.quiet_run = 8;
  return p;
}

Evaluation weighted_finite_analytic(const WeightSpec& h, std::int64_t k,
                                    std::int64_t n, double t,
                                    const TruncationPolicy& policy) {
  CheckT(t);
  if (n < 1) throw DomainError("N must be >= 1");
  ShiftedIndicator shifted(k, n, t);
  const std::int64_t last = n + kIdentityRun - 1;
  const double tol = PerTermTol(policy.abs_tol, last, h.bound);
  Evaluation out;
  CompensatedSum acc;
  for (std::int64_t a = 1; a <= last; ++a) {
    const double w = h(a);
    if (w == 0.0) continue;
    const Evaluation e = shifted.Evaluate(-a, tol);
    acc.Add(w * e.value);
    out.Absorb(e, w);
    // Past a = N - 1 every term is a vanishing identity; its size is noise.
    if (a >= n) out.error_estimate += std::fabs(w * e.value);
  }
  out.value = acc.Value();
  out.error_estimate += acc.RoundingBound();
  out.terms_used["a"] = last;
  return out;
}

Evaluation weighted_infinite_analytic(const WeightSpec& h, std::int64_t k,
                                      std::int64_t n, double t,
                                      const TruncationPolicy& policy) {
  CheckT(t);
  if (n < 1) throw DomainError("N must be >= 1");
  ShiftedIndicator shifted(k, n, t);
  const double tail_tol = 0.5 * policy.abs_tol;
  Evaluation out;
  CompensatedSum acc;
  std::int64_t a = 0;
  // Shifted evaluations get a geometrically shrinking share of the budget.
  double share = 0.25 * policy.abs_tol;
  while (h.ShiftedTail(a, n) >= tail_tol) {
    if (++a > policy.max_terms) {
      throw ConvergenceError("weighted_infinite_analytic: max_terms exhausted");
    }
    const double w = h(a);
    if (w == 0.0) continue;
    share *= 0.9;
    const Evaluation e = shifted.Evaluate(a, share / std::fabs(w));
    acc.Add(w * e.value);
    out.Absorb(e, w);
  }
  out.value = acc.Value();
  out.error_estimate += h.ShiftedTail(a, n) + acc.RoundingBound();
  out.terms_used["a"] = a;
  return out;
}

namespace {

// Evaluates sum_a w(a) B(N, sign d a^2) for several weights at once,
// B(N, c) ~ q_k(N+c)/(N+c)^2. Shifts are computed once and shared.
std::vector<Evaluation> ShiftedSums(const std::vector<WeightSpec>& weights,
                                    const DiophantineInstance& inst, double t,
                                    const TruncationPolicy& policy) {
  inst.Validate();
  CheckT(t);
  double bound = 0.0;
  for (const WeightSpec& w : weights) bound = std::max(bound, w.bound);
  const std::int64_t d = inst.d;
  const bool sum_kind = inst.kind == EquationKind::kSum;
  std::int64_t last = 0;
  double tail = 0.0;
  if (sum_kind) {
    while (d * (last + 1) * (last + 1) <= inst.n) ++last;
    last += kIdentityRun;
  } else if (bound > 0.0) {
    // sum_{a>A} M/(d a^2)^2 <= M/(3 d^2 A^3).
    const double dd = static_cast<double>(d);
    last = static_cast<std::int64_t>(
        std::ceil(std::cbrt(bound / (3.0 * dd * dd * 0.5 * policy.abs_tol))));
    if (last > policy.max_terms) {
      throw ConvergenceError("difference sum: max_terms exhausted");
    }
    tail = bound / (3.0 * dd * dd * std::pow(static_cast<double>(last), 3.0));
  }
  std::vector<Evaluation> out(weights.size());
  std::vector<CompensatedSum> acc(weights.size());
  if (bound == 0.0) return out;
  ShiftedIndicator shifted(inst.k, inst.n, t);
  const double tol = PerTermTol(0.5 * policy.abs_tol, last, bound);
  for (std::int64_t a = 1; a <= last; ++a) {
    const std::int64_t c = (sum_kind ? -1 : 1) * d * a * a;
    const Evaluation e = shifted.Evaluate(c, tol);
    const bool identity = sum_kind && inst.n + c < 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double w = weights[i](a);
      acc[i].Add(w * e.value);
      out[i].Absorb(e, w);
      if (identity) out[i].error_estimate += std::fabs(w * e.value);
    }
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out[i].value = acc[i].Value();
    out[i].error_estimate += acc[i].RoundingBound() + tail * weights[i].bound / bound;
    out[i].terms_used["a"] = last;
  }
  return out;
}

}  // namespace

Evaluation sum_squares_analytic(const WeightSpec& g,
                                const DiophantineInstance& inst, double t,
                                const TruncationPolicy& policy) {
  if (inst.kind != EquationKind::kSum) throw DomainError("expected sum kind");
  return ShiftedSums({g}, inst, t, policy).front();
}

Evaluation sum_diff_analytic(const WeightSpec& g,
                             const DiophantineInstance& inst, double t,
                             const TruncationPolicy& policy) {
  if (inst.kind != EquationKind::kDifference) {
    throw DomainError("expected difference kind");
  }
  return ShiftedSums({g}, inst, t, policy).front();
}

std::vector<Evaluation> shifted_weighted_sums(
    const std::vector<WeightSpec>& weights, const DiophantineInstance& inst,
    double t, const TruncationPolicy& policy) {
  return ShiftedSums(weights, inst, t, policy);
}

Evaluation kernel_weighted_sum(const DiophantineInstance& inst,
                               KernelWeight weight, double t,
                               const TruncationPolicy& policy) {
  inst.Validate();
  CheckT(t);
  const bool sum_kind = inst.kind == EquationKind::kSum;
  const bool alternating = weight == KernelWeight::kAlternating;
  const std::int64_t n = inst.n;
  const std::int64_t d = inst.d;
  const std::int64_t k = inst.k;
  const double dd = static_cast<double>(d);
  const double tol = policy.abs_tol;
  const CoefficientTable table(k, t);
  const auto wt = [&](std::int64_t a) { return alternating ? Parity(a) : 1.0; };
  bool guarded = false;

  // Constant blocks, one per a; they decay like 1/(d a^2)^2.
  TruncationPolicy outer = TruncationPolicy::Polynomial(4.0, 0.25 * tol);
  outer.quiet_run = policy.quiet_run;
  outer.max_terms = policy.max_terms;
  Evaluation constant = sum_series(
      [&](std::int64_t a) {
        const Evaluation e = table.shifted_rational(
            n + (sum_kind ? -1 : 1) * d * a * a, 1e-3 * tol);
        guarded = guarded || e.guards_engaged;
        return wt(a) * e.value;
      },
      outer, "constant-blocks");

  // Odd-harmonic weights of the expanded J integrals.
  struct Harmonic {
    double tau;
    double weight;
  };
  std::vector<Harmonic> harmonics;
  for (std::int64_t m = 0;; ++m) {
    const double odd = static_cast<double>(2 * m + 1);
    const double tau = t * odd;
    const double w = odd * std::exp(-kPi * tau);
    // |a-sum| <= (number of near-resonant a + 1)/tau^2; 10 covers it.
    if (10.0 * w / (tau * tau) < 1e-4 * tol || w == 0.0) break;
    harmonics.push_back({tau, (m % 2 == 0) ? w : -w});
  }

  const double pref = std::sinh(kPi * t) / (4.0 * std::sqrt(static_cast<double>(k)));
  const double cutoff = 80.0 * t / kPi;  // cosh(pi q/2t) beyond e^40
  const auto term = [&](std::int64_t r) {
    const KernelValue g = kernel_G(static_cast<double>(r - n), t, k);
    guarded = guarded || g.overflow_guarded;
    // Shift position X - d a^2 that enters the hyperbolic secant.
    const double x = static_cast<double>(sum_kind ? r : -r);
    double secants = 0.0;
    const double lo = std::max(0.0, x - cutoff) / dd;
    const double hi = (x + cutoff) / dd;
    if (hi >= 1.0) {
      for (auto a = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::sqrt(lo))));
           static_cast<double>(a * a) <= hi; ++a) {
        const double q = x - dd * static_cast<double>(a * a);
        const double e = std::exp(-kPi * std::fabs(q) / (2.0 * t));
        secants += wt(a) * Parity(d * a) * e / (t * (1.0 + e * e));
      }
    }
    // Closed-form a-sums of 1/(tau^2 + (r + c_a)^2).
    const double shift = (sum_kind ? -1.0 : 1.0) * static_cast<double>(r) / dd;
    double harmonic_sum = 0.0;
    for (const Harmonic& h : harmonics) {
      const double z = h.tau / dd;
      const KernelValue kv = alternating ? kernel_V(shift, z) : kernel_T(shift, z);
      guarded = guarded || kv.overflow_guarded;
      const double closed = (alternating ? kPi / 2.0 : kPi / 4.0) * kv.value -
                            1.0 / (2.0 * (shift * shift + z * z));
      harmonic_sum += h.weight * closed / (dd * dd);
    }
    return g.value * (Parity(r) * secants - 2.0 * t / kPi * harmonic_sum);
  };
  TruncationPolicy lattice_policy = default_indicator_policy(0.5 * tol / pref);
  lattice_policy.max_terms = policy.max_terms;
  std::int64_t lo = std::min<std::int64_t>(0, n) - 16;
  double sparse_tail = 0.0;
  if (!sum_kind) {
    // Solutions with a large a show up as isolated spikes near r = -d a^2,
    // which no local tail estimate can see coming. Reach far enough that
    // every solution beyond is covered by sum_{a>A} 1/(d a^2)^2 < tol/4.
    // Capped by the term budget; the wider tail is then reported as is.
    const double reach = std::min(
        std::ceil(std::cbrt(1.0 / (3.0 * dd * dd * 0.25 * tol))),
        std::floor(std::sqrt(static_cast<double>(policy.max_terms) / (4.0 * dd))));
    sparse_tail = 1.0 / (3.0 * dd * dd * reach * reach * reach);
    lo = std::min(lo, -static_cast<std::int64_t>(dd * reach * reach));
  }
  Evaluation lattice = sum_two_sided(term, lo, std::max<std::int64_t>(0, n) + 16,
                                     lattice_policy, "lattice");
  Evaluation out;
  out.value = constant.value + pref * lattice.value;
  out.error_estimate =
      constant.error_estimate + pref * lattice.error_estimate + sparse_tail;
  out.terms_used = constant.terms_used;
  out.terms_used["lattice"] = lattice.terms_used["lattice"];
  out.terms_used["harmonics"] = static_cast<std::int64_t>(harmonics.size());
  out.guards_engaged = guarded;
  return out;
}

Evaluation unit_sum_squares(const DiophantineInstance& inst, double t,
                            const TruncationPolicy& policy) {
  if (inst.kind != EquationKind::kSum) throw DomainError("expected sum kind");
  return kernel_weighted_sum(inst, KernelWeight::kUnit, t, policy);
}

Evaluation unit_sum_diff(const DiophantineInstance& inst, double t,
                         const TruncationPolicy& policy) {
  if (inst.kind != EquationKind::kDifference) {
    throw DomainError("expected difference kind");
  }
  return kernel_weighted_sum(inst, KernelWeight::kUnit, t, policy);
}

Evaluation divisor_pair_sum_analytic(const WeightSpec& g, std::int64_t n,
                                     double t, const TruncationPolicy& policy) {
  if (n < 1) throw DomainError("N must be >= 1");
  return sum_diff_analytic(g, {4 * n, 1, 1, EquationKind::kDifference}, t,
                           policy);
}

}  // namespace arith

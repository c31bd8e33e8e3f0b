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

#ifndef ARITH_SERIES_H_
#define ARITH_SERIES_H_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arith/compensated.h"
#include "arith/errors.h"

namespace arith {

enum class TailKind { kExponential, kPolynomial, kAlternating };

struct TruncationPolicy {
  double abs_tol = 1e-12;
  std::int64_t max_terms = 1000000;
  TailKind tail_kind = TailKind::kPolynomial;
  // Decay ratio for kExponential, exponent p > 1 for kPolynomial.
  double tail_parameter = 2.0;
  std::int64_t quiet_run = 5;

  static TruncationPolicy Exponential(double rate, double tol = 1e-12);
  static TruncationPolicy Polynomial(double exponent, double tol = 1e-12);
  static TruncationPolicy Alternating(double tol = 1e-12);
  // Throws DomainError when the fields are inconsistent.
  void Validate() const;
};

struct Evaluation {
  double value = 0.0;
  double error_estimate = 0.0;
  std::map<std::string, std::int64_t> terms_used;
  bool guards_engaged = false;

  // Folds another evaluation's error, term counts and flags into this one.
  void Absorb(const Evaluation& other, double weight = 1.0);
};

// Sums terms(1), terms(2), ... with compensated accumulation until the tail
// bound for policy.tail_kind stays below abs_tol for quiet_run consecutive
// terms. Throws ConvergenceError on max_terms exhaustion.
Evaluation sum_series(const std::function<double(std::int64_t)>& terms,
                      const TruncationPolicy& policy,
                      const std::string& label = "series");

namespace internal {

// Mean of |a| over a trailing window whose width may change per push. The
// window spans a full resonance period, so isolated spikes are weighted by
// their density instead of dominating the bound.
class Envelope {
 public:
  explicit Envelope(std::int64_t width)
      : width_(std::max<std::int64_t>(width, 1)) {}
  double Push(double a) { return Push(a, width_); }
  double Push(double a, std::int64_t width) {
    width = std::max<std::int64_t>(width, 1);
    window_.push_back(std::fabs(a));
    sum_ += std::fabs(a);
    while (static_cast<std::int64_t>(window_.size()) > width) {
      sum_ -= window_.front();
      window_.pop_front();
    }
    // Resynchronize now and then so cancellation in sum_ cannot accumulate.
    if (++pushes_ % 4096 == 0) {
      sum_ = 0.0;
      for (const double x : window_) sum_ += x;
    }
    return std::max(sum_, 0.0) / static_cast<double>(window_.size());
  }

 private:
  std::int64_t width_;
  std::int64_t pushes_ = 0;
  double sum_ = 0.0;
  std::deque<double> window_;
};

}  // namespace internal

// Sums term(r) over all integers r. The window [lo, hi] is always summed;
// each side is then extended until an envelope bound drops below half of
// abs_tol across a whole trailing window. The bound is
//   mean|term| over the trailing window * distance / (p - 1),
// p = policy.tail_parameter, with the window spanning 5 sqrt|r| sites so it
// always covers a full resonance period of the hyperbolic kernels. Sides are
// summed in a fixed order, so results are reproducible.
template <typename Term>
Evaluation sum_two_sided(Term&& term, std::int64_t lo, std::int64_t hi,
                         const TruncationPolicy& policy,
                         const std::string& label = "lattice") {
  policy.Validate();
  if (lo > hi) std::swap(lo, hi);
  CompensatedSum acc;
  std::int64_t count = 0;
  for (std::int64_t r = lo; r <= hi; ++r) {
    acc.Add(term(r));
    ++count;
  }
  const double p = policy.tail_kind == TailKind::kPolynomial
                       ? policy.tail_parameter
                       : 2.0;
  double error = 0.0;
  for (int side = 0; side < 2; ++side) {
    const std::int64_t step = side == 0 ? 1 : -1;
    const std::int64_t edge = side == 0 ? hi : lo;
    internal::Envelope envelope(policy.quiet_run);
    std::int64_t quiet = 0;
    for (std::int64_t j = 1;; ++j) {
      if (++count > policy.max_terms) {
        throw ConvergenceError("sum_two_sided(" + label +
                               "): max_terms exhausted");
      }
      const std::int64_t r = edge + step * j;
      const double a = term(r);
      acc.Add(a);
      const auto width =
          policy.quiet_run +
          5 * static_cast<std::int64_t>(
                  std::ceil(std::sqrt(std::fabs(static_cast<double>(r)))));
      const double bound = envelope.Push(a, width) *
                           static_cast<double>(j + policy.quiet_run) / (p - 1.0);
      quiet = (bound < 0.5 * policy.abs_tol) ? quiet + 1 : 0;
      // Quiet for a full resonance period, not just quiet_run terms.
      if (quiet >= width) {
        error += bound;
        break;
      }
    }
  }
  Evaluation out;
  out.value = acc.Value();
  out.error_estimate = error + acc.RoundingBound();
  out.terms_used[label] = count;
  return out;
}

// F(z) = sum_{n>=1} f(n)/(n + z) with real f(n) >= 0.
struct SeriesEvaluator {
  std::function<std::complex<double>(std::complex<double>)> evaluate;
  double declared_tol = 1e-15;
  std::string label;
};

// F(z) = sum_n q_k(n)/(n^2 (n+z)) in closed form.
SeriesEvaluator square_indicator_evaluator(std::int64_t k);
// F(z) = sum_n 2^-n/(n+z), summed directly.
SeriesEvaluator geometric_evaluator();
// F(z) = sum_{n=1}^{f.size()} f[n-1]/(n+z).
SeriesEvaluator finite_evaluator(std::vector<double> f);

// Recovers f(N) from the jump D(x) = -Im F(x + it) of the series across the
// real axis. Returns ~0 for N <= 0.
Evaluation invert_series(const SeriesEvaluator& f, std::int64_t n, double t,
                         const TruncationPolicy& policy);
// Same, with the jump supplied directly.
Evaluation invert_jump(const std::function<double(double)>& jump,
                       std::int64_t n, double t,
                       const TruncationPolicy& policy);

// Residual of the twisted sampling identity
//   pi cosh(pi b t)/sinh(pi t) sum_n (-1)^n e^{-i pi n b} f(n)
//     = D(0) + sum_{k>=1} (-1)^k [e^{i pi k b} D(k) + e^{-i pi k b} D(-k)]
// for the finite coefficient list f(1..n_terms), D(x) = t sum f(n)/((n+x)^2+t^2).
double lemma4_residual(const std::vector<double>& f, double beta, double t,
                       std::int64_t n_terms);

// Residual of the balance
//   -2 atan(tanh(pi t/2)) D(0)/(pi t) = sum_{k>=1} (-1)^k (D(k) + D(-k)) J_k.
double self_consistency_residual(const SeriesEvaluator& f, double t,
                                 const TruncationPolicy& policy);

}  // namespace arith

#endif  // ARITH_SERIES_H_

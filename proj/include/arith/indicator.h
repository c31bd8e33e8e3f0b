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

#ifndef ARITH_INDICATOR_H_
#define ARITH_INDICATOR_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "arith/series.h"

namespace arith {

// Default truncation for the kernel lattice sums: envelope bound with
// exponent 2 (the slowest decay of the G * J products) and a long quiet run
// to ride over near-resonances of G.
TruncationPolicy default_indicator_policy(double tol = 1e-12);

// 1 iff n = k m^(2s) for some natural m. Integer arithmetic only.
int q_bruteforce(std::int64_t k, std::int64_t s, std::int64_t n);

// Integer square root test used throughout: returns m if n = m^2, else -1.
std::int64_t exact_sqrt(std::int64_t n);

// Constant blocks of the analytic indicator formulas for fixed (k, t).
class CoefficientTable {
 public:
  CoefficientTable(std::int64_t k, double t);
  // Constant part of the unshifted representation of q_k(N)/N^2; the
  // remaining parts are the I/K integral terms and the kernel lattice sum.
  double mu(std::int64_t n) const;
  // Hyperbolic closed-form part of the shifted representation at R = N + c.
  // Terms whose sinh/cosh argument passes the overflow guard are dropped
  // (they are below e^-300); *dropped is set when that happens.
  double U(std::int64_t r, bool* dropped = nullptr) const;
  // U(R) plus its three exponential r-series: the full non-kernel part of
  // the shifted representation.
  Evaluation shifted_rational(std::int64_t r, double tol) const;

  std::int64_t k() const { return k_; }
  double t() const { return t_; }
  double coth() const { return coth_; }

 private:
  std::int64_t k_;
  double t_;
  double coth_;
};

// Lazily extended table f(i) over all integers.
class LazyTable {
 public:
  explicit LazyTable(std::function<double(std::int64_t)> f) : f_(std::move(f)) {}
  double operator()(std::int64_t i) {
    std::vector<double>& v = i >= 0 ? pos_ : neg_;
    const auto idx = static_cast<std::size_t>(i >= 0 ? i : -i - 1);
    if (idx < v.size()) return v[idx];
    return Extend(i, v, idx);
  }

 private:
  double Extend(std::int64_t i, std::vector<double>& v, std::size_t idx);

  std::function<double(std::int64_t)> f_;
  std::vector<double> pos_;
  std::vector<double> neg_;
};

// q_k(N + c)/(N + c)^2 for many shifts c of one base point N. Caches the
// kernel values G_{r-N} and the integrals J_q, so each shift costs one pass
// over the lattice. Not thread-safe; create one per thread.
class ShiftedIndicator {
 public:
  ShiftedIndicator(std::int64_t k, std::int64_t n, double t);
  ShiftedIndicator(const ShiftedIndicator&) = delete;
  ShiftedIndicator& operator=(const ShiftedIndicator&) = delete;

  // Returns ~q_k(N+c)/(N+c)^2, or ~0 when N + c <= 0.
  Evaluation Evaluate(std::int64_t c, double tol);
  // Only the kernel lattice sum of Evaluate.
  Evaluation KernelPart(std::int64_t c, double tol);

  double jump(std::int64_t r) { return g_(r); }   // G_{r-N,t,k}
  double J(std::int64_t q) { return j_(q < 0 ? -q : q); }
  const CoefficientTable& table() const { return table_; }
  std::int64_t n() const { return n_; }
  bool guards_engaged() const { return guarded_; }

 private:
  CoefficientTable table_;
  std::int64_t n_;
  bool guarded_ = false;
  LazyTable g_;
  LazyTable j_;
};

// Unshifted analytic representation; ~q_k(N)/N^2 for N >= 1.
Evaluation q_analytic(std::int64_t k, std::int64_t n, double t,
                      const TruncationPolicy& policy = default_indicator_policy());

struct Classification {
  int value = 0;
  double residual = 0.0;
  Evaluation analytic;
};
// Rounds N^2 q_analytic to {0, 1}; throws AmbiguousClassification when the
// distance to the rounded value is >= 0.25.
Classification q_classify(std::int64_t k, std::int64_t n, double t,
                          const TruncationPolicy& policy = default_indicator_policy());

// |unshifted representation| at N <= 0, where it must vanish.
double zero_identity_residual(std::int64_t k, std::int64_t n, double t,
                              const TruncationPolicy& policy = default_indicator_policy());

// Shifted representation; ~q_k(N+c)/(N+c)^2, ~0 when N + c <= 0.
Evaluation q_shifted_analytic(std::int64_t k, std::int64_t n, std::int64_t c,
                              double t,
                              const TruncationPolicy& policy = default_indicator_policy());

// ~q_{k,s}(N)/N^2 via inversion of sum_m 1/(k^2 m^4s (k m^2s + z)).
Evaluation q_general_analytic(std::int64_t k, std::int64_t s, std::int64_t n,
                              double t,
                              const TruncationPolicy& policy = default_indicator_policy());

}  // namespace arith

#endif  // ARITH_INDICATOR_H_

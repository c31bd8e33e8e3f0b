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

#include "arith/series.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "arith/compensated.h"
#include "arith/errors.h"
#include "arith/integrals.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// coth(w) for Re w >= 0, in a form that cannot overflow.
Complex StableCoth(Complex w) {
  const Complex e = std::exp(-2.0 * w);
  return (1.0 + e) / (1.0 - e);
}

// Levin u-transform of the series with the given terms, built from its last
// order + 1 partial sums. Returns nullopt-like {false, ...} when a remainder
// estimate vanishes.
std::pair<bool, Complex> LevinU(const std::vector<Complex>& a, int order) {
  const int m = static_cast<int>(a.size());
  order = std::min(order, m - 1);
  const int n = m - 1 - order;
  std::vector<Complex> partial(m);
  CompensatedComplexSum acc;
  for (int i = 0; i < m; ++i) {
    acc.Add(a[i]);
    partial[i] = acc.Value();
  }
  Complex num = 0.0;
  Complex den = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= order; ++j) {
    const int nj = n + j;
    const Complex omega = static_cast<double>(nj + 1) * a[nj];
    if (omega == Complex(0.0, 0.0)) return {false, partial.back()};
    const double w = ((j % 2 == 0) ? 1.0 : -1.0) * binom *
                     std::pow(static_cast<double>(nj + 2) / (n + order + 2),
                              order - 1);
    num += w * partial[nj] / omega;
    den += w / omega;
    binom = binom * (order - j) / (j + 1);
  }
  return {true, num / den};
}

}  // namespace

TruncationPolicy TruncationPolicy::Exponential(double rate, double tol) {
  TruncationPolicy p;
  p.abs_tol = tol;
  p.tail_kind = TailKind::kExponential;
  p.tail_parameter = rate;
  return p;
}

TruncationPolicy TruncationPolicy::Polynomial(double exponent, double tol) {
  TruncationPolicy p;
  p.abs_tol = tol;
  p.tail_kind = TailKind::kPolynomial;
  p.tail_parameter = exponent;
  return p;
}

TruncationPolicy TruncationPolicy::Alternating(double tol) {
  TruncationPolicy p;
  p.abs_tol = tol;
  p.tail_kind = TailKind::kAlternating;
  return p;
}

void TruncationPolicy::Validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("policy: abs_tol must be positive");
  if (max_terms < 1) throw DomainError("policy: max_terms must be >= 1");
  if (quiet_run < 1) throw DomainError("policy: quiet_run must be >= 1");
  if (tail_kind == TailKind::kPolynomial && !(tail_parameter > 1.0)) {
    throw DomainError("policy: polynomial exponent must exceed 1");
  }
  if (tail_kind == TailKind::kExponential &&
      !(tail_parameter > 0.0 && tail_parameter < 1.0)) {
    throw DomainError("policy: exponential rate must lie in (0, 1)");
  }
}

void Evaluation::Absorb(const Evaluation& other, double weight) {
  error_estimate += std::fabs(weight) * other.error_estimate;
  for (const auto& [label, count] : other.terms_used) terms_used[label] += count;
  guards_engaged = guards_engaged || other.guards_engaged;
}

Evaluation sum_series(const std::function<double(std::int64_t)>& terms,
                      const TruncationPolicy& policy, const std::string& label) {
  policy.Validate();
  CompensatedSum acc;
  internal::Envelope envelope(policy.quiet_run);
  std::int64_t quiet = 0;
  for (std::int64_t r = 1; r <= policy.max_terms; ++r) {
    const double a = terms(r);
    acc.Add(a);
    double bound = 0.0;
    switch (policy.tail_kind) {
      case TailKind::kExponential:
        bound = std::fabs(a) * policy.tail_parameter / (1.0 - policy.tail_parameter);
        break;
      case TailKind::kAlternating:
        bound = std::fabs(a);
        break;
      case TailKind::kPolynomial:
        bound = envelope.Push(a) * static_cast<double>(r) /
                (policy.tail_parameter - 1.0);
        break;
    }
    quiet = (bound < policy.abs_tol) ? quiet + 1 : 0;
    if (quiet >= policy.quiet_run) {
      Evaluation out;
      out.value = acc.Value();
      out.error_estimate = bound + acc.RoundingBound();
      out.terms_used[label] = r;
      return out;
    }
  }
  throw ConvergenceError("sum_series(" + label + "): max_terms exhausted");
}

SeriesEvaluator square_indicator_evaluator(std::int64_t k) {
  if (k < 1) throw DomainError("k must be >= 1");
  const double kd = static_cast<double>(k);
  const double sk = std::sqrt(kd);
  SeriesEvaluator f;
  f.label = "square-indicator(k=" + std::to_string(k) + ")";
  f.declared_tol = 1e-15;
  f.evaluate = [kd, sk](Complex z) {
    const Complex w = std::sqrt(z);
    const Complex z2 = z * z;
    return std::pow(kPi, 4) / (90.0 * kd * kd * z) - kPi * kPi / (6.0 * kd * z2) -
           1.0 / (2.0 * z2 * z) +
           kPi * StableCoth(kPi * w / sk) / (2.0 * z2 * w * sk);
  };
  return f;
}

SeriesEvaluator geometric_evaluator() {
  SeriesEvaluator f;
  f.label = "geometric";
  f.declared_tol = 1e-16;
  f.evaluate = [](Complex z) {
    CompensatedComplexSum acc;
    double c = 1.0;
    // 2^-64 is below double resolution relative to the leading term.
    for (int n = 1; n <= 64; ++n) {
      c *= 0.5;
      acc.Add(c / (static_cast<double>(n) + z));
    }
    return acc.Value();
  };
  return f;
}

SeriesEvaluator finite_evaluator(std::vector<double> coeffs) {
  SeriesEvaluator f;
  f.label = "finite";
  f.evaluate = [c = std::move(coeffs)](Complex z) {
    CompensatedComplexSum acc;
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (c[n] != 0.0) acc.Add(c[n] / (static_cast<double>(n + 1) + z));
    }
    return acc.Value();
  };
  return f;
}

Evaluation invert_jump(const std::function<double(double)>& jump,
                       std::int64_t n, double t,
                       const TruncationPolicy& policy) {
  if (!(t > 0.0)) throw DomainError("t must be positive");
  const double nd = static_cast<double>(n);
  const double jtol = std::max(policy.abs_tol * 1e-3, 1e-16);
  Evaluation series = sum_series(
      [&](std::int64_t k) {
        const double kd = static_cast<double>(k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * (jump(kd - nd) + jump(-kd - nd)) *
               integral_J(k, t, jtol).value;
      },
      policy, "inversion");
  const double sh = std::sinh(kPi * t);
  const double head =
      2.0 * jump(-nd) * sh * std::atan(std::tanh(kPi * t / 2.0)) / (kPi * kPi * t);
  Evaluation out = series;
  out.value = sh / kPi * series.value + head;
  out.error_estimate = sh / kPi * series.error_estimate;
  return out;
}

Evaluation invert_series(const SeriesEvaluator& f, std::int64_t n, double t,
                         const TruncationPolicy& policy) {
  const auto jump = [&](double x) { return -f.evaluate(Complex(x, t)).imag(); };
  Evaluation out = invert_jump(jump, n, t, policy);
  out.error_estimate += f.declared_tol;
  return out;
}

double lemma4_residual(const std::vector<double>& f, double beta, double t,
                       std::int64_t n_terms) {
  if (!(std::fabs(beta) <= 1.0)) throw DomainError("lemma4: |beta| must be <= 1");
  if (!(t > 0.0)) throw DomainError("lemma4: t must be positive");
  const std::int64_t n =
      std::min<std::int64_t>(n_terms, static_cast<std::int64_t>(f.size()));
  if (n <= 0) return 0.0;
  const auto jump = [&](double x) {
    CompensatedSum s;
    for (std::int64_t i = 1; i <= n; ++i) {
      const double d = static_cast<double>(i) + x;
      s.Add(f[i - 1] / (d * d + t * t));
    }
    return t * s.Value();
  };
  // cosh(pi b t)/sinh(pi t) without overflow.
  const double ab = std::fabs(beta);
  const double ratio = std::exp(kPi * t * (ab - 1.0)) *
                       (1.0 + std::exp(-2.0 * kPi * ab * t)) /
                       (-std::expm1(-2.0 * kPi * t));
  CompensatedComplexSum lhs_sum;
  for (std::int64_t i = 1; i <= n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    lhs_sum.Add(sign * std::polar(1.0, -kPi * static_cast<double>(i) * beta) *
                f[i - 1]);
  }
  const Complex lhs = kPi * ratio * lhs_sum.Value();

  const std::int64_t kmax = 2 * n;
  std::vector<Complex> pos, neg;
  pos.reserve(kmax);
  neg.reserve(kmax);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const double kd = static_cast<double>(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    pos.push_back(sign * std::polar(1.0, kPi * kd * beta) * jump(kd));
    neg.push_back(sign * std::polar(1.0, -kPi * kd * beta) * jump(-kd));
  }
  Complex rhs = jump(0.0);
  if (ab == 1.0) {
    // Phases cancel and both series are one-signed: add the integral
    // estimate sum_{j>J} 1/(j^2+t^2) ~ (pi/2 - atan((J+1/2)/t))/t for each
    // coefficient's shifted tail.
    CompensatedComplexSum acc;
    for (const Complex& z : pos) acc.Add(z);
    for (const Complex& z : neg) acc.Add(z);
    const auto tail = [t](double j) {
      return (kPi / 2.0 - std::atan((j + 0.5) / t)) / t;
    };
    CompensatedSum tails;
    for (std::int64_t i = 1; i <= n; ++i) {
      const double id = static_cast<double>(i);
      const double kd = static_cast<double>(kmax);
      tails.Add(f[i - 1] * (tail(kd + id) + tail(kd - id)));
    }
    rhs += acc.Value() + t * tails.Value();
  } else {
    rhs += LevinU(pos, 12).second + LevinU(neg, 12).second;
  }
  return std::abs(lhs - rhs);
}

double self_consistency_residual(const SeriesEvaluator& f, double t,
                                 const TruncationPolicy& policy) {
  if (!(t > 0.0)) throw DomainError("t must be positive");
  const auto jump = [&](double x) { return -f.evaluate(Complex(x, t)).imag(); };
  const double lhs =
      -2.0 * std::atan(std::tanh(kPi * t / 2.0)) * jump(0.0) / (kPi * t);
  const double jtol = std::max(policy.abs_tol * 1e-3, 1e-16);
  const Evaluation rhs = sum_series(
      [&](std::int64_t k) {
        const double kd = static_cast<double>(k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * (jump(kd) + jump(-kd)) * integral_J(k, t, jtol).value;
      },
      policy, "balance");
  return std::fabs(lhs - rhs.value);
}

}  // namespace arith

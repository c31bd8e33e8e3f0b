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

#include <cmath>
#include <numbers>

#include "arith/errors.h"
#include "gtest/gtest.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(SumSeries, Geometric) {
  const Evaluation e = sum_series([](std::int64_t r) { return std::ldexp(1.0, -r); },
                                  TruncationPolicy::Exponential(0.5));
  EXPECT_NEAR(e.value, 1.0, 1e-12);
  // The estimate is a true bound here.
  EXPECT_GE(e.error_estimate, std::fabs(e.value - 1.0));
}

TEST(SumSeries, GeometricBoundHoldsAcrossRatios) {
  for (double rho : {0.1, 0.5, 0.9}) {
    const Evaluation e =
        sum_series([rho](std::int64_t r) { return std::pow(rho, r); },
                   TruncationPolicy::Exponential(rho, 1e-10));
    const double exact = rho / (1 - rho);
    EXPECT_GE(e.error_estimate, std::fabs(e.value - exact)) << rho;
    EXPECT_LT(std::fabs(e.value - exact), 1e-10) << rho;
  }
}

TEST(SumSeries, AlternatingZeta) {
  const Evaluation e = sum_series(
      [](std::int64_t r) {
        return (r % 2 ? 1.0 : -1.0) / (static_cast<double>(r) * r);
      },
      TruncationPolicy::Alternating(1e-8));
  EXPECT_NEAR(e.value, kPi * kPi / 12, 1e-8);
}

TEST(SumSeries, PolynomialTail) {
  const Evaluation e = sum_series(
      [](std::int64_t r) { return 1.0 / std::pow(static_cast<double>(r), 3); },
      TruncationPolicy::Polynomial(3.0, 1e-7));
  EXPECT_NEAR(e.value, 1.2020569031595942, 1e-7);
  EXPECT_GE(e.error_estimate, std::fabs(e.value - 1.2020569031595942));
}

TEST(SumSeries, AllZero) {
  TruncationPolicy p = TruncationPolicy::Exponential(0.5);
  const Evaluation e = sum_series([](std::int64_t) { return 0.0; }, p, "z");
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.terms_used.at("z"), p.quiet_run);
}

TEST(SumSeries, ExhaustionThrows) {
  TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-12);
  p.max_terms = 100;
  EXPECT_THROW(sum_series([](std::int64_t r) { return 1.0 / r; }, p),
               ConvergenceError);
}

TEST(SumSeries, Deterministic) {
  const auto f = [](std::int64_t r) { return std::sin(r) / (double(r) * r); };
  const TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-5);
  EXPECT_EQ(sum_series(f, p).value, sum_series(f, p).value);
}

TEST(TruncationPolicy, Validation) {
  EXPECT_THROW(TruncationPolicy::Polynomial(1.0).Validate(), DomainError);
  TruncationPolicy p = TruncationPolicy::Alternating();
  p.quiet_run = 0;
  EXPECT_THROW(p.Validate(), DomainError);
  p = TruncationPolicy::Exponential(0.5);
  p.abs_tol = 0.0;
  EXPECT_THROW(p.Validate(), DomainError);
}

TEST(SumTwoSided, Lorentzian) {
  // sum over all integers of 1/(1 + r^2) = pi coth(pi).
  const Evaluation e = sum_two_sided(
      [](std::int64_t r) { return 1.0 / (1.0 + double(r) * r); }, -3, 3,
      TruncationPolicy::Polynomial(2.0, 1e-4));
  EXPECT_NEAR(e.value, kPi / std::tanh(kPi), 2e-4);
  EXPECT_GE(e.error_estimate, std::fabs(e.value - kPi / std::tanh(kPi)) * 0.5);
}

TEST(InvertSeries, Examples) {
  const TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-12);
  EXPECT_NEAR(invert_series(square_indicator_evaluator(1), 4, 1, p).value,
              1.0 / 16, 1e-10);
  EXPECT_NEAR(invert_series(square_indicator_evaluator(1), 3, 1, p).value, 0.0,
              1e-10);
  EXPECT_NEAR(invert_series(geometric_evaluator(), 5, 1, p).value, 1.0 / 32,
              1e-10);
}

TEST(InvertSeries, RecoversAndVanishes) {
  const TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-10);
  for (int n = -5; n <= 30; ++n) {
    const double sq = n >= 1 ? ((std::round(std::sqrt(n)) * std::round(std::sqrt(n)) == n)
                                    ? 1.0 / (double(n) * n)
                                    : 0.0)
                             : 0.0;
    const double geo = n >= 1 ? std::ldexp(1.0, -n) : 0.0;
    const Evaluation a = invert_series(square_indicator_evaluator(1), n, 1, p);
    const Evaluation b = invert_series(geometric_evaluator(), n, 1, p);
    EXPECT_NEAR(a.value, sq, 1e-6) << n;
    EXPECT_NEAR(b.value, geo, 1e-6) << n;
    EXPECT_LE(std::fabs(a.value - sq), a.error_estimate + 1e-12) << n;
    EXPECT_LE(std::fabs(b.value - geo), b.error_estimate + 1e-12) << n;
  }
}

TEST(InvertSeries, FiniteCoefficients) {
  const SeriesEvaluator f = finite_evaluator({0.5, 0.0, 2.0});
  const TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-11);
  EXPECT_NEAR(invert_series(f, 1, 0.7, p).value, 0.5, 1e-8);
  EXPECT_NEAR(invert_series(f, 2, 0.7, p).value, 0.0, 1e-8);
  EXPECT_NEAR(invert_series(f, 3, 0.7, p).value, 2.0, 1e-8);
}

TEST(InvertSeries, RejectsNonPositiveT) {
  EXPECT_THROW(invert_series(geometric_evaluator(), 1, 0.0,
                             TruncationPolicy::Polynomial(2.0)),
               DomainError);
}

std::vector<double> Coefficients(int n, bool geometric) {
  std::vector<double> f(n);
  for (int i = 1; i <= n; ++i) {
    f[i - 1] = geometric ? std::ldexp(1.0, -i) : 1.0 / (double(i) * i);
  }
  return f;
}

TEST(SamplingIdentity, Examples) {
  EXPECT_LT(lemma4_residual(Coefficients(200, true), 0.0, 1.0, 200), 1e-8);
  EXPECT_LT(lemma4_residual(Coefficients(2000, false), 1.0, 0.5, 2000), 1e-4);
  EXPECT_EQ(lemma4_residual(std::vector<double>(30, 0.0), 0.4, 1.0, 30), 0.0);
  EXPECT_THROW(lemma4_residual(Coefficients(5, true), 1.5, 1.0, 5), DomainError);
}

TEST(SamplingIdentity, IntermediateBetas) {
  for (double beta : {-1.0, -0.6, 0.3, 0.9}) {
    EXPECT_LT(lemma4_residual(Coefficients(200, true), beta, 1.0, 200), 1e-6)
        << beta;
  }
}

TEST(Balance, Examples) {
  const TruncationPolicy p = TruncationPolicy::Polynomial(2.0, 1e-12);
  EXPECT_LT(self_consistency_residual(square_indicator_evaluator(1), 1, p), 1e-8);
  EXPECT_LT(self_consistency_residual(square_indicator_evaluator(3), 2, p), 1e-8);
  EXPECT_LT(self_consistency_residual(geometric_evaluator(), 1, p), 1e-10);
}

TEST(Evaluators, ConjugateSymmetry) {
  for (const SeriesEvaluator& f :
       {square_indicator_evaluator(2), geometric_evaluator()}) {
    const std::complex<double> z(-3.3, 0.8);
    const auto a = f.evaluate(z);
    const auto b = f.evaluate(std::conj(z));
    EXPECT_NEAR(a.real(), b.real(), 1e-14);
    EXPECT_NEAR(a.imag(), -b.imag(), 1e-14);
  }
}

}  // namespace
}  // namespace arith

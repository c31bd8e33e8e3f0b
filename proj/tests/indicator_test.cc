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

#include <cmath>

#include "arith/errors.h"
#include "gtest/gtest.h"

namespace arith {
namespace {

TEST(Brute, Examples) {
  EXPECT_EQ(q_bruteforce(1, 1, 4), 1);
  EXPECT_EQ(q_bruteforce(2, 1, 8), 1);
  EXPECT_EQ(q_bruteforce(3, 2, 5), 0);
  EXPECT_EQ(q_bruteforce(2, 2, 32), 1);
  EXPECT_EQ(q_bruteforce(1, 1, 0), 0);
  EXPECT_EQ(q_bruteforce(1, 1, -4), 0);
  EXPECT_EQ(q_bruteforce(1, 3, 1LL << 60), 1);  // (2^10)^6
  EXPECT_EQ(exact_sqrt(3037000499LL * 3037000499LL), 3037000499LL);
  EXPECT_EQ(exact_sqrt(3037000499LL * 3037000499LL - 1), -1);
}

TEST(Analytic, Examples) {
  EXPECT_NEAR(q_analytic(1, 1, 1).value, 1.0, 1e-10);
  EXPECT_NEAR(q_analytic(1, 2, 1).value, 0.0, 1e-4);
  EXPECT_NEAR(q_analytic(2, 8, 1).value, 1.0 / 64, 1e-10);
}

TEST(Analytic, ErrorEstimateCoversTruth) {
  for (std::int64_t k : {1, 2, 3}) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      const Evaluation e = q_analytic(k, n, 1.0);
      const double truth = q_bruteforce(k, 1, n) / (double(n) * n);
      EXPECT_LE(std::fabs(e.value - truth), e.error_estimate) << k << " " << n;
    }
  }
}

TEST(Classify, Examples) {
  const Classification a = q_classify(1, 49, 1);
  EXPECT_EQ(a.value, 1);
  EXPECT_LT(a.residual, 1e-3);
  const Classification b = q_classify(1, 50, 1);
  EXPECT_EQ(b.value, 0);
  EXPECT_LT(b.residual, 1e-3);
  const Classification c = q_classify(5, 45, 1);
  EXPECT_EQ(c.value, 1);
  EXPECT_LT(c.residual, 1e-3);
}

TEST(Classify, RejectsNonPositiveN) {
  EXPECT_THROW(q_classify(1, 0, 1), DomainError);
  EXPECT_THROW(q_analytic(1, -3, 1), DomainError);
}

TEST(Classify, ExhaustedPolicySurfaces) {
  TruncationPolicy p = default_indicator_policy(1e-14);
  p.max_terms = 50;
  EXPECT_THROW(q_analytic(1, 7, 1.0, p), ConvergenceError);
}

TEST(ZeroIdentity, Examples) {
  EXPECT_LT(zero_identity_residual(1, 0, 1), 1e-6);
  EXPECT_LT(zero_identity_residual(2, -1, 1), 1e-6);
  EXPECT_LT(zero_identity_residual(1, -10, 2), 1e-6);
  EXPECT_THROW(zero_identity_residual(1, 3, 1), DomainError);
}

TEST(ZeroIdentity, Range) {
  for (std::int64_t k : {1, 2}) {
    for (std::int64_t n = -20; n <= 0; ++n) {
      EXPECT_LT(zero_identity_residual(k, n, 1), 1e-10) << k << " " << n;
    }
  }
}

TEST(Shifted, Examples) {
  EXPECT_NEAR(q_shifted_analytic(1, 10, 6, 1).value, 1.0 / 256, 1e-10);
  EXPECT_NEAR(q_shifted_analytic(1, 10, -10, 1).value, 0.0, 1e-6);
  EXPECT_NEAR(q_shifted_analytic(1, 10, 7, 1).value, 0.0, 1e-10);
}

TEST(Shifted, AgreesWithUnshiftedAndVanishes) {
  for (std::int64_t k : {1, 2}) {
    for (std::int64_t c : {-25, -13, -7, -1, 0, 3, 6, 15, 26}) {
      const Evaluation e = q_shifted_analytic(k, 10, c, 1.0);
      const std::int64_t r = 10 + c;
      const double truth = r > 0 ? q_bruteforce(k, 1, r) / (double(r) * r) : 0.0;
      EXPECT_LE(std::fabs(e.value - truth), e.error_estimate) << k << " " << c;
    }
  }
}

TEST(Shifted, SharedTableMatchesFreshEvaluation) {
  ShiftedIndicator shared(1, 12, 1.0);
  for (std::int64_t c : {4, 13, -12, 37}) {
    const double a = shared.Evaluate(c, 1e-12).value;
    const double b = q_shifted_analytic(1, 12, c, 1.0).value;
    EXPECT_NEAR(a, b, 1e-12) << c;
  }
}

TEST(General, Examples) {
  EXPECT_NEAR(q_general_analytic(1, 2, 16, 1).value, 1.0 / 256, 1e-8);
  EXPECT_NEAR(q_general_analytic(2, 2, 32, 1).value, 1.0 / 1024, 1e-8);
  EXPECT_NEAR(q_general_analytic(1, 2, 8, 1).value, 0.0, 1e-8);
}

TEST(General, SOneMatchesAnalytic) {
  for (std::int64_t n : {1, 5, 9, 12}) {
    EXPECT_NEAR(q_general_analytic(3, 1, n, 1).value * n * n,
                q_bruteforce(3, 1, n), 1e-6)
        << n;
  }
}

TEST(Coefficients, ZeroPointIsKDependent) {
  // mu(0) carries the pi^4/(90 k^2) term; it is the only k-dependence.
  const CoefficientTable a(1, 1.0), b(2, 1.0);
  const double pi4 = std::pow(3.141592653589793, 4);
  EXPECT_NEAR(a.mu(0) - b.mu(0), pi4 / 90 * (1.0 - 0.25), 1e-13);
}

}  // namespace
}  // namespace arith

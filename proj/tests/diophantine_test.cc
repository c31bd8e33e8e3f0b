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

#include <cmath>

#include "arith/errors.h"
#include "arith/indicator.h"
#include "gtest/gtest.h"

namespace arith {
namespace {

constexpr auto kSum = EquationKind::kSum;
constexpr auto kDiff = EquationKind::kDifference;

TEST(Enumerate, SumKind) {
  const SolutionList s = enumerate_solutions({25, 1, 1, kSum});
  ASSERT_EQ(s.pairs.size(), 2u);  // 9 + 16, 16 + 9
  EXPECT_EQ(s.pairs[0], (std::pair<std::int64_t, std::int64_t>{3, 4}));
  EXPECT_EQ(s.pairs[1], (std::pair<std::int64_t, std::int64_t>{4, 3}));
  EXPECT_FALSE(s.truncated_at_b);
}

TEST(Enumerate, PellKindIsTruncated) {
  // b^2 - 2 a^2 = 1: (a, b) = (2, 3), (12, 17), (70, 99), ...
  const SolutionList s = enumerate_solutions({1, 2, 1, kDiff}, 1000);
  ASSERT_GE(s.pairs.size(), 3u);
  EXPECT_EQ(s.pairs[0].second, 3);
  EXPECT_EQ(s.pairs[1].second, 17);
  EXPECT_EQ(s.pairs[2].second, 99);
  ASSERT_TRUE(s.truncated_at_b);
  EXPECT_NEAR(s.tail_bound, 1.0 / (3.0 * 1e9), 1e-20);
}

TEST(Instances, Validate) {
  EXPECT_THROW(enumerate_solutions({0, 1, 1, kSum}), DomainError);
  EXPECT_THROW(enumerate_solutions({5, 0, 1, kSum}), DomainError);
}

TEST(Weights, PresetsAndValidation) {
  EXPECT_TRUE(WeightSpec::Named("reciprocal"));
  EXPECT_FALSE(WeightSpec::Named("nosuch"));
  EXPECT_DOUBLE_EQ(WeightSpec::Reciprocal()(3), 0.25);
  EXPECT_DOUBLE_EQ(WeightSpec::Alternating()(3), -1.0);
  WeightSpec bad = WeightSpec::Unit();
  bad.bound = 0.5;
  EXPECT_THROW(bad.Validate(10), DomainError);
}

TEST(SumKind, ShiftedMatchesEnumeration) {
  for (const auto& name : {"unit", "alternating", "reciprocal", "geometric"}) {
    const WeightSpec g = *WeightSpec::Named(name);
    for (const DiophantineInstance inst :
         {DiophantineInstance{25, 1, 1, kSum}, DiophantineInstance{34, 1, 2, kSum},
          DiophantineInstance{21, 3, 2, kSum}, DiophantineInstance{7, 2, 3, kSum}}) {
      const Evaluation e = sum_squares_analytic(g, inst, 1.0);
      const double oracle =
          sum_squares_bruteforce(inst, g) / double(inst.k * inst.k);
      EXPECT_LE(std::fabs(e.value - oracle), e.error_estimate)
          << name << " " << inst.n << " " << inst.d << " " << inst.k;
    }
  }
}

TEST(SumKind, ZeroWeightVanishes) {
  const Evaluation e = sum_squares_analytic(WeightSpec::Zero(), {50, 1, 1, kSum}, 1.0);
  EXPECT_NEAR(e.value, 0.0, 1e-8);
}

TEST(DifferenceKind, ShiftedMatchesEnumeration) {
  for (const auto& name : {"unit", "alternating", "reciprocal"}) {
    const WeightSpec g = *WeightSpec::Named(name);
    for (const DiophantineInstance inst :
         {DiophantineInstance{3, 1, 1, kDiff}, DiophantineInstance{1, 2, 1, kDiff},
          DiophantineInstance{7, 3, 2, kDiff}}) {
      const Evaluation e = sum_diff_analytic(g, inst, 1.0, default_sum_policy(1e-7));
      const BoundedValue b = sum_diff_bruteforce(inst, g);
      const double k2 = double(inst.k * inst.k);
      EXPECT_LE(std::fabs(e.value - b.value / k2),
                e.error_estimate + b.tail_bound / k2)
          << name << " " << inst.n << " " << inst.d << " " << inst.k;
    }
  }
}

TEST(DifferenceKind, PellExampleValue) {
  // 1/3^4 + 1/17^4 + 1/99^4 + ... for b^2 - 2 a^2 = 1.
  const Evaluation e = sum_diff_analytic(WeightSpec::Unit(), {1, 2, 1, kDiff}, 1.0);
  const double head = 1 / 81.0 + 1 / 83521.0 + 1 / 96059601.0;
  EXPECT_NEAR(e.value, head, 1e-8);
}

TEST(KernelOrganization, AgreesWithShifted) {
  for (const DiophantineInstance inst :
       {DiophantineInstance{25, 1, 1, kSum}, DiophantineInstance{97, 3, 2, kSum},
        DiophantineInstance{3, 1, 1, kDiff}, DiophantineInstance{1, 2, 1, kDiff}}) {
    for (const KernelWeight w : {KernelWeight::kUnit, KernelWeight::kAlternating}) {
      const WeightSpec g =
          w == KernelWeight::kUnit ? WeightSpec::Unit() : WeightSpec::Alternating();
      const Evaluation a = kernel_weighted_sum(inst, w, 1.0);
      const Evaluation b = inst.kind == kSum ? sum_squares_analytic(g, inst, 1.0)
                                             : sum_diff_analytic(g, inst, 1.0);
      EXPECT_LE(std::fabs(a.value - b.value), a.error_estimate + b.error_estimate)
          << inst.n << " " << inst.d << " " << inst.k;
    }
  }
}

TEST(KernelOrganization, KindChecked) {
  EXPECT_THROW(unit_sum_squares({3, 1, 1, kDiff}, 1.0), DomainError);
  EXPECT_THROW(unit_sum_diff({3, 1, 1, kSum}, 1.0), DomainError);
}

TEST(DivisorPairs, Example) {
  const double expected = 1.0 / 2401 + 1.0 / 625;  // 1/7^4 + 1/5^4
  EXPECT_NEAR(divisor_pair_bruteforce(WeightSpec::Unit(), 6), expected, 1e-18);
  EXPECT_NEAR(divisor_pair_sum_analytic(WeightSpec::Unit(), 6, 1.0).value,
              expected, 1e-8);
}

TEST(DivisorPairs, ReciprocalWeight) {
  for (std::int64_t n : {4, 12, 15}) {
    const Evaluation e =
        divisor_pair_sum_analytic(WeightSpec::Reciprocal(), n, 1.0);
    EXPECT_NEAR(e.value, divisor_pair_bruteforce(WeightSpec::Reciprocal(), n),
                e.error_estimate + 1e-12)
        << n;
  }
}

TEST(WeightedShifts, FiniteMatchesDefinition) {
  for (std::int64_t n : {5, 10, 17}) {
    const WeightSpec h = WeightSpec::Reciprocal();
    double oracle = 0.0;
    for (std::int64_t a = 1; a < n; ++a) {
      const double m = double(n - a);
      oracle += h(a) * q_bruteforce(2, 1, n - a) / (m * m);
    }
    const Evaluation e = weighted_finite_analytic(h, 2, n, 1.0);
    EXPECT_LE(std::fabs(e.value - oracle), e.error_estimate) << n;
  }
}

TEST(WeightedShifts, InfiniteMatchesDefinition) {
  const WeightSpec h = WeightSpec::Geometric();
  double oracle = 0.0;
  for (std::int64_t a = 1; a <= 60; ++a) {
    oracle += h(a) * q_bruteforce(1, 1, 1 + a) / (double(1 + a) * (1 + a));
  }
  const Evaluation e = weighted_infinite_analytic(h, 1, 1, 1.0);
  EXPECT_LE(std::fabs(e.value - oracle), e.error_estimate);
}

}  // namespace
}  // namespace arith

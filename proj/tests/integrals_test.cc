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

#include "arith/integrals.h"

#include <cmath>
#include <numbers>

#include "arith/errors.h"
#include "gtest/gtest.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

// 30-digit mpmath quadrature of the defining integrals.
struct Ref {
  std::int64_t q;
  double t;
  double i, k, j;
};
constexpr Ref kRefs[] = {
    {3, 1.0, 0.0486966817267774134, -0.00329691728873731667, 0.0117251012156341868},
    {0, 1.0, 0.0, 0.0204891169490704907, 0.4725062709989255132},
    {4, 0.5, 0.0366635889647413737, -0.00369377647573770797, -0.00362148319259176136},
    {7, 2.0, 0.0217125665856114533, -7.77822138802540020e-4, 0.00209274009789986662},
    {-9, 0.5, -0.0191331540010115627, -5.21011880665391110e-4, 7.18057586916838425e-4},
};

TEST(ClosedForms, FrozenValues) {
  for (const Ref& r : kRefs) {
    EXPECT_NEAR(integral_I(r.q, r.t, 1e-15).value, r.i, 1e-14) << r.q << " " << r.t;
    EXPECT_NEAR(integral_K(r.q, r.t, 1e-15).value, r.k, 1e-14) << r.q << " " << r.t;
    EXPECT_NEAR(integral_J(r.q, r.t, 1e-15).value, r.j, 1e-14) << r.q << " " << r.t;
  }
}

TEST(ClosedForms, SpecialCasesAndParity) {
  EXPECT_EQ(integral_I(0, 1).value, 0.0);
  EXPECT_DOUBLE_EQ(integral_I(-3, 1).value, -integral_I(3, 1).value);
  EXPECT_DOUBLE_EQ(integral_K(-4, 0.5).value, integral_K(4, 0.5).value);
  EXPECT_DOUBLE_EQ(integral_J(-5, 1).value, integral_J(5, 1).value);
  EXPECT_NEAR(integral_J(0, 1, 1e-15).value, 2 * std::atan(std::tanh(kPi / 2)) / kPi,
              1e-14);
}

TEST(ClosedForms, ErrorEstimateCoversQuadrature) {
  for (double t : {0.5, 1.0, 2.0}) {
    for (int q = -10; q <= 10; ++q) {
      const double qi = quadrature_oracle(IntegralKind::kI, q, t, 1e-12);
      const double qk = quadrature_oracle(IntegralKind::kK, q, t, 1e-12);
      const double qj = quadrature_oracle(IntegralKind::kJ, q, t, 1e-12);
      EXPECT_NEAR(integral_I(q, t).value, qi, 1e-9 + 1e-12) << q << " " << t;
      EXPECT_NEAR(integral_K(q, t).value, qk, 1e-9 + 1e-12) << q << " " << t;
      EXPECT_NEAR(integral_J(q, t).value, qj, 1e-9 + 1e-12) << q << " " << t;
      EXPECT_GE(integral_I(q, t).error_estimate, 0.0);
    }
  }
}

TEST(ClosedForms, LargeArgumentsStayFinite) {
  const IntegralValue j = integral_J(2000, 0.01);
  EXPECT_TRUE(std::isfinite(j.value));
  EXPECT_TRUE(std::isfinite(integral_K(-5000, 0.02).value));
}

TEST(ClosedForms, RejectNonPositiveT) {
  EXPECT_THROW(integral_I(1, 0), DomainError);
  EXPECT_THROW(integral_K(1, -1), DomainError);
  EXPECT_THROW(integral_J(1, 0), DomainError);
}

TEST(QuadratureOracle, Examples) {
  EXPECT_NEAR(quadrature_oracle(IntegralKind::kJ, 0, 1, 1e-10),
              2 * std::atan(std::tanh(kPi / 2)) / kPi, 1e-10);
  EXPECT_NEAR(quadrature_oracle(IntegralKind::kI, 0, 2, 1e-10), 0.0, 1e-10);
  const double k0 = quadrature_oracle(IntegralKind::kK, 0, 1, 1e-10);
  EXPECT_GT(k0, 0.0);
  EXPECT_LT(k0, 0.25);
}

TEST(QuadratureOracle, RejectsTooTightTolerance) {
  EXPECT_THROW(quadrature_oracle(IntegralKind::kJ, 0, 1, 1e-14), DomainError);
}

}  // namespace
}  // namespace arith

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

#ifndef ARITH_INTEGRALS_H_
#define ARITH_INTEGRALS_H_

#include <cstdint>

namespace arith {

inline constexpr double kDefaultIntegralTol = 1e-12;

struct IntegralValue {
  double value = 0.0;
  std::int64_t series_terms_used = 0;
  double error_estimate = 0.0;
};

// The three exponential series shared by the closed forms below:
//   s1 = sum_{r>=1} (-1)^(r-1) e^{-2 pi t r} / (4t^2 r^2 + R^2)
//   s2 = sum_{r>=1} (-1)^(r-1) r e^{-2 pi t r} / (4t^2 r^2 + R^2)
//   s3 = sum_{r>=1} (-1)^(r-1) e^{-2 pi t r} (4t^2 r^2 - R^2)
//                                           / (4t^2 r^2 + R^2)^2
struct ExponentialSeries {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  std::int64_t terms = 0;
  // Bound on the omitted mass of each of the three series.
  double error_estimate = 0.0;
};
ExponentialSeries exponential_series(double r, double t, double tol);

// int_0^1 sin(pi q b)/(e^{2 pi b t} + 1) db.
IntegralValue integral_I(std::int64_t q, double t,
                         double tol = kDefaultIntegralTol);
// int_0^1 b cos(pi q b)/(e^{2 pi b t} + 1) db.
IntegralValue integral_K(std::int64_t q, double t,
                         double tol = kDefaultIntegralTol);
// int_0^1 cos(pi q b)/cosh(pi b t) db.
IntegralValue integral_J(std::int64_t q, double t,
                         double tol = kDefaultIntegralTol);

enum class IntegralKind { kI, kK, kJ };

// Adaptive Gauss-Kronrod (7/15) quadrature of the defining integrals. Throws
// ConvergenceError when the subdivision budget is exhausted.
double quadrature_oracle(IntegralKind kind, std::int64_t q, double t,
                         double tol);

}  // namespace arith

#endif  // ARITH_INTEGRALS_H_

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

#include "arith/kernels.h"

#include <cmath>
#include <numbers>
#include <string>

#include "arith/compensated.h"
#include "arith/errors.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

void RequirePositiveT(double t) {
  if (!(t > 0.0)) {
    throw DomainError("t must be positive, got " + std::to_string(t));
  }
}

}  // namespace

HalfPlaneRoot half_plane_root(double m, double t) {
  RequirePositiveT(t);
  const double r = std::hypot(m, t);
  HalfPlaneRoot root{m, t, 0.0, 0.0};
  // Take the larger coordinate from the radical, the smaller from 2uv = t,
  // so neither suffers cancellation.
  if (m >= 0.0) {
    root.u = std::sqrt((r + m) / 2.0);
    root.v = t / (2.0 * root.u);
  } else {
    root.v = std::sqrt((r - m) / 2.0);
    root.u = t / (2.0 * root.v);
  }
  return root;
}

KernelValue kernel_T(double m, double t) {
  const HalfPlaneRoot h = half_plane_root(m, t);
  const double r = std::hypot(m, t);
  const double a = kPi * h.u;
  const double b = kPi * h.v;
  const double sb = std::sin(b);
  if (a > kOverflowGuard) {
    // Numerator and denominator scaled by 4 e^{-2a}.
    const double e = std::exp(-2.0 * a);
    const double num = 2.0 * h.v * (1.0 - e * e) + 4.0 * e * h.u * std::sin(2.0 * b);
    const double den = t * r * ((1.0 - e) * (1.0 - e) + 4.0 * e * sb * sb);
    return {num / den, true};
  }
  const double sa = std::sinh(a);
  const double num = h.v * std::sinh(2.0 * a) + h.u * std::sin(2.0 * b);
  return {num / (t * r * (sa * sa + sb * sb)), false};
}

KernelValue kernel_V(double m, double t) {
  const HalfPlaneRoot h = half_plane_root(m, t);
  const double r = std::hypot(m, t);
  const double a = kPi * h.u;
  const double b = kPi * h.v;
  const double sb = std::sin(b);
  const double cb = std::cos(b);
  if (a > kOverflowGuard) {
    const double e = std::exp(-2.0 * a);
    const double num =
        2.0 * std::exp(-a) * (h.v * (1.0 - e) * cb + h.u * (1.0 + e) * sb);
    const double den = t * r * ((1.0 - e) * (1.0 - e) + 4.0 * e * sb * sb);
    return {num / den, true};
  }
  const double sa = std::sinh(a);
  const double num = h.v * sa * cb + h.u * std::cosh(a) * sb;
  return {num / (t * r * (sa * sa + sb * sb)), false};
}

KernelValue kernel_G(double m, double t, std::int64_t k) {
  RequirePositiveT(t);
  if (k < 1) throw DomainError("k must be >= 1");
  const HalfPlaneRoot h = half_plane_root(m, t);
  const double r = std::hypot(m, t);
  const double sk = std::sqrt(static_cast<double>(k));
  const double a = kPi * h.u / sk;
  const double b = kPi * h.v / sk;
  const double p = (m * m - t * t) * h.u - 2.0 * m * t * h.v;
  const double q = 2.0 * m * t * h.u + (m * m - t * t) * h.v;
  const double r2 = m * m + t * t;
  const double scale = r2 * r2 * r;
  const double sb = std::sin(b);
  if (a > kOverflowGuard) {
    const double e = std::exp(-2.0 * a);
    const double num = 4.0 * e * p * std::sin(2.0 * b) + 2.0 * q * (1.0 - e * e);
    const double den = (1.0 - e) * (1.0 - e) + 4.0 * e * sb * sb;
    return {num / (den * scale), true};
  }
  const double sa = std::sinh(a);
  const double den = sa * sa + sb * sb;
  // sinh(a) > 0 whenever t > 0, so den cannot vanish.
  if (!(den > 0.0)) throw DomainError("kernel_G: degenerate denominator");
  const double num = p * std::sin(2.0 * b) + q * std::sinh(2.0 * a);
  return {num / (den * scale), false};
}

double mittag_leffler_residual(double theta, double x, std::int64_t n_terms) {
  if (!(std::fabs(theta) <= kPi)) {
    throw DomainError("mittag_leffler_residual: |theta| must be <= pi");
  }
  if (x == 0.0) throw DomainError("mittag_leffler_residual: x must be nonzero");
  const double ax = std::fabs(x);
  // cosh(theta x)/sinh(pi x) is even/odd in x; evaluate for |x| and restore
  // the sign, in exponential form so large |x| cannot overflow.
  const double ratio =
      (std::exp((std::fabs(theta) - kPi) * ax) +
       std::exp((-std::fabs(theta) - kPi) * ax)) /
      (-std::expm1(-2.0 * kPi * ax));
  const double lhs = 1.0 / (2.0 * x * x) - kPi * ratio / (2.0 * ax);
  CompensatedSum rhs;
  for (std::int64_t j = 1; j <= n_terms; ++j) {
    const double jd = static_cast<double>(j);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    rhs.Add(sign * std::cos(jd * theta) / (jd * jd + x * x));
  }
  return std::fabs(lhs - rhs.Value());
}

}  // namespace arith

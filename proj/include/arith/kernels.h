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

#ifndef ARITH_KERNELS_H_
#define ARITH_KERNELS_H_

#include <cstdint>

namespace arith {

// Hyperbolic arguments above this are evaluated in exponential form.
inline constexpr double kOverflowGuard = 300.0;

// Real and imaginary parts of the principal square root of M + it.
struct HalfPlaneRoot {
  double m = 0.0;
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct KernelValue {
  double value = 0.0;
  // True when the exponential form replaced direct sinh/cosh calls.
  bool overflow_guarded = false;
};

// Throws DomainError for t <= 0.
HalfPlaneRoot half_plane_root(double m, double t);

// Closed form of the lattice sum
//   sum_{n>=1} 1/(t^2 + (n^2 + M)^2) = pi/4 T - 1/(2(M^2 + t^2)).
KernelValue kernel_T(double m, double t);

// Alternating counterpart:
//   sum_{n>=1} (-1)^n/(t^2 + (n^2 + M)^2) = pi/2 V - 1/(2(M^2 + t^2)).
KernelValue kernel_V(double m, double t);

// Jump of the square-indicator generating function across the real axis,
//   G = -2 Im[coth(pi w / sqrt(k)) w^-5],  w = sqrt(M + it).
KernelValue kernel_G(double m, double t, std::int64_t k);

// |lhs - partial rhs| of the cosh partial-fraction expansion
//   1/(2x^2) - pi cosh(theta x)/(2x sinh(pi x))
//     = sum_{j>=1} (-1)^(j-1) cos(j theta)/(j^2 + x^2)
// after n_terms terms.
double mittag_leffler_residual(double theta, double x, std::int64_t n_terms);

}  // namespace arith

#endif  // ARITH_KERNELS_H_

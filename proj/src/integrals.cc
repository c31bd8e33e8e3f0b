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

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "arith/compensated.h"
#include "arith/errors.h"
#include "arith/kernels.h"

namespace arith {
namespace {

constexpr double kPi = std::numbers::pi;

void RequirePositiveT(double t) {
  if (!(t > 0.0)) throw DomainError("t must be positive");
}

double ParitySign(std::int64_t q) { return (q % 2 == 0) ? 1.0 : -1.0; }

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double integral;
  double error;
};

Segment Kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k15 = fc * kWk[7];
  double g7 = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k15 += kWk[j] * (f1 + f2);
    // Odd Kronrod indices are the Gauss nodes.
    if (j % 2 == 1) g7 += kWg[j / 2] * (f1 + f2);
  }
  return {k15 * h, std::fabs((k15 - g7) * h)};
}

double Adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int depth, int& budget) {
  if (--budget < 0) {
    throw ConvergenceError("quadrature_oracle: subdivision limit reached");
  }
  const Segment s = Kronrod(f, a, b);
  if (s.error <= tol || depth >= 60) {
    if (s.error > tol) {
      throw ConvergenceError("quadrature_oracle: depth limit reached");
    }
    return s.integral;
  }
  const double c = 0.5 * (a + b);
  return Adaptive(f, a, c, 0.5 * tol, depth + 1, budget) +
         Adaptive(f, c, b, 0.5 * tol, depth + 1, budget);
}

}  // namespace

ExponentialSeries exponential_series(double r, double t, double tol) {
  RequirePositiveT(t);
  ExponentialSeries out;
  CompensatedSum s1, s2, s3;
  const double rate = std::exp(-2.0 * kPi * t);
  const double r2 = r * r;
  for (std::int64_t j = 1;; ++j) {
    const double jd = static_cast<double>(j);
    const double decay = std::exp(-2.0 * kPi * t * jd);
    const double a = 4.0 * t * t * jd * jd;
    const double d = a + r2;
    // Largest prefactor among the three series at this index.
    const double bound = decay * std::max(1.0, jd) / d;
    if (bound < tol / 10.0 || decay == 0.0) {
      out.error_estimate = bound / (1.0 - rate);
      break;
    }
    const double e = (j % 2 == 1) ? decay : -decay;
    s1.Add(e / d);
    s2.Add(e * jd / d);
    s3.Add(e * (a - r2) / (d * d));
    out.terms = j;
  }
  out.s1 = s1.Value();
  out.s2 = s2.Value();
  out.s3 = s3.Value();
  return out;
}

IntegralValue integral_I(std::int64_t q, double t, double tol) {
  RequirePositiveT(t);
  if (q == 0) return {0.0, 0, 0.0};
  const double qd = static_cast<double>(q);
  const double x = kPi * qd / (2.0 * t);
  double iq = 1.0 / (2.0 * kPi * qd);
  if (std::fabs(x) <= kOverflowGuard) iq -= 1.0 / (4.0 * t * std::sinh(x));
  const ExponentialSeries s = exponential_series(qd, t, tol);
  const double c = ParitySign(q - 1) * qd / kPi;
  return {iq + c * s.s1, s.terms, std::fabs(c) * s.error_estimate};
}

IntegralValue integral_K(std::int64_t q, double t, double tol) {
  RequirePositiveT(t);
  const double qd = static_cast<double>(q);
  double kq;
  if (q == 0) {
    kq = 1.0 / (48.0 * t * t);
  } else {
    const double x = kPi * qd / (2.0 * t);
    kq = -1.0 / (2.0 * kPi * kPi * qd * qd);
    if (std::fabs(x) <= kOverflowGuard) {
      const double sh = std::sinh(x);
      kq += std::cosh(x) / (8.0 * t * t * sh * sh);
    }
  }
  const ExponentialSeries s = exponential_series(qd, t, tol);
  const double sign = ParitySign(q - 1);
  const double c2 = 2.0 * t / kPi;
  const double c3 = 1.0 / (kPi * kPi);
  return {kq + sign * (c2 * s.s2 + c3 * s.s3), s.terms,
          (c2 + c3) * s.error_estimate};
}

IntegralValue integral_J(std::int64_t q, double t, double tol) {
  RequirePositiveT(t);
  const double qd = static_cast<double>(q);
  const double x = kPi * std::fabs(qd) / (2.0 * t);
  // 1/(2t cosh x) in a form that underflows instead of overflowing.
  const double e = std::exp(-x);
  const double head = e / (t * (1.0 + e * e));
  CompensatedSum s;
  std::int64_t terms = 0;
  double err = 0.0;
  const double rate = std::exp(-2.0 * kPi * t);
  for (std::int64_t m = 0;; ++m) {
    const double odd = static_cast<double>(2 * m + 1);
    const double decay = std::exp(-kPi * t * odd);
    const double d = t * t * odd * odd + qd * qd;
    const double mag = odd * decay / d;
    if (mag < tol / 10.0 || decay == 0.0) {
      err = mag / (1.0 - rate);
      break;
    }
    s.Add((m % 2 == 0) ? mag : -mag);
    terms = m + 1;
  }
  const double c = 2.0 * t / kPi;
  return {head + ParitySign(q - 1) * c * s.Value(), terms, c * err};
}

double quadrature_oracle(IntegralKind kind, std::int64_t q, double t,
                         double tol) {
  RequirePositiveT(t);
  if (!(tol >= 1e-12)) throw DomainError("quadrature_oracle: tol < 1e-12");
  const double qd = static_cast<double>(q);
  std::function<double(double)> f;
  switch (kind) {
    case IntegralKind::kI:
      f = [=](double b) {
        return std::sin(kPi * qd * b) / (std::exp(2.0 * kPi * b * t) + 1.0);
      };
      break;
    case IntegralKind::kK:
      f = [=](double b) {
        return b * std::cos(kPi * qd * b) / (std::exp(2.0 * kPi * b * t) + 1.0);
      };
      break;
    case IntegralKind::kJ:
      f = [=](double b) {
        return std::cos(kPi * qd * b) / std::cosh(kPi * b * t);
      };
      break;
  }
  int budget = 20000;
  // Pre-split so each panel sees at most a couple of oscillations.
  const int panels = 4 + static_cast<int>(std::fabs(qd));
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = static_cast<double>(i) / panels;
    const double b = static_cast<double>(i + 1) / panels;
    total += Adaptive(f, a, b, tol / panels, 0, budget);
  }
  return total;
}

}  // namespace arith

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

// Checks behind `verify`. Every record reports a residual as diff (oracle 0
// unless a reference value exists) with the analytic allowance, such as a
// partial-sum tail bound, as error_estimate.

#include <cmath>
#include <complex>
#include <numbers>

#include "arith/compensated.h"
#include "arith/divisor_rh.h"
#include "arith/errors.h"
#include "arith/indicator.h"
#include "arith/integrals.h"
#include "arith/kernels.h"
#include "arith/series.h"
#include "commands.h"

namespace arith::cli {

namespace {

constexpr double kPi = std::numbers::pi;
using Items = std::vector<std::function<Record()>>;

Record Residual(const std::string& suite, const std::string& check, Json params,
                double value, double oracle, double allowance, double tol) {
  Record r;
  r.inputs = Json::object();
  r.inputs["suite"] = suite;
  r.inputs["check"] = check;
  for (auto it = params.begin(); it != params.end(); ++it) {
    r.inputs[it.key()] = it.value();
  }
  r.value = value;
  r.oracle = oracle;
  r.diff = value - oracle;
  r.error_estimate = allowance;
  r.tolerance = tol;
  return r;
}

// Wraps a check so that library exceptions become failing records.
std::function<Record()> Guarded(const std::string& suite,
                                const std::string& check, Json params,
                                std::function<Record()> body) {
  return [=]() {
    try {
      return body();
    } catch (const std::exception& e) {
      Record r = Residual(suite, check, params, NAN, 0.0, 0.0, 0.0);
      r.flagged = true;
      r.note = e.what();
      return r;
    }
  };
}

std::complex<double> StableCoth(std::complex<double> z) {
  // Re z > 0 throughout; e^{-2z} cannot overflow.
  const std::complex<double> e = std::exp(-2.0 * z);
  return (1.0 + e) / (1.0 - e);
}

// Direct sum of 1/(z^2 + (x + n^2)^2) (or with (-1)^n) for n = 1..n_max,
// and a bound on what is left.
std::pair<double, double> LatticeDirect(double x, double z, bool alternating,
                                        std::int64_t n_max) {
  CompensatedSum acc;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double q = x + static_cast<double>(n * n);
    acc.Add((alternating && n % 2 ? -1.0 : 1.0) / (z * z + q * q));
  }
  const double nn = static_cast<double>(n_max);
  const double first = 1.0 / ((nn + 1) * (nn + 1) + x) / ((nn + 1) * (nn + 1) + x);
  // Integral bound for the one-signed case; first omitted term otherwise.
  const double tail = alternating
                          ? first
                          : 1.0 / (3.0 * nn * nn * nn) /
                                std::pow(1.0 - std::fabs(x) / (nn * nn), 2.0);
  return {acc.Value(), tail + acc.RoundingBound()};
}

Items KernelItems(double tol) {
  const std::string s = "kernels";
  Items items;
  // Square-root identities, relative.
  for (const double t : {1e-3, 0.5, 1.0, 2.0, 1e3}) {
    for (int m = -50; m <= 50; m += 5) {
      Json p = {{"M", m}, {"t", t}};
      items.push_back(Guarded(s, "root", p, [=]() {
        const HalfPlaneRoot h = half_plane_root(m, t);
        const double scale = std::hypot(static_cast<double>(m), t);
        const double res = std::max(std::fabs(h.u * h.u - h.v * h.v - m),
                                    std::fabs(2.0 * h.u * h.v - t)) / scale;
        const HalfPlaneRoot mirror = half_plane_root(-m, t);
        const double sym = std::fabs(h.v - mirror.u) / std::max(h.v, 1e-300);
        return Residual(s, "root", p, std::max(res, sym), 0.0, 1e-12, tol);
      }));
    }
  }
  // Lattice identities for T and V against direct summation.
  for (const bool alt : {false, true}) {
    for (const double x : {0.0, 1.0, 2.5, -2.5, -4.0}) {
      for (const double z : {0.5, 1.0, 3.0}) {
        const std::string check = alt ? "lattice_V" : "lattice_T";
        Json p = {{"x", x}, {"z", z}};
        items.push_back(Guarded(s, check, p, [=]() {
          const double closed =
              alt ? kPi / 2.0 * kernel_V(x, z).value : kPi / 4.0 * kernel_T(x, z).value;
          const auto [direct, tail] = LatticeDirect(x, z, alt, 20000);
          return Residual(s, check, p, closed - 1.0 / (2.0 * (x * x + z * z)),
                          direct, tail + 1e-10, tol);
        }));
      }
    }
  }
  // Mittag-Leffler expansion; tail bounds by summation by parts, or the
  // integral bound when the terms are one-signed (theta = pi).
  for (const double theta : {0.0, 1.0, kPi / 2.0, 2.0, kPi}) {
    for (const double x : {0.5, 1.0, 2.0}) {
      const std::int64_t n = 1000;
      Json p = {{"theta", theta}, {"x", x}, {"n_terms", n}};
      items.push_back(Guarded(s, "mittag_leffler", p, [=]() {
        const double nn = static_cast<double>(n);
        const double bound =
            theta == kPi ? 1.0 / nn
                         : 1.0 / (std::fabs(std::cos(theta / 2.0)) *
                                  ((nn + 1) * (nn + 1) + x * x));
        return Residual(s, "mittag_leffler", p,
                        mittag_leffler_residual(theta, x, n), 0.0, bound, tol);
      }));
    }
  }
  // G against the complex coth oracle.
  for (const std::int64_t k : {1, 2, 3}) {
    for (const double t : {0.5, 1.0, 2.0}) {
      for (int m = -50; m <= 50; ++m) {
        Json p = {{"M", m}, {"t", t}, {"k", k}};
        items.push_back(Guarded(s, "G_oracle", p, [=]() {
          const std::complex<double> w = std::sqrt(std::complex<double>(m, t));
          const std::complex<double> c =
              StableCoth(kPi * w / std::sqrt(static_cast<double>(k)));
          const double oracle = -2.0 * std::imag(c * std::pow(w, -5));
          return Residual(s, "G_oracle", p, kernel_G(m, t, k).value, oracle,
                          0.0, tol);
        }));
      }
    }
  }
  // Totality: every kernel finite across the stated box.
  for (const double m : {-1e6, -1e3, -1.0, 0.0, 1.0, 1e3, 1e6}) {
    for (const double t : {1e-3, 1.0, 1e3}) {
      Json p = {{"M", m}, {"t", t}};
      items.push_back(Guarded(s, "finite", p, [=]() {
        const double vals[] = {kernel_T(m, t).value, kernel_V(m, t).value,
                               kernel_G(m, t, 1).value, kernel_G(m, t, 3).value};
        double bad = 0.0;
        for (const double v : vals) bad += std::isfinite(v) ? 0.0 : 1.0;
        return Residual(s, "finite", p, bad, 0.0, 0.0, 0.0);
      }));
    }
  }
  return items;
}

Items IntegralItems(double tol) {
  const std::string s = "integrals";
  constexpr double kOracleTol = 1e-12;
  Items items;
  const char* names[] = {"I", "K", "J"};
  const IntegralKind kinds[] = {IntegralKind::kI, IntegralKind::kK,
                                IntegralKind::kJ};
  for (int which = 0; which < 3; ++which) {
    for (const double t : {0.5, 1.0, 2.0}) {
      for (int q = -10; q <= 10; ++q) {
        Json p = {{"integral", names[which]}, {"q", q}, {"t", t}};
        items.push_back(Guarded(s, "quadrature", p, [=]() {
          const IntegralValue v = which == 0   ? integral_I(q, t)
                                  : which == 1 ? integral_K(q, t)
                                               : integral_J(q, t);
          const double oracle = quadrature_oracle(kinds[which], q, t, kOracleTol);
          Record r = Residual(s, "quadrature", p, v.value, oracle,
                              v.error_estimate + kOracleTol, tol);
          r.terms["series"] = v.series_terms_used;
          return r;
        }));
      }
    }
  }
  // Parity in q, exact from the definitions.
  for (const double t : {0.5, 1.0, 2.0}) {
    for (int q = 1; q <= 10; ++q) {
      Json p = {{"q", q}, {"t", t}};
      items.push_back(Guarded(s, "parity", p, [=]() {
        const double res =
            std::fabs(integral_I(q, t).value + integral_I(-q, t).value) +
            std::fabs(integral_K(q, t).value - integral_K(-q, t).value) +
            std::fabs(integral_J(q, t).value - integral_J(-q, t).value);
        return Residual(s, "parity", p, res, 0.0, 0.0, tol);
      }));
    }
  }
  return items;
}

Items InversionItems(double tol) {
  const std::string s = "inversion";
  Items items;
  const TruncationPolicy policy = TruncationPolicy::Polynomial(2.0, 1e-12);
  for (int which = 0; which < 2; ++which) {
    const std::string name = which == 0 ? "square_indicator" : "geometric";
    for (int n = -5; n <= 30; ++n) {
      Json p = {{"evaluator", name}, {"N", n}, {"t", 1.0}};
      items.push_back(Guarded(s, "recover", p, [=]() {
        const SeriesEvaluator f =
            which == 0 ? square_indicator_evaluator(1) : geometric_evaluator();
        const Evaluation e = invert_series(f, n, 1.0, policy);
        double truth = 0.0;
        if (n >= 1) {
          truth = which == 0 ? q_bruteforce(1, 1, n) / (double(n) * n)
                             : std::ldexp(1.0, -n);
        }
        Record r = Residual(s, "recover", p, e.value, truth, e.error_estimate, tol);
        r.terms = e.terms_used;
        return r;
      }));
    }
  }
  struct Balance {
    std::string evaluator;
    std::int64_t k;
    double t;
  };
  for (const Balance& b : {Balance{"square_indicator", 1, 1.0},
                           Balance{"square_indicator", 3, 2.0},
                           Balance{"geometric", 0, 1.0}}) {
    Json p = {{"evaluator", b.evaluator}, {"k", b.k}, {"t", b.t}};
    items.push_back(Guarded(s, "balance", p, [=]() {
      const SeriesEvaluator f = b.k > 0 ? square_indicator_evaluator(b.k)
                                        : geometric_evaluator();
      return Residual(s, "balance", p, self_consistency_residual(f, b.t, policy),
                      0.0, 0.0, tol);
    }));
  }
  struct Sampling {
    std::string coefficients;
    double beta;
    double t;
    std::int64_t n;
  };
  for (const Sampling& c :
       {Sampling{"geometric", 0.0, 1.0, 200}, Sampling{"inverse_square", 1.0, 0.5, 2000},
        Sampling{"geometric", 0.3, 1.0, 200}, Sampling{"zero", 0.5, 1.0, 50}}) {
    Json p = {{"coefficients", c.coefficients}, {"beta", c.beta}, {"t", c.t},
              {"n_terms", c.n}};
    items.push_back(Guarded(s, "sampling", p, [=]() {
      std::vector<double> f(c.n);
      for (std::int64_t i = 1; i <= c.n; ++i) {
        f[i - 1] = c.coefficients == "geometric"        ? std::ldexp(1.0, -i)
                   : c.coefficients == "inverse_square" ? 1.0 / (double(i) * i)
                                                        : 0.0;
      }
      return Residual(s, "sampling", p, lemma4_residual(f, c.beta, c.t, c.n),
                      0.0, 0.0, tol);
    }));
  }
  return items;
}

Items IdentityItems(double tol) {
  const std::string s = "identities";
  Items items;
  for (const std::int64_t k : {1, 2}) {
    for (int n = -20; n <= 0; ++n) {
      Json p = {{"form", "unshifted"}, {"k", k}, {"N", n}, {"t", 1.0}};
      items.push_back(Guarded(s, "zero", p, [=]() {
        return Residual(s, "zero", p, zero_identity_residual(k, n, 1.0), 0.0,
                        0.0, tol);
      }));
    }
    for (int c = -20; c <= -10; ++c) {
      Json p = {{"form", "shifted"}, {"k", k}, {"N", 10}, {"c", c}, {"t", 1.0}};
      items.push_back(Guarded(s, "zero", p, [=]() {
        const Evaluation e = q_shifted_analytic(k, 10, c, 1.0);
        Record r = Residual(s, "zero", p, e.value, 0.0, e.error_estimate, tol);
        r.terms = e.terms_used;
        return r;
      }));
    }
  }
  return items;
}

Items DecompositionItems() {
  const std::string s = "decomposition";
  Items items;
  for (std::int64_t lo = 1; lo <= 10000; lo += 1000) {
    Json p = {{"from", lo}, {"to", lo + 999}};
    items.push_back(Guarded(s, "sigma_split", p, [=]() {
      double worst = 0.0;
      for (std::int64_t n = lo; n < lo + 1000; ++n) {
        worst = std::max(worst, sigma_decomposition_check(n));
      }
      return Residual(s, "sigma_split", p, worst, 0.0, 0.0, 0.0);
    }));
  }
  return items;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "kernels", "integrals", "inversion", "identities", "decomposition", "all"};
  return names;
}

std::vector<std::function<Record()>> SuiteItems(const std::string& suite,
                                                double tol) {
  if (suite == "kernels") return KernelItems(tol);
  if (suite == "integrals") return IntegralItems(tol);
  if (suite == "inversion") return InversionItems(tol);
  if (suite == "identities") return IdentityItems(tol);
  if (suite == "decomposition") return DecompositionItems();
  throw ConfigError("unknown suite " + suite);
}

}  // namespace arith::cli

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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "arith/diophantine.h"
#include "arith/divisor_rh.h"
#include "arith/errors.h"
#include "arith/indicator.h"
#include "arith/series.h"
#include "commands.h"

namespace {

using namespace arith;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string Fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// |N^2 q - {0,1}| and classification over k in {1,2,3,5}, N in [1,200].
Outcome IndicatorCorrectness() {
  Outcome o;
  int wrong = 0;
  double worst = 0.0;
  for (std::int64_t k : {1, 2, 3, 5}) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      try {
        const Classification c = q_classify(k, n, 1.0);
        if (c.value != q_bruteforce(k, 1, n)) ++wrong;
        worst = std::max(worst, c.residual);
      } catch (const AmbiguousClassification& e) {
        ++wrong;
        worst = std::max(worst, e.residual());
      }
    }
  }
  o.pass = wrong == 0 && worst < 1e-4;
  o.detail = Fmt("misclassified %.0f of 800, max |N^2 q - class| %.2e", wrong, worst);
  return o;
}

Outcome ZeroIdentities() {
  double unshifted = 0.0, shifted = 0.0;
  for (std::int64_t k : {1, 2}) {
    for (std::int64_t n = -20; n <= 0; ++n) {
      unshifted = std::max(unshifted, zero_identity_residual(k, n, 1.0));
    }
    for (std::int64_t base : {1, 10, 25}) {
      for (std::int64_t r = -10; r <= 0; ++r) {
        shifted = std::max(
            shifted, std::fabs(q_shifted_analytic(k, base, r - base, 1.0).value));
      }
    }
  }
  Outcome o;
  o.pass = unshifted < 1e-6 && shifted < 1e-6;
  o.detail = Fmt("max unshifted %.2e, max shifted %.2e (limit 1e-6)", unshifted,
                 shifted);
  return o;
}

Outcome DiophantineSums() {
  const std::vector<WeightSpec> weights = {
      WeightSpec::Unit(), WeightSpec::Alternating(), WeightSpec::Reciprocal()};
  const TruncationPolicy policy = default_sum_policy(1e-7);
  int bad_oracle = 0, bad_kernel = 0, bad_equiv = 0, checked = 0;
  double worst_excess = -1e300;
  for (const EquationKind kind : {EquationKind::kSum, EquationKind::kDifference}) {
    for (std::int64_t d = 1; d <= 3; ++d) {
      for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t n = 1; n <= 100; ++n) {
          const DiophantineInstance inst{n, d, k, kind};
          const double k2 = double(k * k);
          const std::vector<Evaluation> shifted =
              shifted_weighted_sums(weights, inst, 1.0, policy);
          const Evaluation kernel =
              kernel_weighted_sum(inst, KernelWeight::kUnit, 1.0, policy);
          for (std::size_t w = 0; w < weights.size(); ++w) {
            double oracle = 0.0, tail = 0.0;
            if (kind == EquationKind::kSum) {
              oracle = sum_squares_bruteforce(inst, weights[w]) / k2;
            } else {
              const BoundedValue b = sum_diff_bruteforce(inst, weights[w]);
              oracle = b.value / k2;
              tail = b.tail_bound / k2;
            }
            const double allow = 1e-6 + shifted[w].error_estimate + tail;
            const double excess = std::fabs(shifted[w].value - oracle) - allow;
            worst_excess = std::max(worst_excess, excess);
            if (excess > 0) ++bad_oracle;
            if (w == 0) {
              if (std::fabs(kernel.value - oracle) >
                  1e-6 + kernel.error_estimate + tail) {
                ++bad_kernel;
              }
              if (std::fabs(kernel.value - shifted[0].value) >
                  kernel.error_estimate + shifted[0].error_estimate) {
                ++bad_equiv;
              }
            }
            ++checked;
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = bad_oracle == 0 && bad_kernel == 0 && bad_equiv == 0;
  o.detail = Fmt("%.0f weighted checks; oracle misses %.0f, kernel misses %.0f", checked,
                 bad_oracle, bad_kernel) +
             Fmt(", organization disagreements %.0f; max |diff| minus allowance %.2e", bad_equiv,
                 worst_excess);
  return o;
}

Outcome DivisorPairs() {
  int bad = 0;
  double worst = 0.0;
  const TruncationPolicy policy = default_sum_policy(1e-7);
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (const WeightSpec& g : {WeightSpec::Unit(), WeightSpec::Reciprocal()}) {
      const double diff = std::fabs(divisor_pair_sum_analytic(g, n, 1.0, policy).value -
                                    divisor_pair_bruteforce(g, n));
      worst = std::max(worst, diff);
      if (diff >= 1e-6) ++bad;
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = Fmt("max |analytic - enumeration| %.2e over 200 cases, misses %.0f", worst, bad);
  return o;
}

Outcome SigmaRecovery() {
  const auto t0 = std::chrono::steady_clock::now();
  double split = 0.0;
  for (std::int64_t n = 1; n <= 10000; ++n) {
    split = std::max(split, sigma_decomposition_check(n));
  }
  const double split_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int wrong = 0;
  double worst = 0.0, worst_err = 0.0;
  for (std::int64_t n = 2; n <= 100; ++n) {
    try {
      const Evaluation e = sigma_analytic(n, 1.0);
      const double exact = double(sigma_bruteforce(n));
      if (std::llround(e.value) != std::llround(exact)) ++wrong;
      worst = std::max(worst, std::fabs(e.value - exact));
      worst_err = std::max(worst_err, e.error_estimate);
    } catch (const AmbiguousClassification&) {
      ++wrong;
    }
  }
  Outcome o;
  o.pass = split == 0.0 && split_s < 5.0 && wrong == 0 && worst < 0.25 &&
           worst_err < 1e-2;
  o.detail = Fmt("split identity max %.0f in %.2f s; ", split, split_s) +
             Fmt("sigma misses %.0f, max pre-rounding error %.2e, max estimate %.2e",
                 wrong, worst, worst_err);
  return o;
}

Outcome RhInequality() {
  double min_analytic = 1e300, min_exact = 1e300;
  for (std::int64_t n = 2; n <= 200; ++n) {
    const RHRecord r = rh_check(n, 1.0, SigmaMode::kAnalytic);
    min_analytic = std::min(min_analytic, r.margin - r.sigma_error);
  }
  for (std::int64_t n = 2; n <= 5040; ++n) {
    min_exact = std::min(min_exact, rh_check(n, 1.0, SigmaMode::kExact).margin);
  }
  Outcome o;
  o.pass = min_analytic > 0 && min_exact > 0;
  o.detail = Fmt("min analytic margin %.4g (N<=200), min exact margin %.4g (N<=5040)",
                 min_analytic, min_exact);
  return o;
}

Outcome Inversion() {
  const TruncationPolicy policy = TruncationPolicy::Polynomial(2.0, 1e-10);
  double recover = 0.0;
  for (int n = -5; n <= 30; ++n) {
    const double sq =
        n >= 1 ? q_bruteforce(1, 1, n) / (double(n) * n) : 0.0;
    const double geo = n >= 1 ? std::ldexp(1.0, -n) : 0.0;
    recover = std::max(recover, std::fabs(invert_series(square_indicator_evaluator(1),
                                                        n, 1.0, policy).value - sq));
    recover = std::max(recover, std::fabs(invert_series(geometric_evaluator(), n, 1.0,
                                                        policy).value - geo));
  }
  double sampling = 0.0;
  std::vector<double> geo(200), sq(2000);
  for (int i = 1; i <= 200; ++i) geo[i - 1] = std::ldexp(1.0, -i);
  for (int i = 1; i <= 2000; ++i) sq[i - 1] = q_bruteforce(1, 1, i) / (double(i) * i);
  for (double beta : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    sampling = std::max(sampling, lemma4_residual(geo, beta, 1.0, 200));
    sampling = std::max(sampling, lemma4_residual(sq, beta, 1.0, 2000));
  }
  double balance = 0.0;
  const TruncationPolicy tight = TruncationPolicy::Polynomial(2.0, 1e-12);
  balance = std::max(balance, self_consistency_residual(square_indicator_evaluator(1), 1.0, tight));
  balance = std::max(balance, self_consistency_residual(square_indicator_evaluator(3), 2.0, tight));
  balance = std::max(balance, self_consistency_residual(geometric_evaluator(), 1.0, tight));
  Outcome o;
  o.pass = recover < 1e-6 && sampling < 1e-6 && balance < 1e-6;
  o.detail = Fmt("max recovery error %.2e, sampling residual %.2e, balance residual %.2e",
                 recover, sampling, balance);
  return o;
}

Outcome KernelsAndIntegrals() {
  int bad = 0, total = 0;
  double g_worst = 0.0, quad_worst = 0.0, identity_excess = 0.0;
  for (const std::string suite : {"kernels", "integrals"}) {
    for (const auto& item : cli::SuiteItems(suite, 1e-10)) {
      const cli::Record r = item();
      ++total;
      if (r.Failed()) ++bad;
      const std::string check = r.inputs["check"].get<std::string>();
      const double d = std::fabs(r.diff);
      if (check == "G_oracle") g_worst = std::max(g_worst, d);
      if (check == "quadrature") quad_worst = std::max(quad_worst, d);
      if (check == "lattice_T" || check == "lattice_V" || check == "mittag_leffler") {
        identity_excess = std::max(identity_excess, d - r.error_estimate);
      }
    }
  }
  Outcome o;
  o.pass = bad == 0 && g_worst < 1e-10 && quad_worst < 1e-9 && identity_excess <= 0;
  o.detail = Fmt("%.0f checks, %.0f failed; G vs oracle %.2e, ", total, bad, g_worst) +
             Fmt("closed forms vs quadrature %.2e, max identity residual beyond tail bound %.2e",
                 quad_worst, identity_excess);
  return o;
}

Outcome TIndependence() {
  const std::vector<double> ts = {0.8, 1.0, 1.5};
  int bad = 0, pairs = 0;
  double worst_ratio = 0.0;
  const auto compare = [&](const std::vector<Evaluation>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const double allow = v[i].error_estimate + v[j].error_estimate;
        const double gap = std::fabs(v[i].value - v[j].value);
        worst_ratio = std::max(worst_ratio, gap / allow);
        if (gap > allow) ++bad;
        ++pairs;
      }
    }
  };
  struct Spot {
    std::int64_t k, n;
  };
  for (const Spot s : {Spot{1, 1}, Spot{1, 2}, Spot{1, 16}, Spot{1, 17}, Spot{1, 49},
                       Spot{1, 50}, Spot{2, 8}, Spot{2, 18}, Spot{3, 27}, Spot{5, 45}}) {
    std::vector<Evaluation> v;
    for (double t : ts) v.push_back(q_analytic(s.k, s.n, t));
    compare(v);
  }
  for (std::int64_t n : {6, 10, 30}) {
    std::vector<Evaluation> v;
    for (double t : ts) v.push_back(sigma_analytic(n, t));
    compare(v);
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = Fmt("%.0f pairs, %.0f outside combined estimates, max gap/estimate %.2f",
                 pairs, bad, worst_ratio);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "indicator correctness", 60, IndicatorCorrectness},
      {2, "zero identities", 10, ZeroIdentities},
      {3, "Diophantine sums", 600, DiophantineSums},
      {4, "divisor-pair sums", 120, DivisorPairs},
      {5, "sigma recovery", 300, SigmaRecovery},
      {6, "RH inequality", 300, RhInequality},
      {7, "inversion machinery", 60, Inversion},
      {8, "kernels and integrals", 60, KernelsAndIntegrals},
      {9, "t-independence", 60, TIndependence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && s <= c.budget_s;
    if (!pass) ++failed;
    std::printf("%s [%d] %s: %s (%.1f s of %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), s, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

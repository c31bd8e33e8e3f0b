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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "arith/diophantine.h"
#include "arith/divisor_rh.h"
#include "arith/errors.h"
#include "arith/indicator.h"

namespace arith::cli {

namespace {

std::int64_t ParseInt(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad integer '" + s + "' in range '" + whole + "'");
  }
  if (used != s.size()) {
    throw ConfigError("bad integer '" + s + "' in range '" + whole + "'");
  }
  return v;
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

constexpr std::int64_t kMaxRangeItems = 10000000;

double Elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Failed evaluation turned into a record rather than an abort.
Record ErrorRecord(Json inputs, double oracle, const std::string& what) {
  Record r;
  r.inputs = std::move(inputs);
  r.value = std::numeric_limits<double>::quiet_NaN();
  r.oracle = oracle;
  r.diff = std::numeric_limits<double>::quiet_NaN();
  r.flagged = true;
  r.note = what;
  return r;
}

Report Assemble(const RunConfig& cfg, std::vector<Record> records) {
  Report report;
  report.config = cfg.ToJson();
  report.records = std::move(records);
  return report;
}

}  // namespace

std::vector<std::int64_t> ParseIntRange(const std::string& spec) {
  if (spec.empty()) throw ConfigError("empty range");
  std::vector<std::int64_t> out;
  for (const std::string& part : Split(spec, ',')) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(ParseInt(part, spec));
      continue;
    }
    const std::int64_t lo = ParseInt(part.substr(0, dots), spec);
    const std::int64_t hi = ParseInt(part.substr(dots + 2), spec);
    if (hi < lo) throw ConfigError("empty range '" + part + "'");
    if (hi - lo >= kMaxRangeItems) throw ConfigError("range too long: " + part);
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (static_cast<std::int64_t>(out.size()) > kMaxRangeItems) {
    throw ConfigError("range too long: " + spec);
  }
  return out;
}

std::vector<double> ParseRealList(const std::string& spec) {
  if (spec.empty()) throw ConfigError("empty list");
  std::vector<double> out;
  for (const std::string& part : Split(spec, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + part + "'");
    }
    if (used != part.size() || !std::isfinite(v)) {
      throw ConfigError("bad number '" + part + "'");
    }
    out.push_back(v);
  }
  return out;
}

int ResolveJobs(int flag_jobs, const char* env_value) {
  if (flag_jobs > 0) return flag_jobs;
  if (env_value != nullptr && *env_value != '\0') {
    const std::string s(env_value);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("ARITH_JOBS must be a positive integer, got '" + s + "'");
    }
    if (used != s.size() || v < 1) {
      throw ConfigError("ARITH_JOBS must be a positive integer, got '" + s + "'");
    }
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Json RunConfig::ToJson() const {
  Json j = Json::object();
  j["command"] = command;
  if (command == "eval-q") {
    j["k"] = k_spec;
    j["s"] = s_spec;
    j["N"] = n_spec;
  } else if (command == "sum") {
    j["kind"] = kind;
    j["method"] = method;
    j["weight"] = weight;
    if (kind != "divisor-pairs") {
      j["d"] = d_spec;
      j["k"] = k_spec;
    }
    j["N"] = n_spec;
    if (kind == "difference") j["horizon"] = horizon;
  } else if (command == "sigma") {
    j["N"] = n_spec;
  } else if (command == "rh") {
    j["mode"] = mode;
    if (range_from_to) {
      j["from"] = from;
      j["to"] = to;
    } else {
      j["N"] = n_spec;
    }
  } else if (command == "verify") {
    j["suite"] = suite;
  }
  j["t"] = Json::array();
  for (const double t : ParseRealList(t_spec)) j["t"].push_back(t);
  j["tol"] = tol;
  j["max_terms"] = max_terms;
  j["jobs"] = jobs;
  j["timing"] = timing;
  return j;
}

std::vector<Record> RunItems(const std::vector<std::function<Record()>>& items,
                             int jobs, bool timing) {
  std::vector<Record> out(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      const auto t0 = std::chrono::steady_clock::now();
      out[i] = items[i]();
      out[i].ms = timing ? Elapsed(t0) : 0.0;
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return out;
}

// ---------------------------------------------------------------- eval-q

Report RunEvalQ(const RunConfig& cfg) {
  const auto ks = ParseIntRange(cfg.k_spec);
  const auto ss = ParseIntRange(cfg.s_spec);
  const auto ns = ParseIntRange(cfg.n_spec);
  const auto ts = ParseRealList(cfg.t_spec);
  for (const auto k : ks) if (k < 1) throw ConfigError("k must be >= 1");
  for (const auto s : ss) if (s < 1) throw ConfigError("s must be >= 1");
  for (const auto n : ns) if (n < 1) throw ConfigError("N must be >= 1 for classification");
  for (const auto t : ts) if (t <= 0) throw ConfigError("t must be > 0");

  std::vector<std::function<Record()>> items;
  for (const double t : ts) {
    for (const auto k : ks) {
      for (const auto s : ss) {
        for (const auto n : ns) {
          items.push_back([=, &cfg]() {
            Json in = {{"k", k}, {"s", s}, {"N", n}, {"t", t}};
            const double n2 = static_cast<double>(n) * static_cast<double>(n);
            const double oracle = q_bruteforce(k, s, n);
            // q/N^2 is needed to tol/N^2 so that N^2 q lands within tol.
            TruncationPolicy policy = default_indicator_policy(
                std::clamp(0.1 * cfg.tol / n2, 1e-15, 1e-10));
            policy.max_terms = cfg.max_terms;
            try {
              Evaluation e;
              int cls = 0;
              if (s == 1) {
                const Classification c = q_classify(k, n, t, policy);
                e = c.analytic;
                cls = c.value;
              } else {
                e = q_general_analytic(k, s, n, t, policy);
                const double scaled = n2 * e.value;
                cls = static_cast<int>(std::lround(scaled));
                if (std::fabs(scaled - cls) >= 0.25 || (cls != 0 && cls != 1)) {
                  throw AmbiguousClassification("ambiguous classification",
                                                scaled, std::fabs(scaled - cls));
                }
              }
              Record r;
              r.inputs = std::move(in);
              r.value = n2 * e.value;
              r.oracle = oracle;
              r.diff = r.value - oracle;
              r.error_estimate = n2 * e.error_estimate;
              r.tolerance = cfg.tol;
              r.terms = e.terms_used;
              r.guards = e.guards_engaged;
              r.extras["class"] = cls;
              if (cls != static_cast<int>(oracle)) {
                r.flagged = true;
                r.note = "misclassified";
              }
              return r;
            } catch (const AmbiguousClassification& e) {
              Record r = ErrorRecord(std::move(in), oracle, e.what());
              r.value = e.value();
              r.diff = r.value - oracle;
              return r;
            } catch (const std::exception& e) {
              return ErrorRecord(std::move(in), oracle, e.what());
            }
          });
        }
      }
    }
  }
  return Assemble(cfg, RunItems(items, cfg.jobs, cfg.timing));
}

// ---------------------------------------------------------------- sum

Report RunSum(const RunConfig& cfg) {
  static const std::set<std::string> kKinds = {"squares", "difference",
                                               "divisor-pairs"};
  if (!kKinds.count(cfg.kind)) throw ConfigError("unknown kind " + cfg.kind);
  const auto weight = WeightSpec::Named(cfg.weight);
  if (!weight) throw ConfigError("unknown weight " + cfg.weight);
  if (cfg.method != "shifted" && cfg.method != "kernel") {
    throw ConfigError("unknown method " + cfg.method);
  }
  const bool kernel = cfg.method == "kernel";
  if (kernel && (cfg.kind == "divisor-pairs" ||
                 (cfg.weight != "unit" && cfg.weight != "alternating"))) {
    throw ConfigError(
        "method kernel covers the squares and difference kinds with unit or "
        "alternating weight only");
  }
  if (cfg.horizon < 1) throw ConfigError("horizon must be >= 1");
  const auto ns = ParseIntRange(cfg.n_spec);
  const bool pairs = cfg.kind == "divisor-pairs";
  const auto ds = pairs ? std::vector<std::int64_t>{1} : ParseIntRange(cfg.d_spec);
  const auto ks = pairs ? std::vector<std::int64_t>{1} : ParseIntRange(cfg.k_spec);
  const auto ts = ParseRealList(cfg.t_spec);
  for (const auto n : ns) if (n < 1) throw ConfigError("N must be >= 1");
  for (const auto d : ds) if (d < 1) throw ConfigError("d must be >= 1");
  for (const auto k : ks) if (k < 1) throw ConfigError("k must be >= 1");
  for (const auto t : ts) if (t <= 0) throw ConfigError("t must be > 0");
  const EquationKind kind = cfg.kind == "difference" ? EquationKind::kDifference
                                                     : EquationKind::kSum;
  const WeightSpec g = *weight;

  std::vector<std::function<Record()>> items;
  for (const double t : ts) {
    for (const auto d : ds) {
      for (const auto k : ks) {
        for (const auto n : ns) {
          items.push_back([=, &cfg]() {
            Json in = Json::object();
            in["kind"] = cfg.kind;
            if (!pairs) {
              in["d"] = d;
              in["k"] = k;
            }
            in["N"] = n;
            in["weight"] = cfg.weight;
            in["method"] = cfg.method;
            in["t"] = t;
            TruncationPolicy policy = default_sum_policy(0.5 * cfg.tol);
            policy.max_terms = cfg.max_terms;
            const double k2 = static_cast<double>(k * k);
            const DiophantineInstance inst{n, d, k, kind};
            double oracle = 0.0;
            double tail = 0.0;
            if (pairs) {
              oracle = divisor_pair_bruteforce(g, n);
            } else if (kind == EquationKind::kSum) {
              oracle = sum_squares_bruteforce(inst, g) / k2;
            } else {
              const BoundedValue b = sum_diff_bruteforce(inst, g, cfg.horizon);
              oracle = b.value / k2;
              tail = b.tail_bound / k2;
            }
            try {
              Evaluation e;
              if (pairs) {
                e = divisor_pair_sum_analytic(g, n, t, policy);
              } else if (kernel) {
                e = kernel_weighted_sum(inst,
                                        cfg.weight == "unit"
                                            ? KernelWeight::kUnit
                                            : KernelWeight::kAlternating,
                                        t, policy);
              } else if (kind == EquationKind::kSum) {
                e = sum_squares_analytic(g, inst, t, policy);
              } else {
                e = sum_diff_analytic(g, inst, t, policy);
              }
              Record r;
              r.inputs = std::move(in);
              r.value = e.value;
              r.oracle = oracle;
              r.diff = e.value - oracle;
              r.error_estimate = e.error_estimate;
              r.tolerance = cfg.tol;
              r.oracle_tail = tail;
              r.terms = e.terms_used;
              r.guards = e.guards_engaged;
              if (kind == EquationKind::kDifference && !pairs) {
                r.note = "oracle enumerates b <= " +
                         std::to_string(cfg.horizon) +
                         "; oracle_tail bounds the rest";
              }
              return r;
            } catch (const std::exception& e) {
              return ErrorRecord(std::move(in), oracle, e.what());
            }
          });
        }
      }
    }
  }
  return Assemble(cfg, RunItems(items, cfg.jobs, cfg.timing));
}

// ---------------------------------------------------------------- sigma, rh

namespace {

// sigma is an integer near 1e2..1e3; its own default target replaces the
// generic tolerance unless one was given.
double SigmaTarget(const RunConfig& cfg) {
  return cfg.tol_given ? cfg.tol : 1e-2;
}

constexpr double kRoundingSlack = 0.25;

}  // namespace

Report RunSigma(const RunConfig& cfg) {
  const auto ns = ParseIntRange(cfg.n_spec);
  const auto ts = ParseRealList(cfg.t_spec);
  for (const auto n : ns) if (n < 1) throw ConfigError("N must be >= 1");
  for (const auto t : ts) if (t <= 0) throw ConfigError("t must be > 0");
  std::vector<std::function<Record()>> items;
  for (const double t : ts) {
    for (const auto n : ns) {
      items.push_back([=, &cfg]() {
        Json in = {{"N", n}, {"t", t}};
        const auto exact = static_cast<double>(sigma_bruteforce(n));
        TruncationPolicy policy = default_sigma_policy(SigmaTarget(cfg));
        policy.max_terms = cfg.max_terms;
        try {
          const Evaluation e = sigma_analytic(n, t, policy);
          Record r;
          r.inputs = std::move(in);
          r.value = e.value;
          r.oracle = exact;
          r.diff = e.value - exact;
          r.error_estimate = e.error_estimate;
          r.tolerance = kRoundingSlack;
          r.terms = e.terms_used;
          r.guards = e.guards_engaged;
          r.extras["rounded"] = static_cast<std::int64_t>(std::llround(e.value));
          if (std::llround(e.value) != static_cast<long long>(exact)) {
            r.flagged = true;
            r.note = "rounds to the wrong integer";
          }
          return r;
        } catch (const AmbiguousClassification& e) {
          Record r = ErrorRecord(std::move(in), exact, e.what());
          r.value = e.value();
          r.diff = r.value - exact;
          return r;
        } catch (const std::exception& e) {
          return ErrorRecord(std::move(in), exact, e.what());
        }
      });
    }
  }
  return Assemble(cfg, RunItems(items, cfg.jobs, cfg.timing));
}

Report RunRh(const RunConfig& cfg) {
  if (cfg.mode != "analytic" && cfg.mode != "exact") {
    throw ConfigError("mode must be analytic or exact");
  }
  std::vector<std::int64_t> ns;
  if (cfg.range_from_to) {
    if (cfg.to < cfg.from) throw ConfigError("empty range --from/--to");
    for (std::int64_t n = cfg.from; n <= cfg.to; ++n) ns.push_back(n);
  } else {
    ns = ParseIntRange(cfg.n_spec);
  }
  const auto ts = ParseRealList(cfg.t_spec);
  for (const auto n : ns) if (n < 2) throw ConfigError("N must be >= 2");
  for (const auto t : ts) if (t <= 0) throw ConfigError("t must be > 0");
  const bool analytic = cfg.mode == "analytic";
  // Exact mode does not depend on t.
  const std::vector<double> t_values =
      analytic ? ts : std::vector<double>{ts.front()};
  std::vector<std::function<Record()>> items;
  for (const double t : t_values) {
    for (const auto n : ns) {
      items.push_back([=, &cfg]() {
        Json in = Json::object();
        in["N"] = n;
        in["mode"] = cfg.mode;
        if (analytic) in["t"] = t;
        const double rhs = lagarias_rhs(n);
        try {
          TruncationPolicy policy = default_sigma_policy(SigmaTarget(cfg));
          policy.max_terms = cfg.max_terms;
          const RHRecord rec = rh_check(
              n, t, analytic ? SigmaMode::kAnalytic : SigmaMode::kExact, policy);
          Record r;
          r.inputs = std::move(in);
          r.value = rec.sigma_analytic;
          r.oracle = rec.lagarias_rhs;
          r.diff = r.value - r.oracle;
          r.error_estimate = rec.sigma_error;
          r.terms["lattice"] = rec.terms;
          r.guards = rec.guards_engaged;
          r.extras["margin"] = rec.margin;
          r.extras["sigma_exact"] = rec.sigma_exact;
          r.extras["harmonic"] = rec.harmonic;
          if (rec.robin_rhs) r.extras["robin_rhs"] = *rec.robin_rhs;
          // The inequality must hold with room for the error estimate.
          if (rec.margin - rec.sigma_error <= 0.0) {
            r.flagged = true;
            r.note = "margin not positive";
          }
          if (analytic && std::llround(rec.sigma_analytic) !=
                              static_cast<long long>(rec.sigma_exact)) {
            r.flagged = true;
            r.note = "sigma mismatch";
          }
          // diff = -margin; the margin test above is the whole criterion.
          r.check_diff = false;
          return r;
        } catch (const std::exception& e) {
          return ErrorRecord(std::move(in), rhs, e.what());
        }
      });
    }
  }
  return Assemble(cfg, RunItems(items, cfg.jobs, cfg.timing));
}

// ---------------------------------------------------------------- verify

Report RunVerify(const RunConfig& cfg) {
  const auto& names = SuiteNames();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw ConfigError("unknown suite " + cfg.suite);
  }
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    for (const auto& s : names) if (s != "all") suites.push_back(s);
  } else {
    suites.push_back(cfg.suite);
  }
  std::vector<std::function<Record()>> items;
  for (const auto& s : suites) {
    auto part = SuiteItems(s, cfg.tol);
    items.insert(items.end(), part.begin(), part.end());
  }
  Report report = Assemble(cfg, RunItems(items, cfg.jobs, cfg.timing));
  // Raw |diff| includes truncation that the allowance (a tail bound)
  // accounts for; the residual proper is what the allowance leaves over.
  Json raw = Json::object();
  Json excess = Json::object();
  for (const auto& s : suites) {
    raw[s] = 0.0;
    excess[s] = 0.0;
  }
  for (const Record& r : report.records) {
    const std::string s = r.inputs["suite"].get<std::string>();
    const double d = std::isfinite(r.diff) ? std::fabs(r.diff)
                                           : std::numeric_limits<double>::infinity();
    raw[s] = std::max(raw[s].get<double>(), d);
    excess[s] = std::max(excess[s].get<double>(),
                         std::max(0.0, d - r.error_estimate));
  }
  report.summary_extra["suite_max_residual"] = excess;
  report.summary_extra["suite_max_abs_diff"] = raw;
  return report;
}

}  // namespace arith::cli

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

// arith: evaluates the analytic formulas against exact oracles.
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using arith::cli::ConfigError;
using arith::cli::Format;
using arith::cli::Report;
using arith::cli::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

void AddCommon(CLI::App* sub, RunConfig& cfg, int& jobs_flag) {
  sub->add_option("--t", cfg.t_spec, "t value or comma list, e.g. 0.8,1.0,1.5")
      ->capture_default_str();
  sub->add_option("--tol", cfg.tol, "absolute tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-terms", cfg.max_terms, "term cap per series")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--jobs", jobs_flag,
                  "worker threads (default: ARITH_JOBS, else all cores)")
      ->check(CLI::PositiveNumber);
  static const std::map<std::string, Format> kFormats = {
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"text", Format::kText}};
  sub->add_option("--format", cfg.format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("text");
  sub->add_flag("!--no-timing", cfg.timing,
                "report ms = 0 so repeated runs are byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic indicator, Diophantine-sum and divisor evaluations"};
  app.require_subcommand(1);
  RunConfig cfg;
  int jobs_flag = 0;

  CLI::App* eval_q = app.add_subcommand("eval-q", "classify N = k m^(2s)");
  eval_q->add_option("--N", cfg.n_spec, "N range, e.g. 1..50")->required();
  eval_q->add_option("--k", cfg.k_spec, "k range")->capture_default_str();
  eval_q->add_option("--s", cfg.s_spec, "s range")->capture_default_str();
  AddCommon(eval_q, cfg, jobs_flag);

  CLI::App* sum = app.add_subcommand("sum", "weighted Diophantine solution sums");
  sum->add_option("--kind", cfg.kind, "squares, difference or divisor-pairs")
      ->capture_default_str()
      ->check(CLI::IsMember({"squares", "difference", "divisor-pairs"}));
  sum->add_option("--N", cfg.n_spec, "N range")->required();
  sum->add_option("--d", cfg.d_spec, "d range")->capture_default_str();
  sum->add_option("--k", cfg.k_spec, "k range")->capture_default_str();
  sum->add_option("--weight", cfg.weight,
                  "unit, alternating, reciprocal, zero, geometric or squares")
      ->capture_default_str();
  sum->add_option("--method", cfg.method,
                  "shifted (any weight) or kernel (unit/alternating)")
      ->capture_default_str()
      ->check(CLI::IsMember({"shifted", "kernel"}));
  sum->add_option("--horizon", cfg.horizon,
                  "b bound of the difference-kind enumeration oracle")
      ->capture_default_str();
  AddCommon(sum, cfg, jobs_flag);

  CLI::App* sigma = app.add_subcommand("sigma", "analytic divisor sums");
  sigma->add_option("--N", cfg.n_spec, "N range")->required();
  AddCommon(sigma, cfg, jobs_flag);

  CLI::App* rh = app.add_subcommand("rh", "Lagarias inequality margins");
  rh->add_option("--mode", cfg.mode, "analytic or exact")
      ->capture_default_str()
      ->check(CLI::IsMember({"analytic", "exact"}));
  auto* from = rh->add_option("--from", cfg.from, "first N")->capture_default_str();
  auto* to = rh->add_option("--to", cfg.to, "last N")->capture_default_str();
  auto* rh_n = rh->add_option("--N", cfg.n_spec, "N range (instead of --from/--to)");
  rh_n->excludes(from)->excludes(to);
  AddCommon(rh, cfg, jobs_flag);

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", cfg.suite,
                     "kernels, integrals, inversion, identities, decomposition "
                     "or all")
      ->capture_default_str();
  AddCommon(verify, cfg, jobs_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    cfg.tol_given = chosen->count("--tol") > 0;
    cfg.range_from_to = cfg.command == "rh" && rh_n->count() == 0;
    cfg.jobs = arith::cli::ResolveJobs(jobs_flag, std::getenv("ARITH_JOBS"));
    Report report;
    if (cfg.command == "eval-q") report = arith::cli::RunEvalQ(cfg);
    if (cfg.command == "sum") report = arith::cli::RunSum(cfg);
    if (cfg.command == "sigma") report = arith::cli::RunSigma(cfg);
    if (cfg.command == "rh") report = arith::cli::RunRh(cfg);
    if (cfg.command == "verify") report = arith::cli::RunVerify(cfg);
    std::fputs(arith::cli::Write(report, cfg.format).c_str(), stdout);
    return report.Failures() == 0 ? kExitOk : kExitFailures;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "arith: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // DomainError and friends: inputs outside the documented domain.
    std::fprintf(stderr, "arith: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "arith: %s\n", e.what());
    return kExitFailures;
  }
}

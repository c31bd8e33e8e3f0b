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

#ifndef ARITH_TOOLS_COMMANDS_H_
#define ARITH_TOOLS_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.h"

namespace arith::cli {

// Bad flags, ranges or environment. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "5", "1..50", "-5..30", "1,4,9..12". Rejects empty or reversed ranges.
std::vector<std::int64_t> ParseIntRange(const std::string& spec);
// "1.0" or "0.8,1.0,1.5"; every value must be finite.
std::vector<double> ParseRealList(const std::string& spec);

// Worker count: --jobs when given (> 0), else ARITH_JOBS, else the number of
// hardware threads. A malformed ARITH_JOBS is a ConfigError.
int ResolveJobs(int flag_jobs, const char* env_value);

struct RunConfig {
  std::string command;
  std::string n_spec = "1";
  std::string k_spec = "1";
  std::string d_spec = "1";
  std::string s_spec = "1";
  std::string t_spec = "1.0";
  double tol = 1e-8;
  bool tol_given = false;
  std::int64_t max_terms = 1000000;
  std::string weight = "unit";
  std::string kind = "squares";
  std::string method = "shifted";
  std::string mode = "exact";
  std::string suite = "all";
  std::int64_t from = 2;
  std::int64_t to = 200;
  bool range_from_to = false;
  std::int64_t horizon = 10000;
  Format format = Format::kText;
  int jobs = 1;
  bool timing = true;

  Json ToJson() const;
};

// Runs items on a pool of workers and returns records in item order.
std::vector<Record> RunItems(const std::vector<std::function<Record()>>& items,
                             int jobs, bool timing);

Report RunEvalQ(const RunConfig& cfg);
Report RunSum(const RunConfig& cfg);
Report RunSigma(const RunConfig& cfg);
Report RunRh(const RunConfig& cfg);
Report RunVerify(const RunConfig& cfg);

// Suite names accepted by verify, "all" included.
const std::vector<std::string>& SuiteNames();
// Checks of one suite, each producing a record with inputs.suite set.
std::vector<std::function<Record()>> SuiteItems(const std::string& suite,
                                                double tol);

}  // namespace arith::cli

#endif  // ARITH_TOOLS_COMMANDS_H_

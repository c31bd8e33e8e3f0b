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

#ifndef ARITH_TOOLS_REPORT_H_
#define ARITH_TOOLS_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace arith::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kText };

// One evaluated item. A record fails when |diff| > tolerance +
// error_estimate + oracle_tail (unless check_diff is off), or when the
// command flagged it explicitly.
struct Record {
  Json inputs = Json::object();
  double value = 0.0;
  double oracle = 0.0;
  double diff = 0.0;
  double error_estimate = 0.0;
  double tolerance = 0.0;
  double oracle_tail = 0.0;  // truncation bound of the oracle itself
  std::map<std::string, std::int64_t> terms;
  bool guards = false;
  double ms = 0.0;
  bool flagged = false;  // command-specific failure (misclassified, ...)
  bool check_diff = true;  // false: only `flagged` decides
  std::string note;
  Json extras = Json::object();

  bool Failed() const;
};

struct Report {
  Json config = Json::object();
  std::vector<Record> records;
  // Extra summary entries (per-suite maxima and the like).
  Json summary_extra = Json::object();

  std::int64_t Failures() const;
  double MaxAbsDiff() const;
};

// %.17g, with null for non-finite values.
std::string FormatNumber(double x);
// Shortest round-trip form, for compact labels.
std::string ShortNumber(double x);
// "k=1;N=5;t=1"
std::string CompactInputs(const Json& inputs);
// Quotes a field per RFC 4180 when it holds a comma, quote, CR or LF.
std::string CsvField(const std::string& field);
// Serializes any JSON value, writing floating point numbers with 17
// significant digits.
std::string SerializeJson(const Json& value);

std::string WriteJson(const Report& report);
std::string WriteCsv(const Report& report);
std::string WriteText(const Report& report);
std::string Write(const Report& report, Format format);

// Column order of the CSV output.
extern const std::vector<std::string> kCsvColumns;

}  // namespace arith::cli

#endif  // ARITH_TOOLS_REPORT_H_

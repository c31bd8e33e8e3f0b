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

#include "report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arith::cli {

const std::vector<std::string> kCsvColumns = {
    "index", "inputs", "value",  "oracle", "diff",  "error_estimate",
    "tolerance", "oracle_tail", "terms", "guards", "ms", "status",
    "note", "extras"};

bool Record::Failed() const {
  if (flagged) return true;
  if (!check_diff) return false;
  if (!std::isfinite(diff)) return true;
  return std::fabs(diff) > tolerance + error_estimate + oracle_tail;
}

std::int64_t Report::Failures() const {
  return std::count_if(records.begin(), records.end(),
                       [](const Record& r) { return r.Failed(); });
}

double Report::MaxAbsDiff() const {
  double m = 0.0;
  for (const Record& r : records) {
    if (std::isfinite(r.diff)) m = std::max(m, std::fabs(r.diff));
  }
  return m;
}

std::string FormatNumber(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string ShortNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string ScalarText(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return ShortNumber(v.get<double>());
  return v.dump();
}

std::string TermsTotal(const std::map<std::string, std::int64_t>& terms) {
  std::int64_t total = 0;
  for (const auto& [label, count] : terms) total += count;
  return std::to_string(total);
}

void Serialize(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        Serialize(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        Serialize(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += FormatNumber(v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

Json RecordJson(const Record& r) {
  Json j = Json::object();
  j["inputs"] = r.inputs;
  j["value"] = r.value;
  j["oracle"] = r.oracle;
  j["diff"] = r.diff;
  j["error_estimate"] = r.error_estimate;
  j["terms"] = Json::object();
  for (const auto& [label, count] : r.terms) j["terms"][label] = count;
  j["guards"] = r.guards;
  j["ms"] = r.ms;
  j["tolerance"] = r.tolerance;
  if (r.oracle_tail != 0.0) j["oracle_tail"] = r.oracle_tail;
  j["status"] = r.Failed() ? "fail" : "pass";
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.extras.empty()) j["extras"] = r.extras;
  return j;
}

Json SummaryJson(const Report& report) {
  Json s = Json::object();
  s["records"] = report.records.size();
  s["failures"] = report.Failures();
  s["max_abs_diff"] = report.MaxAbsDiff();
  for (auto it = report.summary_extra.begin(); it != report.summary_extra.end();
       ++it) {
    s[it.key()] = it.value();
  }
  s["status"] = report.Failures() == 0 ? "pass" : "fail";
  return s;
}

}  // namespace

std::string CompactInputs(const Json& inputs) {
  std::string out;
  for (auto it = inputs.begin(); it != inputs.end(); ++it) {
    if (!out.empty()) out += ';';
    out += it.key() + "=" + ScalarText(it.value());
  }
  return out;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string SerializeJson(const Json& value) {
  std::string out;
  Serialize(value, out);
  return out;
}

std::string WriteJson(const Report& report) {
  Json top = Json::object();
  top["config"] = report.config;
  top["records"] = Json::array();
  for (const Record& r : report.records) top["records"].push_back(RecordJson(r));
  top["summary"] = SummaryJson(report);
  return SerializeJson(top) + "\n";
}

std::string WriteCsv(const Report& report) {
  // RFC 4180: CRLF line breaks, header first.
  std::string out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out += ',';
    out += kCsvColumns[i];
  }
  out += "\r\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const Record& r = report.records[i];
    const std::vector<std::string> fields = {
        std::to_string(i),
        CompactInputs(r.inputs),
        FormatNumber(r.value),
        FormatNumber(r.oracle),
        FormatNumber(r.diff),
        FormatNumber(r.error_estimate),
        FormatNumber(r.tolerance),
        FormatNumber(r.oracle_tail),
        TermsTotal(r.terms),
        r.guards ? "true" : "false",
        FormatNumber(r.ms),
        r.Failed() ? "fail" : "pass",
        r.note,
        r.extras.empty() ? std::string() : CompactInputs(r.extras)};
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (f) out += ',';
      out += CsvField(fields[f] == "null" ? "" : fields[f]);
    }
    out += "\r\n";
  }
  return out;
}

std::string WriteText(const Report& report) {
  std::ostringstream out;
  const std::string command = report.config.value("command", "");
  out << "# " << command << "\n";
  for (const Record& r : report.records) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s value=%-22.15g oracle=%-22.15g diff=%-10.3g err=%-10.3g",
                  r.Failed() ? "FAIL" : "ok", r.value, r.oracle, r.diff,
                  r.error_estimate);
    out << buf << " " << CompactInputs(r.inputs);
    if (!r.extras.empty()) out << " [" << CompactInputs(r.extras) << "]";
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  const Json s = SummaryJson(report);
  out << "# records=" << report.records.size()
      << " failures=" << report.Failures()
      << " max_abs_diff=" << ShortNumber(report.MaxAbsDiff());
  for (auto it = report.summary_extra.begin(); it != report.summary_extra.end();
       ++it) {
    out << " " << it.key() << "=" << SerializeJson(it.value());
  }
  out << " status=" << s["status"].get<std::string>() << "\n";
  return out.str();
}

std::string Write(const Report& report, Format format) {
  switch (format) {
    case Format::kJson:
      return WriteJson(report);
    case Format::kCsv:
      return WriteCsv(report);
    case Format::kText:
      return WriteText(report);
  }
  return {};
}

}  // namespace arith::cli

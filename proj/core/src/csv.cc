//
// Copyright 2026 The LadderLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Trajectory CSV: `t,account,correct,n,empirical,displayed,true_score`, LF
// line endings. `correct`/`n` carry the exact score; `displayed` is a decimal
// or the literal `none`.

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ladderlab/analysis.h"
#include "ladderlab/harness.h"

namespace ladderlab {
namespace {

std::string ShortestDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

template <typename T>
absl::StatusOr<T> ParseField(std::string_view field, int64_t line) {
  T value{};
  auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "line ", line, ": cannot parse '", std::string(field), "'"));
  }
  return value;
}

}  // namespace

std::string TrajectoryToCsv(const Trajectory& trajectory) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const TrajectoryRecord& r : trajectory.records) {
    absl::StrAppend(&out, r.t, ",", r.account, ",", r.empirical.correct, ",",
                    r.empirical.n, ",", FormatDecimal(r.empirical.ToRational()),
                    ",",
                    r.displayed.has_value() ? FormatDecimal(*r.displayed)
                                            : std::string("none"),
                    ",", ShortestDouble(r.true_score), "\n");
  }
  return out;
}

absl::Status WriteTrajectoryCsv(const Trajectory& trajectory,
                                const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  file << TrajectoryToCsv(trajectory);
  file.close();
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("failed writing ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<CsvRow>> ParseTrajectoryCsv(std::string_view text) {
  std::vector<std::string_view> lines = Split(text, '\n');
  if (lines.empty() || lines.front() != kCsvHeader) {
    return absl::InvalidArgumentError("missing or unexpected CSV header");
  }
  std::vector<CsvRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto line = static_cast<int64_t>(i) + 1;
    std::vector<std::string_view> f = Split(lines[i], ',');
    if (f.size() != 7) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line, ": expected 7 fields, got ", f.size()));
    }
    CsvRow row;
    auto t = ParseField<int64_t>(f[0], line);
    auto account = ParseField<int64_t>(f[1], line);
    auto correct = ParseField<int64_t>(f[2], line);
    auto n = ParseField<int64_t>(f[3], line);
    auto empirical = ParseField<double>(f[4], line);
    auto truth = ParseField<double>(f[6], line);
    for (const absl::Status& s :
         {t.status(), account.status(), correct.status(), n.status(),
          empirical.status(), truth.status()}) {
      if (!s.ok()) return s;
    }
    row.t = *t;
    row.account = *account;
    row.correct = *correct;
    row.n = *n;
    row.empirical = *empirical;
    row.true_score = *truth;
    if (f[5] != "none") {
      auto displayed = ParseField<double>(f[5], line);
      if (!displayed.ok()) return displayed.status();
      row.displayed = *displayed;
    }
    rows.push_back(row);
  }
  return rows;
}

absl::StatusOr<std::vector<CsvRow>> ReadTrajectoryCsv(
    const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseTrajectoryCsv(buffer.str());
}

std::optional<double> LberrFromRows(const std::vector<CsvRow>& rows) {
  std::map<int64_t, std::pair<std::vector<double>, std::vector<double>>>
      by_account;
  std::map<int64_t, bool> incomplete;
  for (const CsvRow& row : rows) {
    if (!row.displayed.has_value()) {
      incomplete[row.account] = true;
      continue;
    }
    by_account[row.account].first.push_back(*row.displayed);
    by_account[row.account].second.push_back(row.true_score);
  }
  std::optional<double> worst;
  for (const auto& [account, h] : by_account) {
    if (incomplete[account]) continue;
    const double e = *Lberr(h.first, h.second);
    worst = worst.has_value() ? std::max(*worst, e) : e;
  }
  return worst;
}

std::filesystem::path TrialOutputPath(const std::filesystem::path& base,
                                      int64_t trial, int64_t trials) {
  if (trials <= 1) return base;
  std::filesystem::path out = base;
  out.replace_filename(absl::StrCat(base.stem().string(), ".trial", trial,
                                    base.extension().string()));
  return out;
}

}  // namespace ladderlab

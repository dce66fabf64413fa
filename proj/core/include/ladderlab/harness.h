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

#ifndef LADDERLAB_HARNESS_H_
#define LADDERLAB_HARNESS_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ladderlab/attacks.h"
#include "ladderlab/mechanisms.h"

namespace ladderlab {

struct ExperimentSpec {
  MechanismKind mechanism = MechanismKind::kFullInformation;
  Precision precision;
  std::optional<int64_t> quota;
  AttackKind attack = AttackKind::kBoosting;
  int64_t n = 1000;
  int64_t rounds = 1000;
  int64_t accounts = 1;
  // Label model: label_probs when non-empty (length n), else Bernoulli(label_p)
  // at every position.
  double label_p = 0.5;
  std::vector<double> label_probs;
  int64_t trials = 1;
  uint64_t base_seed = 0;
  // Concurrent trials; output order never depends on it.
  int workers = 1;
};

absl::Status ValidateSpec(const ExperimentSpec& spec);

struct RunRecord {
  int64_t trial = 0;
  uint64_t seed = 0;
  ExperimentSpec spec;
  Trajectory trajectory;
  // Largest per-account leaderboard error; nullopt when no score was shown.
  std::optional<double> lberr;
  std::chrono::nanoseconds wall{0};
};

// Trial i uses seed base_seed + i: labels come from its label substream and
// the attacker from its attack substream.
absl::StatusOr<RunRecord> RunTrial(const ExperimentSpec& spec, int64_t trial);

// All trials, ordered by trial index.
absl::StatusOr<std::vector<RunRecord>> RunExperiment(
    const ExperimentSpec& spec);

// Per-account lberr over the displayed history, maximised over accounts.
// Accounts whose history contains no displayed score are skipped.
std::optional<double> TrajectoryLberr(const Trajectory& trajectory);

// (t, value) where value is the best latest displayed score among the
// accounts that made headline submissions so far. Used for plotting.
std::vector<std::pair<double, double>> HeadlineSeries(
    const Trajectory& trajectory);

// --- CSV ---------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "t,account,correct,n,empirical,displayed,true_score";

std::string TrajectoryToCsv(const Trajectory& trajectory);
absl::Status WriteTrajectoryCsv(const Trajectory& trajectory,
                                const std::filesystem::path& path);

struct CsvRow {
  int64_t t = 0;
  int64_t account = 0;
  int64_t correct = 0;
  int64_t n = 0;
  double empirical = 0.0;
  std::optional<double> displayed;
  double true_score = 0.0;
};

// Parses the text form back, independently of the writer.
absl::StatusOr<std::vector<CsvRow>> ParseTrajectoryCsv(std::string_view text);
absl::StatusOr<std::vector<CsvRow>> ReadTrajectoryCsv(
    const std::filesystem::path& path);
std::optional<double> LberrFromRows(const std::vector<CsvRow>& rows);

// <stem>.trial<i><ext> when trials > 1, else `base` itself.
std::filesystem::path TrialOutputPath(const std::filesystem::path& base,
                                      int64_t trial, int64_t trials);

// --- plots and figures ---------------------------------------------------

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

std::string RenderSvgPlot(std::string_view title, std::string_view x_label,
                          std::string_view y_label,
                          const std::vector<PlotSeries>& series);

enum class Figure { kAttacks, kLadderEnumeration };
absl::StatusOr<Figure> ParseFigure(std::string_view name);

struct FigureCurve {
  std::string name;  // file stem
  RunRecord run;
};

struct FigureOutput {
  std::vector<FigureCurve> curves;
  std::vector<std::filesystem::path> files;
};

// The experiments behind each figure, without touching the filesystem.
absl::StatusOr<std::vector<FigureCurve>> FigureCurves(Figure figure,
                                                      uint64_t seed);

// Runs FigureCurves and writes one CSV per curve plus one SVG per panel into
// outdir. An outdir that cannot be created or written is refused with
// PermissionDenied.
absl::StatusOr<FigureOutput> ReproduceFigure(
    Figure figure, const std::filesystem::path& outdir, uint64_t seed);

}  // namespace ladderlab

#endif  // LADDERLAB_HARNESS_H_

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

#include "ladderlab/harness.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ladderlab/analysis.h"
#include "ladderlab/data.h"
#include "ladderlab/rng.h"

namespace ladderlab {

absl::Status ValidateSpec(const ExperimentSpec& spec) {
  if (spec.n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (spec.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (spec.workers < 1) {
    return absl::InvalidArgumentError("workers must be >= 1");
  }
  if (!(spec.label_p >= 0.0 && spec.label_p <= 1.0)) {
    return absl::InvalidArgumentError("label probability must be in [0, 1]");
  }
  if (!spec.label_probs.empty() &&
      static_cast<int64_t>(spec.label_probs.size()) != spec.n) {
    return absl::InvalidArgumentError(
        absl::StrCat("label model has ", spec.label_probs.size(),
                     " probabilities but n = ", spec.n));
  }
  if (spec.quota.has_value() && *spec.quota < 0) {
    return absl::InvalidArgumentError("quota must be non-negative");
  }
  return ValidateAttack({spec.attack, spec.rounds, spec.accounts, 0},
                        spec.mechanism, static_cast<size_t>(spec.n));
}

std::optional<double> TrajectoryLberr(const Trajectory& trajectory) {
  struct History {
    std::vector<double> displayed;
    std::vector<double> truth;
    bool complete = true;
  };
  std::map<AccountId, History> by_account;
  for (const TrajectoryRecord& r : trajectory.records) {
    History& h = by_account[r.account];
    if (!r.displayed.has_value()) {
      h.complete = false;
      continue;
    }
    h.displayed.push_back(r.displayed->ToDouble());
    h.truth.push_back(r.true_score);
  }
  std::optional<double> worst;
  for (const auto& [id, h] : by_account) {
    if (!h.complete || h.displayed.empty()) continue;
    const double e = *Lberr(h.displayed, h.truth);
    worst = worst.has_value() ? std::max(*worst, e) : e;
  }
  return worst;
}

std::vector<std::pair<double, double>> HeadlineSeries(
    const Trajectory& trajectory) {
  std::map<AccountId, double> latest;
  std::vector<std::pair<double, double>> points;
  for (const TrajectoryRecord& r : trajectory.records) {
    if (!r.headline || !r.displayed.has_value()) continue;
    latest[r.account] = r.displayed->ToDouble();
    double best = 0.0;
    for (const auto& [id, v] : latest) best = std::max(best, v);
    points.emplace_back(static_cast<double>(r.t), best);
  }
  return points;
}

absl::StatusOr<RunRecord> RunTrial(const ExperimentSpec& spec, int64_t trial) {
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return s;
  const auto start = std::chrono::steady_clock::now();
  RunRecord record;
  record.trial = trial;
  record.seed = spec.base_seed + static_cast<uint64_t>(trial);
  record.spec = spec;

  absl::StatusOr<LabelModel> model =
      spec.label_probs.empty()
          ? LabelModel::Uniform(static_cast<size_t>(spec.n), spec.label_p)
          : LabelModel::Create(spec.label_probs);
  if (!model.ok()) return model.status();
  auto set = std::make_shared<const ValidationSet>(
      SampleValidationSet(*model, StreamSeed(record.seed, kLabelStream)));

  absl::StatusOr<Leaderboard> board = Leaderboard::Create(
      {spec.mechanism, spec.precision, spec.quota}, std::move(set));
  if (!board.ok()) return board.status();

  absl::StatusOr<Trajectory> trajectory =
      RunAttack({spec.attack, spec.rounds, spec.accounts, record.seed}, *board);
  if (!trajectory.ok()) return trajectory.status();
  record.trajectory = *std::move(trajectory);
  record.lberr = TrajectoryLberr(record.trajectory);
  record.wall = std::chrono::steady_clock::now() - start;
  return record;
}

absl::StatusOr<std::vector<RunRecord>> RunExperiment(
    const ExperimentSpec& spec) {
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return s;
  const auto trials = static_cast<size_t>(spec.trials);
  std::vector<absl::StatusOr<RunRecord>> results(
      trials, absl::UnknownError("trial did not run"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < trials; i = next++) {
      results[i] = RunTrial(spec, static_cast<int64_t>(i));
    }
  };
  const size_t threads =
      std::min(trials, static_cast<size_t>(std::max(spec.workers, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::vector<RunRecord> out;
  out.reserve(trials);
  for (auto& r : results) {
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

}  // namespace ladderlab

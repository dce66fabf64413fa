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

#ifndef LADDERLAB_ATTACKS_H_
#define LADDERLAB_ATTACKS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ladderlab/data.h"
#include "ladderlab/mechanisms.h"

namespace ladderlab {

enum class AttackKind { kBoosting, kMultiAccountBoosting, kEnumeration, kSwap };

std::string_view AttackName(AttackKind kind);
absl::StatusOr<AttackKind> ParseAttack(std::string_view name);

struct AttackConfig {
  AttackKind kind = AttackKind::kBoosting;
  // Boosting variants: number of random probes. Enumeration: maximum number
  // of single-component flips. Swap: number of swaps.
  int64_t rounds = 1000;
  // Total number of accounts the attacker may use (M).
  int64_t accounts = 1;
  // Trial seed; the attacker draws from its own substream of it.
  uint64_t seed = 0;
};

absl::Status ValidateAttack(const AttackConfig& config, MechanismKind target,
                            size_t n);

struct TrajectoryRecord {
  int64_t t = 0;
  AccountId account = 0;
  Score empirical;
  // The submitting account's displayed score after this submission; nullopt
  // for rank-only feedback.
  DisplayedScore displayed;
  // The submitting account's rank, rank-only feedback only.
  std::optional<int64_t> rank;
  double true_score = 0.0;
  // Marks the submissions that carry the attacker's current best effort
  // (boosting aggregates, every enumeration or swap submission).
  bool headline = false;
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  // Empty when the attack ran to completion; otherwise why it stopped early
  // (account budget exhausted, perfect score reached, quota refusal, ...).
  std::string stop_reason;
  // Non-OK when the leaderboard refused a submission.
  absl::Status refusal;
};

// Stops the run once a submission scores n/n. Evaluated by the instrument
// that watches the run, not by the attacker, who never sees scores under
// rank-only feedback.
enum class StopRule { kNone, kPerfectScore };

// The attacker's only handle on a leaderboard. Forwards submissions and
// returns exactly the mechanism's Feedback; everything else it records
// (empirical and true scores) goes into the trajectory and is not visible to
// the attack code.
class SubmissionChannel {
 public:
  SubmissionChannel(Leaderboard& board, StopRule stop = StopRule::kNone)
      : board_(board), stop_(stop) {}

  absl::StatusOr<Feedback> Submit(AccountId account, const Prediction& pred,
                                  bool headline = false);

  size_t n() const { return board_.n(); }
  MechanismKind target() const { return board_.kind(); }
  // True once the stop rule fired or the board refused a submission.
  bool halted() const { return halted_; }

  const Trajectory& trajectory() const { return trajectory_; }
  Trajectory Release() && { return std::move(trajectory_); }
  void set_stop_reason(std::string reason) {
    if (trajectory_.stop_reason.empty()) {
      trajectory_.stop_reason = std::move(reason);
    }
  }

 private:
  Leaderboard& board_;
  StopRule stop_;
  bool halted_ = false;
  Trajectory trajectory_;
};

// yhat_i = 1 iff (1/m) sum_j v_i^j > 1/2; an exact tie gives 0.
absl::StatusOr<Prediction> MajorityVote(std::span<const Prediction> vectors);

// Incremental form of MajorityVote over a growing list of vectors.
class MajorityTally {
 public:
  explicit MajorityTally(size_t n) : ones_(n, 0) {}
  void Add(const Prediction& v);
  Prediction Vote() const;
  int64_t count() const { return count_; }

 private:
  std::vector<int64_t> ones_;
  int64_t count_ = 0;
};

// Keep-or-flip boosting against a score-revealing leaderboard from a single
// account: each round submits a random probe u, keeps v = u if its score is
// above 1/2 and v = 1 - u otherwise, then submits the majority vote of all
// kept vectors. 2 * rounds submissions.
absl::Status BoostingAttack(SubmissionChannel& channel, int64_t rounds,
                            uint64_t seed);

// Boosting through many accounts. Account 0 submits the aggregates; with
// accounts >= 2 every probe goes to a fresh account 1..accounts-1, so its
// displayed score is the rounded score of that probe alone. With accounts == 1
// probes and aggregates share account 0. A probe whose displayed score is
// exactly 1/2 carries no sign and is discarded; each kept probe is followed
// by an aggregate submission. Stops early when fresh accounts run out.
absl::Status MultiAccountBoostingAttack(SubmissionChannel& channel,
                                        int64_t rounds, int64_t accounts,
                                        uint64_t seed);

// Two-account enumeration. Account 0 submits a random guess; afterwards the
// account that is currently behind submits the leader's vector with one
// untested component flipped. Overtaking the leader means the flip helped and
// it is kept; anything else reverts it. Works from rank tables or, on
// score-showing boards, from the two accounts' displayed scores.
absl::Status EnumerationAttack(SubmissionChannel& channel, int64_t max_flips,
                               uint64_t seed);

// Swap attack on the parameter-free Ladder: start from ceil(n/2) ones, then
// exchange one 1-position with one 0-position per submission, choosing
// uniformly among pairs not tried before. A swap is kept when the displayed
// score rises and reverted otherwise.
absl::Status SwapAttack(SubmissionChannel& channel, int64_t rounds,
                        uint64_t seed);

// Runs `config` against `board`, returning the recorded trajectory. Quota
// refusals end the run and are reported in Trajectory::refusal.
absl::StatusOr<Trajectory> RunAttack(const AttackConfig& config,
                                     Leaderboard& board);

}  // namespace ladderlab

#endif  // LADDERLAB_ATTACKS_H_

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

#ifndef LADDERLAB_MECHANISMS_H_
#define LADDERLAB_MECHANISMS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ladderlab/data.h"
#include "ladderlab/rational.h"

namespace ladderlab {

enum class MechanismKind {
  kFullInformation,
  kRankOnly,
  kOriginalLadder,
  kSimplifiedLadder,
  kParameterFreeLadder,
};

std::string_view MechanismName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name);

// True for every kind whose feedback carries a displayed score.
bool RevealsScore(MechanismKind kind);

using AccountId = int64_t;

// Best displayed score of an account; nullopt is the "no score yet" sentinel
// and compares below every number.
using DisplayedScore = std::optional<Rational>;

struct RankEntry {
  AccountId account = 0;
  int64_t rank = 0;  // 1 is best; tied accounts share a rank.
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};
using RankTable = std::vector<RankEntry>;

// What one submission is allowed to reveal. Exactly one field is populated:
// `displayed` for score-showing kinds, `ranks` for kRankOnly.
struct Feedback {
  std::optional<Rational> displayed;
  std::optional<RankTable> ranks;
};

struct AccountState {
  AccountId id = 0;
  DisplayedScore displayed;
  std::optional<Score> best_empirical;
  // Parameter-free Ladder only: correctness of the current best submission.
  std::vector<uint8_t> best_correctness;
  int64_t submissions = 0;
};

struct MechanismConfig {
  MechanismKind kind = MechanismKind::kFullInformation;
  // Display precision of the Ladder kinds; ignored by the others.
  Precision precision;
  // Per-account submission cap; nullopt means unlimited.
  std::optional<int64_t> quota;
};

// Original Ladder update: R_t = [h]_eta if h > R_{t-1} + eta, else R_{t-1}.
DisplayedScore OriginalLadderStep(const DisplayedScore& prev, const Score& h,
                                  Precision eta);

// Simplified Ladder update: R_t = [h]_eta if h > R_{t-1}, else R_{t-1}. Always
// equal to max(R_{t-1}, [h]_eta).
DisplayedScore SimplifiedLadderStep(const DisplayedScore& prev, const Score& h,
                                    Precision eta);

// Parameter-free Ladder. Let d be the per-sample difference between the new
// and the stored best correctness vectors and s its sample standard
// deviation. The account updates, storing the new vector and displaying h
// (a multiple of 1/n), iff h > R + max(s / sqrt(n), 1/n). The comparison is
// carried out in integers, so it is exact.
DisplayedScore ParameterFreeStep(AccountState& account,
                                 std::span<const uint8_t> correctness,
                                 const Score& h);

// One leaderboard instance. Single writer: submissions are processed
// sequentially and each Submit either fully applies or leaves the state
// untouched.
class Leaderboard {
 public:
  static absl::StatusOr<Leaderboard> Create(
      MechanismConfig config, std::shared_ptr<const ValidationSet> set);

  // Unknown accounts are created on first use. Returns ResourceExhausted
  // when the account's quota is spent.
  absl::StatusOr<Feedback> Submit(AccountId account, const Prediction& pred);

  // Competition ranking by best exact empirical score, descending; ties share
  // a rank. Accounts with equal rank are listed by id.
  RankTable Ranks() const;

  const AccountState* account(AccountId id) const;
  const std::map<AccountId, AccountState>& accounts() const {
    return accounts_;
  }
  MechanismKind kind() const { return config_.kind; }
  const MechanismConfig& config() const { return config_; }
  const ValidationSet& validation_set() const { return *set_; }
  size_t n() const { return set_->size(); }
  // t = sum of per-account submission counts.
  int64_t total_submissions() const { return total_; }
  // Exact empirical score of the most recent accepted submission.
  const std::optional<Score>& last_score() const { return last_score_; }

 private:
  Leaderboard(MechanismConfig config, std::shared_ptr<const ValidationSet> set)
      : config_(config), set_(std::move(set)) {}

  MechanismConfig config_;
  std::shared_ptr<const ValidationSet> set_;
  std::map<AccountId, AccountState> accounts_;
  int64_t total_ = 0;
  std::optional<Score> last_score_;
};

}  // namespace ladderlab

#endif  // LADDERLAB_MECHANISMS_H_

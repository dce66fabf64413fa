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

#include "ladderlab/attacks.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ladderlab/rng.h"

namespace ladderlab {
namespace {

const Rational kHalf(1, 2);

// Ends an attack after a failed submission: a refusal recorded by the channel
// is a normal stop, anything else is an error.
absl::Status StopOrFail(const SubmissionChannel& channel,
                        const absl::Status& status) {
  return channel.halted() ? absl::OkStatus() : status;
}

absl::StatusOr<Rational> DisplayedOf(const Feedback& feedback) {
  if (!feedback.displayed.has_value()) {
    return absl::FailedPreconditionError(
        "attack needs a displayed score but the leaderboard shows none");
  }
  return *feedback.displayed;
}

Prediction RandomPrediction(Rng& rng, size_t n) {
  return *Prediction::Create(rng.RandomBits(n));
}

}  // namespace

std::string_view AttackName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kBoosting:
      return "boost";
    case AttackKind::kMultiAccountBoosting:
      return "multi-boost";
    case AttackKind::kEnumeration:
      return "enum";
    case AttackKind::kSwap:
      return "swap";
  }
  return "unknown";
}

absl::StatusOr<AttackKind> ParseAttack(std::string_view name) {
  for (AttackKind kind :
       {AttackKind::kBoosting, AttackKind::kMultiAccountBoosting,
        AttackKind::kEnumeration, AttackKind::kSwap}) {
    if (AttackName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown attack '", std::string(name), "'"));
}

absl::Status ValidateAttack(const AttackConfig& config, MechanismKind target,
                            size_t n) {
  if (config.rounds < 1) {
    return absl::InvalidArgumentError("rounds must be >= 1");
  }
  if (config.accounts < 1) {
    return absl::InvalidArgumentError("account budget must be >= 1");
  }
  const bool needs_score = config.kind != AttackKind::kEnumeration;
  if (needs_score && !RevealsScore(target)) {
    return absl::InvalidArgumentError(
        absl::StrCat("attack '", std::string(AttackName(config.kind)),
                     "' needs displayed scores; mechanism '",
                     std::string(MechanismName(target)), "' shows only ranks"));
  }
  if (config.kind == AttackKind::kEnumeration && config.accounts < 2) {
    return absl::InvalidArgumentError("enumeration needs at least 2 accounts");
  }
  if (config.kind == AttackKind::kSwap && n < 2) {
    return absl::InvalidArgumentError("swap attack needs n >= 2");
  }
  return absl::OkStatus();
}

absl::StatusOr<Feedback> SubmissionChannel::Submit(AccountId account,
                                                   const Prediction& pred,
                                                   bool headline) {
  if (halted_) {
    return absl::FailedPreconditionError("submission channel is halted");
  }
  absl::StatusOr<Feedback> feedback = board_.Submit(account, pred);
  if (!feedback.ok()) {
    if (absl::IsResourceExhausted(feedback.status())) {
      halted_ = true;
      trajectory_.refusal = feedback.status();
      set_stop_reason(std::string(feedback.status().message()));
    }
    return feedback.status();
  }
  TrajectoryRecord record;
  record.t = static_cast<int64_t>(trajectory_.records.size()) + 1;
  record.account = account;
  record.empirical = *board_.last_score();
  record.displayed = feedback->displayed;
  if (feedback->ranks.has_value()) {
    for (const RankEntry& entry : *feedback->ranks) {
      if (entry.account == account) record.rank = entry.rank;
    }
  }
  record.true_score = *TrueScore(pred, board_.validation_set().source());
  record.headline = headline;
  trajectory_.records.push_back(record);

  if (stop_ == StopRule::kPerfectScore &&
      record.empirical.correct == record.empirical.n) {
    halted_ = true;
    set_stop_reason("perfect score reached");
  }
  return feedback;
}

absl::StatusOr<Prediction> MajorityVote(std::span<const Prediction> vectors) {
  if (vectors.empty()) {
    return absl::InvalidArgumentError("majority vote of an empty list");
  }
  const size_t n = vectors.front().size();
  std::vector<int64_t> ones(n, 0);
  for (const Prediction& v : vectors) {
    if (v.size() != n) {
      return absl::InvalidArgumentError("majority vote over unequal lengths");
    }
    for (size_t i = 0; i < n; ++i) ones[i] += v[i];
  }
  const int64_t m = static_cast<int64_t>(vectors.size());
  std::vector<uint8_t> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = 2 * ones[i] > m;
  return Prediction::Create(std::move(out));
}

void MajorityTally::Add(const Prediction& v) {
  for (size_t i = 0; i < ones_.size(); ++i) ones_[i] += v[i];
  ++count_;
}

Prediction MajorityTally::Vote() const {
  std::vector<uint8_t> out(ones_.size());
  for (size_t i = 0; i < ones_.size(); ++i) out[i] = 2 * ones_[i] > count_;
  return *Prediction::Create(std::move(out));
}

absl::Status BoostingAttack(SubmissionChannel& channel, int64_t rounds,
                            uint64_t seed) {
  Rng rng = Rng::ForStream(seed, kAttackStream);
  MajorityTally tally(channel.n());
  constexpr AccountId kAccount = 0;
  for (int64_t r = 0; r < rounds; ++r) {
    Prediction u = RandomPrediction(rng, channel.n());
    absl::StatusOr<Feedback> probe = channel.Submit(kAccount, u);
    if (!probe.ok()) return StopOrFail(channel, probe.status());
    absl::StatusOr<Rational> score = DisplayedOf(*probe);
    if (!score.ok()) return score.status();
    tally.Add(*score > kHalf ? u : u.Complement());

    absl::StatusOr<Feedback> aggregate =
        channel.Submit(kAccount, tally.Vote(), /*headline=*/true);
    if (!aggregate.ok()) return StopOrFail(channel, aggregate.status());
    if (channel.halted()) return absl::OkStatus();
  }
  return absl::OkStatus();
}

absl::Status MultiAccountBoostingAttack(SubmissionChannel& channel,
                                        int64_t rounds, int64_t accounts,
                                        uint64_t seed) {
  Rng rng = Rng::ForStream(seed, kAttackStream);
  MajorityTally tally(channel.n());
  constexpr AccountId kAggregateAccount = 0;
  AccountId next_probe_account = 1;
  for (int64_t r = 0; r < rounds; ++r) {
    AccountId probe_account = kAggregateAccount;
    if (accounts > 1) {
      if (next_probe_account >= accounts) {
        channel.set_stop_reason(
            absl::StrCat("account budget of ", accounts, " exhausted"));
        return absl::OkStatus();
      }
      probe_account = next_probe_account++;
    }
    Prediction u = RandomPrediction(rng, channel.n());
    absl::StatusOr<Feedback> probe = channel.Submit(probe_account, u);
    if (!probe.ok()) return StopOrFail(channel, probe.status());
    absl::StatusOr<Rational> shown = DisplayedOf(*probe);
    if (!shown.ok()) return shown.status();
    if (*shown == kHalf) continue;
    tally.Add(*shown > kHalf ? u : u.Complement());

    absl::StatusOr<Feedback> aggregate =
        channel.Submit(kAggregateAccount, tally.Vote(), /*headline=*/true);
    if (!aggregate.ok()) return StopOrFail(channel, aggregate.status());
    if (channel.halted()) return absl::OkStatus();
  }
  return absl::OkStatus();
}

absl::Status EnumerationAttack(SubmissionChannel& channel, int64_t max_flips,
                               uint64_t seed) {
  Rng rng = Rng::ForStream(seed, kAttackStream);
  const size_t n = channel.n();
  AccountId leader = 0;
  AccountId trailer = 1;
  // Last displayed score seen for each account (score-showing boards only).
  DisplayedScore shown[2];

  Prediction best = RandomPrediction(rng, n);
  const std::vector<size_t> order = rng.Permutation(n);

  absl::StatusOr<Feedback> first = channel.Submit(leader, best, true);
  if (!first.ok()) return StopOrFail(channel, first.status());
  shown[leader] = first->displayed;

  const size_t flips =
      std::min<size_t>(n, static_cast<size_t>(std::max<int64_t>(max_flips, 0)));
  for (size_t k = 0; k < flips && !channel.halted(); ++k) {
    Prediction candidate = best;
    candidate.Flip(order[k]);
    absl::StatusOr<Feedback> fb = channel.Submit(trailer, candidate, true);
    if (!fb.ok()) return StopOrFail(channel, fb.status());

    bool overtook = false;
    if (fb->ranks.has_value()) {
      std::optional<int64_t> mine;
      std::optional<int64_t> theirs;
      for (const RankEntry& e : *fb->ranks) {
        if (e.account == trailer) mine = e.rank;
        if (e.account == leader) theirs = e.rank;
      }
      overtook = mine.has_value() && theirs.has_value() && *mine < *theirs;
    } else {
      shown[trailer] = fb->displayed;
      overtook =
          shown[trailer].has_value() &&
          (!shown[leader].has_value() || *shown[trailer] > *shown[leader]);
    }
    if (overtook) {
      best = std::move(candidate);
      std::swap(leader, trailer);
    }
  }
  return absl::OkStatus();
}

absl::Status SwapAttack(SubmissionChannel& channel, int64_t rounds,
                        uint64_t seed) {
  Rng rng = Rng::ForStream(seed, kAttackStream);
  const size_t n = channel.n();
  constexpr AccountId kAccount = 0;

  const std::vector<size_t> order = rng.Permutation(n);
  const size_t num_ones = (n + 1) / 2;
  std::vector<uint8_t> bits(n, 0);
  std::vector<size_t> ones(order.begin(), order.begin() + num_ones);
  std::vector<size_t> zeros(order.begin() + num_ones, order.end());
  for (size_t i : ones) bits[i] = 1;
  Prediction current = *Prediction::Create(std::move(bits));

  absl::StatusOr<Feedback> first = channel.Submit(kAccount, current, true);
  if (!first.ok()) return StopOrFail(channel, first.status());
  absl::StatusOr<Rational> shown = DisplayedOf(*first);
  if (!shown.ok()) return shown.status();
  Rational best_shown = *shown;

  std::unordered_set<uint64_t> tested;
  auto key = [n](size_t one, size_t zero) {
    return static_cast<uint64_t>(one) * n + zero;
  };
  for (int64_t r = 0; r < rounds && !channel.halted(); ++r) {
    // Rejection sampling first; fall back to an exhaustive pass when most of
    // the current pairs have been tried.
    std::optional<std::pair<size_t, size_t>> pick;
    for (int attempt = 0; attempt < 64 && !pick; ++attempt) {
      const size_t a = rng.UniformInt(ones.size());
      const size_t b = rng.UniformInt(zeros.size());
      if (!tested.contains(key(ones[a], zeros[b]))) pick.emplace(a, b);
    }
    if (!pick) {
      std::vector<std::pair<size_t, size_t>> open;
      for (size_t a = 0; a < ones.size(); ++a) {
        for (size_t b = 0; b < zeros.size(); ++b) {
          if (!tested.contains(key(ones[a], zeros[b]))) open.emplace_back(a, b);
        }
      }
      if (open.empty()) {
        channel.set_stop_reason("every swap pair has been tried");
        return absl::OkStatus();
      }
      pick = open[rng.UniformInt(open.size())];
    }
    const auto [a, b] = *pick;
    tested.insert(key(ones[a], zeros[b]));

    Prediction candidate = current;
    candidate.Flip(ones[a]);
    candidate.Flip(zeros[b]);
    absl::StatusOr<Feedback> fb = channel.Submit(kAccount, candidate, true);
    if (!fb.ok()) return StopOrFail(channel, fb.status());
    shown = DisplayedOf(*fb);
    if (!shown.ok()) return shown.status();
    if (*shown > best_shown) {
      best_shown = *shown;
      current = std::move(candidate);
      std::swap(ones[a], zeros[b]);
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Trajectory> RunAttack(const AttackConfig& config,
                                     Leaderboard& board) {
  if (absl::Status s = ValidateAttack(config, board.kind(), board.n());
      !s.ok()) {
    return s;
  }
  SubmissionChannel channel(board, config.kind == AttackKind::kEnumeration
                                       ? StopRule::kPerfectScore
                                       : StopRule::kNone);
  absl::Status status;
  switch (config.kind) {
    case AttackKind::kBoosting:
      status = BoostingAttack(channel, config.rounds, config.seed);
      break;
    case AttackKind::kMultiAccountBoosting:
      status = MultiAccountBoostingAttack(channel, config.rounds,
                                          config.accounts, config.seed);
      break;
    case AttackKind::kEnumeration:
      status = EnumerationAttack(channel, config.rounds, config.seed);
      break;
    case AttackKind::kSwap:
      status = SwapAttack(channel, config.rounds, config.seed);
      break;
  }
  if (!status.ok()) return status;
  return std::move(channel).Release();
}

}  // namespace ladderlab

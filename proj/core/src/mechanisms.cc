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

#include "ladderlab/mechanisms.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ladderlab {
namespace {

bool Beats(const Rational& h, const DisplayedScore& threshold) {
  return !threshold.has_value() || h > *threshold;
}

}  // namespace

std::string_view MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kFullInformation:
      return "full";
    case MechanismKind::kRankOnly:
      return "rank";
    case MechanismKind::kOriginalLadder:
      return "ladder";
    case MechanismKind::kSimplifiedLadder:
      return "simplified-ladder";
    case MechanismKind::kParameterFreeLadder:
      return "pf-ladder";
  }
  return "unknown";
}

absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::kFullInformation, MechanismKind::kRankOnly,
        MechanismKind::kOriginalLadder, MechanismKind::kSimplifiedLadder,
        MechanismKind::kParameterFreeLadder}) {
    if (MechanismName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism '", std::string(name), "'"));
}

bool RevealsScore(MechanismKind kind) {
  return kind != MechanismKind::kRankOnly;
}

DisplayedScore OriginalLadderStep(const DisplayedScore& prev, const Score& h,
                                  Precision eta) {
  const Rational score = h.ToRational();
  if (!prev.has_value() || score > *prev + eta.value()) {
    return RoundNearest(score, eta);
  }
  return prev;
}

DisplayedScore SimplifiedLadderStep(const DisplayedScore& prev, const Score& h,
                                    Precision eta) {
  const Rational score = h.ToRational();
  if (Beats(score, prev)) return RoundNearest(score, eta);
  return prev;
}

DisplayedScore ParameterFreeStep(AccountState& account,
                                 std::span<const uint8_t> correctness,
                                 const Score& h) {
  const int64_t n = h.n;
  bool update = false;
  if (!account.displayed.has_value()) {
    update = true;
  } else {
    // Displayed values are multiples of 1/n, so h - R = delta / n.
    const Rational& best = *account.displayed;
    const int64_t best_correct = best.numerator() * (n / best.denominator());
    const int64_t delta = h.correct - best_correct;
    if (delta > 1) {
      int64_t s1 = 0;
      int64_t s2 = 0;
      for (size_t i = 0; i < correctness.size(); ++i) {
        const int64_t d = static_cast<int64_t>(correctness[i]) -
                          static_cast<int64_t>(account.best_correctness[i]);
        s1 += d;
        s2 += d * d;
      }
      // delta/n > s/sqrt(n)  <=>  delta^2 (n - 1) > n*s2 - s1^2, using
      // s^2 = (n*s2 - s1^2) / (n (n - 1)).
      const __int128 lhs = static_cast<__int128>(delta) * delta * (n - 1);
      const __int128 rhs =
          static_cast<__int128>(n) * s2 - static_cast<__int128>(s1) * s1;
      update = (n == 1) || lhs > rhs;
    }
  }
  if (update) {
    account.displayed = h.ToRational();
    account.best_correctness.assign(correctness.begin(), correctness.end());
  }
  return account.displayed;
}

absl::StatusOr<Leaderboard> Leaderboard::Create(
    MechanismConfig config, std::shared_ptr<const ValidationSet> set) {
  if (set == nullptr || set->size() == 0) {
    return absl::InvalidArgumentError("leaderboard needs a validation set");
  }
  if (config.quota.has_value() && *config.quota < 0) {
    return absl::InvalidArgumentError("quota must be non-negative");
  }
  return Leaderboard(config, std::move(set));
}

absl::StatusOr<Feedback> Leaderboard::Submit(AccountId id,
                                             const Prediction& pred) {
  if (pred.size() != n()) {
    return absl::InvalidArgumentError(
        absl::StrCat("prediction has length ", pred.size(),
                     " but the validation set has length ", n()));
  }
  if (config_.quota.has_value()) {
    auto it = accounts_.find(id);
    const int64_t used = it == accounts_.end() ? 0 : it->second.submissions;
    if (used >= *config_.quota) {
      return absl::ResourceExhaustedError(
          absl::StrCat("account ", id, " has used its quota of ",
                       *config_.quota, " submissions"));
    }
  }

  absl::StatusOr<Score> h = EmpiricalScore(pred, *set_);
  if (!h.ok()) return h.status();

  AccountState& account = accounts_[id];
  account.id = id;
  Feedback feedback;
  switch (config_.kind) {
    case MechanismKind::kFullInformation:
      if (Beats(h->ToRational(), account.displayed)) {
        account.displayed = h->ToRational();
      }
      feedback.displayed = h->ToRational();
      break;
    case MechanismKind::kRankOnly:
      break;
    case MechanismKind::kOriginalLadder:
      account.displayed =
          OriginalLadderStep(account.displayed, *h, config_.precision);
      feedback.displayed = account.displayed;
      break;
    case MechanismKind::kSimplifiedLadder:
      account.displayed =
          SimplifiedLadderStep(account.displayed, *h, config_.precision);
      feedback.displayed = account.displayed;
      break;
    case MechanismKind::kParameterFreeLadder: {
      absl::StatusOr<std::vector<uint8_t>> correct = Correctness(pred, *set_);
      feedback.displayed = ParameterFreeStep(account, *correct, *h);
      break;
    }
  }
  if (!account.best_empirical.has_value() ||
      h->correct > account.best_empirical->correct) {
    account.best_empirical = *h;
  }
  ++account.submissions;
  ++total_;
  last_score_ = *h;
  if (config_.kind == MechanismKind::kRankOnly) feedback.ranks = Ranks();
  return feedback;
}

RankTable Leaderboard::Ranks() const {
  std::vector<std::pair<int64_t, AccountId>> order;
  order.reserve(accounts_.size());
  for (const auto& [id, state] : accounts_) {
    if (state.best_empirical.has_value()) {
      order.emplace_back(state.best_empirical->correct, id);
    }
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  RankTable table;
  table.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const int64_t rank = (i > 0 && order[i].first == order[i - 1].first)
                             ? table.back().rank
                             : static_cast<int64_t>(i) + 1;
    table.push_back({order[i].second, rank});
  }
  return table;
}

const AccountState* Leaderboard::account(AccountId id) const {
  auto it = accounts_.find(id);
  return it == accounts_.end() ? nullptr : &it->second;
}

}  // namespace ladderlab

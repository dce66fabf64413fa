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

#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ladderlab/rng.h"

namespace ladderlab {
namespace {

using ::testing::ElementsAre;
using ::testing::Optional;

Precision Eta(int64_t d) { return *Precision::FromDenominator(d); }
Rational R(int64_t p, int64_t q) { return Rational(p, q); }
Score S(int64_t c, int64_t n) { return Score{c, n}; }

std::shared_ptr<const ValidationSet> SetOf(std::vector<uint8_t> labels) {
  LabelModel model = *LabelModel::Uniform(labels.size());
  return std::make_shared<const ValidationSet>(
      *ValidationSet::Create(std::move(labels), std::move(model)));
}

// A prediction with exactly `correct` entries agreeing with all-ones labels.
Prediction WithCorrect(size_t n, size_t correct) {
  std::vector<uint8_t> bits(n, 0);
  for (size_t i = 0; i < correct; ++i) bits[i] = 1;
  return *Prediction::Create(bits);
}

Leaderboard Board(MechanismKind kind, size_t n, int64_t d = 1,
                  std::optional<int64_t> quota = std::nullopt) {
  return *Leaderboard::Create({kind, Eta(d), quota},
                              SetOf(std::vector<uint8_t>(n, 1)));
}

TEST(MechanismNameTest, RoundTrips) {
  for (MechanismKind kind :
       {MechanismKind::kFullInformation, MechanismKind::kRankOnly,
        MechanismKind::kOriginalLadder, MechanismKind::kSimplifiedLadder,
        MechanismKind::kParameterFreeLadder}) {
    EXPECT_EQ(*ParseMechanism(MechanismName(kind)), kind);
  }
  EXPECT_FALSE(ParseMechanism("kaggle").ok());
  EXPECT_FALSE(RevealsScore(MechanismKind::kRankOnly));
  EXPECT_TRUE(RevealsScore(MechanismKind::kSimplifiedLadder));
}

TEST(OriginalLadderStepTest, WorkedExamples) {
  EXPECT_EQ(OriginalLadderStep(R(64, 100), S(645, 1000), Eta(100)), R(64, 100));
  EXPECT_EQ(OriginalLadderStep(R(64, 100), S(651, 1000), Eta(100)), R(65, 100));
  EXPECT_EQ(OriginalLadderStep(std::nullopt, S(503, 1000), Eta(100)),
            R(50, 100));
}

TEST(SimplifiedLadderStepTest, WorkedExamples) {
  EXPECT_EQ(SimplifiedLadderStep(R(64, 100), S(641, 1000), Eta(100)),
            R(64, 100));
  EXPECT_EQ(SimplifiedLadderStep(R(64, 100), S(65, 100), Eta(100)), R(65, 100));
  EXPECT_EQ(SimplifiedLadderStep(R(64, 100), S(63, 100), Eta(100)), R(64, 100));
  EXPECT_EQ(SimplifiedLadderStep(std::nullopt, S(503, 1000), Eta(100)),
            R(50, 100));
}

TEST(SimplifiedLadderStepTest, EqualsMaxOfPreviousAndRounded) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100000; ++i) {
    const int64_t d = 1 + static_cast<int64_t>(rng() % 200);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 3000);
    const Score h = S(static_cast<int64_t>(rng() % (n + 1)), n);
    DisplayedScore prev;
    if (rng() % 10 != 0) prev = R(static_cast<int64_t>(rng() % (d + 1)), d);
    const Rational rounded = RoundNearest(h.ToRational(), Eta(d));
    const Rational expected =
        prev.has_value() ? std::max(*prev, rounded) : rounded;
    ASSERT_EQ(SimplifiedLadderStep(prev, h, Eta(d)), expected);
  }
}

TEST(SimplifiedLadderStepTest, ChangesExactlyAtHalfStepMargin) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 20000; ++i) {
    const int64_t d = 1 + static_cast<int64_t>(rng() % 100);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 2000);
    const Score h = S(static_cast<int64_t>(rng() % (n + 1)), n);
    const Rational prev(static_cast<int64_t>(rng() % (d + 1)), d);
    const Rational half_step(1, 2 * d);
    const bool changed = *SimplifiedLadderStep(prev, h, Eta(d)) != prev;
    ASSERT_EQ(changed, h.ToRational() >= prev + half_step);
  }
}

TEST(LadderStepTest, SimplifiedDominatesOriginalOnSequences) {
  std::mt19937_64 rng(107);
  for (int seq = 0; seq < 10000; ++seq) {
    const int64_t d = 1 + static_cast<int64_t>(rng() % 100);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 1000);
    const int steps = 1 + static_cast<int>(rng() % 30);
    DisplayedScore original;
    DisplayedScore simplified;
    for (int t = 0; t < steps; ++t) {
      const Score h = S(static_cast<int64_t>(rng() % (n + 1)), n);
      const DisplayedScore o = OriginalLadderStep(original, h, Eta(d));
      const DisplayedScore s = SimplifiedLadderStep(simplified, h, Eta(d));
      ASSERT_GE(*s, *o);
      if (original.has_value()) ASSERT_GE(*o, *original);
      if (simplified.has_value()) ASSERT_GE(*s, *simplified);
      ASSERT_TRUE(IsMultipleOf(*o, Eta(d)));
      ASSERT_TRUE(IsMultipleOf(*s, Eta(d)));
      original = o;
      simplified = s;
    }
  }
}

TEST(ParameterFreeStepTest, FirstSubmissionAlwaysUpdates) {
  AccountState account;
  const std::vector<uint8_t> correct = {1, 0, 1, 0};
  EXPECT_THAT(ParameterFreeStep(account, correct, S(2, 4)), Optional(R(1, 2)));
  EXPECT_EQ(account.best_correctness, correct);
}

TEST(ParameterFreeStepTest, IdenticalResubmissionDoesNotUpdate) {
  AccountState account;
  const std::vector<uint8_t> correct = {1, 0, 1, 1, 0};
  ParameterFreeStep(account, correct, S(3, 5));
  EXPECT_THAT(ParameterFreeStep(account, correct, S(3, 5)), Optional(R(3, 5)));
}

// Decides the update with floating point straight from the definition.
bool ThresholdOracle(const std::vector<uint8_t>& best,
                     const std::vector<uint8_t>& now) {
  const double n = static_cast<double>(best.size());
  double sum = 0;
  double gain = 0;
  std::vector<double> diff(best.size());
  for (size_t i = 0; i < best.size(); ++i) {
    diff[i] = static_cast<double>(now[i]) - static_cast<double>(best[i]);
    sum += diff[i];
    gain += diff[i];
  }
  const double mean = sum / n;
  double ss = 0;
  for (double x : diff) ss += (x - mean) * (x - mean);
  const double s = std::sqrt(ss / (n - 1));
  return gain / n > std::max(s / std::sqrt(n), 1.0 / n) + 1e-12;
}

TEST(ParameterFreeStepTest, SingleSwapWithTwoNewlyCorrect) {
  constexpr size_t kN = 1000;
  std::vector<uint8_t> best(kN, 0);
  for (size_t i = 0; i < 500; ++i) best[i] = 1;
  std::vector<uint8_t> now = best;
  now[500] = 1;
  now[501] = 1;
  AccountState account;
  ParameterFreeStep(account, best, S(500, kN));
  const DisplayedScore shown = ParameterFreeStep(account, now, S(502, kN));
  EXPECT_EQ(*shown == R(502, kN), ThresholdOracle(best, now));
}

TEST(ParameterFreeStepTest, MatchesFloatingOracleOnFuzzedPairs) {
  Rng rng(109);
  int updates = 0;
  for (int i = 0; i < 5000; ++i) {
    const size_t n = 2 + rng.UniformInt(300);
    std::vector<uint8_t> best = rng.RandomBits(n);
    std::vector<uint8_t> now = best;
    const size_t changes = 1 + rng.UniformInt(6);
    for (size_t c = 0; c < changes; ++c) now[rng.UniformInt(n)] ^= 1;
    int64_t best_correct = 0;
    int64_t now_correct = 0;
    for (size_t j = 0; j < n; ++j) {
      best_correct += best[j];
      now_correct += now[j];
    }
    AccountState account;
    const int64_t sn = static_cast<int64_t>(n);
    ParameterFreeStep(account, best, S(best_correct, sn));
    const DisplayedScore shown =
        ParameterFreeStep(account, now, S(now_correct, sn));
    const bool updated = *shown != R(best_correct, sn);
    ASSERT_EQ(updated, ThresholdOracle(best, now)) << "case " << i;
    updates += updated;
  }
  EXPECT_GT(updates, 0);
}

TEST(LeaderboardTest, RejectsBadConstruction) {
  EXPECT_FALSE(Leaderboard::Create({}, nullptr).ok());
  EXPECT_FALSE(Leaderboard::Create(
                   {MechanismKind::kFullInformation, Eta(1), -1}, SetOf({1}))
                   .ok());
}

TEST(LeaderboardTest, FullInformationRevealsExactScore) {
  Leaderboard board = Board(MechanismKind::kFullInformation, 1000);
  absl::StatusOr<Feedback> fb = board.Submit(0, WithCorrect(1000, 517));
  ASSERT_TRUE(fb.ok());
  EXPECT_THAT(fb->displayed, Optional(R(517, 1000)));
  EXPECT_FALSE(fb->ranks.has_value());
  fb = board.Submit(0, WithCorrect(1000, 400));
  EXPECT_THAT(fb->displayed, Optional(R(400, 1000)));
}

TEST(LeaderboardTest, SimplifiedLadderFirstSubmissionRounds) {
  Leaderboard board = Board(MechanismKind::kSimplifiedLadder, 1000, 100);
  EXPECT_THAT(board.Submit(7, WithCorrect(1000, 503))->displayed,
              Optional(R(50, 100)));
  EXPECT_EQ(board.account(7)->submissions, 1);
  EXPECT_EQ(board.total_submissions(), 1);
}

TEST(LeaderboardTest, LengthMismatchIsRejected) {
  Leaderboard board = Board(MechanismKind::kSimplifiedLadder, 10, 10);
  EXPECT_EQ(board.Submit(0, WithCorrect(9, 3)).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(board.total_submissions(), 0);
}

TEST(LeaderboardTest, QuotaRefusalIsDistinct) {
  Leaderboard board = Board(MechanismKind::kSimplifiedLadder, 10, 10, 2);
  EXPECT_TRUE(board.Submit(0, WithCorrect(10, 3)).ok());
  EXPECT_TRUE(board.Submit(0, WithCorrect(10, 4)).ok());
  EXPECT_EQ(board.Submit(0, WithCorrect(10, 9)).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_TRUE(board.Submit(1, WithCorrect(10, 9)).ok());
  EXPECT_THAT(board.account(0)->displayed, Optional(R(4, 10)));
}

TEST(LeaderboardTest, RankOnlyRevealsRanksNotScores) {
  Leaderboard board = Board(MechanismKind::kRankOnly, 10);
  absl::StatusOr<Feedback> fb = board.Submit(0, WithCorrect(10, 7));
  EXPECT_FALSE(fb->displayed.has_value());
  EXPECT_THAT(*fb->ranks, ElementsAre(RankEntry{0, 1}));
  ASSERT_TRUE(board.Submit(1, WithCorrect(10, 6)).ok());
  EXPECT_THAT(board.Ranks(), ElementsAre(RankEntry{0, 1}, RankEntry{1, 2}));
}

TEST(LeaderboardTest, RankOnlyTiesShareRank) {
  Leaderboard board = Board(MechanismKind::kRankOnly, 10);
  ASSERT_TRUE(board.Submit(0, WithCorrect(10, 7)).ok());
  ASSERT_TRUE(board.Submit(1, WithCorrect(10, 7)).ok());
  ASSERT_TRUE(board.Submit(2, WithCorrect(10, 6)).ok());
  EXPECT_THAT(board.Ranks(),
              ElementsAre(RankEntry{0, 1}, RankEntry{1, 1}, RankEntry{2, 3}));
  const RankTable before = board.Ranks();
  ASSERT_TRUE(board.Submit(2, WithCorrect(10, 2)).ok());
  EXPECT_EQ(board.Ranks(), before);
}

TEST(LeaderboardTest, LadderHistoriesAreMonotoneMultiplesOfEta) {
  Rng rng(113);
  for (MechanismKind kind :
       {MechanismKind::kOriginalLadder, MechanismKind::kSimplifiedLadder,
        MechanismKind::kParameterFreeLadder}) {
    for (int seq = 0; seq < 300; ++seq) {
      const size_t n = 1 + rng.UniformInt(200);
      const int64_t d = 1 + static_cast<int64_t>(rng.UniformInt(50));
      auto set = SetOf(rng.RandomBits(n));
      Leaderboard board = *Leaderboard::Create({kind, Eta(d), {}}, set);
      const Precision shown_eta = kind == MechanismKind::kParameterFreeLadder
                                      ? Eta(static_cast<int64_t>(n))
                                      : Eta(d);
      DisplayedScore last[3];
      for (int t = 0; t < 30; ++t) {
        const AccountId id = static_cast<AccountId>(rng.UniformInt(3));
        absl::StatusOr<Feedback> fb =
            board.Submit(id, *Prediction::Create(rng.RandomBits(n)));
        ASSERT_TRUE(fb.ok());
        ASSERT_TRUE(fb->displayed.has_value());
        ASSERT_TRUE(IsMultipleOf(*fb->displayed, shown_eta));
        if (last[id].has_value()) ASSERT_GE(*fb->displayed, *last[id]);
        last[id] = fb->displayed;
      }
    }
  }
}

}  // namespace
}  // namespace ladderlab

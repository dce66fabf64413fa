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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "ladderlab/analysis.h"
#include "ladderlab/attacks.h"
#include "ladderlab/harness.h"
#include "ladderlab/mechanisms.h"
#include "ladderlab/rational.h"

namespace ladderlab::cli {
namespace {

std::string Num(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

struct AttackArgs {
  std::string mechanism;
  std::string attack;
  int64_t n = 1000;
  std::string eta = "1";
  int64_t rounds = 1000;
  int64_t accounts = 1;
  int64_t trials = 1;
  uint64_t seed = 0;
  std::string out;
  std::optional<int64_t> quota;
  int workers = 1;
  double label_p = 0.5;
};

struct BoundArgs {
  int64_t n = 1;
  int64_t k = 1;
  int64_t m = 1;
  double eta = 1.0;
  double delta = 0.05;
  double eps = 0.05;
  std::string eta_text = "1";
};

struct ReproduceArgs {
  std::string figure;
  std::string outdir;
  uint64_t seed = 42;
};

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return ExitCodeFor(status);
}

int RunAttackCommand(const AttackArgs& a, std::ostream& out,
                     std::ostream& err) {
  absl::StatusOr<MechanismKind> mechanism = ParseMechanism(a.mechanism);
  if (!mechanism.ok()) return Fail(err, mechanism.status());
  absl::StatusOr<AttackKind> attack = ParseAttack(a.attack);
  if (!attack.ok()) return Fail(err, attack.status());
  absl::StatusOr<Precision> eta = Precision::Parse(a.eta);
  if (!eta.ok()) return Fail(err, eta.status());

  ExperimentSpec spec;
  spec.mechanism = *mechanism;
  spec.precision = *eta;
  spec.quota = a.quota;
  spec.attack = *attack;
  spec.n = a.n;
  spec.rounds = a.rounds;
  spec.accounts = a.accounts;
  spec.label_p = a.label_p;
  spec.trials = a.trials;
  spec.base_seed = a.seed;
  spec.workers = a.workers;
  if (absl::Status s = ValidateSpec(spec); !s.ok()) return Fail(err, s);

  const std::filesystem::path base(a.out);
  if (base.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(base.parent_path(), ec);
  }
  absl::StatusOr<std::vector<RunRecord>> runs = RunExperiment(spec);
  if (!runs.ok()) return Fail(err, runs.status());

  absl::Status refusal;
  for (const RunRecord& run : *runs) {
    const std::filesystem::path path =
        TrialOutputPath(base, run.trial, spec.trials);
    if (absl::Status s = WriteTrajectoryCsv(run.trajectory, path); !s.ok()) {
      return Fail(err, s);
    }
    const auto& records = run.trajectory.records;
    out << "trial=" << run.trial << " seed=" << run.seed
        << " submissions=" << records.size();
    auto headline =
        std::find_if(records.rbegin(), records.rend(),
                     [](const TrajectoryRecord& r) { return r.headline; });
    if (headline != records.rend()) {
      const TrajectoryRecord& last = *headline;
      out << " final_empirical=" << FormatDecimal(last.empirical.ToRational())
          << " final_displayed="
          << (last.displayed ? FormatDecimal(*last.displayed) : "none");
    }
    out << " lberr=" << (run.lberr ? Num(*run.lberr) : "none");
    if (!run.trajectory.stop_reason.empty()) {
      out << " stop=\"" << run.trajectory.stop_reason << "\"";
    }
    out << " csv=" << path.string() << "\n";
    if (!run.trajectory.refusal.ok() && refusal.ok()) {
      refusal = run.trajectory.refusal;
    }
  }
  if (!refusal.ok()) return Fail(err, refusal);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
      return kExitInvalidArguments;
    default:
      return kExitRefused;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Leaderboard mechanism and attack laboratory", "ladderlab"};
  app.require_subcommand(1);

  AttackArgs attack_args;
  CLI::App* attack = app.add_subcommand("attack", "Run an attack experiment");
  attack
      ->add_option("--mechanism", attack_args.mechanism,
                   "full | rank | ladder | simplified-ladder | pf-ladder")
      ->required();
  attack
      ->add_option("--attack", attack_args.attack,
                   "boost | multi-boost | enum | swap")
      ->required();
  attack->add_option("--n", attack_args.n, "Validation set size");
  attack->add_option("--eta", attack_args.eta, "Display precision 1/d");
  attack->add_option("--rounds", attack_args.rounds,
                     "Probes, flips or swaps, depending on the attack");
  attack->add_option("--accounts", attack_args.accounts, "Account budget M");
  attack->add_option("--trials", attack_args.trials, "Number of trials");
  attack->add_option("--seed", attack_args.seed, "Base seed");
  attack->add_option("--out", attack_args.out, "Output CSV path")->required();
  attack->add_option("--quota", attack_args.quota,
                     "Per-account submission quota (default unlimited)");
  attack->add_option("--workers", attack_args.workers, "Concurrent trials");
  attack->add_option("--label-p", attack_args.label_p,
                     "P(label = 1) at every position");

  CLI::App* bound = app.add_subcommand("bound", "Evaluate the sample bounds");
  bound->require_subcommand(1);
  BoundArgs b;
  CLI::App* tail = bound->add_subcommand("tail", "Ladder tail bound");
  tail->add_option("--n", b.n)->required();
  tail->add_option("--k", b.k)->required();
  tail->add_option("--m", b.m)->required();
  tail->add_option("--eta", b.eta)->required();
  CLI::App* eta_star = bound->add_subcommand("eta-star", "Optimal precision");
  eta_star->add_option("--n", b.n)->required();
  eta_star->add_option("--k", b.k)->required();
  eta_star->add_option("--m", b.m)->required();
  eta_star->add_option("--delta", b.delta)->required();
  CLI::App* samples = bound->add_subcommand("samples", "Sample complexity");
  samples->add_option("--eps", b.eps)->required();
  samples->add_option("--k", b.k)->required();
  samples->add_option("--m", b.m)->required();
  samples->add_option("--delta", b.delta)->required();
  CLI::App* bits = bound->add_subcommand("bits", "Compression bit count");
  bits->add_option("--k", b.k)->required();
  bits->add_option("--m", b.m)->required();
  bits->add_option("--eta", b.eta_text)->required();

  ReproduceArgs r;
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Regenerate a figure's data and plots");
  reproduce->add_option("figure", r.figure, "fig1 | fig2")->required();
  reproduce->add_option("--outdir", r.outdir)->required();
  reproduce->add_option("--seed", r.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  }

  if (attack->parsed()) return RunAttackCommand(attack_args, out, err);

  if (tail->parsed()) {
    BoundParams p{.n = b.n, .k = b.k, .accounts = b.m, .eta = b.eta};
    if (absl::Status s = ValidateBoundParams(p); !s.ok()) return Fail(err, s);
    const LadderTail t = LadderTailBound(b.n, b.k, b.m, b.eta);
    out << "log_bound=" << Num(t.relaxed.log_value) << "\n"
        << "probability=" << Num(t.relaxed.Probability()) << "\n"
        << "log_bound_sharp=" << Num(t.sharp.log_value) << "\n";
    return kExitOk;
  }
  if (eta_star->parsed()) {
    absl::StatusOr<EtaStar> e = OptimalPrecision(b.n, b.k, b.m, b.delta);
    if (!e.ok()) return Fail(err, e.status());
    out << "eta_star=" << Num(e->root) << "\n"
        << "precision=" << FormatDecimal(e->precision.value()) << "\n";
    return kExitOk;
  }
  if (samples->parsed()) {
    absl::StatusOr<int64_t> n = SampleComplexity(b.eps, b.k, b.m, b.delta);
    if (!n.ok()) return Fail(err, n.status());
    out << "n=" << *n << "\n";
    return kExitOk;
  }
  if (bits->parsed()) {
    absl::StatusOr<Precision> eta = Precision::Parse(b.eta_text);
    if (!eta.ok()) return Fail(err, eta.status());
    absl::StatusOr<CompressionBits> c = CompressionBitCount(b.k, b.m, *eta);
    if (!c.ok()) return Fail(err, c.status());
    out << "bits=" << c->bits << "\n"
        << "budget=" << Num(c->budget) << "\n"
        << "holds=" << (c->holds() ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (reproduce->parsed()) {
    absl::StatusOr<Figure> figure = ParseFigure(r.figure);
    if (!figure.ok()) return Fail(err, figure.status());
    absl::StatusOr<FigureOutput> result =
        ReproduceFigure(*figure, r.outdir, r.seed);
    if (!result.ok()) return Fail(err, result.status());
    for (const auto& path : result->files) out << path.string() << "\n";
    return kExitOk;
  }
  err << "error: no command given\n";
  return kExitInvalidArguments;
}

}  // namespace ladderlab::cli

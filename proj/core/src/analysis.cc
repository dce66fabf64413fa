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

#include "ladderlab/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ladderlab {
namespace {

bool InUnitInterval(double x) { return x > 0.0 && x <= 1.0; }

// g(eta) = -eta^2 n/2 + (M/eta + 1) ln(2k) + 1 - ln(delta); strictly
// decreasing in eta on (0, 1].
double ConfidenceGap(double eta, int64_t n, int64_t k, int64_t accounts,
                     double delta) {
  return LadderTailBound(n, k, accounts, eta).relaxed.log_value -
         std::log(delta);
}

}  // namespace

absl::Status ValidateBoundParams(const BoundParams& p) {
  if (p.n < 1 || p.k < 1 || p.accounts < 1) {
    return absl::InvalidArgumentError("n, k and M must be integers >= 1");
  }
  if (!InUnitInterval(p.eta) || !InUnitInterval(p.epsilon) ||
      !InUnitInterval(p.delta)) {
    return absl::InvalidArgumentError(
        "eta, epsilon and delta must be in (0, 1]");
  }
  return absl::OkStatus();
}

double LogBound::Probability() const {
  return log_value >= 0.0 ? 1.0 : std::exp(log_value);
}

absl::StatusOr<double> Lberr(std::span<const double> displayed,
                             std::span<const double> true_scores) {
  if (displayed.size() != true_scores.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("lberr: ", displayed.size(), " displayed scores but ",
                     true_scores.size(), " true scores"));
  }
  if (displayed.empty()) {
    return absl::InvalidArgumentError("lberr of an empty history");
  }
  double running_true = true_scores[0];
  double worst = 0.0;
  for (size_t t = 0; t < displayed.size(); ++t) {
    running_true = std::max(running_true, true_scores[t]);
    worst = std::max(worst, std::abs(displayed[t] - running_true));
  }
  return worst;
}

LogBound HoeffdingUnionLogBound(int64_t k, int64_t n, double epsilon) {
  return {std::log(2.0 * static_cast<double>(k)) -
          2.0 * epsilon * epsilon * static_cast<double>(n)};
}

double HoeffdingUnionBound(int64_t k, int64_t n, double epsilon) {
  return HoeffdingUnionLogBound(k, n, epsilon).Probability();
}

LadderTail LadderTailBound(int64_t n, int64_t k, int64_t accounts, double eta) {
  const double fit = -eta * eta * static_cast<double>(n) / 2.0;
  const double codes = (static_cast<double>(accounts) / eta + 1.0) *
                       std::log(2.0 * static_cast<double>(k));
  return {{fit + codes + 1.0}, {std::log(2.0) + codes + fit}};
}

absl::StatusOr<EtaStar> OptimalPrecision(int64_t n, int64_t k, int64_t accounts,
                                         double delta) {
  if (absl::Status s = ValidateBoundParams(
          {.n = n, .k = k, .accounts = accounts, .delta = delta});
      !s.ok()) {
    return s;
  }
  auto g = [&](double eta) {
    return ConfidenceGap(eta, n, k, accounts, delta);
  };
  double hi = 1.0;
  if (g(hi) > 0.0) {
    return absl::FailedPreconditionError(
        absl::StrCat("insufficient samples: n = ", n,
                     " cannot reach the requested confidence at any eta <= 1"));
  }
  double lo = 0.5;
  while (g(lo) <= 0.0) {
    hi = lo;
    lo /= 2.0;
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  EtaStar out;
  out.root = hi;
  out.precision =
      *Precision::FromDenominator(static_cast<int64_t>(std::floor(1.0 / hi)));
  return out;
}

absl::StatusOr<int64_t> SampleComplexity(double epsilon, int64_t k,
                                         int64_t accounts, double delta) {
  if (absl::Status s = ValidateBoundParams(
          {.k = k, .accounts = accounts, .epsilon = epsilon, .delta = delta});
      !s.ok()) {
    return s;
  }
  const double numerator =
      2.0 * ((static_cast<double>(accounts) / epsilon + 1.0) *
                 std::log(2.0 * static_cast<double>(k)) +
             1.0 - std::log(delta));
  return static_cast<int64_t>(std::ceil(numerator / (epsilon * epsilon)));
}

int64_t CeilLog2(uint64_t x) {
  return x <= 1 ? 0 : static_cast<int64_t>(std::bit_width(x - 1));
}

absl::StatusOr<CompressionBits> CompressionBitCount(int64_t k, int64_t accounts,
                                                    Precision eta) {
  if (k < 1 || accounts < 1) {
    return absl::InvalidArgumentError("k and M must be >= 1");
  }
  const int64_t log_k = CeilLog2(static_cast<uint64_t>(k));
  CompressionBits out;
  out.bits = log_k + accounts * eta.denominator() * log_k;
  out.budget =
      (static_cast<double>(accounts) * static_cast<double>(eta.denominator()) +
       1.0) *
      std::log2(2.0 * static_cast<double>(k));
  return out;
}

}  // namespace ladderlab

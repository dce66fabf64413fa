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

#include "ladderlab/data.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ladderlab/rng.h"

namespace ladderlab {
namespace {

absl::Status CheckLengths(size_t pred, size_t other, const char* what) {
  if (pred != other) {
    return absl::InvalidArgumentError(absl::StrCat(
        "prediction has length ", pred, " but ", what, " has length ", other));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Prediction> Prediction::Create(std::vector<uint8_t> bits) {
  if (bits.empty()) {
    return absl::InvalidArgumentError("prediction must be non-empty");
  }
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("prediction entry ", i, " is not 0/1"));
    }
  }
  return Prediction(std::move(bits));
}

Prediction Prediction::Constant(size_t n, uint8_t bit) {
  return Prediction(std::vector<uint8_t>(n, bit ? 1 : 0));
}

Prediction Prediction::Complement() const {
  std::vector<uint8_t> flipped(bits_.size());
  for (size_t i = 0; i < bits_.size(); ++i) flipped[i] = bits_[i] ^ 1;
  return Prediction(std::move(flipped));
}

absl::StatusOr<LabelModel> LabelModel::Create(std::vector<double> probs) {
  if (probs.empty()) {
    return absl::InvalidArgumentError("label model must be non-empty");
  }
  for (size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0 && probs[i] <= 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "label probability ", i, " = ", probs[i], " is outside [0, 1]"));
    }
  }
  return LabelModel(std::move(probs));
}

absl::StatusOr<LabelModel> LabelModel::Uniform(size_t n, double p) {
  return Create(std::vector<double>(n, p));
}

absl::StatusOr<ValidationSet> ValidationSet::Create(std::vector<uint8_t> labels,
                                                    LabelModel source) {
  if (labels.size() != source.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("labels have length ", labels.size(),
                     " but the model has length ", source.size()));
  }
  for (uint8_t y : labels) {
    if (y > 1) return absl::InvalidArgumentError("labels must be 0/1");
  }
  return ValidationSet(std::move(labels), std::move(source));
}

ValidationSet SampleValidationSet(const LabelModel& model, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint8_t> labels(model.size());
  const auto probs = model.probs();
  for (size_t i = 0; i < labels.size(); ++i) {
    labels[i] = rng.Bernoulli(probs[i]) ? 1 : 0;
  }
  return ValidationSet(std::move(labels), model);
}

absl::StatusOr<Score> EmpiricalScore(const Prediction& pred,
                                     const ValidationSet& set) {
  if (absl::Status s = CheckLengths(pred.size(), set.size(), "validation set");
      !s.ok()) {
    return s;
  }
  const auto bits = pred.bits();
  const auto labels = set.labels();
  int64_t correct = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    correct += (bits[i] == labels[i]);
  }
  return Score{correct, static_cast<int64_t>(bits.size())};
}

absl::StatusOr<std::vector<uint8_t>> Correctness(const Prediction& pred,
                                                 const ValidationSet& set) {
  if (absl::Status s = CheckLengths(pred.size(), set.size(), "validation set");
      !s.ok()) {
    return s;
  }
  std::vector<uint8_t> out(pred.size());
  const auto labels = set.labels();
  for (size_t i = 0; i < out.size(); ++i) out[i] = (pred[i] == labels[i]);
  return out;
}

absl::StatusOr<double> TrueScore(const Prediction& pred,
                                 const LabelModel& model) {
  if (absl::Status s = CheckLengths(pred.size(), model.size(), "label model");
      !s.ok()) {
    return s;
  }
  const auto probs = model.probs();
  double total = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    total += pred[i] ? probs[i] : 1.0 - probs[i];
  }
  return total / static_cast<double>(probs.size());
}

}  // namespace ladderlab

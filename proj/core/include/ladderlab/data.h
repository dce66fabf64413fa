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

#ifndef LADDERLAB_DATA_H_
#define LADDERLAB_DATA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ladderlab/rational.h"

namespace ladderlab {

// A submitted label vector, one 0/1 entry per validation sample.
class Prediction {
 public:
  static absl::StatusOr<Prediction> Create(std::vector<uint8_t> bits);
  static Prediction Constant(size_t n, uint8_t bit);

  size_t size() const { return bits_.size(); }
  uint8_t operator[](size_t i) const { return bits_[i]; }
  std::span<const uint8_t> bits() const { return bits_; }

  void Flip(size_t i) { bits_[i] ^= 1; }
  Prediction Complement() const;

  friend bool operator==(const Prediction&, const Prediction&) = default;

 private:
  explicit Prediction(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}
  std::vector<uint8_t> bits_;
};

// Product-Bernoulli label distribution: label i is 1 with probability p_i.
class LabelModel {
 public:
  static absl::StatusOr<LabelModel> Create(std::vector<double> probs);
  static absl::StatusOr<LabelModel> Uniform(size_t n, double p = 0.5);

  size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }

 private:
  explicit LabelModel(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

// Labels sampled from a LabelModel; keeps a copy of its source model.
class ValidationSet {
 public:
  // Mostly for tests: pins explicit labels to a model of the same length.
  static absl::StatusOr<ValidationSet> Create(std::vector<uint8_t> labels,
                                              LabelModel source);

  size_t size() const { return labels_.size(); }
  std::span<const uint8_t> labels() const { return labels_; }
  const LabelModel& source() const { return source_; }

 private:
  friend ValidationSet SampleValidationSet(const LabelModel&, uint64_t);
  ValidationSet(std::vector<uint8_t> labels, LabelModel source)
      : labels_(std::move(labels)), source_(std::move(source)) {}

  std::vector<uint8_t> labels_;
  LabelModel source_;
};

// Exact accuracy on the validation set: correct / n.
struct Score {
  int64_t correct = 0;
  int64_t n = 1;

  Rational ToRational() const { return Rational(correct, n); }
  double ToDouble() const {
    return static_cast<double>(correct) / static_cast<double>(n);
  }
  friend bool operator==(const Score&, const Score&) = default;
};

ValidationSet SampleValidationSet(const LabelModel& model, uint64_t seed);

absl::StatusOr<Score> EmpiricalScore(const Prediction& pred,
                                     const ValidationSet& set);

// Per-sample correctness indicators, 1 where pred matches the label.
absl::StatusOr<std::vector<uint8_t>> Correctness(const Prediction& pred,
                                                 const ValidationSet& set);

// Accuracy under the generating distribution:
// (1/n) sum_i [pred_i p_i + (1 - pred_i)(1 - p_i)].
absl::StatusOr<double> TrueScore(const Prediction& pred,
                                 const LabelModel& model);

}  // namespace ladderlab

#endif  // LADDERLAB_DATA_H_

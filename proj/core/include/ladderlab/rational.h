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

#ifndef LADDERLAB_RATIONAL_H_
#define LADDERLAB_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace ladderlab {

// Exact rational number with a positive denominator, always in lowest terms.
// Scores, displayed values and precisions are small (numerators and
// denominators bounded by a few million), so 64-bit storage with 128-bit
// intermediates is exact for every operation used here.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t numerator, int64_t denominator);
  static Rational Integer(int64_t value) { return Rational(value, 1); }

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// Parses a non-negative decimal literal such as "0.01", "1", or "0.125"
// exactly.
absl::StatusOr<Rational> ParseDecimal(std::string_view text);

// Exact decimal expansion when the denominator has no prime factors other than
// 2 and 5; otherwise the shortest string that round-trips the nearest double.
std::string FormatDecimal(const Rational& value);

// Display precision eta = 1/d for an integer d >= 1.
class Precision {
 public:
  // eta = 1, the convention when no precision is given.
  constexpr Precision() = default;
  static absl::StatusOr<Precision> FromDenominator(int64_t denominator);
  // Accepts any rational in (0, 1] whose reciprocal is an integer.
  static absl::StatusOr<Precision> FromRational(const Rational& eta);
  static absl::StatusOr<Precision> Parse(std::string_view text);

  int64_t denominator() const { return den_; }
  Rational value() const { return Rational(1, den_); }
  double ToDouble() const { return 1.0 / static_cast<double>(den_); }

  friend bool operator==(const Precision&, const Precision&) = default;

 private:
  explicit constexpr Precision(int64_t den) : den_(den) {}
  int64_t den_ = 1;
};

// [x]_eta: nearest integer multiple of eta; ties round half away from zero.
Rational RoundNearest(const Rational& x, Precision eta = Precision());
// Greatest multiple of eta that is <= x.
Rational RoundDown(const Rational& x, Precision eta = Precision());
// Least multiple of eta that is >= x.
Rational RoundUp(const Rational& x, Precision eta = Precision());

bool IsMultipleOf(const Rational& x, Precision eta);

}  // namespace ladderlab

#endif  // LADDERLAB_RATIONAL_H_

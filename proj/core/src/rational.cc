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

#include "ladderlab/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ladderlab {
namespace {

using Wide = __int128;

Wide FloorDiv(Wide a, Wide b) {
  // b > 0 at every call site.
  Wide q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Wide CeilDiv(Wide a, Wide b) { return -FloorDiv(-a, b); }

int64_t Narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("ladderlab::Rational overflow");
  }
  return static_cast<int64_t>(v);
}

Rational FromWide(Wide num, Wide den) {
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(Narrow(num), Narrow(den));
}

}  // namespace

Rational::Rational(int64_t numerator, int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("ladderlab::Rational: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return FromWide(
      static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
      static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator-(const Rational& a) {
  Rational r;
  r.num_ = -a.num_;
  r.den_ = a.den_;
  return r;
}

absl::StatusOr<Rational> ParseDecimal(std::string_view text) {
  if (text.empty()) return absl::InvalidArgumentError("empty decimal");
  Wide num = 0;
  Wide den = 1;
  bool seen_point = false;
  int digits = 0;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) {
        return absl::InvalidArgumentError(
            absl::StrCat("malformed decimal '", std::string(text), "'"));
      }
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed decimal '", std::string(text), "'"));
    }
    if (++digits > 18) {
      return absl::InvalidArgumentError(
          absl::StrCat("too many digits in '", std::string(text), "'"));
    }
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (digits == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed decimal '", std::string(text), "'"));
  }
  return FromWide(num, den);
}

std::string FormatDecimal(const Rational& value) {
  int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  const int scale = std::max(twos, fives);
  if (den == 1 && scale <= 18) {
    Wide pow10 = 1;
    for (int i = 0; i < scale; ++i) pow10 *= 10;
    Wide scaled =
        static_cast<Wide>(value.numerator()) * (pow10 / value.denominator());
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    const int64_t whole = static_cast<int64_t>(scaled / pow10);
    int64_t frac = static_cast<int64_t>(scaled % pow10);
    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    if (scale > 0 && frac != 0) {
      std::string digits(scale, '0');
      for (int i = scale - 1; i >= 0; --i) {
        digits[i] = static_cast<char>('0' + frac % 10);
        frac /= 10;
      }
      while (!digits.empty() && digits.back() == '0') digits.pop_back();
      out += '.';
      out += digits;
    }
    return out;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value.ToDouble());
  return std::string(buf, end);
}

absl::StatusOr<Precision> Precision::FromDenominator(int64_t denominator) {
  if (denominator < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("precision denominator must be >= 1, got ", denominator));
  }
  return Precision(denominator);
}

absl::StatusOr<Precision> Precision::FromRational(const Rational& eta) {
  if (eta <= Rational::Integer(0) || eta > Rational::Integer(1)) {
    return absl::InvalidArgumentError("precision must lie in (0, 1]");
  }
  if (eta.numerator() != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("precision must be 1/d for an integer d, got ",
                     eta.numerator(), "/", eta.denominator()));
  }
  return Precision(eta.denominator());
}

absl::StatusOr<Precision> Precision::Parse(std::string_view text) {
  absl::StatusOr<Rational> eta = ParseDecimal(text);
  if (!eta.ok()) return eta.status();
  return FromRational(*eta);
}

Rational RoundNearest(const Rational& x, Precision eta) {
  const Wide p = x.numerator();
  const Wide q = x.denominator();
  const Wide d = eta.denominator();
  const Wide magnitude = FloorDiv(2 * (p < 0 ? -p : p) * d + q, 2 * q);
  return FromWide(p < 0 ? -magnitude : magnitude, d);
}

Rational RoundDown(const Rational& x, Precision eta) {
  const Wide d = eta.denominator();
  return FromWide(
      FloorDiv(static_cast<Wide>(x.numerator()) * d, x.denominator()), d);
}

Rational RoundUp(const Rational& x, Precision eta) {
  const Wide d = eta.denominator();
  return FromWide(
      CeilDiv(static_cast<Wide>(x.numerator()) * d, x.denominator()), d);
}

bool IsMultipleOf(const Rational& x, Precision eta) {
  return eta.denominator() % x.denominator() == 0;
}

}  // namespace ladderlab

// Copyright 2026 The SliceKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace slicekit {

/// Exact rational number with a positive, fully reduced denominator.
///
/// Radio shares and water-filling levels are kept exact so that guarantee and
/// work-conservation checks are decided without rounding noise. Arithmetic is
/// carried out in 128-bit intermediates and throws Error(kOutOfRange) when a
/// reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "3", "0.125" or "3/8". Throws Error(kInvalidShare) on bad text.
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Greatest integer not above the value.
  std::int64_t Floor() const;

  /// Terminating decimal when the denominator allows it, "n/d" otherwise.
  /// Parse(ToString()) reproduces the value exactly.
  std::string ToString() const;
  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }

  friend bool operator==(const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

 private:
  static Rational FromWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace slicekit

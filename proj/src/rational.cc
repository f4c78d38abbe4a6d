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

#include "slicekit/rational.h"

#include <charconv>
#include <limits>

#include "slicekit/error.h"

namespace slicekit {

namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

[[noreturn]] void BadText(std::string_view text) {
  throw Error(Errc::kInvalidShare, "not a rational number: '" + std::string(text) + "'");
}

std::int64_t ParseInt(std::string_view digits, std::string_view whole) {
  if (digits.empty()) BadText(whole);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) BadText(whole);
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = FromWide(num, den);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den == 0) throw Error(Errc::kOutOfRange, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (num > kMax || num < kMin || den > kMax) {
    throw Error(Errc::kOutOfRange, "rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  if (text.empty()) BadText(text);
  bool negative = text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t n = ParseInt(body.substr(0, slash), text);
    std::int64_t d = ParseInt(body.substr(slash + 1), text);
    if (d == 0) BadText(text);
    value = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 12) BadText(text);
    std::int64_t whole = int_part.empty() ? 0 : ParseInt(int_part, text);
    std::int64_t frac = ParseInt(frac_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = FromWide(static_cast<__int128>(whole) * scale + frac, scale);
  } else {
    value = Rational(ParseInt(body, text));
  }
  return negative ? Rational(0) - value : value;
}

std::int64_t Rational::Floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::ToString() const {
  // Terminating iff den = 2^a 5^b.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1 || twos > 18 || fives > 18) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (den_ == 1) return std::to_string(num_);
  int digits = twos > fives ? twos : fives;
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string frac_text = std::to_string(frac);
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  return (negative ? "-" : "") + std::to_string(whole) + "." + frac_text;
}

Rational operator+(const Rational &a, const Rational &b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_ -
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace slicekit

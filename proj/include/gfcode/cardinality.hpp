// Copyright 2026 The gfcode Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GFCODE_CARDINALITY_HPP_
#define GFCODE_CARDINALITY_HPP_

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfcode {

/// Exact rational with int64 parts, kept in lowest terms with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=>
           static_cast<__int128>(b.num) * a.den;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den, a.den * b.num);
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Non-negative integer mantissa * 2^exponent. Family sizes in this library
/// routinely reach 2^{C(n,2)}, far past 64 bits, while staying exact.
class Cardinality {
 public:
  constexpr Cardinality() = default;
  Cardinality(std::uint64_t value) : mantissa_(value) { normalize(); }  // NOLINT

  static Cardinality pow2(std::int64_t exponent) {
    if (exponent < 0) throw std::domain_error("Cardinality::pow2: negative exponent");
    Cardinality c(1);
    c.exponent_ = exponent;
    return c;
  }
  static Cardinality times_pow2(std::uint64_t mantissa, std::int64_t exponent) {
    Cardinality c = pow2(exponent);
    c.mantissa_ = mantissa;
    c.normalize();
    if (mantissa == 0) c.exponent_ = 0;
    return c;
  }

  std::uint64_t mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }
  bool is_power_of_two() const { return mantissa_ == 1; }

  /// log2 when the value is a power of two.
  std::optional<std::int64_t> exact_log2() const {
    if (mantissa_ != 1) return std::nullopt;
    return exponent_;
  }
  double log2() const {
    if (mantissa_ == 0) return -HUGE_VAL;
    return std::log2(static_cast<double>(mantissa_)) + static_cast<double>(exponent_);
  }

  std::optional<std::uint64_t> to_u64() const {
    if (mantissa_ == 0) return 0;
    if (std::bit_width(mantissa_) + exponent_ > 64) return std::nullopt;
    return mantissa_ << exponent_;
  }

  friend Cardinality operator*(const Cardinality& a, const Cardinality& b) {
    const unsigned __int128 m =
        static_cast<unsigned __int128>(a.mantissa_) * b.mantissa_;
    if (m >> 64) throw std::overflow_error("Cardinality: mantissa overflow");
    return times_pow2(static_cast<std::uint64_t>(m), a.exponent_ + b.exponent_);
  }

  friend bool operator==(const Cardinality& a, const Cardinality& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }
  friend std::strong_ordering operator<=>(const Cardinality& a,
                                          const Cardinality& b) {
    if (a.mantissa_ == 0 || b.mantissa_ == 0) return a.mantissa_ <=> b.mantissa_;
    const std::int64_t wa = std::bit_width(a.mantissa_) + a.exponent_;
    const std::int64_t wb = std::bit_width(b.mantissa_) + b.exponent_;
    if (wa != wb) return wa <=> wb;
    // Same bit length: align both mantissas to the top of a 64-bit word.
    const std::uint64_t ma = a.mantissa_ << (64 - std::bit_width(a.mantissa_));
    const std::uint64_t mb = b.mantissa_ << (64 - std::bit_width(b.mantissa_));
    return ma <=> mb;
  }

  /// Exact decimal rendering.
  std::string to_string() const {
    if (auto v = to_u64()) return std::to_string(*v);
    // Little-endian base 1e9 limbs.
    std::vector<std::uint32_t> limbs;
    for (std::uint64_t m = mantissa_; m; m /= 1000000000u)
      limbs.push_back(static_cast<std::uint32_t>(m % 1000000000u));
    for (std::int64_t e = 0; e < exponent_; ++e) {
      std::uint32_t carry = 0;
      for (auto& limb : limbs) {
        const std::uint64_t x = std::uint64_t{limb} * 2 + carry;
        limb = static_cast<std::uint32_t>(x % 1000000000u);
        carry = static_cast<std::uint32_t>(x / 1000000000u);
      }
      if (carry) limbs.push_back(carry);
    }
    std::string out = std::to_string(limbs.back());
    for (std::size_t i = limbs.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs[i]);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }

  /// "2^e" for powers of two, "m*2^e" otherwise, plain digits when small.
  std::string to_short_string() const {
    if (mantissa_ == 0 || exponent_ == 0) return std::to_string(mantissa_);
    if (auto v = to_u64(); v && *v < (1u << 20)) return std::to_string(*v);
    if (mantissa_ == 1) return "2^" + std::to_string(exponent_);
    return std::to_string(mantissa_) + "*2^" + std::to_string(exponent_);
  }

 private:
  void normalize() {
    if (mantissa_ == 0) return;
    const int tz = std::countr_zero(mantissa_);
    mantissa_ >>= tz;
    exponent_ += tz;
  }

  std::uint64_t mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace gfcode

#endif  // GFCODE_CARDINALITY_HPP_

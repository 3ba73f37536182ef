/*
 * Copyright 2026 The sepax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEPAX_RATIONAL_HPP
#define SEPAX_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepax {

/// Raised when a rational operation leaves the 64-bit numerator/denominator
/// range. Arithmetic never silently wraps.
class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when text does not parse as "p" or "p/q".
class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equal values
/// have equal representations. Intermediate products are formed in 128 bits
/// and reduced before narrowing; a result that still does not fit throws
/// RationalOverflow.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return make(Wide(a.num_) + b.num_, a.den_);
    return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return make(Wide(a.num_) - b.num_, a.den_);
    return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }
  Rat operator-() const { return make(-Wide(num_), den_); }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
  }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts an optional leading '-', decimal digits, and an optional
  /// "/q" with q > 0. The value is normalized, so "2/4" parses as 1/2.
  static Rat parse(std::string_view text) {
    auto fail = [&] {
      throw RationalParseError("malformed rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    std::int64_t n = 0;
    std::int64_t d = 1;
    if (!parse_int(num_text, /*allow_sign=*/true, n)) fail();
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), /*allow_sign=*/false, d) || d == 0) {
        fail();
      }
    }
    return Rat(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  using Wide = __int128;

  static Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rat make(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rat{};
    const Wide g = wide_gcd(n, d);
    n /= g;
    d /= g;
    constexpr Wide lo = INT64_MIN;
    constexpr Wide hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) {
      throw RationalOverflow("rational result exceeds 64-bit range");
    }
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static bool parse_int(std::string_view s, bool allow_sign, std::int64_t& out) {
    if (s.empty()) return false;
    if (s.front() == '-' && !allow_sign) return false;
    if (s.front() == '+') return false;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end && !(s.size() > 1 && s[0] == '-' && s[1] == '-');
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sepax

template <>
struct std::hash<sepax::Rat> {
  std::size_t operator()(const sepax::Rat& r) const noexcept {
    const std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif  // SEPAX_RATIONAL_HPP

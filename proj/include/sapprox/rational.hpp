#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "sapprox/errors.hpp"

namespace sapprox {

// Exact fraction, always stored in lowest terms with a positive denominator.
// Storage is int64; every operation runs its intermediates in 128-bit
// arithmetic and throws OverflowError if the reduced result does not fit back
// into int64. There is no rounding anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num) : num_(num), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // Accepts exactly the "a/b" form: optional leading '-' on the numerator,
  // digits on both sides, positive denominator. Anything else (decimals,
  // bare integers, whitespace) is rejected.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
      throw ParseError("expected a rational of the form \"a/b\", got '" + std::string(text) + "'");
    const std::int64_t num = parse_int(text.substr(0, slash), true, text);
    const std::int64_t den = parse_int(text.substr(slash + 1), false, text);
    if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

  static u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
      const u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) den = 1;
    const u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw OverflowError("rational out of 64-bit range");
    Rational r;
    r.num_ = std::int64_t(num);
    r.den_ = std::int64_t(den);
    return r;
  }

  static std::int64_t parse_int(std::string_view part, bool allow_sign, std::string_view whole) {
    if (part.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    std::string_view digits = part;
    bool negative = false;
    if (allow_sign && digits.front() == '-') {
      negative = true;
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits)
      if (c < '0' || c > '9')
        throw ParseError("expected a rational of the form \"a/b\", got '" + std::string(whole) + "'");
    std::int64_t value = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec == std::errc::result_out_of_range)
      throw OverflowError("rational component out of 64-bit range in '" + std::string(whole) + "'");
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    return negative ? -value : value;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace sapprox

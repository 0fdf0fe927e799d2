#pragma once

// Exact dyadic rationals num / 2^exp. Closeness values are finite sums of
// negative powers of two, so they live here without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus {

using BigInt = boost::multiprecision::cpp_int;

class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long long value) : num_(value) {}  // NOLINT: implicit from integers
  DyadicRational(BigInt num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

  /// 2^-power
  static DyadicRational inverse_power_of_two(std::uint32_t power) { return {BigInt(1), power}; }

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  BigInt denominator() const { return BigInt(1) << exp_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    const std::uint32_t e = std::max(a.exp_, b.exp_);
    return {(a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e};
  }
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return {a.num_ * b.num_, a.exp_ + b.exp_};
  }
  DyadicRational operator-() const {
    DyadicRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
  DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }
  DyadicRational& operator*=(const DyadicRational& o) { return *this = *this * o; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    const std::uint32_t e = std::max(a.exp_, b.exp_);
    const BigInt lhs = a.num_ << (e - a.exp_);
    const BigInt rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact rendering: "num" for integers, "num/den" otherwise (den = 2^exp).
  std::string to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + denominator().str();
  }

  /// 15 significant digits; the exact string is the contract, this one is for humans.
  std::string to_decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", to_double());
    return buf;
  }

  double to_double() const {
    // Shift the numerator down first so huge values do not overflow the conversion.
    const unsigned bits = num_ == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(abs(num_)));
    const unsigned drop = bits > 120 ? bits - 120 : 0;
    const BigInt top = num_ >> drop;
    return std::ldexp(top.convert_to<double>(), static_cast<int>(drop) - static_cast<int>(exp_));
  }

  /// Parses "num", "num/den" (den a power of two) or "num/2^exp".
  static DyadicRational parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("empty integer in dyadic literal");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw std::invalid_argument("bad integer in dyadic literal");
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer in dyadic literal");
      }
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return {parse_int(text), 0};
    const BigInt num = parse_int(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    if (den.size() > 2 && den.substr(0, 2) == "2^") {
      const BigInt e = parse_int(den.substr(2));
      if (e < 0 || e > 100000) throw std::invalid_argument("dyadic exponent out of range");
      return {num, e.convert_to<std::uint32_t>()};
    }
    const BigInt d = parse_int(den);
    if (d <= 0 || (d & (d - 1)) != 0) throw std::invalid_argument("denominator is not a power of two");
    return {num, static_cast<std::uint32_t>(boost::multiprecision::msb(d))};
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    if (exp_ == 0) return;
    const auto zeros = static_cast<std::uint32_t>(boost::multiprecision::lsb(abs(num_)));
    const std::uint32_t shift = std::min(zeros, exp_);
    num_ >>= shift;
    exp_ -= shift;
  }

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const DyadicRational& d) { return os << d.to_string(); }

}  // namespace cactus

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "thinset/errors.hpp"

namespace thinset {

// Exact rational arithmetic on int64 with __int128 intermediates.
// Overflow on narrowing throws instead of wrapping; desk-scale inputs
// never get close, but the failure mode must be loud, not silent.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: intentionally implicit
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
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
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::size_t hash() const {
    auto mix = [](std::size_t h, std::size_t v) {
      return (h ^ v) * 0x100000001b3ULL;
    };
    return mix(mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(num_)),
               static_cast<std::size_t>(den_));
  }

  // max(|num|, den) with height(0) = 0; the enumeration shell measure for Q^d.
  std::uint64_t height() const {
    if (num_ == 0) return 0;
    std::uint64_t n = num_ < 0 ? static_cast<std::uint64_t>(-(num_ + 1)) + 1
                               : static_cast<std::uint64_t>(num_);
    std::uint64_t d = static_cast<std::uint64_t>(den_);
    return n > d ? n : d;
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "3", "-4/6" (normalized on the way in).
  static Rational parse(const std::string& text);

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static std::int64_t narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
      throw OverflowError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    Rational r;
    r.num_ = narrow(n / a);
    r.den_ = narrow(d / a);
    return r;
  }

  void normalize() {
    *this = from_i128(i128(num_), i128(den_));
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw GrammarError("bad rational literal '" + text + "'", 0);
  }
}

}  // namespace thinset

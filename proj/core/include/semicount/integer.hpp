#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace semicount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Arbitrary precision signed integer.
///
/// Values that fit in 64 bits are stored inline; everything else spills to a
/// shared immutable BigInt. The representation is normalized, so a value has
/// exactly one encoding and equality/hashing can compare representations.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      if (v <= static_cast<T>(std::numeric_limits<std::int64_t>::max())) {
        small_ = static_cast<std::int64_t>(v);
      } else {
        big_ = std::make_shared<const BigInt>(v);
      }
    }
  }

  explicit Integer(const BigInt& v);

  /// Parses an optional sign followed by decimal digits.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  BigInt to_big() const;
  Rational to_rational() const { return Rational(to_big()); }

  /// Throws DomainError when the value does not fit in 64 bits.
  std::int64_t to_int64() const;
  double to_double() const;
  /// log|x| for x != 0, accurate for values far beyond double range.
  double log_abs() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool is_even() const;
  Integer abs() const;

  std::string str() const;
  std::size_t hash() const noexcept;

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  /// Floor division: q = floor(a/b), r = a - q*b with 0 <= r < |b| for b > 0.
  static std::pair<Integer, Integer> floor_divmod(const Integer& a, const Integer& b);
  /// Quotient of an exact division; throws DomainError if b does not divide a.
  static Integer divexact(const Integer& a, const Integer& b);
  /// Nearest integer to a/b, halves rounded up.
  static Integer round_div(const Integer& a, const Integer& b);
  /// Residue in [0, m) for m > 0.
  std::int64_t mod(std::int64_t m) const;

 private:
  static Integer from_big(BigInt v);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);

Integer gcd(Integer a, Integer b);
/// Extended Euclid: returns (g, s, t) with g = s*a + t*b and g >= 0.
struct BezoutResult {
  Integer g, s, t;
};
BezoutResult extended_gcd(const Integer& a, const Integer& b);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace semicount

template <>
struct std::hash<semicount::Integer> {
  std::size_t operator()(const semicount::Integer& x) const noexcept { return x.hash(); }
};

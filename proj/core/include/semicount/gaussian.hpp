#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semicount/integer.hpp"

namespace semicount {

/// Element re + im*i of Z[i].
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(Integer re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussianInteger(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianInteger(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianInteger i() { return {0, 1}; }
  /// Accepts "3", "-2", "1+i", "2-3i", "-i".
  static GaussianInteger parse(std::string_view text);

  const Integer& re() const noexcept { return re_; }
  const Integer& im() const noexcept { return im_; }

  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_unit() const;

  GaussianInteger conj() const { return {re_, -im_}; }
  Integer norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  std::string str() const;
  std::size_t hash() const noexcept;

  GaussianInteger& operator+=(const GaussianInteger& o) { return *this = *this + o; }
  GaussianInteger& operator-=(const GaussianInteger& o) { return *this = *this - o; }
  GaussianInteger& operator*=(const GaussianInteger& o) { return *this = *this * o; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re_, -a.im_}; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// True when b divides a in Z[i]. b must be nonzero.
  static bool divides(const GaussianInteger& b, const GaussianInteger& a);
  /// Exact quotient a / b; throws DomainError if the division is not exact.
  static GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& b);
  /// Division with remainder: a = q*b + r with N(r) <= N(b)/2.
  static std::pair<GaussianInteger, GaussianInteger> divmod(const GaussianInteger& a, const GaussianInteger& b);

 private:
  Integer re_;
  Integer im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& x);

/// Normalized gcd in Z[i] (associate with re > 0, im >= 0; zero for gcd(0,0)).
GaussianInteger gcd(GaussianInteger a, GaussianInteger b);

/// |q| over Z.
Integer norm(const Integer& q);
/// |q|^2 over Z[i].
Integer norm(const GaussianInteger& q);

bool is_square_free(const Integer& q);
bool is_square_free(const GaussianInteger& q);

bool coprime(const Integer& a, const Integer& b);
bool coprime(const GaussianInteger& a, const GaussianInteger& b);

/// Prime factorization of n > 0 as (prime, exponent) pairs in increasing order.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

}  // namespace semicount

template <>
struct std::hash<semicount::GaussianInteger> {
  std::size_t operator()(const semicount::GaussianInteger& x) const noexcept { return x.hash(); }
};

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "semicount/gaussian.hpp"

namespace semicount {

enum class Ring { Integers, GaussianIntegers };

/// A nonzero modulus q together with the ring it lives in.
class Modulus {
 public:
  static Modulus integer(const Integer& q);
  static Modulus gaussian(const GaussianInteger& q);

  Ring ring() const noexcept { return ring_; }
  const GaussianInteger& value() const noexcept { return value_; }
  /// #(O/qO): |q| over Z, |q|^2 over Z[i].
  Integer norm() const;
  bool is_unit() const { return value_.is_unit(); }
  std::string str() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Modulus(Ring ring, GaussianInteger value) : ring_(ring), value_(std::move(value)) {}
  Ring ring_ = Ring::Integers;
  GaussianInteger value_;
};

/// Canonical representative of x mod q in Z: the residue in [0, |q|).
Integer canonical_residue(const Integer& x, const Integer& q);
/// Canonical representative of x mod q in Z[i]: a remainder of minimal norm;
/// ties go to nonnegative real part, then nonnegative imaginary part, then
/// larger real part, then larger imaginary part.
GaussianInteger canonical_residue(const GaussianInteger& x, const GaussianInteger& q);

/// An element of O/qO stored by its canonical representative.
class Residue {
 public:
  Residue(const GaussianInteger& x, Modulus q);
  const GaussianInteger& value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) = default;

 private:
  GaussianInteger value_;
  Modulus modulus_;
};

/// All canonical residues mod q, sorted by (re, im). Size equals norm(q).
std::vector<GaussianInteger> enumerate_residues(const Modulus& q);

/// O/qO with dense element indices 0..size()-1 and fast index arithmetic.
class ResidueRing {
 public:
  /// Largest supported #(O/qO).
  static constexpr std::int64_t kMaxSize = std::int64_t{1} << 24;

  explicit ResidueRing(Modulus q);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t one() const noexcept { return one_; }

  std::uint32_t index_of(const GaussianInteger& x) const;
  GaussianInteger element(std::uint32_t idx) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return sub(zero_, a); }

 private:
  static constexpr std::uint32_t kTableLimit = 1024;

  Modulus modulus_;
  bool integral_ = true;
  std::uint32_t size_ = 1;
  std::uint32_t zero_ = 0;
  std::uint32_t one_ = 0;
  // Gaussian case only
  std::vector<GaussianInteger> elements_;
  std::unordered_map<GaussianInteger, std::uint32_t> index_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
};

}  // namespace semicount

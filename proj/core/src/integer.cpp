#include "semicount/integer.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "semicount/errors.hpp"

namespace semicount {

namespace {

const BigInt kMin64 = BigInt(std::numeric_limits<std::int64_t>::min());
const BigInt kMax64 = BigInt(std::numeric_limits<std::int64_t>::max());

}  // namespace

Integer::Integer(const BigInt& v) { *this = from_big(v); }

Integer Integer::from_big(BigInt v) {
  Integer out;
  if (v >= kMin64 && v <= kMax64) {
    out.small_ = static_cast<std::int64_t>(v);
  } else {
    out.big_ = std::make_shared<const BigInt>(std::move(v));
  }
  return out;
}

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw DomainError("integer literal has no digits: '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw DomainError("bad integer literal: '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
  }
  return from_big(neg ? BigInt(-v) : v);
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::int64_t Integer::to_int64() const {
  if (big_) throw DomainError("integer does not fit in 64 bits: " + str());
  return small_;
}

double Integer::to_double() const { return big_ ? big_->convert_to<double>() : static_cast<double>(small_); }

double Integer::log_abs() const {
  if (is_zero()) throw DomainError("log of zero");
  if (!big_) return std::log(std::fabs(static_cast<double>(small_)));
  BigInt a = boost::multiprecision::abs(*big_);
  auto bits = static_cast<long>(boost::multiprecision::msb(a));
  if (bits < 900) return std::log(a.convert_to<double>());
  long shift = bits - 60;
  BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

int Integer::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

bool Integer::is_even() const { return big_ ? !boost::multiprecision::bit_test(*big_, 0) : (small_ % 2 == 0); }

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto it = big_->backend().limbs(); it != big_->backend().limbs() + big_->backend().size(); ++it) {
    h ^= std::hash<std::uint64_t>{}(*it) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return big_->sign() < 0 ? ~h : h;
}

Integer operator+(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_big(a.to_big() + b.to_big());
}

Integer operator-(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_big(a.to_big() - b.to_big());
}

Integer operator*(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_big(a.to_big() * b.to_big());
}

Integer operator-(const Integer& a) {
  if (!a.big_ && a.small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-a.small_);
  return Integer::from_big(-a.to_big());
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::pair<Integer, Integer> Integer::floor_divmod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) {
      q -= 1;
      r += b.small_;
    }
    return {Integer(q), Integer(r)};
  }
  BigInt q, r;
  BigInt x = a.to_big(), y = b.to_big();
  boost::multiprecision::divide_qr(x, y, q, r);
  if (r != 0 && ((r < 0) != (y < 0))) {
    q -= 1;
    r += y;
  }
  return {from_big(q), from_big(r)};
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  auto [q, r] = floor_divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact division " + a.str() + " / " + b.str());
  return q;
}

Integer Integer::round_div(const Integer& a, const Integer& b) {
  // floor((2a + b) / (2b)) with the sign of b folded into a
  Integer num = a, den = b;
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  return floor_divmod(num + num + den, den + den).first;
}

std::int64_t Integer::mod(std::int64_t m) const {
  if (m <= 0) throw DomainError("modulus must be positive");
  if (!big_) {
    std::int64_t r = small_ % m;
    return r < 0 ? r + m : r;
  }
  BigInt r = *big_ % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.str(); }

Integer gcd(Integer a, Integer b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Integer r = Integer::floor_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BezoutResult extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = Integer::floor_divmod(old_r, r).first;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw DomainError("isqrt of negative value");
  return Integer(boost::multiprecision::sqrt(n.to_big()));
}

}  // namespace semicount

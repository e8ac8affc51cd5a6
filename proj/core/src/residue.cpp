#include "semicount/residue.hpp"

#include <algorithm>
#include <tuple>

#include "semicount/errors.hpp"

namespace semicount {

Modulus Modulus::integer(const Integer& q) {
  if (q.is_zero()) throw DomainError("zero modulus");
  return Modulus(Ring::Integers, GaussianInteger(q));
}

Modulus Modulus::gaussian(const GaussianInteger& q) {
  if (q.is_zero()) throw DomainError("zero modulus");
  return Modulus(Ring::GaussianIntegers, q);
}

Integer Modulus::norm() const {
  return ring_ == Ring::Integers ? semicount::norm(value_.re()) : semicount::norm(value_);
}

std::string Modulus::str() const { return value_.str(); }

Integer canonical_residue(const Integer& x, const Integer& q) {
  if (q.is_zero()) throw DomainError("zero modulus");
  return Integer::floor_divmod(x, q.abs()).second;
}

namespace {

auto tie_key(const GaussianInteger& r) {
  return std::make_tuple(r.re().sign() >= 0, r.im().sign() >= 0, r.re(), r.im());
}

}  // namespace

GaussianInteger canonical_residue(const GaussianInteger& x, const GaussianInteger& q) {
  if (q.is_zero()) throw DomainError("zero modulus");
  auto [t, r0] = GaussianInteger::divmod(x, q);
  GaussianInteger best = r0;
  Integer best_norm = r0.norm();
  for (int dr = -1; dr <= 1; ++dr) {
    for (int di = -1; di <= 1; ++di) {
      if (dr == 0 && di == 0) continue;
      GaussianInteger r = r0 - GaussianInteger(dr, di) * q;
      Integer n = r.norm();
      if (n < best_norm || (n == best_norm && tie_key(r) > tie_key(best))) {
        best = r;
        best_norm = n;
      }
    }
  }
  return best;
}

Residue::Residue(const GaussianInteger& x, Modulus q) : modulus_(std::move(q)) {
  if (modulus_.ring() == Ring::Integers) {
    if (!x.is_real()) throw DomainError("non-real value reduced modulo a rational integer modulus");
    value_ = GaussianInteger(canonical_residue(x.re(), modulus_.value().re()));
  } else {
    value_ = canonical_residue(x, modulus_.value());
  }
}

namespace {

void check_same(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) throw DomainError("residues with different moduli");
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  check_same(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  check_same(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  check_same(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

std::vector<GaussianInteger> enumerate_residues(const Modulus& q) {
  Integer n = q.norm();
  if (n > Integer(ResidueRing::kMaxSize)) throw ResourceError("residue ring too large: N(q) = " + n.str());
  std::int64_t size = n.to_int64();
  std::vector<GaussianInteger> out;
  if (q.ring() == Ring::Integers) {
    out.reserve(static_cast<std::size_t>(size));
    for (std::int64_t k = 0; k < size; ++k) out.emplace_back(k);
    return out;
  }
  // The box [0, N) x [0, N) contains every class since N lies in (q).
  std::unordered_map<GaussianInteger, bool> seen;
  for (std::int64_t a = 0; a < size && static_cast<std::int64_t>(seen.size()) < size; ++a) {
    for (std::int64_t b = 0; b < size && static_cast<std::int64_t>(seen.size()) < size; ++b) {
      seen.emplace(canonical_residue(GaussianInteger(a, b), q.value()), true);
    }
  }
  out.reserve(seen.size());
  for (const auto& kv : seen) out.push_back(kv.first);
  std::sort(out.begin(), out.end(), [](const GaussianInteger& x, const GaussianInteger& y) {
    return std::tie(x.re(), x.im()) < std::tie(y.re(), y.im());
  });
  return out;
}

ResidueRing::ResidueRing(Modulus q) : modulus_(std::move(q)) {
  integral_ = modulus_.ring() == Ring::Integers;
  Integer n = modulus_.norm();
  if (n > Integer(kMaxSize)) throw ResourceError("residue ring too large: N(q) = " + n.str());
  size_ = static_cast<std::uint32_t>(n.to_int64());
  if (integral_) {
    zero_ = 0;
    one_ = size_ == 1 ? 0 : 1;
    return;
  }
  elements_ = enumerate_residues(modulus_);
  for (std::uint32_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
  zero_ = index_.at(canonical_residue(GaussianInteger(0), modulus_.value()));
  one_ = index_.at(canonical_residue(GaussianInteger(1), modulus_.value()));
  if (size_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    mul_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = index_of(elements_[a] + elements_[b]);
        mul_table_[a * size_ + b] = index_of(elements_[a] * elements_[b]);
      }
    }
  }
}

std::uint32_t ResidueRing::index_of(const GaussianInteger& x) const {
  if (integral_) {
    if (!x.is_real()) throw DomainError("non-real value reduced modulo a rational integer modulus");
    return static_cast<std::uint32_t>(x.re().mod(static_cast<std::int64_t>(size_)));
  }
  return index_.at(canonical_residue(x, modulus_.value()));
}

GaussianInteger ResidueRing::element(std::uint32_t idx) const {
  if (idx >= size_) throw DomainError("residue index out of range");
  if (integral_) return GaussianInteger(static_cast<std::int64_t>(idx));
  return elements_[idx];
}

std::uint32_t ResidueRing::add(std::uint32_t a, std::uint32_t b) const {
  if (integral_) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= size_ ? s - size_ : s);
  }
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  return index_of(elements_[a] + elements_[b]);
}

std::uint32_t ResidueRing::sub(std::uint32_t a, std::uint32_t b) const {
  if (integral_) return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + size_ - b);
  return index_of(elements_[a] - elements_[b]);
}

std::uint32_t ResidueRing::mul(std::uint32_t a, std::uint32_t b) const {
  if (integral_) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % size_);
  if (!mul_table_.empty()) return mul_table_[a * size_ + b];
  return index_of(elements_[a] * elements_[b]);
}

}  // namespace semicount

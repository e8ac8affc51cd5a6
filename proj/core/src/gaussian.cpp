#include "semicount/gaussian.hpp"

#include <ostream>
#include <vector>

#include "semicount/errors.hpp"

namespace semicount {

bool GaussianInteger::is_unit() const { return norm().is_one(); }

GaussianInteger GaussianInteger::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty Gaussian integer literal");
  if (s.back() != 'i') return {Integer::parse(s), 0};
  s.pop_back();
  // split at the last sign that is not the leading character
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {Integer::parse(re_part), Integer::parse(im_part)};
}

std::string GaussianInteger::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_text;
  if (im_ == Integer(1)) {
    im_text = "i";
  } else if (im_ == Integer(-1)) {
    im_text = "-i";
  } else {
    im_text = im_.str() + "i";
  }
  if (re_.is_zero()) return im_text;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + im_text;
}

std::size_t GaussianInteger::hash() const noexcept {
  std::size_t h = re_.hash();
  return h ^ (im_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool GaussianInteger::divides(const GaussianInteger& b, const GaussianInteger& a) {
  if (b.is_zero()) throw DomainError("divisibility test by zero");
  Integer n = b.norm();
  GaussianInteger t = a * b.conj();
  return Integer::floor_divmod(t.re(), n).second.is_zero() && Integer::floor_divmod(t.im(), n).second.is_zero();
}

GaussianInteger GaussianInteger::divexact(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Integer n = b.norm();
  GaussianInteger t = a * b.conj();
  return {Integer::divexact(t.re(), n), Integer::divexact(t.im(), n)};
}

std::pair<GaussianInteger, GaussianInteger> GaussianInteger::divmod(const GaussianInteger& a,
                                                                    const GaussianInteger& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Integer n = b.norm();
  GaussianInteger t = a * b.conj();
  GaussianInteger q{Integer::round_div(t.re(), n), Integer::round_div(t.im(), n)};
  return {q, a - q * b};
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& x) { return os << x.str(); }

namespace {

GaussianInteger normalize_associate(GaussianInteger g) {
  // rotate by i until re > 0 and im >= 0
  for (int k = 0; k < 4; ++k) {
    if (g.re().sign() > 0 && g.im().sign() >= 0) return g;
    g = g * GaussianInteger::i();
  }
  return g;
}

// Smallest a >= 0 with a^2 + b^2 = p for a prime p = 1 mod 4.
GaussianInteger split_prime(const Integer& p) {
  Integer a = 1;
  while (a * a < p) {
    Integer rest = p - a * a;
    Integer b = isqrt(rest);
    if (b * b == rest) return {a, b};
    a += 1;
  }
  throw DomainError("prime " + p.str() + " is not a sum of two squares");
}

}  // namespace

GaussianInteger gcd(GaussianInteger a, GaussianInteger b) {
  while (!b.is_zero()) {
    GaussianInteger r = GaussianInteger::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return normalize_associate(a);
}

Integer norm(const Integer& q) {
  if (q.is_zero()) throw DomainError("norm of zero modulus");
  return q.abs();
}

Integer norm(const GaussianInteger& q) {
  if (q.is_zero()) throw DomainError("norm of zero modulus");
  return q.norm();
}

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in) {
  if (n_in.sign() <= 0) throw DomainError("factorization needs a positive integer");
  std::vector<std::pair<Integer, int>> out;
  Integer n = n_in;
  auto strip = [&](const Integer& p) {
    int e = 0;
    while (true) {
      auto [q, r] = Integer::floor_divmod(n, p);
      if (!r.is_zero()) break;
      n = q;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(Integer(2));
  for (Integer p = 3; p * p <= n; p += 2) strip(p);
  if (!n.is_one()) out.emplace_back(n, 1);
  return out;
}

bool is_square_free(const Integer& q) {
  if (q.is_zero()) throw DomainError("is_square_free: zero");
  Integer n = q.abs();
  if (n.is_one()) throw DomainError("is_square_free: unit");
  for (const auto& [p, e] : factor_integer(n)) {
    if (e >= 2) return false;
  }
  return true;
}

bool is_square_free(const GaussianInteger& q) {
  if (q.is_zero()) throw DomainError("is_square_free: zero");
  if (q.is_unit()) throw DomainError("is_square_free: unit");
  for (const auto& [p, e] : factor_integer(q.norm())) {
    if (e < 2) continue;
    if (p == Integer(2)) {
      // (1+i)^2 = 2i
      if (GaussianInteger::divides(GaussianInteger(2), q)) return false;
    } else if (p.mod(4) == 3) {
      // p stays prime; p^2 | N(q) forces p | q
      if (GaussianInteger::divides(GaussianInteger(p * p), q)) return false;
    } else {
      GaussianInteger pi = split_prime(p);
      if (GaussianInteger::divides(pi * pi, q)) return false;
      GaussianInteger pb = pi.conj();
      if (GaussianInteger::divides(pb * pb, q)) return false;
    }
  }
  return true;
}

bool coprime(const Integer& a, const Integer& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("coprime: both arguments zero");
  return gcd(a, b).is_one();
}

bool coprime(const GaussianInteger& a, const GaussianInteger& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("coprime: both arguments zero");
  return gcd(a, b).is_unit();
}

}  // namespace semicount

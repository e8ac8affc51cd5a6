#include "semicount/groups.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "semicount/errors.hpp"

namespace semicount {

std::string to_string(Setting s) {
  switch (s) {
    case Setting::SL2R:
      return "SL2R";
    case Setting::SL2C:
      return "SL2C";
    case Setting::SOQ:
      return "SOQ";
  }
  return "?";
}

// ---------------------------------------------------------------- BoundaryPoint

BoundaryPoint BoundaryPoint::infinity(int dim) {
  if (dim < 1) throw DomainError("boundary dimension must be positive");
  BoundaryPoint p;
  p.dim_ = dim;
  p.infinite_ = true;
  return p;
}

BoundaryPoint BoundaryPoint::exact(std::vector<Rational> coords) {
  if (coords.empty()) throw DomainError("boundary point needs coordinates");
  BoundaryPoint p;
  p.dim_ = static_cast<int>(coords.size());
  p.exact_ = true;
  p.rat_ = std::move(coords);
  return p;
}

BoundaryPoint BoundaryPoint::approx(std::vector<double> coords) {
  if (coords.empty()) throw DomainError("boundary point needs coordinates");
  for (double c : coords) {
    if (!std::isfinite(c)) throw DomainError("non-finite boundary coordinate; use infinity()");
  }
  BoundaryPoint p;
  p.dim_ = static_cast<int>(coords.size());
  p.flt_ = std::move(coords);
  return p;
}

BoundaryPoint BoundaryPoint::from_float(const FloatPoint& x, int dim) {
  return approx(std::vector<double>(x.begin(), x.begin() + dim));
}

const std::vector<Rational>& BoundaryPoint::exact_coords() const {
  if (!exact_) throw DomainError("boundary point is not exact");
  return rat_;
}

std::vector<double> BoundaryPoint::coords() const {
  if (infinite_) throw DomainError("coordinates of the point at infinity");
  if (!exact_) return flt_;
  std::vector<double> out;
  out.reserve(rat_.size());
  for (const auto& r : rat_) out.push_back(r.convert_to<double>());
  return out;
}

FloatPoint BoundaryPoint::to_float() const {
  if (dim_ > kMaxBoundaryDim) throw DomainError("boundary dimension exceeds float fast path limit");
  FloatPoint out{};
  auto c = coords();
  for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
  return out;
}

std::string BoundaryPoint::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ", ";
    if (exact_) {
      os << rat_[static_cast<std::size_t>(i)];
    } else {
      os.precision(17);
      os << flt_[static_cast<std::size_t>(i)];
    }
  }
  os << ")";
  return os.str();
}

bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.dim_ != b.dim_ || a.infinite_ != b.infinite_) return false;
  if (a.infinite_) return true;
  if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
  return a.coords() == b.coords();
}

// ---------------------------------------------------------------- GroupElement

namespace {

Integer det_bareiss(std::vector<Integer> m, int n) {
  int sign = 1;
  Integer prev = 1;
  auto at = [&](int r, int c) -> Integer& { return m[static_cast<std::size_t>(r * n + c)]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k).is_zero()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!at(r, k).is_zero()) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = Integer::divexact(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
      }
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

bool all_small_real(const std::vector<GaussianInteger>& e) {
  for (const auto& x : e) {
    if (!x.re().is_small() || !x.im().is_zero()) return false;
  }
  return true;
}

bool all_real(const std::vector<GaussianInteger>& e) {
  for (const auto& x : e) {
    if (!x.is_real()) return false;
  }
  return true;
}

}  // namespace

GroupElement::GroupElement(Setting setting, int size, std::vector<GaussianInteger> entries)
    : setting_(setting), size_(size), entries_(std::move(entries)) {
  if (size_ < 2 || static_cast<int>(entries_.size()) != size_ * size_) {
    throw DomainError("matrix entry count does not match size");
  }
  if (setting_ != Setting::SOQ) {
    if (size_ != 2) throw DomainError("SL2 elements are 2x2");
    if (setting_ == Setting::SL2R && !all_real(entries_)) throw DomainError("SL2R element with non-real entry");
    if (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0) != GaussianInteger(1)) {
      throw DomainError("SL2 element must have determinant 1: " + str());
    }
    return;
  }
  if (size_ < 3) throw DomainError("SO_Q elements are (n+1)x(n+1) with n >= 2");
  if (!all_real(entries_)) throw DomainError("SO_Q element with non-real entry");
  // M^T J M = J with J = diag(1, ..., 1, -1)
  int n = size_;
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      Integer s = 0;
      for (int k = 0; k < n; ++k) {
        Integer term = at(k, r).re() * at(k, c).re();
        s = (k == n - 1) ? s - term : s + term;
      }
      Integer want = (r == c) ? Integer(r == n - 1 ? -1 : 1) : Integer(0);
      if (s != want) throw DomainError("matrix does not preserve the quadratic form: " + str());
    }
  }
  std::vector<Integer> re;
  re.reserve(entries_.size());
  for (const auto& x : entries_) re.push_back(x.re());
  if (!det_bareiss(re, n).is_one()) throw DomainError("SO_Q element must have determinant 1");
  if (at(n - 1, n - 1).re().sign() <= 0) throw DomainError("SO_Q element must preserve the upper sheet");
}

GroupElement GroupElement::identity(Setting setting, int size) {
  std::vector<GaussianInteger> e(static_cast<std::size_t>(size * size));
  for (int i = 0; i < size; ++i) e[static_cast<std::size_t>(i * size + i)] = GaussianInteger(1);
  return GroupElement(setting, size, std::move(e));
}

GroupElement GroupElement::sl2(GaussianInteger a, GaussianInteger b, GaussianInteger c, GaussianInteger d) {
  bool real = a.is_real() && b.is_real() && c.is_real() && d.is_real();
  return sl2(real ? Setting::SL2R : Setting::SL2C, std::move(a), std::move(b), std::move(c), std::move(d));
}

GroupElement GroupElement::sl2(Setting setting, GaussianInteger a, GaussianInteger b, GaussianInteger c,
                               GaussianInteger d) {
  if (setting == Setting::SOQ) throw DomainError("sl2() with SO_Q setting");
  return GroupElement(setting, 2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

int GroupElement::hyperbolic_dim() const noexcept {
  switch (setting_) {
    case Setting::SL2R:
      return 2;
    case Setting::SL2C:
      return 3;
    case Setting::SOQ:
      return size_ - 1;
  }
  return 2;
}

GroupElement GroupElement::inverse() const {
  if (setting_ != Setting::SOQ) {
    return GroupElement(Unchecked{}, setting_, 2, {at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)});
  }
  // M^{-1} = J M^T J
  int n = size_;
  std::vector<GaussianInteger> e(entries_.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      bool flip = (r == n - 1) != (c == n - 1);
      const GaussianInteger& v = at(c, r);
      e[static_cast<std::size_t>(r * n + c)] = flip ? -v : v;
    }
  }
  return GroupElement(Unchecked{}, setting_, n, std::move(e));
}

GaussianInteger GroupElement::trace() const {
  GaussianInteger t;
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

bool GroupElement::is_identity() const {
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) {
      if (at(r, c) != GaussianInteger(r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Eigen::MatrixXd GroupElement::to_eigen() const {
  Eigen::MatrixXd m(size_, size_);
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) m(r, c) = at(r, c).re().to_double();
  }
  return m;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < size_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < size_; ++c) os << (c ? ", " : "") << at(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t GroupElement::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(setting_) * 31 + static_cast<std::size_t>(size_);
  for (const auto& x : entries_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.setting_ != h.setting_ || g.size_ != h.size_) {
    throw DomainError("multiplying elements of different settings: " + to_string(g.setting_) + " and " +
                      to_string(h.setting_));
  }
  const int n = g.size_;
  std::vector<GaussianInteger> e(static_cast<std::size_t>(n * n));
  if (all_small_real(g.entries_) && all_small_real(h.entries_)) {
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
      for (int c = 0; c < n; ++c) {
        __int128 s = 0;
        for (int k = 0; k < n; ++k) {
          s += static_cast<__int128>(g.at(r, k).re().small_value()) * h.at(k, c).re().small_value();
        }
        if (s > INT64_MAX || s < INT64_MIN) {
          ok = false;
          break;
        }
        e[static_cast<std::size_t>(r * n + c)] = GaussianInteger(static_cast<std::int64_t>(s));
      }
    }
    if (ok) return GroupElement(GroupElement::Unchecked{}, g.setting_, n, std::move(e));
  }
  if (all_real(g.entries_) && all_real(h.entries_)) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Integer s = 0;
        for (int k = 0; k < n; ++k) s += g.at(r, k).re() * h.at(k, c).re();
        e[static_cast<std::size_t>(r * n + c)] = GaussianInteger(s);
      }
    }
  } else {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        GaussianInteger s;
        for (int k = 0; k < n; ++k) s += g.at(r, k) * h.at(k, c);
        e[static_cast<std::size_t>(r * n + c)] = s;
      }
    }
  }
  return GroupElement(GroupElement::Unchecked{}, g.setting_, n, std::move(e));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) { return g * h; }
GroupElement inverse(const GroupElement& g) { return g.inverse(); }

Integer frobenius_norm_sq(const GroupElement& g) {
  Integer s = 0;
  for (const auto& x : g.entries()) s += x.norm();
  return s;
}

// ---------------------------------------------------------------- boundary action

namespace {

struct CRat {
  Rational re, im;
};

CRat to_crat(const GaussianInteger& z) { return {z.re().to_rational(), z.im().to_rational()}; }
CRat cadd(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat cmul(const CRat& a, const CRat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
bool czero(const CRat& a) { return a.re == 0 && a.im == 0; }
CRat cdiv(const CRat& a, const CRat& b) {
  Rational n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

void check_dims(const GroupElement& g, const BoundaryPoint& x) {
  if (g.boundary_dim() != x.dim()) {
    throw DomainError("boundary point of dimension " + std::to_string(x.dim()) + " for a " +
                      to_string(g.setting()) + " element acting on dimension " + std::to_string(g.boundary_dim()));
  }
}

CRat point_to_crat(const BoundaryPoint& x) {
  const auto& c = x.exact_coords();
  return {c[0], c.size() > 1 ? c[1] : Rational(0)};
}

BoundaryPoint crat_to_point(const CRat& z, int dim) {
  if (dim == 1) return BoundaryPoint::exact({z.re});
  return BoundaryPoint::exact({z.re, z.im});
}

// null vector v(u) = (2u, 1 - |u|^2, 1 + |u|^2); infinity is (0, ..., 0, -1, 1)
std::vector<Rational> null_vector(const BoundaryPoint& x, int size) {
  std::vector<Rational> v(static_cast<std::size_t>(size), Rational(0));
  if (x.is_infinity()) {
    v[static_cast<std::size_t>(size - 2)] = -1;
    v[static_cast<std::size_t>(size - 1)] = 1;
    return v;
  }
  const auto& u = x.exact_coords();
  Rational n2 = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    v[i] = 2 * u[i];
    n2 += u[i] * u[i];
  }
  v[static_cast<std::size_t>(size - 2)] = 1 - n2;
  v[static_cast<std::size_t>(size - 1)] = 1 + n2;
  return v;
}

}  // namespace

BoundaryPoint mobius_apply(const GroupElement& g, const BoundaryPoint& x) {
  check_dims(g, x);
  const int dim = x.dim();
  if (!x.is_infinity() && !x.is_exact()) {
    if (dim > kMaxBoundaryDim) throw DomainError("float boundary action limited to dimension 4");
    PreciseMobius m(g);
    PreciseMobius::Point p{}, out{};
    auto c = x.coords();
    for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    if (!m.apply(p, out)) return BoundaryPoint::infinity(dim);
    std::vector<double> r(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) r[static_cast<std::size_t>(i)] = static_cast<double>(out[static_cast<std::size_t>(i)]);
    return BoundaryPoint::approx(std::move(r));
  }
  if (g.setting() != Setting::SOQ) {
    CRat a = to_crat(g.at(0, 0)), b = to_crat(g.at(0, 1)), c = to_crat(g.at(1, 0)), d = to_crat(g.at(1, 1));
    if (x.is_infinity()) {
      if (czero(c)) return BoundaryPoint::infinity(dim);
      return crat_to_point(cdiv(a, c), dim);
    }
    CRat z = point_to_crat(x);
    CRat den = cadd(cmul(c, z), d);
    if (czero(den)) return BoundaryPoint::infinity(dim);
    CRat res = cdiv(cadd(cmul(a, z), b), den);
    if (dim == 1 && res.im != 0) throw DomainError("real boundary action produced a non-real point");
    return crat_to_point(res, dim);
  }
  const int n = g.size();
  auto v = null_vector(x, n);
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(r)] += g.at(r, k).re().to_rational() * v[static_cast<std::size_t>(k)];
  }
  Rational phi = w[static_cast<std::size_t>(n - 2)] + w[static_cast<std::size_t>(n - 1)];
  if (phi == 0) return BoundaryPoint::infinity(dim);
  std::vector<Rational> u(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) u[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / phi;
  return BoundaryPoint::exact(std::move(u));
}

double conformal_derivative(const GroupElement& g, const BoundaryPoint& x) {
  check_dims(g, x);
  if (x.is_infinity()) throw DomainError("conformal derivative at infinity");
  if (!x.is_exact()) {
    PreciseMobius m(g);
    PreciseMobius::Point p{};
    auto c = x.coords();
    for (int i = 0; i < x.dim(); ++i) p[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    long double d = m.derivative(p);
    if (!std::isfinite(static_cast<double>(d))) throw DomainError("conformal derivative at a pole");
    return static_cast<double>(d);
  }
  if (g.setting() != Setting::SOQ) {
    CRat z = point_to_crat(x);
    CRat den = cadd(cmul(to_crat(g.at(1, 0)), z), to_crat(g.at(1, 1)));
    if (czero(den)) throw DomainError("conformal derivative at a pole");
    Rational n = den.re * den.re + den.im * den.im;
    return (1 / n).convert_to<double>();
  }
  const int n = g.size();
  auto v = null_vector(x, n);
  Rational phi = 0;
  for (int r = n - 2; r < n; ++r) {
    for (int k = 0; k < n; ++k) phi += g.at(r, k).re().to_rational() * v[static_cast<std::size_t>(k)];
  }
  if (phi == 0) throw DomainError("conformal derivative at a pole");
  return (2 / phi).convert_to<double>();
}

// ---------------------------------------------------------------- spectral data

bool is_hyperbolic(const GroupElement& g) {
  if (g.setting() != Setting::SOQ) {
    GaussianInteger t = g.trace();
    if (!t.im().is_zero()) return true;
    return t.re() * t.re() > Integer(4);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.to_eigen(), false);
  double top = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) top = std::max(top, std::abs(es.eigenvalues()[i]));
  return top > 1.0 + 1e-9;
}

ComplexLength complex_translation_length(std::complex<double> tr) {
  if (tr.imag() == 0.0 && std::fabs(tr.real()) <= 2.0) {
    throw DomainError("trace in [-2, 2]: element is not loxodromic");
  }
  std::complex<double> z = tr / 2.0;
  std::complex<double> w;
  if (std::abs(z) > 1e150) {
    w = std::log(2.0 * z);
  } else {
    w = std::acosh(z);
  }
  if (w.real() < 0) w = -w;
  return {2.0 * w.real(), 2.0 * w.imag()};
}

ComplexLength complex_translation_length(const GroupElement& g) {
  if (g.setting() == Setting::SOQ) throw DomainError("complex translation length is defined for SL2 settings only");
  if (!is_hyperbolic(g)) throw DomainError("element is not hyperbolic: " + g.str());
  GaussianInteger t = g.trace();
  double big = std::max(t.re().is_zero() ? 0.0 : t.re().log_abs(), t.im().is_zero() ? 0.0 : t.im().log_abs());
  if (big > 600.0) {
    // far outside double range: cosh(w) ~ e^w / 2 so w = log(tr)
    double arg = std::atan2(t.im().to_double(), t.re().to_double());
    double mag = t.norm().log_abs() / 2.0;
    return {2.0 * mag, 2.0 * arg};
  }
  return complex_translation_length(t.to_complex());
}

std::complex<double> product_length_rhs(double lg, double lh, const ComplexMatrix2& q) {
  return std::cosh(lg / 2) * std::cosh(lh / 2) + (q[0] * q[3] + q[1] * q[2]) * std::sinh(lg / 2) * std::sinh(lh / 2);
}

ProductLengthCheck product_length_check(double lg, double lh, const ComplexMatrix2& q) {
  using C = std::complex<double>;
  if (!(lg > 0) || !(lh > 0)) throw DomainError("translation lengths must be positive");
  const C det = q[0] * q[3] - q[1] * q[2];
  if (std::abs(det - 1.0) > 1e-12) throw DomainError("Q must have determinant 1");
  auto mul = [](const ComplexMatrix2& x, const ComplexMatrix2& y) {
    return ComplexMatrix2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                          x[2] * y[1] + x[3] * y[3]};
  };
  const ComplexMatrix2 g{std::exp(lg / 2), 0.0, 0.0, std::exp(-lg / 2)};
  const ComplexMatrix2 a{std::exp(lh / 2), 0.0, 0.0, std::exp(-lh / 2)};
  const ComplexMatrix2 qinv{q[3], -q[1], -q[2], q[0]};
  const ComplexMatrix2 gh = mul(g, mul(q, mul(a, qinv)));
  ComplexLength cl = complex_translation_length(gh[0] + gh[3]);
  ProductLengthCheck out;
  out.lhs = std::cosh(C(cl.length, cl.angle) / 2.0);
  out.rhs = product_length_rhs(lg, lh, q);
  out.discrepancy = std::min(std::abs(out.lhs - out.rhs), std::abs(out.lhs + out.rhs));
  return out;
}

double translation_length(const GroupElement& g) {
  if (g.setting() != Setting::SOQ) return complex_translation_length(g).length;
  if (!is_hyperbolic(g)) throw DomainError("element is not hyperbolic: " + g.str());
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.to_eigen(), false);
  double top = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) top = std::max(top, std::abs(es.eigenvalues()[i]));
  return std::log(top);
}

namespace {

BoundaryPoint complex_point(std::complex<long double> z, int dim) {
  if (dim == 1) return BoundaryPoint::approx({static_cast<double>(z.real())});
  return BoundaryPoint::approx({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

}  // namespace

FixedPoints fixed_points(const GroupElement& g) {
  if (!is_hyperbolic(g)) throw DomainError("fixed_points needs a hyperbolic element: " + g.str());
  const int dim = g.boundary_dim();
  if (g.setting() != Setting::SOQ) {
    using C = std::complex<long double>;
    auto cv = [](const GaussianInteger& z) {
      return C(static_cast<long double>(z.re().to_double()), static_cast<long double>(z.im().to_double()));
    };
    C a = cv(g.at(0, 0)), b = cv(g.at(0, 1)), c = cv(g.at(1, 0)), d = cv(g.at(1, 1));
    if (g.at(1, 0).is_zero()) {
      // x -> (a x + b)/d fixes infinity and b/(d - a)
      C finite = b / (d - a);
      bool inf_attracting = std::abs(a) > std::abs(d);
      BoundaryPoint fin = complex_point(finite, dim);
      BoundaryPoint inf = BoundaryPoint::infinity(dim);
      return inf_attracting ? FixedPoints{inf, fin} : FixedPoints{fin, inf};
    }
    // c x^2 + (d - a) x - b = 0, solved without cancellation
    C B = d - a;
    C disc = std::sqrt(B * B + 4.0L * b * c);
    if (std::real(std::conj(B) * disc) < 0) disc = -disc;
    C qv = -(B + disc) / 2.0L;
    C r1, r2;
    if (std::abs(qv) == 0.0L) {
      r1 = r2 = C(0);
    } else {
      r1 = qv / c;
      r2 = -b / qv;
    }
    // attracting where |c x + d| > 1
    if (std::abs(c * r1 + d) > std::abs(c * r2 + d)) return {complex_point(r1, dim), complex_point(r2, dim)};
    return {complex_point(r2, dim), complex_point(r1, dim)};
  }
  const int n = g.size();
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.to_eigen(), true);
  int top = 0, bottom = 0;
  for (int i = 0; i < n; ++i) {
    double m = std::abs(es.eigenvalues()[i]);
    if (m > std::abs(es.eigenvalues()[top])) top = i;
    if (m < std::abs(es.eigenvalues()[bottom])) bottom = i;
  }
  auto to_point = [&](int idx) {
    Eigen::VectorXd w = es.eigenvectors().col(idx).real();
    double phi = w(n - 2) + w(n - 1);
    if (std::fabs(phi) <= 1e-14 * w.norm()) return BoundaryPoint::infinity(dim);
    std::vector<double> u(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) u[static_cast<std::size_t>(i)] = w(i) / phi;
    return BoundaryPoint::approx(std::move(u));
  };
  return {to_point(top), to_point(bottom)};
}

namespace {

// arccosh(x) for x >= 1 given as an exact integer scaled by 1/den
double acosh_scaled(const Integer& num, double den) {
  double x = num.to_double() / den;
  if (std::isfinite(x) && x < 1e15) return std::acosh(std::max(1.0, x));
  // acosh(x) = log(2x) - O(1/x^2)
  return num.log_abs() - std::log(den) + std::log(2.0);
}

}  // namespace

double hyperbolic_distance(const GroupElement& g) {
  if (g.setting() != Setting::SOQ) return acosh_scaled(frobenius_norm_sq(g), 2.0);
  return acosh_scaled(g.at(g.size() - 1, g.size() - 1).re(), 1.0);
}

GroupElement sym_square_embed(const GroupElement& g) {
  if (g.setting() != Setting::SL2R) throw DomainError("sym_square_embed needs an SL2(Z) element");
  const Integer& a = g.at(0, 0).re();
  const Integer& b = g.at(0, 1).re();
  const Integer& c = g.at(1, 0).re();
  const Integer& d = g.at(1, 1).re();
  if (!(a + b + c + d).is_even()) {
    throw DomainError("sym_square_embed: a+b+c+d odd, image is not integral for " + g.str());
  }
  Integer a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  auto half = [](const Integer& x) { return Integer::divexact(x, 2); };
  std::vector<GaussianInteger> m = {
      a * d + b * c, b * d - a * c,                 a * c + b * d,
      c * d - a * b, half(a2 - b2 - c2 + d2),       half(c2 + d2 - a2 - b2),
      a * b + c * d, half(b2 + d2 - a2 - c2),       half(a2 + b2 + c2 + d2),
  };
  return GroupElement(Setting::SOQ, 3, std::move(m));
}

// ---------------------------------------------------------------- float action

template <typename T>
BasicFloatMobius<T>::BasicFloatMobius(const GroupElement& g)
    : setting_(g.setting()), dim_(g.boundary_dim()), size_(g.size()) {
  if (dim_ > kMaxBoundaryDim) throw DomainError("float boundary action limited to dimension 4");
  auto cv = [](const GaussianInteger& z) {
    return std::complex<T>(static_cast<T>(z.re().to_double()), static_cast<T>(z.im().to_double()));
  };
  if (setting_ != Setting::SOQ) {
    a_ = cv(g.at(0, 0));
    b_ = cv(g.at(0, 1));
    c_ = cv(g.at(1, 0));
    d_ = cv(g.at(1, 1));
  } else {
    m_.resize(static_cast<std::size_t>(size_ * size_));
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) m_[static_cast<std::size_t>(r * size_ + c)] = static_cast<T>(g.at(r, c).re().to_double());
    }
  }
}

template <typename T>
bool BasicFloatMobius<T>::apply_with_derivative(const Point& x, Point& out, T& deriv) const {
  if (setting_ == Setting::SL2R) {
    T den = c_.real() * x[0] + d_.real();
    if (den == 0) return false;
    out[0] = (a_.real() * x[0] + b_.real()) / den;
    deriv = 1 / (den * den);
    return true;
  }
  if (setting_ == Setting::SL2C) {
    std::complex<T> z(x[0], x[1]);
    std::complex<T> den = c_ * z + d_;
    T n = std::norm(den);
    if (n == 0) return false;
    std::complex<T> w = (a_ * z + b_) / den;
    out[0] = w.real();
    out[1] = w.imag();
    deriv = 1 / n;
    return true;
  }
  const int n = size_;
  std::array<T, kMaxBoundaryDim + 2> v{}, w{};
  T n2 = 0;
  for (int i = 0; i < dim_; ++i) {
    v[static_cast<std::size_t>(i)] = 2 * x[static_cast<std::size_t>(i)];
    n2 += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  v[static_cast<std::size_t>(n - 2)] = 1 - n2;
  v[static_cast<std::size_t>(n - 1)] = 1 + n2;
  for (int r = 0; r < n; ++r) {
    T s = 0;
    for (int k = 0; k < n; ++k) s += m_[static_cast<std::size_t>(r * n + k)] * v[static_cast<std::size_t>(k)];
    w[static_cast<std::size_t>(r)] = s;
  }
  T phi = w[static_cast<std::size_t>(n - 2)] + w[static_cast<std::size_t>(n - 1)];
  if (phi == 0) return false;
  for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / phi;
  deriv = 2 / phi;
  return true;
}

template <typename T>
bool BasicFloatMobius<T>::apply(const Point& x, Point& out) const {
  T d;
  return apply_with_derivative(x, out, d);
}

template <typename T>
T BasicFloatMobius<T>::derivative(const Point& x) const {
  Point out{};
  T d;
  if (!apply_with_derivative(x, out, d)) return std::numeric_limits<T>::infinity();
  return d;
}

template class BasicFloatMobius<double>;
template class BasicFloatMobius<long double>;

double distance(const FloatPoint& x, const FloatPoint& y, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) {
    double t = x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)];
    s += t * t;
  }
  return std::sqrt(s);
}

}  // namespace semicount

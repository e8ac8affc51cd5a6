#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "semicount/gaussian.hpp"

namespace semicount {

/// Which matrix group an element lives in.
///   SL2R: SL2(Z) acting on R, boundary dimension 1.
///   SL2C: SL2(Z[i]) acting on the Riemann sphere, boundary dimension 2.
///   SOQ:  SO_Q(Z) for Q = x1^2 + ... + xn^2 - x_{n+1}^2, boundary dimension n-1.
enum class Setting { SL2R, SL2C, SOQ };

std::string to_string(Setting s);

/// Maximum boundary dimension supported by the float fast paths.
inline constexpr int kMaxBoundaryDim = 4;
using FloatPoint = std::array<double, kMaxBoundaryDim>;

/// A point of R^{d} or the symbolic point at infinity.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity(int dim);
  static BoundaryPoint exact(std::vector<Rational> coords);
  static BoundaryPoint approx(std::vector<double> coords);
  static BoundaryPoint from_float(const FloatPoint& p, int dim);

  int dim() const noexcept { return dim_; }
  bool is_infinity() const noexcept { return infinite_; }
  bool is_exact() const noexcept { return exact_; }
  /// Exact coordinates; throws DomainError for float points or infinity.
  const std::vector<Rational>& exact_coords() const;
  /// Coordinates as doubles; throws DomainError for infinity.
  std::vector<double> coords() const;
  FloatPoint to_float() const;
  std::string str() const;

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b);

 private:
  int dim_ = 1;
  bool infinite_ = false;
  bool exact_ = false;
  std::vector<Rational> rat_;
  std::vector<double> flt_;
};

/// Exact integral matrix group element. Immutable.
class GroupElement {
 public:
  /// Validates det = 1 (SL2) or M^T Q M = Q with det 1 and M_{n+1,n+1} > 0 (SOQ).
  GroupElement(Setting setting, int size, std::vector<GaussianInteger> entries);

  static GroupElement identity(Setting setting, int size);
  /// 2x2 element; SL2R when all entries are real, SL2C otherwise.
  static GroupElement sl2(GaussianInteger a, GaussianInteger b, GaussianInteger c, GaussianInteger d);
  /// Same, forcing the setting (an all-real matrix may be tagged SL2C).
  static GroupElement sl2(Setting setting, GaussianInteger a, GaussianInteger b, GaussianInteger c,
                          GaussianInteger d);

  Setting setting() const noexcept { return setting_; }
  /// Matrix size: 2 for SL2, n+1 for SOQ.
  int size() const noexcept { return size_; }
  /// Dimension n of the hyperbolic space acted on.
  int hyperbolic_dim() const noexcept;
  int boundary_dim() const noexcept { return hyperbolic_dim() - 1; }

  const GaussianInteger& at(int r, int c) const { return entries_[static_cast<std::size_t>(r * size_ + c)]; }
  const std::vector<GaussianInteger>& entries() const noexcept { return entries_; }

  GroupElement inverse() const;
  GaussianInteger trace() const;
  bool is_identity() const;
  Eigen::MatrixXd to_eigen() const;
  std::string str() const;
  std::size_t hash() const noexcept;

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) noexcept {
    return g.setting_ == h.setting_ && g.size_ == h.size_ && g.entries_ == h.entries_;
  }

 private:
  struct Unchecked {};
  GroupElement(Unchecked, Setting setting, int size, std::vector<GaussianInteger> entries)
      : setting_(setting), size_(size), entries_(std::move(entries)) {}

  Setting setting_ = Setting::SL2R;
  int size_ = 2;
  std::vector<GaussianInteger> entries_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Sum of |entry|^2, exact.
Integer frobenius_norm_sq(const GroupElement& g);

/// Boundary action. Rational input gives exact output; poles map to infinity.
BoundaryPoint mobius_apply(const GroupElement& g, const BoundaryPoint& x);

/// Conformal stretch factor |g'(x)| of the boundary action.
double conformal_derivative(const GroupElement& g, const BoundaryPoint& x);

bool is_hyperbolic(const GroupElement& g);

/// Complex translation length l + i*theta with cosh((l + i theta)/2) = tr/2.
struct ComplexLength {
  double length = 0.0;
  double angle = 0.0;
};
ComplexLength complex_translation_length(const GroupElement& g);
/// Same from a trace value; throws DomainError unless the trace is loxodromic.
ComplexLength complex_translation_length(std::complex<double> trace);

/// Row-major complex 2x2 matrix.
using ComplexMatrix2 = std::array<std::complex<double>, 4>;

/// cosh(lg/2) cosh(lh/2) + (ad + bc) sinh(lg/2) sinh(lh/2) for Q = (a b; c d).
std::complex<double> product_length_rhs(double lg, double lh, const ComplexMatrix2& q);

struct ProductLengthCheck {
  std::complex<double> lhs;  // cosh((l + i theta)(gh) / 2) from the trace of gh
  std::complex<double> rhs;
  double discrepancy = 0.0;  // min over the sign
};

/// g = diag(e^{lg/2}, e^{-lg/2}), h = Q diag(e^{lh/2}, e^{-lh/2}) Q^{-1}, det Q = 1.
ProductLengthCheck product_length_check(double lg, double lh, const ComplexMatrix2& q);

/// Real translation length for any setting (log of the top eigenvalue for SOQ).
double translation_length(const GroupElement& g);

struct FixedPoints {
  BoundaryPoint attracting;
  BoundaryPoint repelling;
};
FixedPoints fixed_points(const GroupElement& g);

/// d(o, g o) with o the standard base point.
double hyperbolic_distance(const GroupElement& g);

/// Symmetric-square representation SL2(Z) -> SO(2,1)(Z). The boundary action
/// of the image on R agrees with the fractional linear action of g. Requires
/// a + b + c + d even for the image to be integral.
GroupElement sym_square_embed(const GroupElement& g);

/// Precomputed double-precision boundary action of one element.
template <typename T>
class BasicFloatMobius {
 public:
  using Point = std::array<T, kMaxBoundaryDim>;

  BasicFloatMobius() = default;
  explicit BasicFloatMobius(const GroupElement& g);

  int dim() const noexcept { return dim_; }
  /// Image of a finite point. Returns false at a pole.
  bool apply(const Point& x, Point& out) const;
  /// Image and conformal derivative at x. Returns false at a pole.
  bool apply_with_derivative(const Point& x, Point& out, T& derivative) const;
  /// Conformal derivative at x (infinite at a pole).
  T derivative(const Point& x) const;

 private:
  Setting setting_ = Setting::SL2R;
  int dim_ = 1;
  int size_ = 2;
  std::complex<T> a_, b_, c_, d_;
  std::vector<T> m_;
};

using FloatMobius = BasicFloatMobius<double>;
using PreciseMobius = BasicFloatMobius<long double>;

/// Euclidean distance between finite float points of dimension dim.
double distance(const FloatPoint& x, const FloatPoint& y, int dim);

}  // namespace semicount

template <>
struct std::hash<semicount::GroupElement> {
  std::size_t operator()(const semicount::GroupElement& g) const noexcept { return g.hash(); }
};

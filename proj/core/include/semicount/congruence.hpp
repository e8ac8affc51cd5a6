#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semicount/residue.hpp"
#include "semicount/semigroup.hpp"

namespace semicount {

/// Row-major matrix of residue indices into a ResidueRing.
using ResidueMatrix = std::vector<std::uint32_t>;

/// Entrywise reduction of g.
ResidueMatrix project(const GroupElement& g, const ResidueRing& ring);

/// The modulus q in the coefficient ring of the spec: Z[i] for SL2C, Z otherwise.
Modulus spec_modulus(const SemigroupSpec& spec, const GaussianInteger& q);

/// Finite group generated by the reductions of a set of elements.
class QuotientGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// BFS closure of the generator images and their inverses. Element 0 is
  /// the identity; the order is deterministic. Throws ResourceError past cap.
  QuotientGroup(const std::vector<GroupElement>& generators, const Modulus& q, std::size_t cap = kDefaultCap);

  const ResidueRing& ring() const noexcept { return ring_; }
  const Modulus& modulus() const noexcept { return ring_.modulus(); }
  Setting setting() const noexcept { return setting_; }
  int matrix_size() const noexcept { return size_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint32_t identity() const noexcept { return 0; }

  const ResidueMatrix& element(std::uint32_t i) const { return elements_.at(i); }
  std::optional<std::uint32_t> find(const ResidueMatrix& m) const;
  /// Index of the reduction of g; DomainError when it is not in the group.
  std::uint32_t index_of(const GroupElement& g) const;

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverses_.at(a); }
  /// Permutation x -> x h.
  std::vector<std::uint32_t> right_table(std::uint32_t h) const;
  /// Permutation x -> h x.
  std::vector<std::uint32_t> left_table(std::uint32_t h) const;

  std::string str(std::uint32_t i) const;

 private:
  struct KeyHash {
    std::size_t operator()(const ResidueMatrix& m) const noexcept;
  };

  ResidueMatrix mul(const ResidueMatrix& a, const ResidueMatrix& b) const;
  ResidueMatrix inv(const ResidueMatrix& a) const;

  ResidueRing ring_;
  Setting setting_ = Setting::SL2R;
  int size_ = 2;
  std::vector<ResidueMatrix> elements_;
  std::vector<std::uint32_t> inverses_;
  std::unordered_map<ResidueMatrix, std::uint32_t, KeyHash> index_;
};

/// Group generated by the reductions of the spec generators mod q.
QuotientGroup quotient_group(const SemigroupSpec& spec, const GaussianInteger& q,
                             std::size_t cap = QuotientGroup::kDefaultCap);

struct ReturnTrajectorySet {
  /// Distinct products W(alpha) W(alpha~)^{-1}, in order of first appearance.
  std::vector<GroupElement> elements;
  /// Excursions alpha = (alpha_1..alpha_p) with (y, alpha_p, .., alpha_1, z) admissible.
  std::vector<Word> excursions;
  /// Number of ordered pairs (alpha, alpha~) before deduplication.
  std::uint64_t products = 0;
};

/// S^p(y, z) with W(alpha) = g_{alpha_1} ... g_{alpha_p}.
ReturnTrajectorySet return_trajectory_set(const SemigroupSpec& spec, int p, int y, int z);

struct GapReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  /// max |A 1 - 1| for the averaging operator A.
  double constant_residual = 0.0;
  std::size_t group_size = 0;
  std::size_t generator_count = 0;
};

/// Spectrum of I - A, (A phi)(x) = mean_{h in S} phi(x h), with S collapsed to
/// a set and symmetrized. Throws ResourceError above max_size elements.
GapReport cayley_gap(const QuotientGroup& group, const std::vector<std::uint32_t>& generators,
                     std::size_t max_size = 2000);

struct SphereTest {
  bool contained = false;
  /// sigma_min / sigma_max of the lifted, normalized point matrix.
  double ratio = 0.0;
};

/// Whether points of R^d lie on one (d-1)-sphere or affine hyperplane.
/// Needs at least d + 2 points.
SphereTest sphere_containment_test(const std::vector<FloatPoint>& points, int dim, double tol = 1e-9);

enum class DensityVerdict { Witnessed, Contained, Inconclusive };
std::string to_string(DensityVerdict v);

struct DensityReport {
  DensityVerdict verdict = DensityVerdict::Inconclusive;
  std::size_t hyperbolic_elements = 0;
  std::size_t distinct_points = 0;
  double ratio = 0.0;
};

/// Attracting fixed points of hyperbolic words of length <= max_length in the
/// generators and their inverses, fed to the sphere test.
DensityReport zariski_density_probe(const std::vector<GroupElement>& generators, int max_length = 3,
                                    std::size_t max_elements = 20000);
DensityReport zariski_density_probe(const SemigroupSpec& spec, int p, int y, int z);

/// Closed-form trace of the case element for digits a, b (cases 1..4).
GaussianInteger trace_case_formula(int c, const GaussianInteger& a, const GaussianInteger& b);
/// Case 1: g_aa g_bb^{-1}; 2: g_aa^2 g_bb^{-2}; 3: g_ab^2 g_ba^{-2}; 4: g_aa^2 g_ab^{-2},
/// with g_xy = g_x g_y and g_x = (0 1; 1 x).
GroupElement trace_case_element(int c, const GaussianInteger& a, const GaussianInteger& b);

struct TraceWitness {
  GroupElement element;
  int case_label = 0;
  GaussianInteger a, b;
  GaussianInteger trace;
  Word alpha, alpha_tilde;
};

/// Element of S^p(y, z) with non-real trace. CF specs with a non-real digit only.
TraceWitness trace_field_witness(const SemigroupSpec& spec, int p, int y, int z);

}  // namespace semicount

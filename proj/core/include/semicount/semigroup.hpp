#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicount/groups.hpp"

namespace semicount {

/// Symbol sequence, 0-based symbols.
using Word = std::vector<int>;

enum class SpecKind { Schottky, ContinuedFractions };

/// Closed ball in R^d with exact center and squared radius. In dimension 1
/// this is the interval [c - r, c + r].
struct Disk {
  std::vector<Rational> center;
  Rational radius_sq;

  int dim() const noexcept { return static_cast<int>(center.size()); }
  double radius() const;
  FloatPoint float_center() const;
  bool contains(const FloatPoint& x, double guard = 0.0) const;
};

/// Image of a closed ball under a Mobius map. Throws DomainError when the
/// image is not a bounded ball (pole on or inside the ball).
Disk disk_image(const GroupElement& g, const Disk& d);

class SemigroupSpec {
 public:
  /// Generators g_1..g_N and disks D_1..D_{2 N0}; N0 = #disks / 2,
  /// N1 = N - N0. Only structural checks here; see validate_ping_pong.
  static SemigroupSpec schottky(std::vector<GroupElement> generators, std::vector<Disk> disks);
  /// Block generators g_{a,a'} = g_a g_{a'} over the alphabet, symbol index
  /// a_index * #alphabet + a'_index. Real alphabets act on R, others on C.
  static SemigroupSpec continued_fractions(std::vector<GaussianInteger> alphabet, Rational epsilon);

  SpecKind kind() const noexcept { return kind_; }
  Setting setting() const noexcept { return generators_.front().setting(); }
  int boundary_dim() const noexcept { return generators_.front().boundary_dim(); }
  int hyperbolic_dim() const noexcept { return generators_.front().hyperbolic_dim(); }
  int symbol_count() const noexcept { return static_cast<int>(generators_.size()); }
  int n0() const noexcept { return n0_; }
  int n1() const noexcept { return symbol_count() - n0_; }

  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const GroupElement& generator(int j) const { return generators_.at(static_cast<std::size_t>(j)); }
  const GroupElement& generator_inverse(int j) const { return inverses_.at(static_cast<std::size_t>(j)); }
  const FloatMobius& branch(int j) const { return branches_[static_cast<std::size_t>(j)]; }
  const FloatMobius& inverse_branch(int j) const { return inverse_branches_[static_cast<std::size_t>(j)]; }
  const PreciseMobius& precise_branch(int j) const { return precise_branches_[static_cast<std::size_t>(j)]; }
  const PreciseMobius& precise_inverse_branch(int j) const {
    return precise_inverse_branches_[static_cast<std::size_t>(j)];
  }

  /// Schottky: the 2 N0 ping-pong disks. CF: hull disks g_j(B), B the hull of D^eps.
  const std::vector<Disk>& disks() const noexcept { return disks_; }
  /// Disk whose interior contains the domain of the branch of symbol j.
  const Disk& symbol_disk(int j) const { return disks_.at(static_cast<std::size_t>(j)); }

  /// CF data.
  const std::vector<GaussianInteger>& alphabet() const noexcept { return alphabet_; }
  const Rational& epsilon() const noexcept { return epsilon_; }
  std::pair<int, int> digits(int j) const;
  /// Hull of D^eps: [eps, 1] on R, the disk |z - 1/2| <= 1/2 on C.
  Disk base_hull() const;

  /// Partner disk of symbol j: j + N0 or j - N0.
  int pair(int j) const;
  /// Whether symbol j may be followed by symbol k.
  bool admissible(int j, int k) const;
  void check_symbol(int j) const;

  std::string describe() const;

 private:
  void finish();

  SpecKind kind_ = SpecKind::ContinuedFractions;
  int n0_ = 0;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> inverses_;
  std::vector<FloatMobius> branches_, inverse_branches_;
  std::vector<PreciseMobius> precise_branches_, precise_inverse_branches_;
  std::vector<Disk> disks_;
  std::vector<GaussianInteger> alphabet_;
  Rational epsilon_;
};

bool is_admissible(const Word& w, const SemigroupSpec& spec);
/// Admissible including the wrap-around pair (last, first).
bool is_cyclically_admissible(const Word& w, const SemigroupSpec& spec);

/// Largest eps = k / 1024 for which the trimmed CF disks pass ping-pong.
Rational find_trim_epsilon(const std::vector<GaussianInteger>& alphabet);

struct PingPongReport {
  bool passed = true;
  std::vector<std::string> violations;
  /// Disk index pairs found overlapping.
  std::vector<std::pair<int, int>> overlapping;
};

PingPongReport validate_ping_pong(const SemigroupSpec& spec);

/// g_{w0} g_{w1} ... g_{w_{k-1}}; maps the base domain onto the cylinder C[w].
GroupElement word_to_element(const Word& w, const SemigroupSpec& spec);

/// Cocycle c^k on C[w]: g_{w_{k-1}} ... g_{w0}.
GroupElement cocycle(const Word& w, const SemigroupSpec& spec);

struct EnumerationBound {
  int min_length = 0;
  std::optional<int> max_length;
  /// Upper bound on the squared Frobenius norm of the element.
  std::optional<Integer> max_norm_sq;
};

struct EnumerationStats {
  std::uint64_t visited = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;
};

/// Visitor returns false to stop the enumeration.
using WordVisitor = std::function<bool(const Word&, const GroupElement&)>;

/// Visits every admissible word satisfying the bound exactly once, in
/// depth-first lexicographic order.
EnumerationStats enumerate_words(const SemigroupSpec& spec, const EnumerationBound& bound, const WordVisitor& visit);

enum class Extension { Append, Prepend };
enum class Walk { Descend, Prune, Stop };

/// Lower-level tree walk. The callback sees each nonempty admissible word of
/// length <= max_length built by appending or prepending symbols, starting
/// from the children of `root` (empty by default).
EnumerationStats walk_words(const SemigroupSpec& spec, Extension ext, int max_length,
                            const std::function<Walk(const Word&, const GroupElement&)>& cb, const Word& root = {});

/// Constant C with d(o, gamma w o) >= d(o, gamma o) - C for all nonempty
/// admissible gamma, w with gamma w admissible. Schottky only; throws
/// DomainError when o lies inside a hemisphere.
double schottky_escape_constant(const SemigroupSpec& spec);

/// Largest hyperbolic distance compatible with a squared Frobenius norm bound.
double distance_for_norm_sq(const GroupElement& sample, const Integer& norm_sq);

/// Anchor of symbol y: attracting fixed point of g_y.
BoundaryPoint symbol_anchor(const SemigroupSpec& spec, int y);

}  // namespace semicount

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semicount/semigroup.hpp"

namespace semicount {

/// Guard band for floating point disk membership.
inline constexpr double kDiskGuard = 1e-12;

/// Symbol j with x in D_j. Exact for rational points. Throws DomainError
/// when x lies in no disk or inside the guard band of a disk boundary.
int symbol_of(const BoundaryPoint& x, const SemigroupSpec& spec);
int symbol_of(const FloatPoint& x, const SemigroupSpec& spec);

struct MapStep {
  BoundaryPoint image;
  int symbol = -1;
};

/// T(x) = g_j^{-1} x for x in D_j.
MapStep expanding_map(const BoundaryPoint& x, const SemigroupSpec& spec);

/// tau(x) = log |T'(x)|.
double distortion(const BoundaryPoint& x, const SemigroupSpec& spec);

/// tau_k(x) = sum_{j<k} tau(T^j x), iterated in extended precision.
/// Throws DomainError naming the step at which the orbit leaves the disks.
double birkhoff_sum(const BoundaryPoint& x, int k, const SemigroupSpec& spec);

/// First k symbols of the itinerary of x.
Word itinerary(const BoundaryPoint& x, int k, const SemigroupSpec& spec);

/// Attracting fixed point of g(w); requires w cyclically admissible.
BoundaryPoint periodic_point(const Word& w, const SemigroupSpec& spec);

/// tau_{|w|} at periodic_point(w), with T^j x taken as the periodic point of
/// the j-th rotation of w instead of iterating T (no error amplification).
double periodic_birkhoff_sum(const Word& w, const SemigroupSpec& spec);

struct Cylinder {
  Word word;
  Disk hull;
  BoundaryPoint anchor;

  double diameter() const { return 2.0 * hull.radius(); }
};

/// One cylinder per admissible word of length k + 1, in lexicographic order.
std::vector<Cylinder> cylinders_at_depth(const SemigroupSpec& spec, int k);

/// Point g_w(omega(last symbol)) computed by successive branches.
FloatPoint word_anchor(const Word& w, const SemigroupSpec& spec);

/// sum of log |g_{w_i}'| along g_w(u): equals tau_{|w|}(g_w u).
double section_log_expansion(const Word& w, const FloatPoint& u, const SemigroupSpec& spec);

/// Limit set sample: anchors of seeded random admissible words of length
/// `length`. Point i depends only on (seed, i), so samples are nested.
std::vector<FloatPoint> sample_limit_set(const SemigroupSpec& spec, std::size_t count, std::uint64_t seed,
                                         int length = 30);

/// Points sampled in the disks D_j (CF: images g_j(y) of uniform y in D^eps).
std::vector<FloatPoint> sample_domain(const SemigroupSpec& spec, std::size_t count, std::uint64_t seed);

struct SandwichReport {
  double lower = 0.0, upper = 0.0;  // (1+eps)^4 and (1+C)^4
  double min_seen = 0.0, max_seen = 0.0;
  std::size_t samples = 0;
  std::size_t violations = 0;
};

/// CF only: checks (1+eps)^4 <= |T'| <= (1+C)^4 with C = max |a|.
SandwichReport hyperbolicity_sandwich(const SemigroupSpec& spec, std::size_t samples, std::uint64_t seed);

/// Upper bound on sup |g_j'| over the domain of the branch g_j, max over j.
double contraction_bound(const SemigroupSpec& spec);

struct LnicResult {
  Word v1, v2;
  double delta0 = 0.0;
  std::size_t section_pairs = 0;
  std::size_t point_pairs = 0;
};

/// Best pair of length-m sections by the minimal difference quotient of
/// tau_m(v1 u) - tau_m(v2 u) over sampled pairs u, u' in a common disk.
LnicResult lnic_probe(const SemigroupSpec& spec, int m, std::size_t sample_count, std::uint64_t seed = 1);

struct TemporalDistance {
  double value = 0.0;
  double tail_estimate = 0.0;
};

/// Partial sum of Delta_alpha(u,u') - Delta_beta(u,u') to `depth` terms.
/// alpha, beta must have length >= depth; alpha_0 must be admissible before
/// the common symbol of u and u', and alpha_{j+1} before alpha_j.
TemporalDistance temporal_distance(const Word& alpha, const Word& beta, const FloatPoint& u, const FloatPoint& u2,
                                   int depth, const SemigroupSpec& spec);

}  // namespace semicount

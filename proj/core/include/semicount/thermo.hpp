#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "semicount/congruence.hpp"
#include "semicount/dynamics.hpp"

namespace semicount {

/// Dense indexing of admissible words of length 1..max_length, each length
/// in lexicographic order, with first-symbol, tail and prefix maps.
class WordIndex {
 public:
  WordIndex(const SemigroupSpec& spec, int max_length);

  int max_length() const noexcept { return max_length_; }
  std::size_t count(int length) const { return level(length).first.size(); }
  int first(int length, std::uint32_t i) const { return level(length).first[i]; }
  /// Index of (w_1, .., w_{L-1}) among words of length L - 1 (L >= 2).
  std::uint32_t tail(int length, std::uint32_t i) const { return level(length).tail[i]; }
  /// Index of (w_0, .., w_{L-2}) among words of length L - 1 (L >= 2).
  std::uint32_t prefix(int length, std::uint32_t i) const { return level(length).prefix[i]; }
  /// Index of (j, t) where t indexes a word of length L - 1; (j, t_0) must be admissible.
  std::uint32_t index(int length, int j, std::uint32_t t) const;
  Word word(int length, std::uint32_t i) const;

 private:
  struct Level {
    std::vector<std::uint8_t> first;
    std::vector<std::uint32_t> tail, prefix;
    std::vector<std::uint32_t> start;             // per first symbol
    std::vector<std::vector<std::uint32_t>> cum;  // [j][s]: offset of tails starting with s
  };
  const Level& level(int length) const;

  int symbols_ = 0;
  int max_length_ = 0;
  std::vector<Level> levels_;  // levels_[L - 1]
};

/// Cylinder geometry shared by every parameter value: tau at the anchors and
/// cumulative Birkhoff sums for all lengths up to depth + 1.
struct CylinderData {
  int depth = 0;
  bool irreducible = true;
  std::shared_ptr<const WordIndex> index;
  /// tau(x_w) = -log |g_{w0}'(x_{tail w})| for the top-level words.
  std::vector<double> tau;
  /// tau_L(x_w) per length L = 1..depth+1 (index L - 1).
  std::vector<std::vector<double>> tau_sum;

  std::size_t size() const { return tau.size(); }
  int length() const { return depth + 1; }
};

/// Cylinders of depth k are the admissible words of length k + 1.
std::shared_ptr<const CylinderData> build_cylinders(const SemigroupSpec& spec, int depth);

/// Matrix W[a <- b] = exp(-s tau(x_b)) for b = (j, prefix a), stored by its
/// nonzero weights. Piecewise-constant transfer operator on depth-k cylinders.
class DiscretizedOperator {
 public:
  DiscretizedOperator(std::shared_ptr<const CylinderData> cylinders, double s);

  int depth() const noexcept { return cyl_->depth; }
  double s() const noexcept { return s_; }
  std::size_t size() const { return cyl_->size(); }
  const CylinderData& cylinders() const { return *cyl_; }
  const std::vector<double>& weights() const noexcept { return weight_; }

  /// (W f)[a] = sum over preimage cylinders b of w[b] f[b].
  std::vector<double> apply(const std::vector<double>& f) const;
  /// (nu W)[b] = w[b] * sum of nu over cylinders with prefix tail(b).
  std::vector<double> apply_left(const std::vector<double>& nu) const;

 private:
  std::shared_ptr<const CylinderData> cyl_;
  double s_ = 0.0;
  std::vector<double> weight_;
};

DiscretizedOperator build_operator(const SemigroupSpec& spec, double s, int depth);

struct RPFData {
  double lambda = 0.0;
  std::vector<double> h;   // right eigenvector, nu(h) = 1
  std::vector<double> nu;  // left eigenvector, sums to 1
  /// Observed contraction rate of the power iteration, an estimate of |lambda_2 / lambda|.
  double second_ratio = 0.0;
  int iterations = 0;
};

/// Power iteration; DomainError for a reducible transition graph,
/// NumericError without convergence in max_iterations.
/// `warm` seeds both iterations with earlier eigenvectors of the same size.
RPFData leading_eigen(const DiscretizedOperator& op, int max_iterations = 100000, const RPFData* warm = nullptr);

/// Whether the symbol transition graph is strongly connected.
bool is_irreducible(const SemigroupSpec& spec);

double pressure(const SemigroupSpec& spec, double s, int depth);

inline constexpr double kCylinderBudget = 3.0e5;

/// Depth used when none is configured: 8 for two-letter CF alphabets, otherwise
/// the largest depth <= 6 with at most kCylinderBudget top-level cylinders.
int default_depth(const SemigroupSpec& spec);

struct BowenOptions {
  int depth = 0;  // 0: default_depth
  bool extrapolate = true;
  int max_iterations = 200;
};

struct BowenResult {
  double delta = 0.0;
  double error_estimate = 0.0;
  int depth = 0;
  /// Root at each solved depth (ascending).
  std::vector<std::pair<int, double>> per_depth;
  /// Pressure at the working-depth root.
  double residual = 0.0;
};

/// Root of s -> pressure(s) at the working depth by safeguarded Newton
/// bisection, with Aitken extrapolation over depths d-4, d-2, d.
/// `tol` bounds the final Newton step in s.
BowenResult bowen_delta(const SemigroupSpec& spec, double tol, const BowenOptions& opt = {});

/// Single-depth root, optionally warm started.
double bowen_root(const std::shared_ptr<const CylinderData>& cyl, double tol, double guess, double hi,
                  int max_iterations, double* residual = nullptr);

struct GibbsReport {
  double c1 = 0.0, c2 = 0.0;
  /// (length, min ratio, max ratio) per cylinder length 2..depth+1.
  std::vector<std::tuple<int, double, double>> per_length;
};

/// Ratios nu(C) / exp(-delta tau_L(x_C)) over cylinders of lengths 2..depth+1.
GibbsReport gibbs_check(const SemigroupSpec& spec, double delta, int depth);

struct DecayOptions {
  int depth = 3;
  /// Default: the Bowen root at `depth`.
  std::optional<double> delta;
  std::size_t cap = QuotientGroup::kDefaultCap;
  /// Negative control: H constant in the group coordinate instead of mean zero.
  bool constant_in_group = false;
};

struct DecayReport {
  std::vector<double> norms;  // sup norms for k = 0..k_max, max over trials, relative to k = 0
  double eta = 0.0;           // minus the least-squares slope of log norms
  std::size_t group_size = 0;
  std::size_t cylinders = 0;
  bool degenerate = false;    // all inputs vanish (trivial group with mean-zero inputs)
};

/// Iterates the normalized congruence transfer operator at s = delta + xi on
/// random functions on cylinders x quotient group.
DecayReport congruence_decay_probe(const SemigroupSpec& spec, const GaussianInteger& q, std::complex<double> xi,
                                   int k_max, int trials, std::uint64_t seed, const DecayOptions& opt = {});

}  // namespace semicount

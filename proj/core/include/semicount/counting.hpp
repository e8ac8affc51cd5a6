#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semicount/congruence.hpp"
#include "semicount/semigroup.hpp"

namespace semicount {

/// Locally constant function given by values on cylinders. A sequence takes
/// the value of the longest listed word that is a prefix of it.
struct TestFunction {
  std::vector<std::pair<Word, double>> cylinders;
  double default_value = 1.0;

  /// Value on head followed by tail, repeated forever when `periodic`.
  double value(const Word& head, const Word& tail = {}, bool periodic = false) const;
  bool is_constant() const noexcept { return cylinders.empty(); }
};

/// Per-checkpoint class counts of gamma with ||gamma gamma0|| <= R ||gamma0||.
struct CountLedger {
  GaussianInteger q;
  std::size_t group_size = 0;
  Word base;  // gamma0 as a word; empty for the identity
  std::vector<Rational> radius_sq;
  std::vector<double> radius;
  /// counts[k][c]: elements of class c inside checkpoint k (cumulative in k).
  std::vector<std::vector<std::uint64_t>> counts;
  /// F-weighted sums, same layout.
  std::vector<std::vector<double>> weighted;
  std::uint64_t enumerated = 0;
  bool partial = false;

  std::uint64_t total(std::size_t k) const;
  std::size_t attained(std::size_t k) const;
};

/// R_j^2 = R0^2 2^j, j = 0..m-1 (R_j = R0 2^{j/2}), exact in R0.
std::vector<Rational> geometric_schedule(double r0, int m = 10);

struct BallCountOptions {
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  TestFunction weight;
  std::size_t group_cap = QuotientGroup::kDefaultCap;
};

/// Counts nonempty gamma in the semigroup with gamma gamma0 admissible and
/// ||gamma gamma0||^2 <= R^2 ||gamma0||^2, by class pi_q(gamma). Membership is
/// decided in integers. Past the budget the ledger is returned with `partial`
/// set; the budget is split evenly over first-symbol subtrees.
CountLedger ball_count(const SemigroupSpec& spec, const GaussianInteger& q, const Word& base,
                       const std::vector<Rational>& radius_sq, const BallCountOptions& opt = {});

/// Point of the limit set with itinerary head, period, period, ...
struct LimitPoint {
  Word head;
  Word period;

  FloatPoint point(const SemigroupSpec& spec) const;
  int first_symbol() const { return head.empty() ? period.front() : head.front(); }
};

/// phi(x c) as a function of x: the action of a class c on functions on the group.
std::vector<double> act(const QuotientGroup& group, std::uint32_t c, const std::vector<double>& phi);

/// N_q(r, u, phi) = sum over j >= 0 and u' in T^{-j} u with tau_j(u') <= r of
/// f(u') c_q^j(u') phi.
std::vector<double> boundary_count(const SemigroupSpec& spec, const QuotientGroup& group, double r,
                                   const LimitPoint& u, const std::vector<double>& phi,
                                   const TestFunction& f = {});
/// Same sum accumulated breadth-first.
std::vector<double> boundary_count_bfs(const SemigroupSpec& spec, const QuotientGroup& group, double r,
                                       const LimitPoint& u, const std::vector<double>& phi,
                                       const TestFunction& f = {});

/// N_q*(R^2, gamma0, phi): sum over gamma (empty word included) with gamma
/// gamma0 admissible and ||gamma gamma0||^2 <= R^2 ||gamma0||^2 of
/// F(gamma gamma0) pi_q(gamma) phi.
std::vector<double> ball_vector(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                const Word& base, const std::vector<double>& phi, const TestFunction& f = {});

struct RenewalSides {
  std::vector<double> lhs, rhs;
};

/// Both sides of
///   N_q(r, u, phi) = sum_{u' in T^{-1} u} c_q(u') N_q(r - tau(u'), u', phi) + f(u) phi [0 <= r].
RenewalSides renewal_sides(const SemigroupSpec& spec, const QuotientGroup& group, double r, const LimitPoint& u,
                           const std::vector<double>& phi, const TestFunction& f = {});
/// Both sides of
///   N_q*(R^2, g0, phi) = sum_j N_q*(R^2 ||g0||^2 / ||g_j g0||^2, g_j g0, pi_q(g_j) phi) + F(g0) phi [1 <= R^2].
RenewalSides ball_renewal_sides(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                const Word& base, const std::vector<double>& phi, const TestFunction& f = {});

struct RenewalReport {
  bool holds = false;
  bool same_support = false;
  double max_discrepancy = 0.0;
};

/// Supports must agree exactly; weights to `tol` relative to the largest entry (at least 1).
RenewalReport compare_sides(const RenewalSides& sides, double tol = 1e-9);

RenewalReport renewal_check(const SemigroupSpec& spec, const QuotientGroup& group, double r, const LimitPoint& u,
                            const std::vector<double>& phi, const TestFunction& f = {});
RenewalReport ball_renewal_check(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                 const Word& base, const std::vector<double>& phi, const TestFunction& f = {});

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of log-count residuals
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

/// Least squares of log total against log R over checkpoints with nonzero
/// totals; DomainError with fewer than 5 such checkpoints.
ExponentFit exponent_fit(const CountLedger& ledger);
ExponentFit exponent_fit(const std::vector<double>& radius, const std::vector<double>& totals);

struct EquidistributionReport {
  std::vector<double> radius;
  /// TV distance from uniform over the classes attained at that checkpoint.
  std::vector<double> tv_attained;
  /// TV distance from uniform over the whole quotient group.
  std::vector<double> tv_group;
  std::vector<std::size_t> attained;
};

EquidistributionReport equidistribution_report(const CountLedger& ledger);

struct ZarembaSets {
  /// (b, d) with b / d = [a_1, ..., a_k], sorted, distinct.
  std::vector<std::pair<GaussianInteger, GaussianInteger>> fractions;
  /// Distinct denominators, sorted.
  std::vector<GaussianInteger> denominators;
};

/// Columns (b; d) of g_{a_1} ... g_{a_k} with |d| <= bound, k >= 1. Digits need Re a >= 1.
ZarembaSets zaremba_sets(const std::vector<GaussianInteger>& alphabet, const Integer& bound);

struct ZarembaDensity {
  std::uint64_t count = 0;  // #(D_A in [1, n])
  std::uint64_t n = 0;
  double ratio = 0.0;
};

/// Positive integer alphabets only.
ZarembaDensity zaremba_density(const std::vector<GaussianInteger>& alphabet, std::uint64_t n);
/// Membership flags for d = 0..n (index 0 unused).
std::vector<bool> zaremba_denominators(const std::vector<GaussianInteger>& alphabet, std::uint64_t n);

}  // namespace semicount

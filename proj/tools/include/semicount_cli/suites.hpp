#pragma once

#include <cstdint>
#include <string>

#include "semicount/semigroup.hpp"

namespace semicount::cli {

/// Outcome of one identity suite.
struct SuiteResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;

  void record(double err) {
    ++checked;
    if (err > max_error || err != err) max_error = err;
    if (!(err <= tolerance)) {
      ++failures;
      passed = false;
    }
  }
};

/// Closed-form traces of the four case elements against exact matrix
/// products, digits with |re|, |im| <= digit_bound. Zero tolerance.
SuiteResult trace_case_suite(std::size_t pairs, int digit_bound, std::uint64_t seed);

/// cosh of half the complex length of g h against its closed form for random
/// lengths and conjugating matrices with det 1; absolute tolerance.
SuiteResult product_length_suite(std::size_t pairs, std::uint64_t seed, double tol = 1e-9);

/// Expansion sandwich on sampled points (CF only; otherwise not applicable).
SuiteResult sandwich_suite(const SemigroupSpec& spec, std::size_t samples, std::uint64_t seed);

/// tau_k at the periodic point of every cyclically admissible word of length
/// <= max_period against the translation length of its element.
SuiteResult periodic_suite(const SemigroupSpec& spec, int max_period, double tol = 1e-8);

/// Random instances of the boundary (star = false) or ball (star = true)
/// renewal identity at modulus q. Radii are drawn from [-1, radius] (boundary)
/// and R^2 = m / k with 1 <= m <= 10 e^radius, k <= 3 (ball).
SuiteResult renewal_suite(const SemigroupSpec& spec, const GaussianInteger& q, std::size_t instances, std::uint64_t seed,
                          double radius, bool star);

}  // namespace semicount::cli

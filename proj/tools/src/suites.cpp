#include "semicount_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "semicount/congruence.hpp"
#include "semicount/counting.hpp"
#include "semicount/dynamics.hpp"
#include "semicount/errors.hpp"

namespace semicount::cli {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Admissible word of the given length continuing after `prev` (-1: none).
Word random_word(const SemigroupSpec& spec, std::mt19937_64& rng, int len, int prev) {
  Word w;
  for (int i = 0; i < len; ++i) {
    std::vector<int> next;
    for (int s = 0; s < spec.symbol_count(); ++s) {
      if (prev < 0 || spec.admissible(prev, s)) next.push_back(s);
    }
    prev = next[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(next.size()) - 1))];
    w.push_back(prev);
  }
  return w;
}

LimitPoint random_limit_point(const SemigroupSpec& spec, std::mt19937_64& rng, bool with_head) {
  for (;;) {
    Word period = random_word(spec, rng, uniform_int(rng, 1, 3), -1);
    if (!is_cyclically_admissible(period, spec)) continue;
    if (!with_head) return {{}, period};
    Word head = random_word(spec, rng, 1, -1);
    if (spec.admissible(head.back(), period.front())) return {head, period};
  }
}

}  // namespace

SuiteResult trace_case_suite(std::size_t pairs, int digit_bound, std::uint64_t seed) {
  SuiteResult r{"trace_cases"};
  std::mt19937_64 rng(seed);
  auto digit = [&] {
    return GaussianInteger(uniform_int(rng, -digit_bound, digit_bound), uniform_int(rng, -digit_bound, digit_bound));
  };
  for (std::size_t t = 0; t < pairs; ++t) {
    GaussianInteger a = digit(), b = digit();
    for (int c = 1; c <= 4; ++c) r.record(trace_case_element(c, a, b).trace() == trace_case_formula(c, a, b) ? 0.0 : 1.0);
  }
  return r;
}

SuiteResult product_length_suite(std::size_t pairs, std::uint64_t seed, double tol) {
  SuiteResult r{"product_length"};
  r.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5), len(0.1, 3.0);
  for (std::size_t t = 0; t < pairs; ++t) {
    std::complex<double> a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    if (std::abs(a) < 0.2) a += 1.0;
    std::complex<double> d = (1.0 + b * c) / a;
    double lg = len(rng), lh = len(rng);
    r.record(product_length_check(lg, lh, {a, b, c, d}).discrepancy);
  }
  return r;
}

SuiteResult sandwich_suite(const SemigroupSpec& spec, std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"sandwich"};
  if (spec.kind() != SpecKind::ContinuedFractions) {
    r.applicable = false;
    r.note = "continued-fraction specs only";
    return r;
  }
  SandwichReport rep = hyperbolicity_sandwich(spec, samples, seed);
  r.checked = rep.samples;
  r.failures = rep.violations;
  r.passed = rep.violations == 0;
  // distance outside [lower, upper], in log scale
  r.max_error = std::max({0.0, std::log(rep.lower) - std::log(rep.min_seen), std::log(rep.max_seen) - std::log(rep.upper)});
  r.note = "range [" + std::to_string(rep.min_seen) + ", " + std::to_string(rep.max_seen) + "] within [" +
           std::to_string(rep.lower) + ", " + std::to_string(rep.upper) + "]";
  return r;
}

SuiteResult periodic_suite(const SemigroupSpec& spec, int max_period, double tol) {
  SuiteResult r{"periodic_orbits"};
  r.tolerance = tol;
  Word w;
  std::function<void()> rec = [&] {
    if (!w.empty() && is_cyclically_admissible(w, spec)) {
      double ell = translation_length(word_to_element(w, spec));
      r.record(std::fabs(periodic_birkhoff_sum(w, spec) - ell));
    }
    if (static_cast<int>(w.size()) == max_period) return;
    for (int s = 0; s < spec.symbol_count(); ++s) {
      if (!w.empty() && !spec.admissible(w.back(), s)) continue;
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
  return r;
}

SuiteResult renewal_suite(const SemigroupSpec& spec, const GaussianInteger& q, std::size_t instances, std::uint64_t seed,
                          double radius, bool star) {
  SuiteResult r{star ? "renewal_ball_q" + q.str() : "renewal_boundary_q" + q.str()};
  r.tolerance = 1e-9;
  QuotientGroup group = quotient_group(spec, q);
  std::mt19937_64 rng(seed);
  const int n = spec.symbol_count();
  const int m_max = std::max(1, static_cast<int>(10.0 * std::exp(radius)));
  for (std::size_t t = 0; t < instances; ++t) {
    std::vector<double> phi(group.size());
    for (double& p : phi) p = uniform_int(rng, 0, 1) ? std::uniform_real_distribution<double>(-2, 2)(rng) : 0.0;
    TestFunction f{{{{uniform_int(rng, 0, n - 1)}, 2.5}}, 1.0};
    RenewalReport rep;
    if (star) {
      Rational rsq(uniform_int(rng, 1, m_max), uniform_int(rng, 1, 3));
      Word base = t % 3 ? Word{} : random_word(spec, rng, 1, -1);
      rep = ball_renewal_check(spec, group, rsq, base, phi, f);
    } else {
      double rad = std::uniform_real_distribution<double>(-1.0, radius)(rng);
      rep = renewal_check(spec, group, rad, random_limit_point(spec, rng, t % 2 == 1), phi, f);
    }
    // support mismatch counts as a failure regardless of weights
    r.record(rep.same_support ? rep.max_discrepancy : std::numeric_limits<double>::infinity());
  }
  r.note = "group order " + std::to_string(group.size());
  return r;
}

}  // namespace semicount::cli

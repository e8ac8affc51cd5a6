#include <doctest.h>

#include <cmath>
#include <iomanip>
#include <numeric>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semicount/errors.hpp"
#include "semicount/thermo.hpp"

using namespace semicount;

namespace {

double spectral_radius(const SemigroupSpec& spec) {
  const int n = spec.symbol_count();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = spec.admissible(i, j) ? 1.0 : 0.0;
  return a.eigenvalues().cwiseAbs().maxCoeff();
}

SemigroupSpec single_branch() {
  auto d = fixtures::schottky_disks();
  return SemigroupSpec::schottky({sym_square_embed(fixtures::s1())}, {d[0], d[2]});
}

}  // namespace

TEST_CASE("word index matches lexicographic enumeration") {
  for (const auto& spec : {fixtures::cf12(), fixtures::schottky(true)}) {
    WordIndex idx(spec, 5);
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> words;
      EnumerationBound b;
      b.min_length = len;
      b.max_length = len;
      enumerate_words(spec, b, [&](const Word& w, const GroupElement&) {
        words.push_back(w);
        return true;
      });
      REQUIRE(idx.count(len) == words.size());
      for (std::uint32_t i = 0; i < words.size(); ++i) {
        CHECK(idx.word(len, i) == words[i]);
        if (len == 1) continue;
        Word tail(words[i].begin() + 1, words[i].end());
        Word prefix(words[i].begin(), words[i].end() - 1);
        CHECK(idx.word(len - 1, idx.tail(len, i)) == tail);
        CHECK(idx.word(len - 1, idx.prefix(len, i)) == prefix);
        CHECK(idx.index(len, words[i][0], idx.tail(len, i)) == i);
      }
    }
  }
}

TEST_CASE("operator at s = 0 counts preimages") {
  auto spec = fixtures::cf12();
  DiscretizedOperator op = build_operator(spec, 0.0, 4);
  auto row = op.apply(std::vector<double>(op.size(), 1.0));
  for (double r : row) CHECK(r == 4.0);
  RPFData r = leading_eigen(op);
  CHECK(r.lambda == doctest::Approx(4.0).epsilon(1e-12));
  for (double x : r.h) CHECK(x == doctest::Approx(r.h[0]).epsilon(1e-10));
  CHECK(std::accumulate(r.nu.begin(), r.nu.end(), 0.0) == doctest::Approx(1.0));
  CHECK(pressure(spec, 0.0, 4) == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  auto grp = fixtures::schottky(true);
  CHECK(leading_eigen(build_operator(grp, 0.0, 4)).lambda == doctest::Approx(spectral_radius(grp)).epsilon(1e-10));
  auto sch = fixtures::schottky();
  CHECK(pressure(sch, 0.0, 5) == doctest::Approx(std::log(spectral_radius(sch))).epsilon(1e-12));
}

TEST_CASE("weights are positive on allowed transitions") {
  auto spec = fixtures::schottky(true);
  DiscretizedOperator op = build_operator(spec, 0.7, 3);
  for (double w : op.weights()) CHECK(w > 0.0);
  // sparsity: W[a <- b] only for b = (j, prefix a) with (j, a_0) admissible
  const WordIndex& idx = *op.cylinders().index;
  for (std::uint32_t b = 0; b < op.size(); ++b) {
    std::vector<double> e(op.size(), 0.0);
    e[b] = 1.0;
    auto col = op.apply(e);
    Word wb = idx.word(4, b);
    for (std::uint32_t a = 0; a < op.size(); ++a) {
      Word wa = idx.word(4, a);
      bool edge = std::equal(wb.begin() + 1, wb.end(), wa.begin());
      CHECK((col[a] != 0.0) == edge);
    }
    if (b > 40) break;
  }
}

TEST_CASE("pressure is strictly decreasing and convex") {
  auto spec = fixtures::cf12();
  auto cyl = build_cylinders(spec, 6);
  std::vector<double> p;
  for (int i = 0; i < 10; ++i) p.push_back(std::log(leading_eigen(DiscretizedOperator(cyl, i / 9.0)).lambda));
  for (int i = 0; i + 1 < 10; ++i) CHECK(p[i + 1] < p[i]);
  for (int i = 1; i + 1 < 10; ++i) CHECK(p[i + 1] - 2 * p[i] + p[i - 1] > -1e-12);
}

TEST_CASE("normalized operator fixes constants and its dual fixes h nu") {
  auto spec = fixtures::cf12();
  DiscretizedOperator op = build_operator(spec, 0.53, 6);
  RPFData r = leading_eigen(op);
  auto lh = op.apply(r.h);
  double res = 0.0;
  for (std::size_t i = 0; i < lh.size(); ++i) res = std::max(res, std::fabs(lh[i] / (r.lambda * r.h[i]) - 1.0));
  CHECK(res < 1e-10);
  std::vector<double> m(r.h.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = r.nu[i] * r.h[i];
  // dual of f -> L(h f) / (lambda h) applied to m = nu h
  std::vector<double> t(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) t[i] = m[i] / r.h[i];
  auto back = op.apply_left(t);
  double dres = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) dres = std::max(dres, std::fabs(back[i] * r.h[i] / r.lambda - m[i]));
  CHECK(dres < 1e-10);
  for (double x : r.h) CHECK(x > 0.0);
}

TEST_CASE("single-branch system") {
  auto spec = single_branch();
  double ell = translation_length(spec.generator(0));
  for (double s : {0.0, 0.3, 1.0}) CHECK(pressure(spec, s, 3) == doctest::Approx(-s * ell).epsilon(1e-12));
  CHECK(bowen_delta(spec, 1e-10).delta == 0.0);
  GibbsReport g = gibbs_check(spec, 0.0, 4);
  CHECK(g.c1 == doctest::Approx(1.0));
  CHECK(g.c2 == doctest::Approx(1.0));
}

TEST_CASE("refinement: depth k and k+2 pressures are Cauchy") {
  auto spec = fixtures::cf12();
  std::vector<double> p;
  for (int d = 2; d <= 8; d += 2) p.push_back(pressure(spec, 0.5, d));
  for (std::size_t i = 0; i + 2 < p.size(); ++i) {
    CHECK(std::fabs(p[i + 2] - p[i + 1]) < std::fabs(p[i + 1] - p[i]));
  }
}

TEST_CASE("reducible graphs are rejected") {
  // g and its inverse only: 0 -> 0 and 1 -> 1
  auto d = fixtures::schottky_disks();
  GroupElement g = sym_square_embed(fixtures::s1());
  auto spec = SemigroupSpec::schottky({g, g.inverse()}, {d[0], d[2]});
  CHECK_FALSE(is_irreducible(spec));
  CHECK_THROWS_AS(leading_eigen(build_operator(spec, 0.5, 2)), DomainError);
  CHECK_THROWS_AS(bowen_delta(spec, 1e-8), DomainError);
  CHECK_THROWS_AS(build_operator(fixtures::cf12(), 0.5, 0), DomainError);
}

TEST_CASE("Bowen root against the box-counting oracle") {
  double oracle = oracles::box_counting_dimension(14);
  CHECK(oracle == doctest::Approx(0.5312805062772051).epsilon(2e-3));
  auto spec = fixtures::cf12();
  BowenResult r = bowen_delta(spec, 1e-8);
  CHECK(r.depth == 8);
  CHECK(r.per_depth.size() == 3);
  CHECK(std::fabs(r.delta - oracle) < 5e-3);
  CHECK(r.delta > 0.0);
  CHECK(r.delta <= 1.0);
  CHECK(std::fabs(pressure(spec, r.per_depth.back().second, 8)) < 1e-6);
  CHECK(r.error_estimate < 1e-3);
  MESSAGE(std::setprecision(16) << "delta = " << r.delta << " per depth " << r.per_depth[0].second << " " << r.per_depth[1].second << " "
                     << r.per_depth[2].second);

  // frozen regression values
  CHECK(r.per_depth[0].second == doctest::Approx(0.5312801281705143).epsilon(1e-9));
  CHECK(r.per_depth[1].second == doctest::Approx(0.531280503151317).epsilon(1e-9));
  CHECK(r.per_depth[2].second == doctest::Approx(0.5312805062513437).epsilon(1e-9));
  CHECK(r.delta == doctest::Approx(0.5312805062771858).epsilon(1e-9));

  BowenResult r3 = bowen_delta(fixtures::cf({1, 2, 3}), 1e-8, {4, true, 200});
  CHECK(default_depth(fixtures::cf({1, 2, 3})) == 4);
  CHECK(default_depth(fixtures::schottky()) == 6);
  CHECK(r3.delta > r.delta);
  CHECK_THROWS_AS(bowen_delta(spec, 0.0), DomainError);
}

TEST_CASE("Bowen root for SO(2,1) and complex CF") {
  auto sch = fixtures::schottky();
  BowenResult r = bowen_delta(sch, 1e-9, {6, false, 200});
  CHECK(r.delta > 0.0);
  CHECK(r.delta < 1.0);
  CHECK(std::fabs(pressure(sch, r.delta, 6)) < 1e-8);
  auto c = fixtures::cf({1, 2, GaussianInteger(1, 1)});
  BowenResult rc = bowen_delta(c, 1e-9, {3, false, 200});
  CHECK(rc.delta > 0.0);
  CHECK(rc.delta <= 2.0);
}

TEST_CASE("Gibbs ratios are bounded and stable; perturbed delta drifts") {
  auto spec = fixtures::cf12();
  double delta = bowen_delta(spec, 1e-10, {8, false, 200}).delta;
  GibbsReport g6 = gibbs_check(spec, delta, 6);
  GibbsReport g8 = gibbs_check(spec, delta, 8);
  CHECK(g6.c1 > 0.0);
  CHECK(std::isfinite(g6.c2));
  CHECK(g8.c2 / g8.c1 < 1e3);
  CHECK(std::fabs((g8.c2 / g8.c1) / (g6.c2 / g6.c1) - 1.0) < 0.1);
  GibbsReport b6 = gibbs_check(spec, delta + 0.1, 6);
  GibbsReport b8 = gibbs_check(spec, delta + 0.1, 8);
  CHECK((b8.c2 / b8.c1) / (b6.c2 / b6.c1) > 1.5);
  // per-length maxima grow roughly like lambda^{-L} under the wrong exponent
  const auto& pl = b8.per_length;
  for (std::size_t i = 1; i < pl.size(); ++i) CHECK(std::get<2>(pl[i]) > std::get<2>(pl[i - 1]));
  double lambda = std::exp(pressure(spec, delta + 0.1, 8));
  CHECK(lambda < 1.0);
  CHECK(std::get<2>(pl.back()) / std::get<2>(pl[pl.size() - 3]) == doctest::Approx(1 / (lambda * lambda)).epsilon(0.05));
  MESSAGE("growth " << std::get<2>(pl.back()) / std::get<2>(pl[pl.size() - 3]) << " lambda^-2 " << 1 / (lambda * lambda));
}

TEST_CASE("congruence decay probe") {
  auto spec = fixtures::cf12();
  DecayReport r = congruence_decay_probe(spec, 3, 0.0, 12, 3, 5);
  CHECK(r.group_size == 24);
  CHECK(r.eta > 0.0);
  CHECK(r.norms.back() < r.norms[1]);
  DecayReport r2 = congruence_decay_probe(spec, 3, 0.0, 24, 3, 5);
  CHECK(std::fabs(r2.eta / r.eta - 1.0) < 0.2);
  CHECK(r.eta == doctest::Approx(0.6992385046549929).epsilon(1e-8));
  CHECK(r2.eta == doctest::Approx(0.6711896133642132).epsilon(1e-8));
  MESSAGE(std::setprecision(16) << "eta " << r.eta << " " << r2.eta);

  DecayOptions ctl;
  ctl.constant_in_group = true;
  DecayReport c = congruence_decay_probe(spec, 3, 0.0, 12, 3, 5, ctl);
  CHECK(std::fabs(c.eta) < 0.05);
  CHECK(c.norms.back() / c.norms[c.norms.size() - 2] == doctest::Approx(1.0).epsilon(1e-3));

  DecayReport u = congruence_decay_probe(spec, 1, 0.0, 5, 2, 5);
  CHECK(u.degenerate);
  for (double n : u.norms) CHECK(n == 0.0);

  DecayOptions small;
  small.cap = 10;
  CHECK_THROWS_AS(congruence_decay_probe(spec, 3, 0.0, 5, 1, 1, small), ResourceError);

  // the imaginary twist only rotates weights: still decays
  CHECK(congruence_decay_probe(spec, 2, {0.0, 3.0}, 10, 2, 1).eta > 0.0);
}

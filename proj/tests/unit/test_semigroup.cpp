#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "semicount/errors.hpp"

using namespace semicount;

namespace {

std::uint64_t adjacency_count(const SemigroupSpec& spec, int k) {
  const int n = spec.symbol_count();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = spec.admissible(i, j) ? 1.0 : 0.0;
  }
  if (k == 0) return 1;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  for (int s = 1; s < k; ++s) v = a * v;
  return static_cast<std::uint64_t>(std::llround(v.sum()));
}

std::set<Word> words_by_length(const SemigroupSpec& spec, int min_len, int max_len) {
  std::set<Word> out;
  EnumerationBound b;
  b.min_length = min_len;
  b.max_length = max_len;
  enumerate_words(spec, b, [&](const Word& w, const GroupElement&) {
    out.insert(w);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("admissibility examples") {
  SemigroupSpec sch = fixtures::schottky(true);
  CHECK_FALSE(is_admissible({0, 2}, sch));  // |1 - 3| = N0
  CHECK(is_admissible({0, 1, 0, 3}, sch));
  CHECK(is_admissible({}, sch));
  CHECK_THROWS_AS(is_admissible({4}, sch), DomainError);
  SemigroupSpec cf = fixtures::cf12();
  CHECK(is_admissible({0, 0, 3, 2, 1}, cf));
  CHECK_THROWS_AS(is_admissible({-1}, cf), DomainError);
  // N1 = 0: symbols {1,2}, a full shift
  SemigroupSpec semi = fixtures::schottky(false);
  CHECK(semi.symbol_count() == 2);
  CHECK(is_admissible({0, 1, 1, 0}, semi));
}

TEST_CASE("trim parameter search") {
  // oracle: on R the binding constraint is 1/(1 + max a) >= eps
  CHECK(find_trim_epsilon({1, 2}) == Rational(341, 1024));
  CHECK(find_trim_epsilon({1, 2, 3}) == Rational(256, 1024));
  CHECK(find_trim_epsilon({2, 5}) == Rational(170, 1024));
  CHECK_THROWS_AS(find_trim_epsilon({1}), DomainError);
  CHECK_THROWS_AS(find_trim_epsilon({0, 1}), DomainError);
  // complex: |a + 1/2 - c0| <= c0 - 1/2 with c0 = 1/(2 eps) binds at a = 2 and a = 1+i
  CHECK(find_trim_epsilon({1, 2, GaussianInteger(1, 1)}) == Rational(341, 1024));
}

TEST_CASE("trimmed digit images stay in D^eps on sampled boundary points") {
  std::vector<GaussianInteger> alphabet = {1, 2, GaussianInteger(1, 1), GaussianInteger(2, -1)};
  Rational eps_r = find_trim_epsilon(alphabet);
  const double eps = static_cast<double>(eps_r);
  const double top = 0.5 - eps / 4;
  auto inside = [&](std::complex<double> z) {
    return z.real() >= eps - 1e-12 && std::abs(z - 0.5) <= 0.5 + 1e-12 && z.imag() <= top + 1e-12;
  };
  // boundary of D^eps: arc of the circle, the vertical cut and the horizontal cut
  std::vector<std::complex<double>> boundary;
  for (int k = 0; k < 1000; ++k) {
    double t = 2 * M_PI * k / 1000.0;
    std::complex<double> z = 0.5 + 0.5 * std::exp(std::complex<double>(0, t));
    if (z.real() < eps) z = {eps, z.imag()};
    if (z.imag() > top) z = {z.real(), top};
    boundary.push_back(z);
  }
  int violations = 0;
  for (const auto& a : alphabet) {
    std::complex<double> ac(a.re().to_double(), a.im().to_double());
    for (auto z : boundary) {
      CHECK(inside(z));
      if (!inside(1.0 / (z + ac))) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("ping-pong validation") {
  CHECK(validate_ping_pong(fixtures::cf12()).passed);
  CHECK(validate_ping_pong(fixtures::cf({1, 2, GaussianInteger(1, 1)})).passed);
  SemigroupSpec bad_eps = SemigroupSpec::continued_fractions({1, 2}, Rational(1, 2));
  CHECK_FALSE(validate_ping_pong(bad_eps).passed);
  CHECK(validate_ping_pong(fixtures::schottky(false)).passed);
  CHECK(validate_ping_pong(fixtures::schottky(true)).passed);
  CHECK(validate_ping_pong(fixtures::schottky(true, false)).passed);

  // move D2 onto D1
  auto disks = fixtures::schottky_disks();
  disks[1] = fixtures::disk1(Rational(23, 10), Rational(1, 5));
  SemigroupSpec overlap = SemigroupSpec::schottky({sym_square_embed(fixtures::s1()), sym_square_embed(fixtures::s2())}, disks);
  PingPongReport rep = validate_ping_pong(overlap);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.overlapping.size() == 1);
  CHECK(rep.overlapping[0] == std::make_pair(0, 1));

  // isometric-circle oracle: D_j is the isometric circle of g_j^{-1}
  for (int j = 0; j < 2; ++j) {
    GroupElement g = j == 0 ? fixtures::s1() : fixtures::s2();
    GroupElement h = g.inverse();
    Rational c = Rational(h.at(1, 1).re().to_big()) / -Rational(h.at(1, 0).re().to_big());
    Rational r = Rational(1) / Rational(h.at(1, 0).re().abs().to_big());
    CHECK(fixtures::schottky_disks()[static_cast<std::size_t>(j)].center[0] == c);
    CHECK(fixtures::schottky_disks()[static_cast<std::size_t>(j)].radius_sq == r * r);
  }
}

TEST_CASE("structural errors at construction") {
  auto disks = fixtures::schottky_disks();
  CHECK_THROWS_AS(SemigroupSpec::schottky({sym_square_embed(fixtures::s1())}, disks), DomainError);
  CHECK_THROWS_AS(SemigroupSpec::schottky({sym_square_embed(fixtures::s1()), sym_square_embed(fixtures::s2()),
                                           sym_square_embed(fixtures::s2())},
                                          disks),
                  DomainError);
  CHECK_THROWS_AS(SemigroupSpec::continued_fractions({1, 2}, Rational(0)), DomainError);
}

TEST_CASE("word_to_element examples") {
  SemigroupSpec cf = fixtures::cf12();
  CHECK(word_to_element({}, cf).is_identity());
  // block symbol (1,2): (0 1; 1 1)(0 1; 1 2) = (1 2; 1 3), i.e. [1,2] = 2/3
  CHECK(cf.digits(1) == std::make_pair(0, 1));
  CHECK(word_to_element({1}, cf) == GroupElement::sl2(1, 2, 1, 3));
  CHECK(word_to_element({0}, cf) == GroupElement::sl2(1, 1, 1, 2));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> sym(0, 3), len(0, 6);
  for (int k = 0; k < 200; ++k) {
    Word a, b;
    for (int i = len(rng); i > 0; --i) a.push_back(sym(rng));
    for (int i = len(rng); i > 0; --i) b.push_back(sym(rng));
    Word ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(word_to_element(ab, cf) == word_to_element(a, cf) * word_to_element(b, cf));
    Word rev(a.rbegin(), a.rend());
    CHECK(cocycle(a, cf) == word_to_element(rev, cf));
  }
  CHECK_THROWS_AS(word_to_element({0, 2}, fixtures::schottky(true)), DomainError);
}

TEST_CASE("cylinder hull disks contain the images of the anchors") {
  SemigroupSpec cf = fixtures::cf12();
  for (int j = 0; j < cf.symbol_count(); ++j) {
    BoundaryPoint x = symbol_anchor(cf, j);
    CHECK(cf.symbol_disk(j).contains(x.to_float()));
  }
  SemigroupSpec s = fixtures::schottky(true);
  for (int j = 0; j < s.symbol_count(); ++j) CHECK(s.symbol_disk(j).contains(symbol_anchor(s, j).to_float()));
}

TEST_CASE("disk images are exact and match the SO(2,1) sphere-vector image") {
  Disk d = fixtures::disk1(Rational(1, 3), Rational(1, 7));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int k = 0; k < 50; ++k) {
    // short even-sum products keep the symmetric square integral
    GroupElement g = GroupElement::identity(Setting::SL2R, 2);
    std::vector<GroupElement> gens = {fixtures::s1(), fixtures::s2(), fixtures::s1().inverse(), fixtures::s2().inverse()};
    for (int i = 0; i < 3; ++i) g = g * gens[static_cast<std::size_t>(pick(rng))];
    Disk a, b;
    bool ok_a = true, ok_b = true;
    try {
      a = disk_image(g, d);
    } catch (const DomainError&) {
      ok_a = false;
    }
    try {
      b = disk_image(sym_square_embed(g), d);
    } catch (const DomainError&) {
      ok_b = false;
    }
    REQUIRE(ok_a == ok_b);
    if (!ok_a) continue;
    CHECK(a.center == b.center);
    CHECK(a.radius_sq == b.radius_sq);
    // endpoint oracle: image interval endpoints are images of the endpoints
    Rational r = Rational(1, 7);
    BoundaryPoint lo = mobius_apply(g, BoundaryPoint::exact({Rational(1, 3) - r}));
    BoundaryPoint hi = mobius_apply(g, BoundaryPoint::exact({Rational(1, 3) + r}));
    Rational e1 = lo.exact_coords()[0], e2 = hi.exact_coords()[0];
    CHECK(a.center[0] == (e1 + e2) / 2);
    CHECK(a.radius_sq == (e1 - e2) * (e1 - e2) / 4);
  }
}

TEST_CASE("length enumeration counts match the transition-matrix oracle") {
  SemigroupSpec cf = fixtures::cf12();
  CHECK(words_by_length(cf, 2, 2).size() == 16);
  for (auto spec : {fixtures::schottky(true), fixtures::schottky(false), fixtures::cf12()}) {
    for (int k = 0; k <= (spec.symbol_count() == 4 ? 9 : 12); ++k) {
      std::uint64_t count = 0;
      EnumerationBound b;
      b.min_length = k;
      b.max_length = k;
      enumerate_words(spec, b, [&](const Word& w, const GroupElement&) {
        CHECK(static_cast<int>(w.size()) == k);
        ++count;
        return true;
      });
      CHECK(count == adjacency_count(spec, k));
    }
  }
  // explicit: reduced words of length 2 in the free group on two letters
  CHECK(words_by_length(fixtures::schottky(true), 2, 2).size() == 12);
}

TEST_CASE("norm-bounded enumeration equals filtering a length enumeration") {
  struct Case {
    SemigroupSpec spec;
    Integer bound;
    int cap;
  };
  std::vector<Case> cases = {
      {fixtures::cf12(), 400000, 9},
      {fixtures::cf({1, 2, GaussianInteger(1, 1)}), 5000, 6},
      {fixtures::schottky(false), Integer::parse("1000000000000000000000000"), 9},
      {fixtures::schottky(true), Integer::parse("100000000000000000000"), 7},
      {fixtures::schottky(true, false), Integer::parse("1000000000"), 10},
  };
  for (const auto& c : cases) {
    std::set<Word> fast;
    EnumerationBound b;
    b.max_norm_sq = c.bound;
    enumerate_words(c.spec, b, [&](const Word& w, const GroupElement& g) {
      CHECK(frobenius_norm_sq(g) <= c.bound);
      CHECK(fast.insert(w).second);
      return true;
    });
    std::set<Word> brute;
    bool at_cap = false;
    EnumerationBound lb;
    lb.max_length = c.cap;
    enumerate_words(c.spec, lb, [&](const Word& w, const GroupElement& g) {
      if (frobenius_norm_sq(g) <= c.bound) {
        brute.insert(w);
        if (static_cast<int>(w.size()) == c.cap) at_cap = true;
      }
      return true;
    });
    CHECK_FALSE(at_cap);  // the cap is large enough for the oracle to be complete
    CHECK(fast == brute);
    CHECK(fast.size() > 20);
  }
}

TEST_CASE("CF block products have nonnegative entries and monotone norms") {
  SemigroupSpec cf = fixtures::cf12();
  std::map<Word, Integer> norm;
  std::uint64_t checked = 0;
  EnumerationBound b;
  b.max_length = 8;
  enumerate_words(cf, b, [&](const Word& w, const GroupElement& g) {
    for (const auto& e : g.entries()) CHECK(e.re().sign() >= 0);
    Integer n = frobenius_norm_sq(g);
    if (!w.empty()) {
      Word parent(w.begin(), w.end() - 1);
      CHECK(norm.at(parent) <= n);
      CHECK(frobenius_norm_sq(word_to_element(Word(w.begin() + 1, w.end()), cf)) <= n);
    }
    norm.emplace(w, n);
    ++checked;
    return true;
  });
  CHECK(checked == 1 + 4 + 16 + 64 + 256 + 1024 + 4096 + 16384 + 65536);
}

TEST_CASE("Gaussian CF norms are monotone under extension on both sides") {
  SemigroupSpec cf = fixtures::cf({1, 2, GaussianInteger(1, 1), GaussianInteger(1, -1)});
  std::map<Word, Integer> norm;
  EnumerationBound b;
  b.max_length = 4;
  enumerate_words(cf, b, [&](const Word& w, const GroupElement& g) {
    Integer n = frobenius_norm_sq(g);
    if (!w.empty()) {
      CHECK(norm.at(Word(w.begin(), w.end() - 1)) <= n);
      CHECK(frobenius_norm_sq(word_to_element(Word(w.begin() + 1, w.end()), cf)) <= n);
    }
    norm.emplace(w, n);
    return true;
  });
}

TEST_CASE("Schottky escape constant bounds distance loss under extension") {
  for (auto spec : {fixtures::schottky(false), fixtures::schottky(true), fixtures::schottky(true, false)}) {
    double c = schottky_escape_constant(spec);
    CHECK(c > 0.0);
    std::map<Word, double> dist;
    EnumerationBound b;
    b.max_length = 6;
    double worst = 0.0;
    enumerate_words(spec, b, [&](const Word& w, const GroupElement& g) {
      double d = hyperbolic_distance(g);
      dist[w] = d;
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        double dg = dist.at(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)));
        worst = std::max(worst, dg - d);
        CHECK(d >= dg - c);
      }
      return true;
    });
    CHECK(worst <= c);
  }
  auto disks = fixtures::schottky_disks();
  disks[0] = fixtures::disk1(Rational(0), Rational(2));  // hemisphere over it contains o
  disks[2] = fixtures::disk1(Rational(-7), Rational(1, 2));
  SemigroupSpec s = SemigroupSpec::schottky({sym_square_embed(fixtures::s1()), sym_square_embed(fixtures::s2())}, disks);
  CHECK_THROWS_AS(schottky_escape_constant(s), DomainError);
}

TEST_CASE("walk_words prepends symbols") {
  SemigroupSpec s = fixtures::schottky(true);
  std::set<Word> seen;
  walk_words(s, Extension::Prepend, 3, [&](const Word& w, const GroupElement& g) {
    CHECK(is_admissible(w, s));
    CHECK(g == word_to_element(w, s));
    seen.insert(w);
    return Walk::Descend;
  });
  CHECK(seen.size() == 4 + 12 + 36);
}

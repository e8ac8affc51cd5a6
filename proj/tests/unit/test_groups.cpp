#include <doctest.h>

#include <cmath>
#include <random>

#include "semicount/errors.hpp"
#include "semicount/groups.hpp"

using namespace semicount;

namespace {

GroupElement g_digit_block(int a, int b) {
  // g_a g_b with g_a = (0 1; 1 a)
  return GroupElement::sl2(1, b, a, a * b + 1);
}

GroupElement random_sl2z(std::mt19937_64& rng, int len) {
  GroupElement s = GroupElement::sl2(1, 1, 0, 1);
  GroupElement t = GroupElement::sl2(1, 0, 1, 1);
  GroupElement g = GroupElement::identity(Setting::SL2R, 2);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int k = 0; k < len; ++k) {
    switch (pick(rng)) {
      case 0: g = g * s; break;
      case 1: g = g * s.inverse(); break;
      case 2: g = g * t; break;
      default: g = g * t.inverse(); break;
    }
  }
  return g;
}

GroupElement random_sl2zi(std::mt19937_64& rng, int len) {
  std::vector<GroupElement> gens = {
      GroupElement::sl2(Setting::SL2C, 1, 1, 0, 1),
      GroupElement::sl2(Setting::SL2C, 1, GaussianInteger(0, 1), 0, 1),
      GroupElement::sl2(Setting::SL2C, 1, 0, 1, 1),
      GroupElement::sl2(Setting::SL2C, 1, 0, GaussianInteger(0, 1), 1),
  };
  GroupElement g = GroupElement::identity(Setting::SL2C, 2);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int k = 0; k < len; ++k) {
    int p = pick(rng);
    g = g * (p < 4 ? gens[static_cast<std::size_t>(p)] : gens[static_cast<std::size_t>(p - 4)].inverse());
  }
  return g;
}

// random even-sum SL2(Z) element, so its symmetric square is integral
GroupElement random_even_sl2z(std::mt19937_64& rng, int len) {
  while (true) {
    GroupElement g = random_sl2z(rng, len);
    Integer s = g.at(0, 0).re() + g.at(0, 1).re() + g.at(1, 0).re() + g.at(1, 1).re();
    if (s.is_even()) return g;
  }
}

BoundaryPoint rat(long long p, long long q) { return BoundaryPoint::exact({Rational(p, q)}); }

}  // namespace

TEST_CASE("construction checks the group invariants exactly") {
  CHECK_THROWS_AS(GroupElement::sl2(1, 2, 3, 4), DomainError);
  CHECK_NOTHROW(GroupElement::sl2(2, 1, 1, 1));
  CHECK(GroupElement::sl2(2, 1, 1, 1).setting() == Setting::SL2R);
  CHECK(GroupElement::sl2(1, GaussianInteger(0, 1), 0, 1).setting() == Setting::SL2C);
  // a Lorentz matrix that is not integral-orthogonal for Q
  CHECK_THROWS_AS(GroupElement(Setting::SOQ, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}), DomainError);
  // time reversal preserves Q but not the upper sheet
  CHECK_THROWS_AS(GroupElement(Setting::SOQ, 3, {-1, 0, 0, 0, 1, 0, 0, 0, -1}), DomainError);
}

TEST_CASE("multiply and inverse examples") {
  GroupElement g = GroupElement::sl2(5, 12, 2, 5);
  CHECK((g * g.inverse()).is_identity());
  CHECK((g.inverse() * g).is_identity());
  // g_{1,1} = g_1 g_1 = (1 1; 1 2)
  CHECK(g_digit_block(1, 1) == GroupElement::sl2(1, 1, 1, 2));
  // g_a g_b = (0 1; 1 a)(0 1; 1 b)
  CHECK(g_digit_block(2, 3) == GroupElement::sl2(1, 3, 2, 7));
  GroupElement na = GroupElement::sl2(1, 3, 0, 1), nb = GroupElement::sl2(1, 2, 0, 1);
  CHECK(na * nb == GroupElement::sl2(1, 5, 0, 1));
  CHECK(na.inverse() == GroupElement::sl2(1, -3, 0, 1));
  CHECK_THROWS_AS(g * GroupElement::identity(Setting::SL2C, 2), DomainError);
}

TEST_CASE("translation n_a acts by translation by a") {
  GroupElement n = GroupElement::sl2(Setting::SL2C, 1, GaussianInteger(2, 1), 0, 1);
  BoundaryPoint x = BoundaryPoint::exact({Rational(1, 3), Rational(-2, 5)});
  BoundaryPoint y = mobius_apply(n, x);
  CHECK(y == BoundaryPoint::exact({Rational(7, 3), Rational(3, 5)}));
  CHECK(mobius_apply(n, BoundaryPoint::infinity(2)).is_infinity());
}

TEST_CASE("frobenius norm examples") {
  CHECK(frobenius_norm_sq(GroupElement::identity(Setting::SL2R, 2)) == Integer(2));
  CHECK(std::cosh(hyperbolic_distance(GroupElement::identity(Setting::SL2R, 2))) * 2 == doctest::Approx(2.0));
  CHECK(frobenius_norm_sq(GroupElement::sl2(1, 1, 1, 2)) == Integer(7));
  CHECK(frobenius_norm_sq(GroupElement::sl2(Setting::SL2C, 1, GaussianInteger(1, 1), 0, 1)) == Integer(4));
  GroupElement e = sym_square_embed(GroupElement::sl2(5, 12, 2, 5));
  Integer oracle = 0;
  for (const auto& x : e.entries()) oracle += x.re() * x.re();
  CHECK(frobenius_norm_sq(e) == oracle);
}

TEST_CASE("mobius_apply examples") {
  GroupElement id = GroupElement::identity(Setting::SL2R, 2);
  CHECK(mobius_apply(id, rat(3, 7)) == rat(3, 7));
  // g_1 = (0 1; 1 1) has det -1; its action 1/(x+1) equals that of the
  // block g_{1,1} composed with g_1^{-1}; check g_{1,1}(x) = g_1(g_1(x)) on x = 1
  GroupElement g11 = GroupElement::sl2(1, 1, 1, 2);
  CHECK(mobius_apply(g11, rat(1, 1)) == rat(2, 3));  // g_1(1) = 1/2, g_1(1/2) = 2/3
  CHECK(mobius_apply(g11, BoundaryPoint::infinity(1)) == rat(1, 1));
  CHECK(mobius_apply(g11, rat(-2, 1)).is_infinity());
}

TEST_CASE("mobius_apply is an action, exactly over the rationals") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> u(-50, 50);
  for (int k = 0; k < 200; ++k) {
    GroupElement g = random_sl2z(rng, 8), h = random_sl2z(rng, 8);
    BoundaryPoint x = rat(u(rng), 1 + std::abs(u(rng)));
    CHECK(mobius_apply(g * h, x) == mobius_apply(g, mobius_apply(h, x)));
    GroupElement a = random_sl2zi(rng, 6), b = random_sl2zi(rng, 6);
    BoundaryPoint z = BoundaryPoint::exact({Rational(u(rng), 7), Rational(u(rng), 3)});
    CHECK(mobius_apply(a * b, z) == mobius_apply(a, mobius_apply(b, z)));
  }
  for (int k = 0; k < 100; ++k) {
    GroupElement g = sym_square_embed(random_even_sl2z(rng, 6));
    GroupElement h = sym_square_embed(random_even_sl2z(rng, 6));
    BoundaryPoint x = rat(u(rng), 1 + std::abs(u(rng)));
    CHECK(mobius_apply(g * h, x) == mobius_apply(g, mobius_apply(h, x)));
  }
}

TEST_CASE("sym-square boundary action matches the fractional linear action") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long long> u(-40, 40);
  for (int k = 0; k < 200; ++k) {
    GroupElement g = random_even_sl2z(rng, 7);
    GroupElement m = sym_square_embed(g);
    BoundaryPoint x = rat(u(rng), 1 + std::abs(u(rng)));
    CHECK(mobius_apply(m, x) == mobius_apply(g, x));
    CHECK(mobius_apply(m, BoundaryPoint::infinity(1)) == mobius_apply(g, BoundaryPoint::infinity(1)));
    if (!mobius_apply(g, x).is_infinity()) {
      CHECK(conformal_derivative(m, x) == doctest::Approx(conformal_derivative(g, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("conformal derivative examples") {
  // |g_1'(xi)| = |xi + 1|^{-2}; realize through the block g_{1,1} = g_1 g_1:
  // |g_{1,1}'(0)| = |g_1'(g_1(0))| |g_1'(0)| = (1/4)(1) and |g_1'(0)| = 1, |g_1'(1)| = 1/4
  GroupElement g11 = GroupElement::sl2(1, 1, 1, 2);
  CHECK(conformal_derivative(g11, rat(0, 1)) == doctest::Approx(0.25));
  CHECK_THROWS_AS(conformal_derivative(g11, rat(-2, 1)), DomainError);
  CHECK_THROWS_AS(conformal_derivative(g11, BoundaryPoint::infinity(1)), DomainError);
}

TEST_CASE("SO(n,1) conformal derivative agrees with central finite differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    GroupElement m = sym_square_embed(random_even_sl2z(rng, 5));
    double x = u(rng);
    BoundaryPoint p = BoundaryPoint::approx({x});
    if (mobius_apply(m, p).is_infinity()) continue;
    double h = 1e-6 * std::max(1.0, std::fabs(x));
    auto f = [&](double t) { return mobius_apply(m, BoundaryPoint::approx({t})).coords()[0]; };
    double fd = std::fabs(f(x + h) - f(x - h)) / (2 * h);
    double d = conformal_derivative(m, p);
    if (d > 1e4 || d < 1e-4) continue;  // too close to the pole for a fixed step
    CHECK(d == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("chain rule for the conformal derivative") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long long> u(-30, 30);
  for (int k = 0; k < 200; ++k) {
    GroupElement g = random_sl2zi(rng, 5), h = random_sl2zi(rng, 5);
    BoundaryPoint x = BoundaryPoint::exact({Rational(u(rng), 11), Rational(u(rng), 13)});
    BoundaryPoint hx = mobius_apply(h, x);
    if (hx.is_infinity() || mobius_apply(g, hx).is_infinity()) continue;
    double lhs = conformal_derivative(g * h, x);
    double rhs = conformal_derivative(g, hx) * conformal_derivative(h, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("complex translation length examples") {
  // diag(e^{t/2}, e^{-t/2}) has trace 2 cosh(t/2)
  double t = 1.7;
  ComplexLength cl = complex_translation_length(std::complex<double>(2 * std::cosh(t / 2), 0.0));
  CHECK(cl.length == doctest::Approx(t).epsilon(1e-12));
  CHECK(cl.angle == doctest::Approx(0.0));
  ComplexLength c2 = complex_translation_length(GroupElement::sl2(2, 1, 1, 1));
  CHECK(c2.length == doctest::Approx(2 * std::acosh(1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(complex_translation_length(GroupElement::sl2(1, 1, 0, 1)), DomainError);
  CHECK_THROWS_AS(complex_translation_length(GroupElement::sl2(0, -1, 1, 0)), DomainError);
  // loxodromic with non-real trace
  GroupElement lox = GroupElement::sl2(Setting::SL2C, GaussianInteger(1, 1), 1, GaussianInteger(0, 1), 1);
  CHECK(is_hyperbolic(lox));
  ComplexLength c3 = complex_translation_length(lox);
  std::complex<double> back = std::cosh(std::complex<double>(c3.length, c3.angle) / 2.0);
  CHECK(std::abs(back - lox.trace().to_complex() / 2.0) < 1e-12);
}

TEST_CASE("fixed points examples") {
  GroupElement g11 = GroupElement::sl2(1, 1, 1, 2);
  FixedPoints fp = fixed_points(g11);
  // g_1(x) = 1/(1+x) fixes (sqrt 5 - 1)/2, hence so does g_1 g_1
  CHECK(fp.attracting.coords()[0] == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-15));
  CHECK(conformal_derivative(g11, fp.attracting) < 1.0);
  CHECK(conformal_derivative(g11, fp.repelling) > 1.0);
  FixedPoints inv = fixed_points(g11.inverse());
  CHECK(inv.attracting.coords()[0] == doctest::Approx(fp.repelling.coords()[0]));
  CHECK(inv.repelling.coords()[0] == doctest::Approx(fp.attracting.coords()[0]));
  CHECK_THROWS_AS(fixed_points(GroupElement::sl2(1, 1, 0, 1)), DomainError);
}

TEST_CASE("elliptic and parabolic elements are not hyperbolic") {
  // trace 0
  CHECK_FALSE(is_hyperbolic(GroupElement::sl2(Setting::SL2C, GaussianInteger(0, 1), 3, 0, GaussianInteger(0, -1))));
  CHECK_FALSE(is_hyperbolic(GroupElement::sl2(1, 1, 0, 1)));
  CHECK_FALSE(is_hyperbolic(GroupElement::sl2(1, -1, 1, 0)));
  CHECK(is_hyperbolic(GroupElement::sl2(2, 1, 1, 1)));
}

TEST_CASE("hyperbolic distance examples and the cross-model check") {
  CHECK(hyperbolic_distance(GroupElement::identity(Setting::SL2R, 2)) == 0.0);
  CHECK(hyperbolic_distance(GroupElement::identity(Setting::SOQ, 3)) == 0.0);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    GroupElement g = random_even_sl2z(rng, 10);
    double d1 = hyperbolic_distance(g);
    double d2 = hyperbolic_distance(sym_square_embed(g));
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
  }
}

TEST_CASE("distance growth of powers recovers the translation length") {
  // d(o, g^k o) - d(o, g^{k-1} o) tends to l(g); d/k tends to l with an O(1/k) error
  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 30) {
    GroupElement g = random_sl2z(rng, 6);
    if (!is_hyperbolic(g)) continue;
    ++tested;
    double l = translation_length(g);
    GroupElement p = GroupElement::identity(Setting::SL2R, 2);
    double prev = 0.0, cur = 0.0;
    for (int k = 1; k <= 50; ++k) {
      p = p * g;
      prev = cur;
      cur = hyperbolic_distance(p);
    }
    CHECK(std::fabs((cur - prev) - l) < 1e-6);
    CHECK(cur / 50 >= l - 1e-9);
    CHECK(cur / 50 - l <= 2 * hyperbolic_distance(g) / 50 + 1e-9);
  }
}

TEST_CASE("sym_square_embed is an integral homomorphism into SO(2,1)") {
  CHECK(sym_square_embed(GroupElement::identity(Setting::SL2R, 2)).is_identity());
  std::mt19937_64 rng(10);
  for (int k = 0; k < 100; ++k) {
    GroupElement g = random_even_sl2z(rng, 6), h = random_even_sl2z(rng, 6);
    // the constructor checks M^T Q M = Q exactly
    CHECK(sym_square_embed(g * h) == sym_square_embed(g) * sym_square_embed(h));
  }
  CHECK_THROWS_AS(sym_square_embed(GroupElement::sl2(1, 1, 0, 1)), DomainError);
}

TEST_CASE("SO translation length matches the SL2 length under the embedding") {
  std::mt19937_64 rng(12);
  int tested = 0;
  while (tested < 50) {
    GroupElement g = random_even_sl2z(rng, 6);
    if (!is_hyperbolic(g)) continue;
    ++tested;
    GroupElement m = sym_square_embed(g);
    CHECK(is_hyperbolic(m));
    CHECK(translation_length(m) == doctest::Approx(translation_length(g)).epsilon(1e-9));
    FixedPoints a = fixed_points(g), b = fixed_points(m);
    if (!a.attracting.is_infinity() && !b.attracting.is_infinity()) {
      CHECK(a.attracting.coords()[0] == doctest::Approx(b.attracting.coords()[0]).epsilon(1e-7));
    }
  }
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10000; ++k) {
    GroupElement a = random_sl2zi(rng, 3), b = random_sl2zi(rng, 3), c = random_sl2zi(rng, 3);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("complex length of a product from the conjugating matrix") {
  // Q = I: lengths add
  ProductLengthCheck id = product_length_check(1.0, 0.5, {1.0, 0.0, 0.0, 1.0});
  CHECK(id.discrepancy < 1e-12);
  CHECK(id.lhs.real() == doctest::Approx(std::cosh(0.75)));
  std::mt19937_64 rng(93);
  std::uniform_real_distribution<double> u(-1.5, 1.5), len(0.1, 3.0);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    std::complex<double> a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    if (std::abs(a) < 0.2) a += 1.0;
    std::complex<double> d = (1.0 + b * c) / a;
    ProductLengthCheck r = product_length_check(len(rng), len(rng), {a, b, c, d});
    CHECK(r.discrepancy < 1e-9 * std::max(1.0, std::abs(r.rhs)));
    ++checked;
  }
  CHECK(checked == 100);
  CHECK_THROWS_AS(product_length_check(1.0, 1.0, {2.0, 0.0, 0.0, 2.0}), DomainError);
}

#include <doctest.h>

#include <climits>
#include <cmath>
#include <random>
#include <set>

#include "semicount/errors.hpp"
#include "semicount/gaussian.hpp"
#include "semicount/residue.hpp"

using namespace semicount;

TEST_CASE("integer fast path spills to big values and back") {
  Integer big = Integer(INT64_MAX) + Integer(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "9223372036854775808");
  Integer back = big - Integer(1);
  CHECK(back.is_small());
  CHECK(back == Integer(INT64_MAX));
  Integer sq = Integer(3037000500) * Integer(3037000500);
  CHECK(sq.str() == "9223372037000250000");
  CHECK(Integer::parse("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
  CHECK(Integer(-7) < Integer(3));
  CHECK(big > Integer(INT64_MAX));
}

TEST_CASE("floor division and rounding") {
  auto [q, r] = Integer::floor_divmod(-7, 3);
  CHECK(q == Integer(-3));
  CHECK(r == Integer(2));
  CHECK(Integer::round_div(7, 2) == Integer(4));
  CHECK(Integer::round_div(-7, 2) == Integer(-3));
  CHECK(Integer::round_div(5, -3) == Integer(-2));
  CHECK(Integer(-5).mod(3) == 1);
  CHECK_THROWS_AS(Integer::divexact(7, 2), DomainError);
}

TEST_CASE("log_abs of huge values") {
  Integer x = 1;
  for (int k = 0; k < 2000; ++k) x *= Integer(10);
  CHECK(x.log_abs() == doctest::Approx(2000 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("gaussian parsing and printing") {
  CHECK(GaussianInteger::parse("1+i") == GaussianInteger(1, 1));
  CHECK(GaussianInteger::parse("2-3i") == GaussianInteger(2, -3));
  CHECK(GaussianInteger::parse("-i") == GaussianInteger(0, -1));
  CHECK(GaussianInteger::parse("7") == GaussianInteger(7));
  CHECK(GaussianInteger(1, -1).str() == "1-i");
  CHECK(GaussianInteger(0, 2).str() == "2i");
}

TEST_CASE("norm examples") {
  CHECK(norm(Integer(3)) == Integer(3));
  CHECK(norm(Integer(-3)) == Integer(3));
  CHECK(norm(GaussianInteger(1, 1)) == Integer(2));
  CHECK(norm(GaussianInteger(2, 1)) == Integer(5));
  CHECK_THROWS_AS(norm(Integer(0)), DomainError);
  CHECK_THROWS_AS(norm(GaussianInteger(0)), DomainError);
}

TEST_CASE("norm is multiplicative on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> u(-1000000, 1000000);
  for (int k = 0; k < 10000; ++k) {
    GaussianInteger a(u(rng), u(rng)), b(u(rng), u(rng));
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(norm(a * b) == norm(a) * norm(b));
    Integer x = u(rng), y = u(rng);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(norm(x * y) == norm(x) * norm(y));
  }
}

TEST_CASE("square-free examples") {
  CHECK(is_square_free(Integer(6)));
  CHECK_FALSE(is_square_free(Integer(4)));
  CHECK_FALSE(is_square_free(Integer(-12)));
  CHECK(is_square_free(Integer(30030)));
  CHECK_THROWS_AS(is_square_free(Integer(1)), DomainError);
  CHECK_THROWS_AS(is_square_free(Integer(0)), DomainError);
  // 2 = -i (1+i)^2
  CHECK_FALSE(is_square_free(GaussianInteger(2)));
  CHECK(is_square_free(GaussianInteger(1, 1)));
  CHECK(is_square_free(GaussianInteger(3)));
  CHECK_FALSE(is_square_free(GaussianInteger(9)));
  CHECK(is_square_free(GaussianInteger(5)));  // (2+i)(2-i)
  CHECK_FALSE(is_square_free(GaussianInteger(2, 1) * GaussianInteger(2, 1)));
  CHECK(is_square_free(GaussianInteger(2, 1) * GaussianInteger(2, -1) * GaussianInteger(3)));
  CHECK_THROWS_AS(is_square_free(GaussianInteger(0, 1)), DomainError);
}

TEST_CASE("square-free agrees with a brute-force Gaussian divisor oracle") {
  // q is square-free iff no non-unit d with N(d)^2 <= N(q) has d^2 | q
  for (int re = -12; re <= 12; ++re) {
    for (int im = -12; im <= 12; ++im) {
      GaussianInteger q(re, im);
      if (q.is_zero() || q.is_unit()) continue;
      bool oracle = true;
      for (int a = -12; a <= 12 && oracle; ++a) {
        for (int b = -12; b <= 12; ++b) {
          GaussianInteger d(a, b);
          if (d.is_zero() || d.is_unit()) continue;
          if (d.norm() * d.norm() > q.norm()) continue;
          if (GaussianInteger::divides(d * d, q)) {
            oracle = false;
            break;
          }
        }
      }
      CHECK_MESSAGE(is_square_free(q) == oracle, q.str());
    }
  }
}

TEST_CASE("coprime examples") {
  CHECK(coprime(Integer(4), Integer(9)));
  CHECK_FALSE(coprime(Integer(6), Integer(9)));
  CHECK(coprime(GaussianInteger(1, 1), GaussianInteger(3)));
  CHECK_FALSE(coprime(GaussianInteger(1, 1), GaussianInteger(2)));
  CHECK_FALSE(coprime(GaussianInteger(2, 1), GaussianInteger(5)));
  CHECK_THROWS_AS(coprime(Integer(0), Integer(0)), DomainError);
  CHECK(coprime(Integer(0), Integer(1)));
}

TEST_CASE("gcd divides both and satisfies Bezout") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> u(-100000, 100000);
  for (int k = 0; k < 2000; ++k) {
    Integer a = u(rng), b = u(rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto [g, s, t] = extended_gcd(a, b);
    CHECK(g == gcd(a, b));
    CHECK(Integer::floor_divmod(a, g).second.is_zero());
    CHECK(Integer::floor_divmod(b, g).second.is_zero());
    CHECK(s * a + t * b == g);
  }
}

TEST_CASE("Gaussian gcd divides both arguments") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> u(-300, 300);
  for (int k = 0; k < 1000; ++k) {
    GaussianInteger a(u(rng), u(rng)), b(u(rng), u(rng));
    GaussianInteger c(u(rng) % 20, u(rng) % 20);
    if (c.is_zero()) continue;
    a *= c;
    b *= c;
    if (a.is_zero() || b.is_zero()) continue;
    GaussianInteger g = gcd(a, b);
    CHECK(GaussianInteger::divides(g, a));
    CHECK(GaussianInteger::divides(g, b));
    CHECK(GaussianInteger::divides(c, g));
  }
}

TEST_CASE("residue ring cardinality equals the norm") {
  struct Case {
    Modulus q;
    int expected;
  };
  std::vector<Case> cases = {
      {Modulus::integer(2), 2},
      {Modulus::integer(3), 3},
      {Modulus::integer(5), 5},
      {Modulus::gaussian(GaussianInteger(1, 1)), 2},
      {Modulus::gaussian(GaussianInteger(2, 1)), 5},
      {Modulus::gaussian(GaussianInteger(3)), 9},
      {Modulus::gaussian(GaussianInteger(3, 4)), 25},
      {Modulus::gaussian(GaussianInteger(2)), 4},
  };
  for (const auto& c : cases) {
    auto reps = enumerate_residues(c.q);
    CHECK(static_cast<int>(reps.size()) == c.expected);
    CHECK(Integer(static_cast<std::int64_t>(reps.size())) == c.q.norm());
    ResidueRing ring(c.q);
    CHECK(static_cast<int>(ring.size()) == c.expected);
  }
}

TEST_CASE("canonical residue is unique per class and follows the tie rule") {
  GaussianInteger q(2);
  // classes mod 2: 0, 1, i, 1+i; canonical reps have minimal norm
  CHECK(canonical_residue(GaussianInteger(3, 5), q) == GaussianInteger(1, 1));
  CHECK(canonical_residue(GaussianInteger(-1), q) == GaussianInteger(1));
  CHECK(canonical_residue(GaussianInteger(0, -1), q) == GaussianInteger(0, 1));
  // the ring is closed: canonical reps are fixed points
  for (const auto& r : enumerate_residues(Modulus::gaussian(GaussianInteger(3, 2)))) {
    CHECK(canonical_residue(r, GaussianInteger(3, 2)) == r);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> u(-1000, 1000);
  GaussianInteger m(4, 1);
  for (int k = 0; k < 500; ++k) {
    GaussianInteger x(u(rng), u(rng)), t(u(rng), u(rng));
    CHECK(canonical_residue(x, m) == canonical_residue(x + t * m, m));
    CHECK(canonical_residue(x, m).norm() * 2 <= m.norm());
  }
}

TEST_CASE("residue ring arithmetic matches direct reduction") {
  for (auto q : {Modulus::integer(7), Modulus::gaussian(GaussianInteger(3)), Modulus::gaussian(GaussianInteger(2, 1))}) {
    ResidueRing ring(q);
    for (std::uint32_t a = 0; a < ring.size(); ++a) {
      for (std::uint32_t b = 0; b < ring.size(); ++b) {
        CHECK(ring.element(ring.add(a, b)) == Residue(ring.element(a) + ring.element(b), q).value());
        CHECK(ring.element(ring.mul(a, b)) == Residue(ring.element(a) * ring.element(b), q).value());
        CHECK(ring.add(ring.sub(a, b), b) == a);
      }
    }
    CHECK(ring.element(ring.one()) == Residue(GaussianInteger(1), q).value());
  }
  ResidueRing unit(Modulus::integer(1));
  CHECK(unit.size() == 1);
  CHECK(unit.one() == unit.zero());
}

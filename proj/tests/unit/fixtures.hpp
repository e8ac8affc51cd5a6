#pragma once

#include <vector>

#include "semicount/semigroup.hpp"

namespace fixtures {

using namespace semicount;

inline SemigroupSpec cf(std::vector<GaussianInteger> alphabet) {
  Rational eps = find_trim_epsilon(alphabet);
  return SemigroupSpec::continued_fractions(std::move(alphabet), eps);
}

inline SemigroupSpec cf12() { return cf({1, 2}); }

inline Disk disk1(Rational c, Rational r) { return Disk{{c}, r * r}; }

inline std::vector<Disk> schottky_disks() {
  return {disk1(Rational(5, 2), Rational(1, 2)), disk1(Rational(4, 5), Rational(1, 5)),
          disk1(Rational(-5, 2), Rational(1, 2)), disk1(Rational(-4, 5), Rational(1, 5))};
}

// (5 12; 2 5) and (4 3; 5 4): isometric circles give the disks above
inline GroupElement s1() { return GroupElement::sl2(5, 12, 2, 5); }
inline GroupElement s2() { return GroupElement::sl2(4, 3, 5, 4); }

/// SO(2,1) Schottky semigroup (N1 = 0) or group (N1 = N0 = 2).
inline SemigroupSpec schottky(bool group = false, bool embed = true) {
  auto lift = [&](const GroupElement& g) { return embed ? sym_square_embed(g) : g; };
  std::vector<GroupElement> gens = {lift(s1()), lift(s2())};
  if (group) {
    gens.push_back(lift(s1().inverse()));
    gens.push_back(lift(s2().inverse()));
  }
  return SemigroupSpec::schottky(std::move(gens), schottky_disks());
}

}  // namespace fixtures

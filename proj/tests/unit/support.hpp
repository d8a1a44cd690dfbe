#pragma once

#include <random>
#include <vector>

#include "eqb/cyclotomic.hpp"

namespace eqb::test {

inline Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline CycNum random_cyc(const CycField& f, std::mt19937_64& rng, int bound = 100) {
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(random_rational(rng, bound));
  return CycNum(f, std::move(c));
}

inline CycNum small_cyc(const CycField& f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < f.degree(); ++i) c.emplace_back(d(rng));
  return CycNum(f, std::move(c));
}

}  // namespace eqb::test

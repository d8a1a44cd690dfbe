#include <random>

#include "doctest.h"
#include "eqb/errors.hpp"
#include "eqb/moebius.hpp"
#include "eqb/ratfun.hpp"
#include "support.hpp"

using namespace eqb;

namespace {

Poly random_poly(const CycField& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<CycNum> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(test::small_cyc(f, rng));
  return Poly(f, std::move(c));
}

RatFun random_ratfun(const CycField& f, std::mt19937_64& rng) {
  const CycNum one(f, Rational(1));
  const std::vector<Poly> dens = {Poly::constant(one), Poly::monomial(one, 1),
                                  Poly::linear(one, one), Poly::linear(one, CycNum(f, Rational(-2)))};
  std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
  return RatFun(random_poly(f, rng, 2), dens[pick(rng)]);
}

RatMat random_ratmat(const CycField& f, std::mt19937_64& rng, std::size_t n) {
  RatMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_ratfun(f, rng);
  }
  return m;
}

RatFun z_fn(const CycField& f) { return RatFun::monomial(CycNum(f, Rational(1)), 1); }

}  // namespace

TEST_CASE("named ratfun examples") {
  const auto& f = CycField::get(12);
  const CycNum one(f, Rational(1));
  CHECK(RatMat::identity(f, 2).det().is_one());

  auto unit = laurent_is_unit(RatFun::monomial(CycNum(f, Rational(3)), 2));
  REQUIRE(unit.has_value());
  CHECK(unit->first == CycNum(f, Rational(3)));
  CHECK(unit->second == 2);
  CHECK_FALSE(laurent_is_unit(RatFun(Poly::linear(one, one))).has_value());

  RatMat a(f, 2, 2);
  a(0, 0) = z_fn(f);
  a(0, 1) = RatFun::constant(one);
  a(1, 1) = RatFun::constant(one);
  const RatMat inv = a.inverse();
  CHECK(inv(0, 0) == RatFun::monomial(one, -1));
  CHECK(inv(0, 1) == RatFun::monomial(-one, -1));
  CHECK(inv(1, 0).is_zero());
  CHECK(inv(1, 1).is_one());
  CHECK((inv * a).is_identity());
  CHECK((a * inv).is_identity());
}

TEST_CASE("canonical form of rational functions") {
  const auto& f = CycField::get(4);
  const CycNum one(f, Rational(1));
  const CycNum i = CycNum::zeta(f, 1);
  // (z^2 + 1) / (z - i) = z + i
  const Poly num(f, {one, CycNum(f), one});
  const Poly den = Poly::linear(one, -i);
  const RatFun q(num, den);
  CHECK(q.is_polynomial());
  CHECK(q.num() == Poly::linear(one, i));
  // den made monic
  const RatFun h(Poly::constant(one), Poly::linear(CycNum(f, Rational(2)), one));
  CHECK(h.den().lead().is_one());
  CHECK(h.num().coeff(0) == CycNum(f, Rational(1, 2)));
  CHECK_THROWS_AS(RatFun(num, Poly(f)), DomainError);
}

TEST_CASE("poly gcd divides both inputs and is monic") {
  std::mt19937_64 rng(3);
  const auto& f = CycField::get(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly common = random_poly(f, rng, 2);
    const Poly a = random_poly(f, rng, 3) * common;
    const Poly b = random_poly(f, rng, 3) * common;
    const Poly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(g.lead().is_one());
    CHECK(Poly::divmod(a, g).second.is_zero());
    CHECK(Poly::divmod(b, g).second.is_zero());
    if (!common.is_zero()) CHECK(Poly::divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(5);
  const auto& f = CycField::get(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const RatMat a = random_ratmat(f, rng, n);
      const RatMat b = random_ratmat(f, rng, n);
      CHECK((a * b).det() == a.det() * b.det());
    }
  }
}

TEST_CASE("inverse by elimination above 3x3") {
  std::mt19937_64 rng(9);
  const auto& f = CycField::get(4);
  for (std::size_t n : {2U, 3U, 4U, 5U}) {
    RatMat a = random_ratmat(f, rng, n);
    if (a.det().is_zero()) continue;
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.rank() == n);
  }
  RatMat s(f, 4, 4);
  CHECK_THROWS_AS(s.inverse(), DomainError);
  CHECK(s.rank() == 0);
}

TEST_CASE("composition respects Moebius products") {
  std::mt19937_64 rng(13);
  const auto& f = CycField::get(6);
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  const SL2Elem g1(CycNum::zeta(f, 1), zero, zero, CycNum::zeta(f, -1));
  const SL2Elem g2(zero, one, -one, zero);
  const SL2Elem g3(one, CycNum(f, Rational(2)), zero, one);
  for (int trial = 0; trial < 5; ++trial) {
    const RatMat a = random_ratmat(f, rng, 2);
    for (const auto& [m1, m2] : {std::pair{g1, g2}, std::pair{g2, g3}, std::pair{g3, g1}}) {
      CHECK(compose(compose(a, m1), m2) == compose(a, m1 * m2));
    }
  }
}

#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "eqb/cyclotomic.hpp"
#include "eqb/errors.hpp"
#include "support.hpp"

using namespace eqb;

TEST_CASE("rational promotes to big integers and back") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  CHECK(sq.num_str() == "85070591730234615847396907784232501249");
  CHECK((sq / big) == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK(Rational::parse("-12", "8") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("x", "1"), FormatError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(CycField::get(20).degree() == 8);
  CHECK(&CycField::get(7) == &CycField::get(7));
}

TEST_CASE("named values") {
  const auto& f4 = CycField::get(4);
  CHECK(CycNum::zeta(f4, 1) * CycNum::zeta(f4, 1) == CycNum(f4, Rational(-1)));

  const auto& f3 = CycField::get(3);
  const CycNum one(f3, Rational(1));
  const CycNum prod = (one + CycNum::zeta(f3, 1)) * (one + CycNum::zeta(f3, 2));
  CHECK(prod.is_one());
  CHECK(std::abs(prod.embed() - std::complex<double>(1.0, 0.0)) <= 1e-12);
  // independent route: evaluate both factors numerically
  const auto w = std::polar(1.0, 2.0 * M_PI / 3.0);
  CHECK(std::abs((1.0 + w) * (1.0 + w * w) - prod.embed()) <= 1e-12);

  const auto& f8 = CycField::get(8);
  CHECK(CycNum::zeta(f8, 1).inverse() == CycNum::zeta(f8, 7));
  CHECK(CycNum::zeta(f8, -1) == CycNum::zeta(f8, 7));
}

TEST_CASE("errors") {
  const auto& f4 = CycField::get(4);
  const auto& f3 = CycField::get(3);
  CHECK_THROWS_AS(CycNum(f4).inverse(), DomainError);
  CHECK_THROWS_AS((void)(CycNum::zeta(f4, 1) + CycNum::zeta(f3, 1)), FormatError);
  CHECK_THROWS_AS((void)(CycNum::zeta(f4, 1) / CycNum(f4)), DomainError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int n : {3, 4, 5, 8, 12, 20}) {
    const auto& f = CycField::get(n);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = test::random_cyc(f, rng);
      const CycNum b = test::random_cyc(f, rng);
      const CycNum c = test::random_cyc(f, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a.conj().conj() == a);
      const auto norm = (a * a.conj()).embed();
      CHECK(std::abs(norm.imag()) <= 1e-9 * (1.0 + std::abs(norm.real())));
      CHECK(norm.real() >= -1e-9);
      CHECK(std::abs(a.conj().embed() - std::conj(a.embed())) <= 1e-9 * (1.0 + std::abs(a.embed())));
    }
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(11);
  const auto& f = CycField::get(12);
  std::uniform_int_distribution<int> count(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = count(rng);
    CycNum prod(f, Rational(1));
    std::complex<double> approx = 1.0;
    for (int i = 0; i < k; ++i) {
      // numerators bounded by denominators (both <= 100) so |factor| <= phi(N)
      std::vector<Rational> c;
      std::uniform_int_distribution<int> den(1, 100);
      for (int j = 0; j < f.degree(); ++j) {
        const int d = den(rng);
        c.emplace_back(std::uniform_int_distribution<int>(-d, d)(rng), d);
      }
      const CycNum x(f, std::move(c));
      prod = prod * x;
      approx *= x.embed();
    }
    CHECK(std::abs(prod.embed() - approx) <= 1e-10);
  }
}

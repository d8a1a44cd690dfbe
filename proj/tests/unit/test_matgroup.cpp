#include <numeric>

#include "doctest.h"
#include "eqb/errors.hpp"
#include "eqb/matgroup.hpp"
#include "eqb/sampling.hpp"
#include "../oracles/oracles.hpp"

using namespace eqb;

namespace {

GroupPtr make(const CatalogEntry& c, bool projective = false) {
  return MatrixGroup::generate(c.generators.front().field(), c.generators, 240, projective);
}

std::vector<CycMatrix> matrices(const std::vector<SL2Elem>& v) {
  std::vector<CycMatrix> out;
  for (const auto& x : v) out.push_back(x.matrix());
  return out;
}

GroupPtr quaternion() {
  const auto& f = CycField::get(4);
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  const CycNum i = CycNum::zeta(f, 1);
  return MatrixGroup::generate(f, {SL2Elem(i, zero, zero, -i), SL2Elem(zero, one, -one, zero)}, 240);
}

}  // namespace

TEST_CASE("generation examples") {
  const auto& f = CycField::get(6);
  CHECK(MatrixGroup::generate(f, {SL2Elem::identity(f)}, 240)->order() == 1);
  const CycNum z = CycNum::zeta(f, 1);
  const CycNum zero(f);
  CHECK(MatrixGroup::generate(f, {SL2Elem(z, zero, zero, z.inverse())}, 240)->order() == 6);

  const GroupPtr q8 = quaternion();
  REQUIRE(q8->order() == 8);
  CHECK(oracle::closure(matrices(q8->generators())).size() == 8);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) CHECK(q8->element(q8->mul(a, b)) == q8->element(a) * q8->element(b));
    CHECK(q8->mul(a, q8->inverse(a)) == 0);
  }
  CHECK(q8->element(0).is_identity());
}

TEST_CASE("closure cap and determinant") {
  const auto& f = CycField::get(4);
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  // a unipotent element generates an infinite group
  CHECK_THROWS_AS(MatrixGroup::generate(f, {SL2Elem(one, one, zero, one)}, 240), DomainError);
  CHECK_THROWS_AS(SL2Elem(one, one, one, one), DomainError);
}

TEST_CASE("catalog orders agree with the closure oracle") {
  struct Case {
    Family family;
    int n;
  };
  for (const Case c : {Case{Family::cyclic, 1}, Case{Family::cyclic, 5}, Case{Family::cyclic, 6},
                       Case{Family::binary_dihedral, 2}, Case{Family::binary_dihedral, 3},
                       Case{Family::binary_dihedral, 5}, Case{Family::binary_tetrahedral, 0},
                       Case{Family::binary_octahedral, 0}, Case{Family::binary_icosahedral, 0}}) {
    const CatalogEntry e = catalog(c.family, c.n);
    const GroupPtr g = make(e);
    CAPTURE(family_name(c.family));
    CAPTURE(c.n);
    CHECK(g->order() == e.order);
    CHECK(oracle::closure(matrices(e.generators)).size() == e.order);

    const CatalogEntry p = pgl_catalog(c.family, c.n);
    CHECK(make(p, true)->order() == p.order);
    CHECK(oracle::closure(matrices(p.generators), true).size() == p.order);
  }
  CHECK(catalog(Family::cyclic, 5).modulus == 10);
  CHECK(catalog(Family::binary_icosahedral, 0).modulus == 20);
}

TEST_CASE("conjugacy classes") {
  const auto& f = CycField::get(2);
  CHECK(MatrixGroup::generate(f, {SL2Elem::identity(f)}, 240)->classes().size() == 1);
  const GroupPtr q8 = quaternion();
  CHECK(q8->classes().size() == 5);
  CHECK(oracle::class_count(matrices(q8->elements())) == 5);
  for (int n : {3, 4, 7}) CHECK(make(catalog(Family::cyclic, n))->classes().size() == static_cast<std::size_t>(n));
  for (Family fam : {Family::binary_tetrahedral, Family::binary_octahedral}) {
    const GroupPtr g = make(catalog(fam, 0));
    CHECK(g->classes().size() == oracle::class_count(matrices(g->elements())));
  }
  // classes partition the group and the identity is alone
  const GroupPtr g = make(catalog(Family::binary_dihedral, 3));
  std::size_t total = 0;
  for (const auto& cls : g->classes()) total += cls.size();
  CHECK(total == g->order());
  CHECK(g->classes()[g->class_of(0)].size() == 1);
}

TEST_CASE("multiplication tables are associative") {
  for (Family fam : {Family::binary_tetrahedral, Family::binary_dihedral}) {
    const GroupPtr g = make(catalog(fam, 3));
    if (g->order() > 24) continue;
    for (std::size_t a = 0; a < g->order(); ++a) {
      for (std::size_t b = 0; b < g->order(); ++b) {
        for (std::size_t c = 0; c < g->order(); ++c) {
          REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
        }
      }
    }
  }
  const GroupPtr g = make(catalog(Family::binary_icosahedral, 0));
  Rng rng(17);
  const int n = static_cast<int>(g->order()) - 1;
  for (int t = 0; t < 10000; ++t) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, n));
    const auto b = static_cast<std::size_t>(rng.uniform(0, n));
    const auto c = static_cast<std::size_t>(rng.uniform(0, n));
    REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
  }
}

TEST_CASE("characters") {
  const GroupPtr q8 = quaternion();
  for (const auto& v : character(Representation::trivial(q8))) CHECK(v.is_one());
  const auto std_chi = character(Representation::standard(q8));
  CHECK(std_chi[q8->class_of(*q8->minus_identity())] == CycNum(q8->field(), Rational(-2)));

  const GroupPtr c3 = make(catalog(Family::cyclic, 3));
  const auto reg = character(Representation::regular(c3));
  CHECK(reg[c3->class_of(0)] == CycNum(c3->field(), Rational(3)));
  for (std::size_t i = 1; i < 3; ++i) CHECK(reg[c3->class_of(i)].is_zero());

  // constant on classes
  for (Family fam : {Family::binary_tetrahedral, Family::binary_dihedral}) {
    const GroupPtr g = make(catalog(fam, 4));
    for (const auto& r : {Representation::standard(g), Representation::symmetric_power(g, 2),
                          Representation::regular(g)}) {
      for (const auto& cls : g->classes()) {
        for (std::size_t i : cls) CHECK(r.image(i).trace() == r.image(cls[0]).trace());
      }
    }
  }
}

TEST_CASE("module isomorphism") {
  Rng rng(4);
  const GroupPtr g = make(catalog(Family::binary_dihedral, 3));
  const Representation s = Representation::standard(g);
  const Representation sym = Representation::symmetric_power(g, 2);
  CHECK(module_isomorphic(s, s.conjugated(random_invertible(g->field(), 2, rng))));
  CHECK(module_isomorphic(direct_sum(s, sym), direct_sum(sym, s)));
  CHECK_FALSE(module_isomorphic(s, Representation::trivial(g, 2)));

  const GroupPtr c2 = make(catalog(Family::cyclic, 2));
  const auto chars = linear_characters(c2);
  REQUIRE(chars.size() == 2);
  CHECK_FALSE(module_isomorphic(chars[0], chars[1]));

  // the abelianization of the order-12 group is Z/4, whose characters need i
  CHECK(linear_characters(g).size() == 2);
  CHECK(linear_characters(make(catalog(Family::binary_dihedral, 3, CycField::get(12)))).size() == 4);
  CHECK_THROWS_AS(Representation::from_generators(g, {CycMatrix::identity(g->field(), 1),
                                                       CycMatrix::identity(g->field(), 1).scaled(
                                                           CycNum(g->field(), Rational(2)))}),
                  DomainError);
}

TEST_CASE("reynolds operator") {
  const GroupPtr q8 = quaternion();
  CHECK(reynolds(Representation::trivial(q8, 3)).is_identity());
  CHECK(reynolds(Representation::standard(q8)).is_zero());

  const GroupPtr c2 = make(catalog(Family::cyclic, 2));
  const CycMatrix p = reynolds(Representation::regular(c2));
  CHECK(p * p == p);
  CHECK(p.rank() == 1);
  CHECK(p.trace().is_one());

  Rng rng(8);
  const GroupPtr g = make(catalog(Family::binary_tetrahedral, 0));
  const Representation r = direct_sum(Representation::symmetric_power(g, 2), Representation::trivial(g))
                               .conjugated(random_invertible(g->field(), 4, rng));
  const CycMatrix q = reynolds(r);
  CHECK(q * q == q);
  CHECK(q.rank() == 1);
  for (const auto& m : r.images()) CHECK(m * q == q * m);
}

TEST_CASE("orthogonality of constituents found by the decomposition oracle") {
  std::vector<GroupPtr> groups;
  for (int n : {2, 3, 4, 6}) groups.push_back(make(catalog(Family::cyclic, n)));
  // characters of the binary dihedral groups need i as well as zeta_2n
  for (int n : {2, 3}) groups.push_back(make(catalog(Family::binary_dihedral, n, CycField::get(std::lcm(2 * n, 4)))));
  for (const auto& g : groups) {
    const Representation reg = Representation::regular(g);
    const auto chars = oracle::constituent_characters(reg);
    // the regular representation contains every irreducible, one per class
    CHECK(chars.size() == g->classes().size());
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        const CycNum ip = oracle::inner_product(chars[a], chars[b]);
        if (a == b) {
          CHECK(ip.is_one());
        } else {
          CHECK(ip.is_zero());
        }
      }
    }
  }
}

#include "doctest.h"
#include "eqb/equivariant.hpp"
#include "eqb/moebius.hpp"
#include "../oracles/oracles.hpp"

using namespace eqb;

namespace {

RatFun mono(const CycField& f, int k, std::int64_t c = 1) { return RatFun::monomial(CycNum(f, Rational(c)), k); }

RatMat diag(const CycField& f, std::vector<int> d) {
  std::vector<RatFun> v;
  for (int k : d) v.push_back(mono(f, k));
  return RatMat::diagonal(v);
}

ActingGroupPtr linear_cyclic(int n) {
  const auto c = catalog(Family::cyclic, n);
  return ActingGroup::linear(MatrixGroup::generate(CycField::get(c.modulus), c.generators, 240));
}

ActingGroupPtr swap_group() {
  const auto& f = CycField::get(4);
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  return ActingGroup::projective(MatrixGroup::generate(f, {SL2Elem(zero, one, -one, zero)}, 240, true));
}

// Direct sum of natural structures O(d_i).
EquivariantBundle natural_sum(const ActingGroupPtr& g, const std::vector<int>& degrees) {
  const CycField& f = g->field();
  std::vector<RatMat> acts;
  for (std::size_t k = 0; k < g->group()->generators().size(); ++k) {
    std::vector<RatFun> d;
    for (int n : degrees) d.push_back(automorphy_factor(g->lift(n, g->group()->generator_index(k)), n));
    acts.push_back(RatMat::diagonal(d));
  }
  return EquivariantBundle(TransitionCocycle(diag(f, degrees)), g, std::move(acts));
}

std::vector<CycNum> values(const Representation& r) { return character(r); }

}  // namespace

TEST_CASE("natural structures validate") {
  const auto c4 = linear_cyclic(4);
  const auto o1 = natural_structure(1, c4);
  CHECK(validate_equivariance(o1).valid);
  const auto minus = c4->group()->minus_identity();
  REQUIRE(minus);
  CHECK(o1.action(*minus)(0, 0) == RatFun::constant(-CycNum(c4->field(), Rational(1))));
  CHECK(validate_equivariance(natural_structure(0, c4)).valid);
  CHECK(validate_equivariance(natural_structure(-3, c4)).valid);

  const auto h = swap_group();
  const auto o2 = natural_structure(2, h);
  CHECK(validate_equivariance(o2).valid);
  // both lifts of the swap give the same factor in even degree
  const auto& f = h->field();
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  CHECK(automorphy_factor(SL2Elem(zero, one, -one, zero), 2) == automorphy_factor(SL2Elem(zero, -one, one, zero), 2));
  CHECK_THROWS_AS(natural_structure(1, h), DomainError);
}

TEST_CASE("corrupted actions are reported") {
  const auto c4 = linear_cyclic(4);
  const auto& f = c4->field();
  const auto o1 = natural_structure(1, c4);

  // scaling the generator by 2 breaks g^4 = e
  std::vector<RatMat> twice{o1.generator_actions()[0].scaled(RatFun::constant(CycNum(f, Rational(2))))};
  const auto bad = validate_equivariance(EquivariantBundle(o1.base(), c4, twice));
  CHECK_FALSE(bad.valid);
  bool cocycle = false;
  for (const auto& i : bad.issues) cocycle = cocycle || i.kind == Violation::cocycle;
  CHECK(cocycle);

  // (-1)^4 = 1: a sign on the generator of C4 is another valid structure
  std::vector<RatMat> negated{o1.generator_actions()[0].scaled(RatFun::constant(CycNum(f, Rational(-1))))};
  CHECK(validate_equivariance(EquivariantBundle(o1.base(), c4, negated)).valid);

  // a pole away from where g.z = infinity
  std::vector<RatMat> pole{o1.generator_actions()[0].scaled(mono(f, -1))};
  CHECK_FALSE(validate_equivariance(EquivariantBundle(o1.base(), c4, pole)).valid);
}

TEST_CASE("automorphisms and frame changes preserve validity") {
  const auto c4 = linear_cyclic(4);
  const auto& f = c4->field();
  const auto e = natural_sum(c4, {2, 0, -1});
  REQUIRE(validate_equivariance(e).valid);

  RatMat phi = RatMat::identity(f, 3);
  phi(0, 1) = RatFun(Poly::linear(CycNum(f, Rational(3)), CycNum::zeta(f, 1)));
  phi(1, 2) = mono(f, 1, -2);
  phi(0, 2) = mono(f, 3);
  const auto twisted = apply_automorphism(e, phi);
  CHECK(twisted.base().matrix() == e.base().matrix());
  CHECK(validate_equivariance(twisted).valid);

  RatMat a = RatMat::identity(f, 3);
  a(1, 0) = mono(f, 2);
  RatMat b = RatMat::identity(f, 3);
  b(0, 2) = mono(f, -1, 5);
  const auto moved = change_frame(twisted, a, b);
  CHECK(validate_equivariance(moved).valid);
  CHECK(splitting_type(moved.base()) == std::vector<int>{2, 0, -1});
  CHECK(check_hn_invariance(moved).invariant);
}

TEST_CASE("HN invariance") {
  const auto c4 = linear_cyclic(4);
  const auto& f = c4->field();
  const auto e = natural_sum(c4, {3, -1});
  CHECK(check_hn_invariance(e).invariant);
  CHECK(check_hn_invariance(natural_sum(c4, {1, 1})).invariant);

  std::vector<RatMat> corrupted = e.generator_actions();
  corrupted[0](1, 0) = mono(f, 0);
  const auto bad = check_hn_invariance(EquivariantBundle(e.base(), c4, corrupted));
  CHECK_FALSE(bad.invariant);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0] == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("averaging a splitting") {
  const auto h = swap_group();
  const auto& f = h->field();
  const auto e = natural_sum(h, {2, 0});

  RatMat psi(f, 2, 1);
  psi(1, 0) = mono(f, 0);
  const auto same = equivariant_splitting(e, 1, psi);
  CHECK(same.averaged == psi);
  CHECK(same.is_section);
  CHECK(same.equivariant);
  CHECK(same.holomorphic);

  // z is a holomorphic splitting component, but not an equivariant one
  psi(0, 0) = mono(f, 1);
  const auto avg = equivariant_splitting(e, 1, psi);
  CHECK_FALSE(avg.averaged == psi);
  CHECK(avg.is_section);
  CHECK(avg.equivariant);
  CHECK(avg.holomorphic);
  for (std::size_t i = 0; i < e.group().order(); ++i) {
    CHECK(e.action(i) * avg.averaged == compose(avg.averaged, e.group().element(i)) * e.action(i).block(1, 1, 1, 1));
  }

  const auto trivial = ActingGroup::linear(MatrixGroup::generate(f, {SL2Elem::identity(f)}, 240));
  const auto t = natural_sum(trivial, {2, 0});
  CHECK(equivariant_splitting(t, 1, psi).averaged == psi);

  RatMat bad_psi(f, 2, 1);
  bad_psi(1, 0) = mono(f, 0, 2);
  CHECK_THROWS_AS(equivariant_splitting(e, 1, bad_psi), DomainError);
  psi(0, 0) = mono(f, 3);
  CHECK_THROWS_AS(equivariant_splitting(e, 1, psi), DomainError);
}

TEST_CASE("module extraction") {
  const auto c4 = linear_cyclic(4);
  const auto m = extract_module(natural_structure(1, c4), 1);
  CHECK(m.certificate.isomorphism);
  CHECK(m.certificate.equivariant);
  CHECK(module_isomorphic(m.module, Representation::trivial(c4->group())));

  const auto c3 = linear_cyclic(3);
  const auto reg = Representation::regular(c3->group());
  std::vector<RatMat> acts;
  for (const auto& x : reg.generator_images()) acts.push_back(RatMat::from_constant(x));
  const EquivariantBundle w(TransitionCocycle(RatMat::identity(c3->field(), 3)), c3, acts);
  const auto r = extract_module(w, 0);
  const auto chi = values(r.module);
  const CycField& f3 = c3->field();
  for (std::size_t k = 0; k < chi.size(); ++k) {
    const bool identity_class = c3->group()->classes()[k].front() == 0;
    CHECK(chi[k] == CycNum(f3, Rational(identity_class ? 3 : 0)));
  }
  CHECK(oracle::constituent_characters(r.module).size() == 3);

  const auto h = swap_group();
  const GroupPtr pre = h->module_group(1);
  CHECK(pre->order() == 4);
  const auto std2 = Representation::standard(pre);
  const auto w2 = build_from_canonical(CanonicalForm{h, {{1, Parity::odd_twist, std2}}});
  CHECK(validate_equivariance(w2).valid);
  const auto n = extract_module(w2, 1);
  CHECK(n.module.dim() == 2);
  CHECK(n.module.group() == pre);
  CHECK(n.module.image(*pre->minus_identity()).is_scalar(-CycNum(h->field(), Rational(1))));
  CHECK(module_isomorphic(n.module, std2));

  CHECK_THROWS_AS(extract_module(natural_sum(c4, {1, 0}), 1), DomainError);
}

TEST_CASE("classification of simple structures") {
  for (int n : {2, 3, 4, 6}) {
    const auto g = linear_cyclic(n);
    for (int d = -3; d <= 3; ++d) {
      const auto c = classify(natural_structure(d, g));
      REQUIRE(c.form.entries.size() == 1);
      CHECK(c.form.entries[0].degree == d);
      CHECK(module_isomorphic(c.form.entries[0].module, Representation::trivial(g->group())));
    }
  }

  const auto c4 = linear_cyclic(4);
  const auto& f = c4->field();
  const auto e = natural_sum(c4, {2, 0, -1, 0});
  RatMat phi = RatMat::identity(f, 4);
  phi(0, 1) = mono(f, 2, 3);
  phi(0, 2) = mono(f, 3);
  phi(1, 2) = mono(f, 1);
  phi(3, 1) = mono(f, 0, 2);
  RatMat a = RatMat::identity(f, 4);
  a(3, 0) = mono(f, 1);
  RatMat b = RatMat::identity(f, 4);
  b(1, 3) = mono(f, -2);
  const auto twisted = change_frame(apply_automorphism(e, phi), a, b);
  const auto c = classify(twisted);
  CHECK(c.factorization_verified);
  CHECK(c.invariance.invariant);
  REQUIRE(c.form.entries.size() == 3);
  CHECK(c.form.entries[0].degree == 2);
  CHECK(c.form.entries[1].degree == 0);
  CHECK(c.form.entries[1].module.dim() == 2);
  CHECK(c.form.entries[2].degree == -1);
  CHECK(c.stages.size() == 2);
  for (const auto& s : c.stages) {
    CHECK(s.splitting.is_section);
    CHECK(s.splitting.equivariant);
    CHECK(s.splitting.holomorphic);
  }
  CHECK(same_canonical_form(c.form, classify(e).form));
  CHECK(equiv_isomorphic(e, twisted));
}

TEST_CASE("building from canonical forms") {
  const auto c3 = linear_cyclic(3);
  const auto trivial = build_from_canonical(CanonicalForm{c3, {{0, Parity::plain, Representation::trivial(c3->group())}}});
  CHECK(trivial.base().matrix().is_identity());
  CHECK(trivial.generator_actions()[0].is_identity());

  const auto h = swap_group();
  const GroupPtr pre = h->module_group(1);
  const auto triv_pre = Representation::trivial(pre);
  CHECK_THROWS_AS(build_from_canonical(CanonicalForm{h, {{1, Parity::odd_twist, triv_pre}}}), DomainError);
  CHECK_THROWS_AS(build_from_canonical(CanonicalForm{h, {{1, Parity::plain, Representation::trivial(h->group())}}}),
                  DomainError);
  CHECK_THROWS_AS(build_from_canonical(CanonicalForm{h, {{2, Parity::odd_twist, Representation::standard(pre)}}}),
                  DomainError);
  CHECK_THROWS_AS(build_from_canonical(CanonicalForm{c3, {{1, Parity::odd_twist, Representation::trivial(c3->group())}}}),
                  DomainError);

  const auto sign = linear_characters(h->group());
  REQUIRE(sign.size() == 2);
  const auto mixed = build_from_canonical(
      CanonicalForm{h, {{2, Parity::plain, direct_sum(sign[0], sign[1])}, {1, Parity::odd_twist, Representation::standard(pre)}}});
  CHECK(mixed.rank() == 4);
  CHECK(validate_equivariance(mixed).valid);
  const auto c = classify(mixed);
  REQUIRE(c.form.entries.size() == 2);
  CHECK(c.form.entries[1].parity == Parity::odd_twist);
  CHECK(odd_twist_valid(c.form.entries[1].module));

  // O(1) (x) (2-dim module) against O(1)^2 with the trivial action
  const auto chars = linear_characters(c3->group());
  const auto a = build_from_canonical(CanonicalForm{c3, {{1, Parity::plain, direct_sum(chars[0], chars[1])}}});
  const auto b = build_from_canonical(CanonicalForm{c3, {{1, Parity::plain, Representation::trivial(c3->group(), 2)}}});
  CHECK(equiv_isomorphic(a, a));
  CHECK_FALSE(equiv_isomorphic(a, b));
}

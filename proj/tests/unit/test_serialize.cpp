#include <numeric>

#include "doctest.h"
#include "eqb/errors.hpp"
#include "eqb/planting.hpp"
#include "eqb/suites.hpp"

using namespace eqb;

namespace {

ActingGroupPtr linear(Family fam, int n) {
  const auto& f = CycField::get(std::lcm(catalog_modulus(fam, n), 4));
  return ActingGroup::linear(MatrixGroup::generate(f, catalog(fam, n, f).generators, 240));
}

ActingGroupPtr projective(Family fam, int n) {
  const auto& f = CycField::get(std::lcm(catalog_modulus(fam, n), 4));
  return ActingGroup::projective(MatrixGroup::generate(f, pgl_catalog(fam, n, f).generators, 240, true));
}

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("scalars") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(rational_from_json(Json("6/-8")) == Rational(-3, 4));
  CHECK(int_from_json(Json(7)) == 7);
  CHECK(int_from_json(Json("-7")) == -7);
  CHECK_THROWS_AS(int_from_json(Json("1/2")), FormatError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), FormatError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), FormatError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), FormatError);

  const auto& f4 = CycField::get(4);
  const auto& f12 = CycField::get(12);
  const CycNum i = CycNum::zeta(f4, 1);
  CHECK(cyc_from_json(to_json(i), 4, f4) == i);
  CHECK(cyc_from_json(to_json(i), 4, f12) == CycNum::zeta(f12, 3));
  CHECK_THROWS_AS(cyc_from_json(to_json(i), 4, CycField::get(6)), FormatError);
  CHECK_THROWS_AS(cyc_from_json(Json::array({"1"}), 4, f4), FormatError);

  const RatFun r = RatFun(Poly::linear(i, CycNum(f4, Rational(2)))) / RatFun(Poly::monomial(CycNum(f4, Rational(1)), 3));
  CHECK(ratfun_from_json(reparse(to_json(r)), 4, f4) == r);
  const Json poly = to_json(RatFun(Poly::linear(i, i)));
  CHECK(poly.find("den") == poly.end());
  CHECK_THROWS_AS(ratmat_from_json(Json::parse(R"([[{"num": [["1", "0"]]}], []])"), 4, f4), FormatError);
}

TEST_CASE("group and cocycle files") {
  const auto g = projective(Family::binary_dihedral, 3);
  const Json j = reparse(group_to_json(*g->group()));
  CHECK(j.at("pgl").get<bool>());
  const GroupPtr back = group_from_json(j, ReadOptions{});
  CHECK(back->order() == g->group()->order());
  CHECK(back->projective());

  ReadOptions big;
  big.modulus_override = 24;
  CHECK(group_from_json(j, big)->field().modulus() == 24);
  ReadOptions bad;
  bad.modulus_override = 10;
  CHECK_THROWS_AS(group_from_json(j, bad), FormatError);
  ReadOptions tiny;
  tiny.max_order = 3;
  CHECK_THROWS_AS(group_from_json(j, tiny), DomainError);

  Json empty = j;
  empty["generators"] = Json::array();
  CHECK_THROWS_AS(group_from_json(empty, ReadOptions{}), FormatError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"pgl": false})"), ReadOptions{}), FormatError);

  Rng rng(5);
  const PlantedCocycle p = random_planted_cocycle(CycField::get(12), 3, -2, 2, 2, rng);
  const TransitionCocycle t(p.transition);
  const TransitionCocycle t2 = cocycle_from_json(reparse(cocycle_to_json(t)), ReadOptions{});
  CHECK(t2.matrix() == t.matrix());
  const Json fac = reparse(factorization_to_json(birkhoff_factor(t)));
  CHECK(verify_factorization(t, factorization_from_json(fac, 12, CycField::get(12))));
}

TEST_CASE("bundle and canonical form files") {
  Rng rng(11);
  for (const auto& g : {linear(Family::binary_dihedral, 2), projective(Family::cyclic, 2), projective(Family::cyclic, 3)}) {
    for (int k = 0; k < 4; ++k) {
      const CanonicalForm cf = random_canonical_form(g, FormShape{}, rng);
      const CanonicalForm cf2 = canonical_form_from_json(reparse(canonical_form_to_json(cf)), g);
      CHECK(same_canonical_form(cf, cf2));

      const CanonicalForm cf3 = canonical_form_from_json(reparse(canonical_form_to_json(cf)), ReadOptions{});
      REQUIRE(cf3.entries.size() == cf.entries.size());
      for (std::size_t i = 0; i < cf.entries.size(); ++i) {
        CHECK(cf3.entries[i].degree == cf.entries[i].degree);
        CHECK(cf3.entries[i].parity == cf.entries[i].parity);
        CHECK(cf3.entries[i].module.dim() == cf.entries[i].module.dim());
      }

      const EquivariantBundle e = random_twist(build_from_canonical(cf), 2, 1, rng);
      const EquivariantBundle e2 = bundle_from_json(reparse(bundle_to_json(e)), g);
      CHECK(e2.base().matrix() == e.base().matrix());
      CHECK(e2.generator_actions() == e.generator_actions());
      CHECK(same_canonical_form(classify(e2).form, cf));
    }
  }
}

TEST_CASE("modulus override") {
  const auto c4 = linear(Family::cyclic, 4);
  const CanonicalForm cf{c4, {{2, Parity::plain, Representation::regular(c4->group())}}};
  const Json j = reparse(bundle_to_json(build_from_canonical(cf)));
  ReadOptions o;
  o.modulus_override = 24;
  const EquivariantBundle e = bundle_from_json(j, o);
  CHECK(e.base().field().modulus() == 24);
  const Classification c = classify(e);
  REQUIRE(c.form.entries.size() == 1);
  CHECK(c.form.entries[0].degree == 2);
  CHECK(c.form.entries[0].module.dim() == 4);
}

TEST_CASE("malformed bundles") {
  const auto c3 = linear(Family::cyclic, 3);
  const CanonicalForm cf{c3, {{1, Parity::plain, Representation::trivial(c3->group(), 2)}}};
  const Json good = reparse(bundle_to_json(build_from_canonical(cf)));
  Json missing = good;
  missing["action"].erase("0");
  CHECK_THROWS_AS(bundle_from_json(missing, ReadOptions{}), FormatError);
  Json noBase = good;
  noBase.erase("base");
  CHECK_THROWS_AS(bundle_from_json(noBase, ReadOptions{}), FormatError);
  Json ragged = good;
  ragged["base"]["transition"][0].erase(0);
  CHECK_THROWS_AS(bundle_from_json(ragged, ReadOptions{}), FormatError);
  CHECK_THROWS_AS(bundle_from_json(Json::parse("[1, 2]"), ReadOptions{}), FormatError);

  Json oddLinear = reparse(canonical_form_to_json(cf));
  oddLinear["entries"][0]["parity"] = "odd_twist";
  CHECK_THROWS_AS(canonical_form_from_json(oddLinear, ReadOptions{}), DomainError);
  Json badParity = reparse(canonical_form_to_json(cf));
  badParity["entries"][0]["parity"] = "even";
  CHECK_THROWS_AS(canonical_form_from_json(badParity, ReadOptions{}), FormatError);
}

TEST_CASE("classification reports re-verify and detect tampering") {
  Rng rng(3);
  const auto g = linear(Family::cyclic, 4);
  const auto& f = g->field();
  const CanonicalForm cf{g,
                         {{2, Parity::plain, Representation::trivial(g->group())},
                          {0, Parity::plain, Representation::regular(g->group())}}};
  const EquivariantBundle e = random_twist(build_from_canonical(cf), 2, 1, rng);
  const Classification c = classify(e);
  const Json report = reparse(classification_to_json(e, c));
  CHECK(reverify_classification(report).ok());

  Json badTransition = report;
  badTransition["certificates"]["transition"][0][0] = to_json(RatFun::constant(CycNum(f, Rational(7))));
  CHECK_FALSE(reverify_classification(badTransition).factorization);

  REQUIRE(report["certificates"]["stages"].size() == 1);
  Json badStage = report;
  auto& avg = badStage["certificates"]["stages"][0]["splitting"]["averaged"];
  avg[0][0] = to_json(RatFun(Poly::monomial(CycNum(f, Rational(1)), 1)) + ratfun_from_json(avg[0][0], f.modulus(), f));
  CHECK_FALSE(reverify_classification(badStage).stages);

  Json badEval = report;
  badEval["certificates"]["extractions"][0]["evaluation"][0][0] = to_json(RatFun(Poly::monomial(CycNum(f, Rational(1)), 1)));
  CHECK_FALSE(reverify_classification(badEval).extractions);

  CHECK_FALSE(reverify_classification(Json::parse("{}")).ok());
}

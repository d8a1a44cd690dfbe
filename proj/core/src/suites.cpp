#include "eqb/suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eqb/errors.hpp"
#include "eqb/moebius.hpp"
#include "eqb/planting.hpp"
#include "eqb/sampling.hpp"
#include "eqb/sections.hpp"

namespace eqb {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t suite, std::uint64_t part) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + suite * 0xBF58476D1CE4E5B9ULL + part * 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

GroupInstance linear_instance(std::string name, Family fam, int n, std::size_t max_order) {
  const CycField& f = CycField::get(std::lcm(catalog_modulus(fam, n), fam == Family::binary_dihedral ? 4 : 1));
  return {std::move(name), ActingGroup::linear(MatrixGroup::generate(f, catalog(fam, n, f).generators, max_order))};
}

GroupInstance pgl_instance(std::string name, Family fam, int n, std::size_t max_order) {
  const CatalogEntry c = pgl_catalog(fam, n);
  return {std::move(name), ActingGroup::projective(MatrixGroup::generate(CycField::get(c.modulus), c.generators, max_order, true))};
}

RatMat diag_transition(const CycField& f, const std::vector<int>& d) {
  std::vector<RatFun> v;
  for (int k : d) v.push_back(RatFun::monomial(CycNum(f, Rational(1)), k));
  return RatMat::diagonal(v);
}

bool polynomial_in_inverse_z(const RatMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFun& x = m(i, j);
      if (!x.is_zero() && (!x.is_laurent() || x.laurent_high() > 0)) return false;
    }
  }
  return true;
}

// Checks a stage certificate on every element of the group.
bool check_stage(const Json& stage, int source, const ActingGroupPtr& group) {
  const CycField& f = group->field();
  std::vector<int> d;
  for (const auto& x : stage.at("degrees")) d.push_back(int_from_json(x));
  const auto s = static_cast<std::size_t>(int_from_json(stage.at("sub_rank")));
  const std::size_t n = d.size();
  if (s == 0 || s >= n) return false;
  const std::size_t q = n - s;
  std::vector<RatMat> acts;
  for (const auto& a : stage.at("generator_actions")) acts.push_back(ratmat_from_json(a, source, f));
  const EquivariantBundle e(TransitionCocycle(diag_transition(f, d)), group, std::move(acts));
  const Json& sp = stage.at("splitting");
  const RatMat psi = ratmat_from_json(sp.at("psi"), source, f);
  const RatMat avg = ratmat_from_json(sp.at("averaged"), source, f);
  if (avg.rows() != n || avg.cols() != q || psi.rows() != n || psi.cols() != q) return false;
  if (!avg.block(s, 0, q, q).is_identity() || !psi.block(s, 0, q, q).is_identity()) return false;

  const RatMat tq = e.base().matrix().block(s, s, q, q);
  if (!avg.is_polynomial() || !polynomial_in_inverse_z(e.base().inverse() * avg * tq)) return false;

  const MatrixGroup& g = e.group();
  RatMat sum(f, n, q);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const RatMat& a = e.action(i);
    for (std::size_t r = s; r < n; ++r) {
      for (std::size_t c = 0; c < s; ++c) {
        if (!a(r, c).is_zero()) return false;
      }
    }
    const RatMat zg = a.block(s, s, q, q);
    if (!(a * avg == compose(avg, g.element(i)) * zg)) return false;
    sum = sum + e.inverse_action(i) * compose(psi, g.element(i)) * zg;
  }
  const CycNum inv(f, Rational(1, static_cast<std::int64_t>(g.order())));
  return sum.scaled(RatFun::constant(inv)) == avg;
}

Json degrees_of(const CanonicalForm& cf) {
  Json out = Json::array();
  for (const auto& e : cf.entries) out.push_back(std::to_string(e.degree));
  return out;
}

Json dims_of(const CanonicalForm& cf) {
  Json out = Json::array();
  for (const auto& e : cf.entries) out.push_back(std::to_string(e.module.dim()));
  return out;
}

std::vector<int> expanded_degrees(const CanonicalForm& cf) {
  std::vector<int> out;
  for (const auto& e : cf.entries) out.insert(out.end(), e.module.dim(), e.degree);
  return out;
}

bool stages_hold(const Classification& c) {
  return std::all_of(c.stages.begin(), c.stages.end(), [](const SplitStage& s) {
    return s.splitting.is_section && s.splitting.equivariant && s.splitting.holomorphic;
  });
}

// Classifies a twisted copy of `cf` and checks everything the round trip
// promises, filling `detail`.
bool roundtrip_case(const CanonicalForm& cf, int frame_degree, Rng& rng, std::size_t max_order, Json& detail) {
  detail["degrees"] = degrees_of(cf);
  detail["dims"] = dims_of(cf);
  const EquivariantBundle twisted = random_twist(build_from_canonical(cf), 2, frame_degree, rng);
  const Classification c = classify(twisted);
  const bool recovered = same_canonical_form(c.form, cf);
  const bool consistent = expanded_degrees(c.form) == splitting_type(twisted.base());
  const Json report = Json::parse(classification_to_json(twisted, c).dump());
  ReadOptions ro;
  ro.max_order = max_order;
  const ReverifyResult rv = reverify_classification(report, ro);
  detail["recovered"] = recovered;
  detail["validated"] = c.validation.valid;
  detail["hn_invariant"] = c.invariance.invariant;
  detail["splitting_type_consistent"] = consistent;
  detail["stages"] = std::to_string(c.stages.size());
  detail["stage_identities"] = stages_hold(c);
  detail["certificates_reverified"] = rv.ok();
  bool odd_ok = true;
  for (const auto& e : c.form.entries) {
    if (e.parity == Parity::odd_twist) odd_ok = odd_ok && odd_twist_valid(e.module);
  }
  detail["odd_twist_modules_valid"] = odd_ok;
  return recovered && consistent && c.validation.valid && c.invariance.invariant && stages_hold(c) && rv.ok() && odd_ok;
}

SuiteResult birkhoff_suite(const SuiteOptions& opts) {
  SuiteResult out{"birkhoff", {}};
  const std::size_t n = opts.cases ? opts.cases : 200;
  const CycField& f = CycField::get(12);
  Rng rng(mix(opts.seed, 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    SuiteCase sc{"Q(zeta_12)", i, false, Json::object()};
    const auto rank = static_cast<std::size_t>(rng.uniform(1, 4));
    const PlantedCocycle p = random_planted_cocycle(f, rank, -4, 4, 3, rng);
    std::vector<int> planted = p.degrees;
    std::sort(planted.rbegin(), planted.rend());
    Json pd = Json::array();
    for (int d : planted) pd.push_back(std::to_string(d));
    sc.detail["planted"] = std::move(pd);
    try {
      const TransitionCocycle t(p.transition);
      const BirkhoffFactorization fac = birkhoff_factor(t);
      const bool recovered = fac.degrees == planted;
      const bool exact = fac.product() == t.matrix() && verify_factorization(t, fac);
      bool h0 = true;
      for (int m = -6; m <= 6; ++m) {
        std::size_t expected = 0;
        for (int d : planted) expected += static_cast<std::size_t>(std::max(0, d + m + 1));
        h0 = h0 && h0_dimension(t, m) == expected;
      }
      sc.detail["recovered"] = recovered;
      sc.detail["residual_zero"] = exact;
      sc.detail["h0_agrees"] = h0;
      sc.pass = recovered && exact && h0;
    } catch (const std::runtime_error& e) {
      sc.detail["error"] = e.what();
    }
    out.cases.push_back(std::move(sc));
  }
  return out;
}

SuiteResult roundtrip_suite(const SuiteOptions& opts) {
  SuiteResult out{"roundtrip", {}};
  const std::size_t n = opts.cases ? opts.cases : 100;
  const auto groups = roundtrip_groups(opts.max_order);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    Rng rng(mix(opts.seed, 2, gi));
    for (std::size_t i = 0; i < n; ++i) {
      SuiteCase sc{groups[gi].name, i, false, Json::object()};
      try {
        const CanonicalForm cf = random_canonical_form(groups[gi].group, FormShape{}, rng);
        sc.pass = roundtrip_case(cf, 1, rng, opts.max_order, sc.detail);
      } catch (const std::runtime_error& e) {
        sc.detail["error"] = e.what();
      }
      out.cases.push_back(std::move(sc));
    }
  }
  return out;
}

std::vector<GroupInstance> averaging_groups(std::size_t max_order) {
  auto g = roundtrip_groups(max_order);
  g.push_back(pgl_instance("PGL C2", Family::cyclic, 2, max_order));
  g.push_back(pgl_instance("PGL C3", Family::cyclic, 3, max_order));
  g.push_back(pgl_instance("PGL D4", Family::binary_dihedral, 2, max_order));
  return g;
}

// A two-step extension of O(d2) (x) N by O(d1) (x) M, d1 > d2, presented
// through a random automorphism, and a random holomorphic splitting.
SuiteCase averaging_case(const GroupInstance& gi, std::size_t index, Rng& rng) {
  SuiteCase sc{gi.name, index, false, Json::object()};
  const ActingGroupPtr& g = gi.group;
  const CycField& f = g->field();
  const int d1 = rng.uniform(-2, 3);
  const int d2 = d1 - rng.uniform(1, 3);
  std::vector<CanonicalEntry> entries;
  for (int d : {d1, d2}) {
    const Parity p = g->parity(d);
    entries.push_back({d, p, random_module(module_pool(g->module_group(d), p == Parity::odd_twist), 2, rng)});
  }
  const CanonicalForm cf = normalize(g, std::move(entries));
  sc.detail["degrees"] = degrees_of(cf);
  sc.detail["dims"] = dims_of(cf);
  const EquivariantBundle base = build_from_canonical(cf);
  const EquivariantBundle e = apply_automorphism(base, random_automorphism(base, 2, rng));
  const bool valid = validate_equivariance(e).valid;
  const bool invariant = valid && check_hn_invariance(e).invariant;
  const std::size_t s = cf.entries[0].module.dim();
  const std::size_t q = cf.entries[1].module.dim();
  RatMat psi(f, s + q, q);
  psi.set_block(s, 0, RatMat::identity(f, q));
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < q; ++c) psi(r, c) = RatFun(random_poly(f, std::min(d1 - d2, 2), rng));
  }
  const AveragedSplitting avg = equivariant_splitting(e, s, psi);
  std::vector<int> degrees;
  for (const auto& x : cf.entries) degrees.insert(degrees.end(), x.module.dim(), x.degree);
  const SplitStage stage{degrees, s, e.generator_actions(), avg};
  Json cert = stage_to_json(stage);
  cert["modulus"] = std::to_string(f.modulus());
  const Json parsed = Json::parse(cert.dump());
  const bool reverified = check_stage(parsed, int_from_json(parsed.at("modulus")), g);
  sc.detail["validated"] = valid;
  sc.detail["hn_invariant"] = invariant;
  sc.detail["is_section"] = avg.is_section;
  sc.detail["equivariant"] = avg.equivariant;
  sc.detail["holomorphic"] = avg.holomorphic;
  sc.detail["psi_was_equivariant"] = avg.averaged == psi;
  sc.detail["certificate_reverified"] = reverified;
  sc.pass = valid && invariant && avg.is_section && avg.equivariant && avg.holomorphic && reverified;
  return sc;
}

SuiteResult averaging_suite(const SuiteOptions& opts) {
  SuiteResult out{"averaging", {}};
  const std::size_t n = opts.cases ? opts.cases : 20;
  const auto groups = averaging_groups(opts.max_order);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    Rng rng(mix(opts.seed, 3, gi));
    for (std::size_t i = 0; i < n; ++i) {
      try {
        out.cases.push_back(averaging_case(groups[gi], i, rng));
      } catch (const std::runtime_error& e) {
        SuiteCase sc{groups[gi].name, i, false, Json::object()};
        sc.detail["error"] = e.what();
        out.cases.push_back(std::move(sc));
      }
    }
  }
  return out;
}

bool gamma_is_splitting(const ActingGroup& g) {
  const MatrixGroup& h = *g.group();
  const PGLGroup& p = *g.pgl();
  const auto& lifts = g.gamma()->lifts;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < h.order(); ++i) {
    const auto k = p.preimage->find(lifts[i]);
    if (!k || p.project[*k] != i) return false;
    idx.push_back(*k);
  }
  for (std::size_t i = 0; i < h.order(); ++i) {
    for (std::size_t j = 0; j < h.order(); ++j) {
      if (p.preimage->mul(idx[i], idx[j]) != idx[h.mul(i, j)]) return false;
    }
  }
  return true;
}

SuiteResult parity_suite(const SuiteOptions& opts) {
  SuiteResult out{"parity", {}};
  const std::size_t n = opts.cases ? opts.cases : 3;
  const auto groups = pgl_groups(60);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    Rng rng(mix(opts.seed, 4, gi));
    const ActingGroupPtr& g = groups[gi].group;
    SuiteCase sc{groups[gi].name, 0, false, Json::object()};
    try {
      const bool splits = g->splits();
      const bool complement = complement_exists(*g->pgl());
      sc.detail["order"] = std::to_string(g->group()->order());
      sc.detail["splits"] = splits;
      sc.detail["complement_found"] = complement;
      bool ok = splits == complement;
      if (splits) {
        const bool gamma = gamma_is_splitting(*g);
        const bool o1 = validate_equivariance(natural_structure(1, g)).valid;
        sc.detail["gamma_is_homomorphism"] = gamma;
        sc.detail["odd_natural_structure_valid"] = o1;
        ok = ok && gamma && o1;
      } else {
        bool rejected = true;
        for (int d : {-1, 1, 3}) {
          try {
            build_from_canonical(CanonicalForm{g, {{d, Parity::plain, Representation::trivial(g->group())}}});
            rejected = false;
          } catch (const DomainError&) {
          }
        }
        sc.detail["plain_odd_rejected"] = rejected;
        ok = ok && rejected;
      }
      // Small random forms keep the large groups cheap.
      const FormShape shape{-2, 2, 2, 3};
      std::size_t recovered = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Json d = Json::object();
        if (roundtrip_case(random_canonical_form(g, shape, rng), 0, rng, opts.max_order, d)) ++recovered;
      }
      sc.detail["classified"] = std::to_string(recovered) + "/" + std::to_string(n);
      sc.pass = ok && recovered == n;
    } catch (const std::runtime_error& e) {
      sc.detail["error"] = e.what();
    }
    out.cases.push_back(std::move(sc));
  }
  return out;
}

SuiteResult sections_suite(const SuiteOptions& opts) {
  SuiteResult out{"sections", {}};
  const std::size_t n = opts.cases ? opts.cases : 50;
  const auto groups = averaging_groups(opts.max_order);
  Rng rng(mix(opts.seed, 5, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const GroupInstance& gi = groups[i % groups.size()];
    SuiteCase sc{gi.name, i, false, Json::object()};
    try {
      const CanonicalForm cf = random_canonical_form(gi.group, FormShape{}, rng);
      sc.detail["degrees"] = degrees_of(cf);
      sc.detail["dims"] = dims_of(cf);
      const auto sym = sections_character(cf);
      const auto moved = transported_sections_character(cf);
      const bool central = central_cancellation(cf);
      const Representation m = sections_module(cf);
      const bool dim = m.dim() == sections_dimension(cf);
      const bool chars = m.dim() == 0 || character(m) == sym;
      Json chi = Json::array();
      for (const auto& v : sym) chi.push_back(to_json(v));
      sc.detail["dimension"] = std::to_string(sections_dimension(cf));
      sc.detail["character"] = std::move(chi);
      sc.detail["transported_agrees"] = sym == moved;
      sc.detail["central_cancellation"] = central;
      sc.pass = sym == moved && central && dim && chars;
    } catch (const std::runtime_error& e) {
      sc.detail["error"] = e.what();
    }
    out.cases.push_back(std::move(sc));
  }
  return out;
}

}  // namespace

std::vector<GroupInstance> roundtrip_groups(std::size_t max_order) {
  return {linear_instance("C2", Family::cyclic, 2, max_order),
          linear_instance("C3", Family::cyclic, 3, max_order),
          linear_instance("C4", Family::cyclic, 4, max_order),
          linear_instance("C6", Family::cyclic, 6, max_order),
          linear_instance("Q8", Family::binary_dihedral, 2, max_order),
          linear_instance("BD12", Family::binary_dihedral, 3, max_order)};
}

std::vector<GroupInstance> pgl_groups(std::size_t max_image) {
  std::vector<GroupInstance> out;
  for (int n = 1; n <= 6; ++n) out.push_back(pgl_instance("PGL C" + std::to_string(n), Family::cyclic, n, 240));
  for (int n = 2; n <= 5; ++n) out.push_back(pgl_instance("PGL D" + std::to_string(2 * n), Family::binary_dihedral, n, 240));
  out.push_back(pgl_instance("PGL T12", Family::binary_tetrahedral, 1, 240));
  out.push_back(pgl_instance("PGL O24", Family::binary_octahedral, 1, 240));
  out.push_back(pgl_instance("PGL I60", Family::binary_icosahedral, 1, 240));
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const GroupInstance& g) { return g.group->group()->order() > max_image; }),
            out.end());
  return out;
}

bool complement_exists(const PGLGroup& g) {
  const MatrixGroup& p = *g.preimage;
  const std::size_t target = g.image->order();
  const std::size_t m = g.minus_identity;
  std::vector<char> in(p.order());
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < p.order(); ++x) {
    if (x == m) continue;
    for (std::size_t y = x; y < p.order(); ++y) {
      if (y == m) continue;
      std::fill(in.begin(), in.end(), 0);
      members.assign(1, 0);
      in[0] = 1;
      bool bad = false;
      for (std::size_t k = 0; k < members.size() && !bad; ++k) {
        for (std::size_t gen : {x, y}) {
          const std::size_t z = p.mul(gen, members[k]);
          if (in[z]) continue;
          if (z == m || members.size() == target) {
            bad = true;
            break;
          }
          in[z] = 1;
          members.push_back(z);
        }
      }
      if (!bad && members.size() == target) return true;
    }
  }
  return false;
}

ReverifyResult reverify_classification(const Json& report, const ReadOptions& opts) {
  ReverifyResult out;
  try {
    const int src = int_from_json(report.at("modulus"));
    const Json& cf = report.at("canonical_form");
    ReadOptions nested = opts;
    nested.modulus_override = file_field(report, opts).modulus();
    const ActingGroupPtr group = acting_group_from_json(cf.at("group"), nested);
    const CycField& f = group->field();
    const Json& cert = report.at("certificates");

    const TransitionCocycle t(ratmat_from_json(cert.at("transition"), src, f));
    const BirkhoffFactorization fac = factorization_from_json(cert.at("factorization"), src, f);
    out.factorization = verify_factorization(t, fac);

    out.stages = true;
    for (const auto& s : cert.at("stages")) out.stages = out.stages && check_stage(s, src, group);

    out.extractions = true;
    for (const auto& x : cert.at("extractions")) {
      const RatMat s = ratmat_from_json(x.at("evaluation"), src, f);
      const RatFun det = s.det();
      out.extractions = out.extractions && s.is_polynomial() && det.is_constant() && !det.is_zero() &&
                        x.at("isomorphism").get<bool>() && x.at("equivariant").get<bool>();
    }
  } catch (const nlohmann::json::exception&) {
    return ReverifyResult{};
  } catch (const std::runtime_error&) {
    return ReverifyResult{};
  }
  return out;
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
}

std::size_t SuiteResult::pass_count() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"birkhoff", "roundtrip", "averaging", "parity", "sections"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, opts).front());
    return out;
  }
  if (name == "birkhoff") return {birkhoff_suite(opts)};
  if (name == "roundtrip") return {roundtrip_suite(opts)};
  if (name == "averaging") return {averaging_suite(opts)};
  if (name == "parity") return {parity_suite(opts)};
  if (name == "sections") return {sections_suite(opts)};
  throw FormatError("unknown suite \"" + name + "\"");
}

Json suite_report(const std::vector<SuiteResult>& results, const SuiteOptions& opts) {
  Json out = Json::object();
  out["seed"] = std::to_string(opts.seed);
  Json suites = Json::array();
  for (const auto& r : results) {
    Json s = Json::object();
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    s["total"] = std::to_string(r.cases.size());
    s["pass_count"] = std::to_string(r.pass_count());
    Json cases = Json::array();
    for (const auto& c : r.cases) {
      Json x = Json::object();
      x["group"] = c.group;
      x["index"] = std::to_string(c.index);
      x["pass"] = c.pass;
      x["detail"] = c.detail;
      cases.push_back(std::move(x));
    }
    s["cases"] = std::move(cases);
    suites.push_back(std::move(s));
  }
  out["suites"] = std::move(suites);
  return out;
}

std::string suite_table(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    std::vector<std::string> order;
    for (const auto& c : r.cases) {
      if (std::find(order.begin(), order.end(), c.group) == order.end()) order.push_back(c.group);
    }
    for (const auto& g : order) {
      std::size_t total = 0;
      std::size_t pass = 0;
      for (const auto& c : r.cases) {
        if (c.group != g) continue;
        ++total;
        pass += c.pass ? 1 : 0;
      }
      os << r.suite << "\t" << g << "\t" << pass << "/" << total << "\t" << (pass == total ? "PASS" : "FAIL") << "\n";
    }
  }
  return os.str();
}

}  // namespace eqb

#include "eqb/serialize.hpp"

#include <algorithm>

#include "eqb/errors.hpp"
#include "eqb/moebius.hpp"

namespace eqb {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

Json str(std::int64_t v) { return std::to_string(v); }

Json degrees_json(const std::vector<int>& d) {
  Json out = Json::array();
  for (int x : d) out.push_back(str(x));
  return out;
}

std::vector<int> degrees_from_json(const Json& j) {
  std::vector<int> out;
  for (const auto& x : array_of(j, "degrees")) out.push_back(int_from_json(x));
  return out;
}

int modulus_of(const Json& j) {
  const int n = int_from_json(field_of(j, "modulus"));
  if (n < 1) throw FormatError("modulus must be positive");
  return n;
}

ReadOptions nested(const ReadOptions& opts, const CycField& f) {
  ReadOptions o = opts;
  o.modulus_override = f.modulus();
  return o;
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const CycNum& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RatFun& f) {
  Json out = Json::object();
  out["num"] = to_json(f.num());
  if (!f.den().is_one()) out["den"] = to_json(f.den());
  return out;
}

Json to_json(const RatMat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const CycMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const SL2Elem& g) { return Json::array({Json::array({to_json(g.a), to_json(g.b)}), Json::array({to_json(g.c), to_json(g.d)})}); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError("rational must be a string \"p\" or \"p/q\"");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational::parse(s, "1");
  return Rational::parse(std::string_view(s).substr(0, slash), std::string_view(s).substr(slash + 1));
}

int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<int>();
  const Rational q = rational_from_json(j);
  if (!q.is_integer()) throw FormatError("expected an integer, got " + q.to_string());
  const mpz_class n = q.to_mpq().get_num();
  if (!n.fits_sint_p()) throw FormatError("integer out of range");
  return static_cast<int>(n.get_si());
}

CycNum cyc_from_json(const Json& j, int source, const CycField& target) {
  const CycField& src = CycField::get(source);
  const Json& a = array_of(j, "cyclotomic number");
  if (a.size() != static_cast<std::size_t>(src.degree())) {
    throw FormatError("expected " + std::to_string(src.degree()) + " coordinates over Q(zeta_" + std::to_string(source) + ")");
  }
  std::vector<Rational> c;
  for (const auto& x : a) c.push_back(rational_from_json(x));
  if (source == target.modulus()) return CycNum(target, std::move(c));
  if (target.modulus() % source != 0) {
    throw FormatError("modulus " + std::to_string(target.modulus()) + " is not a multiple of " + std::to_string(source));
  }
  const std::int64_t step = target.modulus() / source;
  CycNum out(target);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out += CycNum::zeta(target, static_cast<std::int64_t>(k) * step) * CycNum(target, c[k]);
  }
  return out;
}

namespace {

Poly poly_from_json(const Json& j, int source, const CycField& target) {
  std::vector<CycNum> c;
  for (const auto& x : array_of(j, "polynomial")) c.push_back(cyc_from_json(x, source, target));
  return Poly(target, std::move(c));
}

}  // namespace

RatFun ratfun_from_json(const Json& j, int source, const CycField& target) {
  Poly num = poly_from_json(field_of(j, "num"), source, target);
  const auto it = j.find("den");
  if (it == j.end()) return RatFun(std::move(num));
  Poly den = poly_from_json(*it, source, target);
  if (den.is_zero()) throw FormatError("zero denominator");
  return RatFun(std::move(num), std::move(den));
}

RatMat ratmat_from_json(const Json& j, int source, const CycField& target) {
  const Json& rows = array_of(j, "matrix");
  if (rows.empty()) throw FormatError("empty matrix");
  const std::size_t n = array_of(rows[0], "matrix row").size();
  RatMat m(target, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (array_of(rows[i], "matrix row").size() != n) throw FormatError("ragged matrix");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = ratfun_from_json(rows[i][k], source, target);
  }
  return m;
}

CycMatrix cycmatrix_from_json(const Json& j, int source, const CycField& target) {
  const Json& rows = array_of(j, "matrix");
  if (rows.empty()) throw FormatError("empty matrix");
  const std::size_t n = array_of(rows[0], "matrix row").size();
  CycMatrix m(target, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (array_of(rows[i], "matrix row").size() != n) throw FormatError("ragged matrix");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = cyc_from_json(rows[i][k], source, target);
  }
  return m;
}

const CycField& file_field(const Json& j, const ReadOptions& opts) {
  const int n = modulus_of(j);
  if (opts.modulus_override == 0) return CycField::get(n);
  if (opts.modulus_override % n != 0) {
    throw FormatError("modulus override " + std::to_string(opts.modulus_override) + " is not a multiple of " +
                      std::to_string(n));
  }
  return CycField::get(opts.modulus_override);
}

Json group_to_json(const MatrixGroup& g) {
  Json out = Json::object();
  out["modulus"] = str(g.field().modulus());
  out["pgl"] = g.projective();
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  out["generators"] = std::move(gens);
  return out;
}

GroupPtr group_from_json(const Json& j, const ReadOptions& opts) {
  try {
    const CycField& f = file_field(j, opts);
    const int src = modulus_of(j);
    bool pgl = false;
    if (const auto it = j.find("pgl"); it != j.end()) {
      if (!it->is_boolean()) throw FormatError("\"pgl\" must be a boolean");
      pgl = it->get<bool>();
    }
    std::vector<SL2Elem> gens;
    for (const auto& m : array_of(field_of(j, "generators"), "generators")) {
      const CycMatrix x = cycmatrix_from_json(m, src, f);
      if (x.rows() != 2 || x.cols() != 2) throw FormatError("generators must be 2x2 matrices");
      gens.emplace_back(x(0, 0), x(0, 1), x(1, 0), x(1, 1));
    }
    if (gens.empty()) throw FormatError("a group needs at least one generator");
    return MatrixGroup::generate(f, gens, opts.max_order, pgl);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed group file: ") + e.what());
  }
}

ActingGroupPtr acting_group_from_json(const Json& j, const ReadOptions& opts) {
  GroupPtr g = group_from_json(j, opts);
  return g->projective() ? ActingGroup::projective(std::move(g)) : ActingGroup::linear(std::move(g));
}

Json cocycle_to_json(const TransitionCocycle& t) {
  Json out = Json::object();
  out["modulus"] = str(t.field().modulus());
  out["transition"] = to_json(t.matrix());
  return out;
}

TransitionCocycle cocycle_from_json(const Json& j, const ReadOptions& opts) {
  try {
    const CycField& f = file_field(j, opts);
    return TransitionCocycle(ratmat_from_json(field_of(j, "transition"), modulus_of(j), f));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed cocycle file: ") + e.what());
  }
}

Json representation_to_json(const Representation& r) {
  Json out = Json::object();
  out["dimension"] = str(static_cast<std::int64_t>(r.dim()));
  Json gens = Json::array();
  for (const auto& m : r.generator_images()) gens.push_back(to_json(m));
  out["generators"] = std::move(gens);
  return out;
}

Representation representation_from_json(const Json& j, int source, const GroupPtr& group) {
  try {
    const int dim = int_from_json(field_of(j, "dimension"));
    if (dim < 1) throw FormatError("module dimension must be positive");
    const Json& gens = array_of(field_of(j, "generators"), "module generators");
    if (gens.size() != group->generators().size()) {
      throw FormatError("expected " + std::to_string(group->generators().size()) + " generator images");
    }
    std::vector<CycMatrix> images;
    for (const auto& m : gens) {
      CycMatrix x = cycmatrix_from_json(m, source, group->field());
      if (x.rows() != static_cast<std::size_t>(dim) || x.cols() != static_cast<std::size_t>(dim)) {
        throw FormatError("generator image of the wrong size");
      }
      images.push_back(std::move(x));
    }
    return Representation::from_generators(group, images);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed module: ") + e.what());
  }
}

Json bundle_to_json(const EquivariantBundle& e) {
  Json out = Json::object();
  out["modulus"] = str(e.base().field().modulus());
  out["group"] = group_to_json(e.group());
  out["base"] = cocycle_to_json(e.base());
  Json act = Json::object();
  for (std::size_t k = 0; k < e.generator_actions().size(); ++k) act[std::to_string(k)] = to_json(e.generator_actions()[k]);
  out["action"] = std::move(act);
  return out;
}

EquivariantBundle bundle_from_json(const Json& j, const ReadOptions& opts) {
  const CycField& f = file_field(j, opts);
  return bundle_from_json(j, acting_group_from_json(field_of(j, "group"), nested(opts, f)));
}

EquivariantBundle bundle_from_json(const Json& j, const ActingGroupPtr& group) {
  try {
    const CycField& f = group->field();
    const int src = modulus_of(j);
    if (f.modulus() % src != 0) throw FormatError("bundle modulus does not divide the group modulus");
    const Json& base = field_of(j, "base");
    TransitionCocycle t(ratmat_from_json(field_of(base, "transition"), modulus_of(base), f));
    const Json& act = field_of(j, "action");
    if (!act.is_object()) throw FormatError("\"action\" must map generator indices to matrices");
    const std::size_t n = group->group()->generators().size();
    if (act.size() != n) throw FormatError("expected an action matrix for each of the " + std::to_string(n) + " generators");
    std::vector<RatMat> acts;
    for (std::size_t k = 0; k < n; ++k) {
      const auto it = act.find(std::to_string(k));
      if (it == act.end()) throw FormatError("missing action for generator " + std::to_string(k));
      acts.push_back(ratmat_from_json(*it, src, f));
    }
    return EquivariantBundle(std::move(t), group, std::move(acts));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed bundle file: ") + e.what());
  }
}

std::string parity_name(Parity p) { return p == Parity::plain ? "plain" : "odd_twist"; }

Json canonical_form_to_json(const CanonicalForm& cf) {
  Json out = Json::object();
  out["modulus"] = str(cf.group->field().modulus());
  out["group"] = group_to_json(*cf.group->group());
  Json entries = Json::array();
  for (const auto& e : cf.entries) {
    Json x = Json::object();
    x["degree"] = str(e.degree);
    x["parity"] = parity_name(e.parity);
    x["module"] = representation_to_json(e.module);
    entries.push_back(std::move(x));
  }
  out["entries"] = std::move(entries);
  return out;
}

CanonicalForm canonical_form_from_json(const Json& j, const ReadOptions& opts) {
  const CycField& f = file_field(j, opts);
  return canonical_form_from_json(j, acting_group_from_json(field_of(j, "group"), nested(opts, f)));
}

CanonicalForm canonical_form_from_json(const Json& j, const ActingGroupPtr& group) {
  try {
    const int src = modulus_of(j);
    std::vector<CanonicalEntry> entries;
    for (const auto& x : array_of(field_of(j, "entries"), "entries")) {
      const int d = int_from_json(field_of(x, "degree"));
      const auto p = field_of(x, "parity").get<std::string>();
      Parity parity;
      if (p == "plain") {
        parity = Parity::plain;
      } else if (p == "odd_twist") {
        parity = Parity::odd_twist;
      } else {
        throw FormatError("parity must be \"plain\" or \"odd_twist\"");
      }
      GroupPtr mg = group->group();
      if (parity == Parity::odd_twist) {
        if (!group->pgl()) throw DomainError("odd_twist module over a linear group");
        mg = group->pgl()->preimage;
      }
      entries.push_back({d, parity, representation_from_json(field_of(x, "module"), src, mg)});
    }
    if (entries.empty()) throw FormatError("canonical form without entries");
    return normalize(group, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed canonical form: ") + e.what());
  }
}

Json factorization_to_json(const BirkhoffFactorization& f) {
  Json out = Json::object();
  out["degrees"] = degrees_json(f.degrees);
  out["plus"] = to_json(f.plus);
  out["minus"] = to_json(f.minus);
  return out;
}

BirkhoffFactorization factorization_from_json(const Json& j, int source, const CycField& target) {
  return {ratmat_from_json(field_of(j, "plus"), source, target), degrees_from_json(field_of(j, "degrees")),
          ratmat_from_json(field_of(j, "minus"), source, target)};
}

Json validation_to_json(const EquivarianceReport& r) {
  Json out = Json::object();
  out["valid"] = r.valid;
  Json issues = Json::array();
  static const char* names[] = {"cocycle", "chart0_pole", "chart0_inverse_pole", "chart1_pole", "chart1_inverse_pole"};
  for (const auto& i : r.issues) {
    Json x = Json::object();
    x["kind"] = names[static_cast<int>(i.kind)];
    x["g"] = str(static_cast<std::int64_t>(i.g));
    x["h"] = str(static_cast<std::int64_t>(i.h));
    x["detail"] = i.detail;
    issues.push_back(std::move(x));
  }
  out["issues"] = std::move(issues);
  return out;
}

Json hn_invariance_to_json(const HNInvarianceReport& r) {
  Json out = Json::object();
  out["invariant"] = r.invariant;
  Json f = Json::array();
  for (const auto& [g, s] : r.failures) {
    f.push_back(Json::array({str(static_cast<std::int64_t>(g)), str(static_cast<std::int64_t>(s))}));
  }
  out["failures"] = std::move(f);
  return out;
}

Json splitting_to_json(const AveragedSplitting& s) {
  Json out = Json::object();
  out["psi"] = to_json(s.psi);
  out["averaged"] = to_json(s.averaged);
  out["is_section"] = s.is_section;
  out["equivariant"] = s.equivariant;
  out["holomorphic"] = s.holomorphic;
  return out;
}

Json stage_to_json(const SplitStage& s) {
  Json out = Json::object();
  out["degrees"] = degrees_json(s.degrees);
  out["sub_rank"] = str(static_cast<std::int64_t>(s.sub_rank));
  Json acts = Json::array();
  for (const auto& a : s.generator_actions) acts.push_back(to_json(a));
  out["generator_actions"] = std::move(acts);
  out["splitting"] = splitting_to_json(s.splitting);
  return out;
}

Json extraction_to_json(const ExtractionCertificate& c) {
  Json out = Json::object();
  out["degree"] = str(c.degree);
  out["evaluation"] = to_json(c.evaluation);
  out["isomorphism"] = c.isomorphism;
  out["equivariant"] = c.equivariant;
  return out;
}

Json classification_to_json(const EquivariantBundle& input, const Classification& c) {
  Json out = Json::object();
  out["modulus"] = str(input.base().field().modulus());
  out["canonical_form"] = canonical_form_to_json(c.form);
  out["splitting_type"] = degrees_json(c.factorization.degrees);
  Json cert = Json::object();
  cert["transition"] = to_json(input.base().matrix());
  Json fac = factorization_to_json(c.factorization);
  fac["verified"] = c.factorization_verified;
  cert["factorization"] = std::move(fac);
  cert["validation"] = validation_to_json(c.validation);
  cert["hn_invariance"] = hn_invariance_to_json(c.invariance);
  Json stages = Json::array();
  for (const auto& s : c.stages) stages.push_back(stage_to_json(s));
  cert["stages"] = std::move(stages);
  Json ex = Json::array();
  for (const auto& e : c.extractions) ex.push_back(extraction_to_json(e));
  cert["extractions"] = std::move(ex);
  out["certificates"] = std::move(cert);
  return out;
}

Json extension_report(const ActingGroup& g) {
  Json out = Json::object();
  out["modulus"] = str(g.field().modulus());
  out["order"] = str(static_cast<std::int64_t>(g.group()->order()));
  if (g.pgl()) out["preimage_order"] = str(static_cast<std::int64_t>(g.pgl()->preimage->order()));
  out["splits"] = g.splits();
  if (g.gamma()) {
    Json gamma = Json::array();
    for (const auto& x : g.gamma()->generator_lifts) gamma.push_back(to_json(x));
    out["gamma"] = std::move(gamma);
  } else {
    out["gamma"] = nullptr;
  }
  return out;
}

}  // namespace eqb

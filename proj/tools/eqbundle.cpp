// eqbundle: batch front end to the eqb library.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqb/errors.hpp"
#include "eqb/planting.hpp"
#include "eqb/sections.hpp"
#include "eqb/serialize.hpp"
#include "eqb/suites.hpp"

using namespace eqb;

namespace {

struct Flags {
  std::vector<std::string> inputs;
  std::string output;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::size_t max_order = 240;
  int modulus_override = 0;
  std::size_t cases = 0;
  std::string family;
  int n = 1;
  bool pgl = false;
  bool twist = false;
};

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const std::string& single_input(const Flags& f) {
  if (f.inputs.size() != 1) throw FormatError("expected exactly one --input");
  return f.inputs.front();
}

ReadOptions read_options(const Flags& f) {
  ReadOptions o;
  o.max_order = f.max_order;
  o.modulus_override = f.modulus_override;
  return o;
}

// The JSON goes to --output when given (with `summary` on stdout), and to
// stdout otherwise.
void emit(const Flags& f, const Json& j, const std::string& summary) {
  if (f.output.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(f.output);
  if (!out) throw FormatError("cannot write \"" + f.output + "\"");
  out << j.dump(2) << "\n";
  if (!summary.empty()) std::cout << summary << "\n";
}

std::string degrees_text(const std::vector<int>& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << ")";
  return os.str();
}

std::string form_text(const CanonicalForm& cf) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    const auto& e = cf.entries[i];
    os << (i ? " + " : "") << "O(" << e.degree << ")x" << e.module.dim();
    if (e.parity == Parity::odd_twist) os << "[odd]";
  }
  return os.str();
}

Json class_table(const MatrixGroup& g) {
  Json out = Json::array();
  for (const auto& c : g.classes()) {
    Json x = Json::object();
    x["size"] = std::to_string(c.size());
    x["representative"] = to_json(g.element(c.front()));
    out.push_back(std::move(x));
  }
  return out;
}

int cmd_catalog(const Flags& f) {
  const auto fam = parse_family(f.family);
  if (!fam) throw FormatError("unknown family \"" + f.family + "\"");
  if (f.n < 1) throw FormatError("n must be positive");
  const int required = f.pgl ? pgl_catalog(*fam, f.n).modulus : catalog_modulus(*fam, f.n);
  const int modulus = f.modulus_override ? f.modulus_override : required;
  if (modulus % required != 0) {
    throw FormatError("modulus " + std::to_string(modulus) + " does not contain Q(zeta_" + std::to_string(required) + ")");
  }
  const CycField& field = CycField::get(modulus);
  const CatalogEntry c = f.pgl ? pgl_catalog(*fam, f.n, field) : catalog(*fam, f.n, field);
  const GroupPtr g = MatrixGroup::generate(field, c.generators, f.max_order, f.pgl);
  Json out = group_to_json(*g);
  out["family"] = family_name(*fam);
  out["n"] = std::to_string(f.n);
  out["order"] = std::to_string(g->order());
  out["required_modulus"] = std::to_string(required);
  out["classes"] = class_table(*g);
  emit(f, out, "order " + std::to_string(g->order()) + ", " + std::to_string(g->classes().size()) + " classes");
  return 0;
}

int cmd_split(const Flags& f) {
  const Json in = read_file(single_input(f));
  const TransitionCocycle t = cocycle_from_json(in, read_options(f));
  const BirkhoffFactorization fac = birkhoff_factor(t);
  Json out = Json::object();
  out["modulus"] = std::to_string(t.field().modulus());
  Json degrees = Json::array();
  for (int d : fac.degrees) degrees.push_back(std::to_string(d));
  out["splitting_type"] = std::move(degrees);
  Json cert = factorization_to_json(fac);
  cert["verified"] = verify_factorization(t, fac);
  out["factorization"] = std::move(cert);
  emit(f, out, degrees_text(fac.degrees));
  return 0;
}

int cmd_build(const Flags& f) {
  const Json in = read_file(single_input(f));
  const CanonicalForm cf = canonical_form_from_json(in, read_options(f));
  EquivariantBundle e = build_from_canonical(cf);
  if (f.twist) {
    Rng rng(f.seed);
    e = random_twist(e, 2, 1, rng);
  }
  emit(f, bundle_to_json(e), "rank " + std::to_string(e.rank()));
  return 0;
}

int cmd_classify(const Flags& f) {
  const Json in = read_file(single_input(f));
  const EquivariantBundle e = bundle_from_json(in, read_options(f));
  const Classification c = classify(e);
  emit(f, classification_to_json(e, c), form_text(c.form));
  return 0;
}

int cmd_ext_split(const Flags& f) {
  Json in = read_file(single_input(f));
  if (in.is_object()) in["pgl"] = true;
  const ActingGroupPtr g = acting_group_from_json(in, read_options(f));
  emit(f, extension_report(*g), g->splits() ? "splits" : "does not split");
  return 0;
}

int cmd_iso(const Flags& f) {
  if (f.inputs.size() != 2) throw FormatError("iso expects two --input files");
  const Json a = read_file(f.inputs[0]);
  const Json b = read_file(f.inputs[1]);
  ReadOptions o = read_options(f);
  const int ma = file_field(a, ReadOptions{}).modulus();
  const int mb = file_field(b, ReadOptions{}).modulus();
  const int ambient = std::lcm(ma, mb);
  if (o.modulus_override && o.modulus_override % ambient != 0) {
    throw FormatError("modulus override is not a multiple of " + std::to_string(ambient));
  }
  if (!o.modulus_override) o.modulus_override = ambient;
  const ActingGroupPtr ga = acting_group_from_json(a.at("group"), o);
  const GroupPtr gb = group_from_json(b.at("group"), o);
  if (ga->group()->generators() != gb->generators() || ga->is_projective() != gb->projective()) {
    throw FormatError("the two bundles are over different groups");
  }
  const EquivariantBundle ea = bundle_from_json(a, ga);
  const EquivariantBundle eb = bundle_from_json(b, ga);
  const CanonicalForm fa = classify(ea).form;
  const CanonicalForm fb = classify(eb).form;
  const bool iso = same_canonical_form(fa, fb);
  Json out = Json::object();
  out["modulus"] = std::to_string(ga->field().modulus());
  out["isomorphic"] = iso;
  out["first"] = canonical_form_to_json(fa);
  out["second"] = canonical_form_to_json(fb);
  emit(f, out, iso ? "isomorphic" : "not isomorphic");
  return 0;
}

int cmd_sections(const Flags& f) {
  const Json in = read_file(single_input(f));
  const CanonicalForm cf = canonical_form_from_json(in, read_options(f));
  const std::size_t dim = sections_dimension(cf);
  Json chi = Json::array();
  for (const auto& v : sections_character(cf)) chi.push_back(to_json(v));
  Json out = Json::object();
  out["modulus"] = std::to_string(cf.group->field().modulus());
  out["dimension"] = std::to_string(dim);
  out["classes"] = class_table(*cf.group->group());
  out["character"] = std::move(chi);
  emit(f, out, "dimension " + std::to_string(dim));
  return 0;
}

int cmd_verify(const Flags& f) {
  SuiteOptions o;
  o.seed = f.seed;
  o.cases = f.cases;
  o.max_order = f.max_order;
  const auto results = run_suite(f.suite, o);
  const Json report = suite_report(results, o);
  if (f.output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    emit(f, report, "");
    std::cout << suite_table(results);
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  return ok ? 0 : 1;
}

int fail(const char* kind, const std::string& message, int code) {
  Json err = Json::object();
  err["error"] = kind;
  err["message"] = message;
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify finite-group-equivariant vector bundles on the projective line."};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--input", f.inputs, "Input file (iso takes two)");
  app.add_option("--output", f.output, "Write the JSON result here instead of stdout");
  app.add_option("--seed", f.seed, "Seed for every random choice");
  app.add_option("--max-order", f.max_order, "Cap on group closures")->check(CLI::PositiveNumber);
  app.add_option("--modulus-override", f.modulus_override, "Work over Q(zeta_M) for this M")->check(CLI::NonNegativeNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "Write a catalog group file");
  catalog_cmd->add_option("--family", f.family, "cyclic, binary_dihedral, binary_tetrahedral, binary_octahedral or binary_icosahedral")
      ->required();
  catalog_cmd->add_option("--n", f.n, "Family parameter");
  catalog_cmd->add_flag("--pgl", f.pgl, "The image in PGL(2), given by coset representatives");
  auto* split_cmd = app.add_subcommand("split", "Splitting type and Birkhoff factorization of a cocycle file");
  auto* build_cmd = app.add_subcommand("build", "Bundle file of a canonical-form file");
  build_cmd->add_flag("--twist", f.twist, "Present it through a random automorphism and frame change");
  auto* classify_cmd = app.add_subcommand("classify", "Canonical form and certificates of a bundle file");
  auto* ext_cmd = app.add_subcommand("ext-split", "Whether a group file, read in PGL(2), lifts to SL(2)");
  auto* iso_cmd = app.add_subcommand("iso", "Whether two bundle files are equivariantly isomorphic");
  auto* sections_cmd = app.add_subcommand("sections", "Global sections of a canonical-form file");
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--suite", f.suite, "roundtrip, birkhoff, averaging, parity, sections or all")
      ->check(CLI::IsMember({"roundtrip", "birkhoff", "averaging", "parity", "sections", "all"}));
  verify_cmd->add_option("--cases", f.cases, "Cases per group (0: suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("format", e.what(), 2);
  }

  try {
    if (*catalog_cmd) return cmd_catalog(f);
    if (*split_cmd) return cmd_split(f);
    if (*build_cmd) return cmd_build(f);
    if (*classify_cmd) return cmd_classify(f);
    if (*ext_cmd) return cmd_ext_split(f);
    if (*iso_cmd) return cmd_iso(f);
    if (*sections_cmd) return cmd_sections(f);
    if (*verify_cmd) return cmd_verify(f);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), 1);
  } catch (const FormatError& e) {
    return fail("format", e.what(), 2);
  } catch (const nlohmann::json::exception& e) {
    return fail("format", e.what(), 2);
  }
  return 2;
}

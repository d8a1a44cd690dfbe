#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "eqb/bundle.hpp"
#include "eqb/equivariant.hpp"
#include "eqb/extensions.hpp"
#include "eqb/matgroup.hpp"

namespace eqb {

/// Files are ordered JSON objects. Every integer is written as a decimal
/// string, a rational as "p" or "p/q", and an element of Q(zeta_N) as the
/// list of its phi(N) rational coordinates in the basis 1, zeta, zeta^2, ...
/// Readers accept JSON integers where integers are expected and throw
/// FormatError on anything malformed.
using Json = nlohmann::ordered_json;

struct ReadOptions {
  /// Cap on the closure of any group read from a file.
  std::size_t max_order = 240;
  /// If nonzero, read every file into Q(zeta_M) for this M, which must be a
  /// multiple of the modulus written in the file.
  int modulus_override = 0;
};

Json to_json(const Rational& q);
Json to_json(const CycNum& x);
Json to_json(const Poly& p);
Json to_json(const RatFun& f);
Json to_json(const RatMat& m);
Json to_json(const CycMatrix& m);
Json to_json(const SL2Elem& g);

Rational rational_from_json(const Json& j);
int int_from_json(const Json& j);
/// Coordinates over Q(zeta_source) mapped into `target`.
CycNum cyc_from_json(const Json& j, int source, const CycField& target);
RatFun ratfun_from_json(const Json& j, int source, const CycField& target);
RatMat ratmat_from_json(const Json& j, int source, const CycField& target);
CycMatrix cycmatrix_from_json(const Json& j, int source, const CycField& target);

/// The field a file is read into: its "modulus", or the override.
const CycField& file_field(const Json& j, const ReadOptions& opts);

/// {"modulus", "pgl", "generators"}; generators are 2x2 matrices, coset
/// representatives when "pgl" is true.
Json group_to_json(const MatrixGroup& g);
GroupPtr group_from_json(const Json& j, const ReadOptions& opts);
ActingGroupPtr acting_group_from_json(const Json& j, const ReadOptions& opts);

/// {"modulus", "transition"}.
Json cocycle_to_json(const TransitionCocycle& t);
TransitionCocycle cocycle_from_json(const Json& j, const ReadOptions& opts);

/// {"dimension", "generators"}: images of the generators of the module group.
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j, int source, const GroupPtr& group);

/// {"modulus", "group", "base", "action"} with "action" mapping generator
/// indices (as strings) to chart-0 matrices.
Json bundle_to_json(const EquivariantBundle& e);
EquivariantBundle bundle_from_json(const Json& j, const ReadOptions& opts);
EquivariantBundle bundle_from_json(const Json& j, const ActingGroupPtr& group);

/// {"modulus", "group", "entries": [{"degree", "parity", "module"}]}.
/// Modules of odd_twist entries are given on the generators of the
/// preimage group: the coset representatives followed by -I.
Json canonical_form_to_json(const CanonicalForm& cf);
CanonicalForm canonical_form_from_json(const Json& j, const ReadOptions& opts);
CanonicalForm canonical_form_from_json(const Json& j, const ActingGroupPtr& group);

std::string parity_name(Parity p);

Json factorization_to_json(const BirkhoffFactorization& f);
BirkhoffFactorization factorization_from_json(const Json& j, int source, const CycField& target);
Json validation_to_json(const EquivarianceReport& r);
Json hn_invariance_to_json(const HNInvarianceReport& r);
Json splitting_to_json(const AveragedSplitting& s);
Json stage_to_json(const SplitStage& s);
Json extraction_to_json(const ExtractionCertificate& c);
/// Canonical form plus every certificate of the pipeline.
Json classification_to_json(const EquivariantBundle& input, const Classification& c);
/// {"splits", "order", "gamma"}: gamma lists a lift per generator or is null.
Json extension_report(const ActingGroup& g);

}  // namespace eqb

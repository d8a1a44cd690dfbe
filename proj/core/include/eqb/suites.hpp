#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqb/serialize.hpp"

namespace eqb {

/// A named group used by the randomized suites.
struct GroupInstance {
  std::string name;
  ActingGroupPtr group;
};

/// C2, C3, C4, C6, the quaternion group and the binary dihedral group of
/// order 12, as subgroups of SL(2).
std::vector<GroupInstance> roundtrip_groups(std::size_t max_order = 240);
/// The images in PGL(2) of the catalog groups with at most `max_image`
/// elements: cyclic of orders 1-6, dihedral of orders 4-10, tetrahedral,
/// octahedral and icosahedral.
std::vector<GroupInstance> pgl_groups(std::size_t max_image = 60);

/// Whether the preimage of H contains a subgroup of order |H| avoiding -I,
/// by closing every pair of preimage elements. Independent of the sign
/// search in extension_splits.
bool complement_exists(const PGLGroup& g);

struct ReverifyResult {
  bool factorization = false;
  bool stages = false;
  bool extractions = false;
  bool ok() const { return factorization && stages && extractions; }
};

/// Re-checks the certificates of a classification report using only the
/// report: the factorization multiplies back to the transition, each stage's
/// averaged splitting is a holomorphic equivariant section (checked on every
/// group element), and each evaluation matrix has constant determinant.
ReverifyResult reverify_classification(const Json& report, const ReadOptions& opts = {});

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Cases per group (or in total for the birkhoff suite); 0 means the
  /// default size of the suite.
  std::size_t cases = 0;
  std::size_t max_order = 240;
};

struct SuiteCase {
  std::string group;
  std::size_t index = 0;
  bool pass = false;
  Json detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool passed() const;
  std::size_t pass_count() const;
};

const std::vector<std::string>& suite_names();

/// birkhoff: planted cocycles over Q(zeta_12) of rank <= 4, degrees in
/// [-4, 4] and factor entry degree <= 3; recovery, exact residual and h^0
/// against the planted degrees for m in [-6, 6] (default 200 cases).
/// roundtrip: random canonical forms over roundtrip_groups, twisted by a
/// random automorphism and frame change, classified back, with the
/// certificates re-verified from the serialized report (default 100 per
/// group).
/// averaging: two-step extensions presented with a non-equivariant
/// holomorphic splitting, validated, checked for HN invariance, averaged and
/// re-checked (default 20 per group).
/// parity: the splitting decision against complement_exists on pgl_groups,
/// rejection of plain odd entries, the odd-twist property of classified
/// odd modules and validity of O(1) in the split case (default 3 per group).
/// sections: symbolic against transported section characters (default 50).
/// "all" runs every suite in this order.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opts);

/// Deterministic report: per case its group, index, verdict and details.
Json suite_report(const std::vector<SuiteResult>& results, const SuiteOptions& opts);
/// One line per suite and group: passed / total.
std::string suite_table(const std::vector<SuiteResult>& results);

}  // namespace eqb

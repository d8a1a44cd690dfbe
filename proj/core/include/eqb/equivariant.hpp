#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eqb/bundle.hpp"
#include "eqb/extensions.hpp"
#include "eqb/matgroup.hpp"
#include "eqb/ratfun.hpp"

namespace eqb {

/// A bundle with a lift of the Moebius action. The action of g is a chart-0
/// matrix a_g(z) taking the fiber at z to the fiber at g.z; it is given on the
/// generators and extended along the generator words, so that
/// a_{g h}(z) = a_g(h.z) a_h(z) holds by construction along the words and is
/// checked on the remaining relations by validate_equivariance.
class EquivariantBundle {
 public:
  EquivariantBundle(TransitionCocycle base, ActingGroupPtr group, std::vector<RatMat> generator_actions);

  const TransitionCocycle& base() const { return base_; }
  const ActingGroupPtr& acting() const { return group_; }
  const MatrixGroup& group() const { return *group_->group(); }
  std::size_t rank() const { return base_.rank(); }
  const std::vector<RatMat>& generator_actions() const { return gen_actions_; }
  /// a_g for element i of the acting group; all elements are computed on
  /// first use and shared between copies.
  const RatMat& action(std::size_t i) const { return all_actions()[i]; }
  /// a_g(z)^-1 = a_{g^-1}(g.z).
  RatMat inverse_action(std::size_t i) const;

 private:
  TransitionCocycle base_;
  ActingGroupPtr group_;
  std::vector<RatMat> gen_actions_;
  struct Cache {
    std::once_flag once;
    std::vector<RatMat> actions;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  const std::vector<RatMat>& all_actions() const;
};

/// The chart-1 matrix of a_g, as a function of w = 1/z:
/// T(g.z)^-1 a_g(z) T(z) rewritten in w.
RatMat chart1_action(const EquivariantBundle& e, std::size_t i);

/// a'_g = A(g.z)^-1 a_g(z) A(z) and T' = A^-1 T B, for A polynomial in z and B
/// polynomial in 1/z with constant determinants.
EquivariantBundle change_frame(const EquivariantBundle& e, const RatMat& a, const RatMat& b);

/// Conjugates the action by a global automorphism phi (chart-0 matrix) of
/// the underlying bundle; the transition is unchanged.
EquivariantBundle apply_automorphism(const EquivariantBundle& e, const RatMat& phi);

/// O(n) with the action by (c z + d)^-n. For a projective group n must be
/// even unless the extension splits, in which case the splitting supplies
/// the lifts.
EquivariantBundle natural_structure(int n, const ActingGroupPtr& group);

enum class Violation { cocycle, chart0_pole, chart0_inverse_pole, chart1_pole, chart1_inverse_pole };

struct EquivarianceIssue {
  Violation kind;
  /// Offending pair (g, h) for the cocycle law; h unused otherwise.
  std::size_t g;
  std::size_t h;
  std::string detail;
};

struct EquivarianceReport {
  bool valid = true;
  std::vector<EquivarianceIssue> issues;
};

/// Checks the cocycle law for every generator g against every element h
/// (which implies it for all pairs) and chart regularity of the generator
/// actions and their inverses in both charts (which then implies it for
/// every element). Never throws.
EquivarianceReport validate_equivariance(const EquivariantBundle& e);

struct HNInvarianceReport {
  bool invariant = true;
  /// (generator, filtration step) pairs whose step is not preserved.
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// Whether every generator maps each Harder-Narasimhan subbundle into itself,
/// by an exact rank test on the chart-0 bases.
HNInvarianceReport check_hn_invariance(const EquivariantBundle& e);

/// Result of averaging a holomorphic splitting of 0 -> S -> E -> Q -> 0,
/// where S is spanned by the first `sub_rank` frame vectors.
struct AveragedSplitting {
  RatMat psi;
  RatMat averaged;
  /// q o averaged = identity.
  bool is_section = false;
  /// a_g(z) averaged(z) = averaged(g.z) Z_g(z) for every element g.
  bool equivariant = false;
  /// averaged is holomorphic in both charts.
  bool holomorphic = false;
};

/// The average (1/|G|) sum_g a_g(z)^-1 psi(g.z) Z_g(z) of the translates of
/// psi, Z_g being the induced action on the quotient. Requires the transition
/// and all actions to be block upper triangular for the split
/// (sub_rank, rank - sub_rank) and psi to be a holomorphic section of the
/// quotient map; throws DomainError otherwise.
AveragedSplitting equivariant_splitting(const EquivariantBundle& e, std::size_t sub_rank, const RatMat& psi);

/// Evidence that the evaluation map O(d) (x) M -> W is an equivariant isomorphism.
struct ExtractionCertificate {
  int degree = 0;
  /// Chart-0 matrix of the evaluation map; its columns are a basis of
  /// H^0(Hom(O(d), W)).
  RatMat evaluation;
  bool isomorphism = false;
  bool equivariant = false;
};

struct ExtractedModule {
  Representation module;
  ExtractionCertificate certificate;
};

/// The module M = H^0(Hom(O(d), W)) of a semistable piece W of slope d with
/// its transported action. Throws DomainError if W is not semistable of
/// slope d or the transported action is not a representation.
ExtractedModule extract_module(const EquivariantBundle& w, int degree);

struct CanonicalEntry {
  int degree;
  Parity parity;
  Representation module;
};

/// Entries sorted by strictly decreasing degree.
struct CanonicalForm {
  ActingGroupPtr group;
  std::vector<CanonicalEntry> entries;

  std::size_t rank() const;
};

/// Sorts by decreasing degree and merges equal degrees by direct sum.
CanonicalForm normalize(ActingGroupPtr group, std::vector<CanonicalEntry> entries);

/// Same degrees, parities and module characters.
bool same_canonical_form(const CanonicalForm& a, const CanonicalForm& b);

/// Checks the parity rules and builds the block diagonal bundle whose
/// generator actions are (automorphy factor of degree d_i) (x) M_i.
EquivariantBundle build_from_canonical(const CanonicalForm& cf);

/// One stage of the splitting of the Harder-Narasimhan filtration.
struct SplitStage {
  std::vector<int> degrees;
  std::size_t sub_rank;
  /// Generator actions in the frame where the stage is taken.
  std::vector<RatMat> generator_actions;
  AveragedSplitting splitting;
};

struct Classification {
  CanonicalForm form;
  BirkhoffFactorization factorization;
  bool factorization_verified = false;
  EquivarianceReport validation;
  HNInvarianceReport invariance;
  std::vector<SplitStage> stages;
  std::vector<ExtractionCertificate> extractions;
};

/// Birkhoff factorization, HN invariance, top-down equivariant splitting of
/// the filtration and module extraction on each graded piece. Throws
/// DomainError for invalid input or when an invariance or averaging
/// identity fails.
Classification classify(const EquivariantBundle& e);

bool equiv_isomorphic(const EquivariantBundle& a, const EquivariantBundle& b);

}  // namespace eqb

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "eqb/matgroup.hpp"

namespace eqb {

/// A finite subgroup H of PGL(2) together with its preimage in SL(2), the
/// central extension 1 -> {+-I} -> preimage -> H -> 1.
struct PGLGroup {
  GroupPtr image;
  GroupPtr preimage;
  /// Preimage index of the stored representative of each element of H.
  std::vector<std::size_t> lift;
  /// Image index of each preimage element.
  std::vector<std::size_t> project;
  std::size_t minus_identity = 0;
};

/// Closure of {+-g} over the representatives of the generators of a
/// projective group; throws DomainError unless its order is exactly 2|H|.
GroupPtr preimage_group(const MatrixGroup& image);
PGLGroup make_pgl_group(GroupPtr image);

/// A section gamma : H -> preimage that is a homomorphism.
struct SplittingHom {
  /// gamma of each element of H, indexed like H.
  std::vector<SL2Elem> lifts;
  /// gamma of each generator of H.
  std::vector<SL2Elem> generator_lifts;
};

/// Tries every sign assignment on the generator representatives (bit k of
/// the mask negates generator k, masks in increasing order), extends along
/// the generator words and accepts the first assignment that is
/// multiplicative on all pairs of elements.
std::optional<SplittingHom> extension_splits(const MatrixGroup& image);

/// True when -I acts as minus the identity; requires a linear group containing -I.
bool odd_twist_valid(const Representation& r);

/// How a module is attached to O(d): plain modules of the acting group, or
/// modules of the preimage on which -I acts as -1 (odd degree, non-split).
enum class Parity { plain, odd_twist };

/// The group acting on P^1 together with what is needed to act on O(d):
/// for a projective group its preimage and, when the extension splits, a
/// splitting homomorphism.
class ActingGroup {
 public:
  static std::shared_ptr<const ActingGroup> linear(GroupPtr group);
  /// Computes the preimage and runs the splitting search.
  static std::shared_ptr<const ActingGroup> projective(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const CycField& field() const { return group_->field(); }
  bool is_projective() const { return group_->projective(); }
  bool splits() const { return !is_projective() || gamma_.has_value(); }
  const std::optional<PGLGroup>& pgl() const { return pgl_; }
  const std::optional<SplittingHom>& gamma() const { return gamma_; }

  Parity parity(int degree) const;
  /// The group whose modules M pair with O(d): the acting group, or the
  /// preimage when the parity is odd_twist.
  const GroupPtr& module_group(int degree) const;
  /// Acting-group element through which element i of module_group(d) acts.
  std::size_t module_projection(int degree, std::size_t i) const;
  /// The SL(2) matrix whose automorphy factor acts on O(d) for element i of
  /// module_group(d). Throws DomainError for odd d over a non-split group
  /// when asked for a plain lift.
  SL2Elem lift(int degree, std::size_t i) const;

 private:
  ActingGroup() = default;
  GroupPtr group_;
  std::optional<PGLGroup> pgl_;
  std::optional<SplittingHom> gamma_;
};

using ActingGroupPtr = std::shared_ptr<const ActingGroup>;

}  // namespace eqb

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqb/cyclotomic.hpp"
#include "eqb/linalg.hpp"
#include "eqb/moebius.hpp"

namespace eqb {

/// A finite subgroup of SL(2), or of PGL(2) when `projective()` holds. In the
/// projective case every element is stored as its `projective_normal()`
/// representative and products are taken modulo +-I.
///
/// Elements are numbered in breadth-first discovery order from the
/// generators; element 0 is the identity. Every other element i has a word
/// i = generator(word_gen(i)) * element(word_parent(i)) with a parent found
/// strictly earlier, which is how data given on generators is extended.
class MatrixGroup {
 public:
  /// Throws DomainError when the closure exceeds `cap` elements.
  static std::shared_ptr<const MatrixGroup> generate(const CycField& field,
                                                     std::vector<SL2Elem> generators,
                                                     std::size_t cap, bool projective = false);

  const CycField& field() const { return *field_; }
  bool projective() const { return projective_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SL2Elem>& elements() const { return elements_; }
  const SL2Elem& element(std::size_t i) const { return elements_[i]; }

  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }
  /// Projective groups only: element(i) * element(j) = sign * element(mul(i, j)).
  int sign(std::size_t i, std::size_t j) const { return sign_[i * order() + j]; }
  std::optional<std::size_t> find(const SL2Elem& g) const;

  /// The generators as supplied (normalized in the projective case).
  const std::vector<SL2Elem>& generators() const { return gens_; }
  std::size_t generator_index(std::size_t k) const { return gen_index_[k]; }
  std::size_t word_gen(std::size_t i) const { return word_gen_[i]; }
  std::size_t word_parent(std::size_t i) const { return word_parent_[i]; }

  /// Classes sorted by (size, trace of the first element, first element).
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t element_order(std::size_t i) const;
  /// Index of -I in a linear group, if present.
  std::optional<std::size_t> minus_identity() const;

 private:
  MatrixGroup() = default;

  const CycField* field_ = nullptr;
  bool projective_ = false;
  std::vector<SL2Elem> elements_;
  std::map<SL2Elem, std::size_t> index_;
  std::vector<std::size_t> mul_;
  std::vector<int> sign_;
  std::vector<std::size_t> inv_;
  std::vector<SL2Elem> gens_;
  std::vector<std::size_t> gen_index_;
  std::vector<std::size_t> word_gen_;
  std::vector<std::size_t> word_parent_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

enum class Family { cyclic, binary_dihedral, binary_tetrahedral, binary_octahedral, binary_icosahedral };

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family f);

struct CatalogEntry {
  int modulus;
  std::vector<SL2Elem> generators;
  /// Order of the closure in SL(2) (linear) or PGL(2) (projective).
  std::size_t order;
};

/// Smallest cyclotomic modulus containing the catalog generators.
int catalog_modulus(Family family, int n);

/// Generators of a finite subgroup of SL(2): cyclic of order n, binary
/// dihedral of order 4n, binary tetrahedral, octahedral and icosahedral of
/// orders 24, 48, 120. `field` must contain the catalog modulus.
CatalogEntry catalog(Family family, int n, const CycField& field);
CatalogEntry catalog(Family family, int n);

/// Generators of a finite subgroup of PGL(2) given by coset representatives:
/// cyclic of order n (generated by diag(zeta_2n, zeta_2n^-1)), dihedral of
/// order 2n, and the tetrahedral, octahedral and icosahedral groups of
/// orders 12, 24, 60.
CatalogEntry pgl_catalog(Family family, int n, const CycField& field);
CatalogEntry pgl_catalog(Family family, int n);

/// A finite-dimensional representation, stored as one matrix per element.
class Representation {
 public:
  /// Extends generator images along the generator words and checks every
  /// relation; throws DomainError if the images do not define a homomorphism.
  static Representation from_generators(GroupPtr group, const std::vector<CycMatrix>& images);
  /// Checks the multiplication table against the given images.
  static Representation from_images(GroupPtr group, std::vector<CycMatrix> images);

  static Representation trivial(GroupPtr group, std::size_t dim = 1);
  /// The defining 2-dimensional representation of a linear group.
  static Representation standard(GroupPtr group);
  static Representation regular(GroupPtr group);
  /// Sym^d of the defining representation; for projective groups d must be even.
  static Representation symmetric_power(GroupPtr group, int d);
  /// A linear character given by its values on the generators.
  static Representation character_from_values(GroupPtr group, const std::vector<CycNum>& values);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const CycMatrix& image(std::size_t i) const { return images_[i]; }
  const std::vector<CycMatrix>& images() const { return images_; }
  std::vector<CycMatrix> generator_images() const;

  /// P^-1 rho(g) P.
  Representation conjugated(const CycMatrix& p) const;
  Representation dual() const;

 private:
  Representation(GroupPtr group, std::size_t dim, std::vector<CycMatrix> images)
      : group_(std::move(group)), dim_(dim), images_(std::move(images)) {}

  GroupPtr group_;
  std::size_t dim_;
  std::vector<CycMatrix> images_;
};

Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor(const Representation& a, const Representation& b);

/// Trace at the first element of each conjugacy class.
std::vector<CycNum> character(const Representation& r);

/// Character equality; requires the same group object.
bool module_isomorphic(const Representation& a, const Representation& b);

/// (1/|G|) sum_g rho(g), the projector onto the invariants.
CycMatrix reynolds(const Representation& r);

/// All one-dimensional characters, found by trying roots of unity of the
/// right orders on each generator. Sorted by their generator values.
std::vector<Representation> linear_characters(const GroupPtr& group);

}  // namespace eqb

#include "eqb/extensions.hpp"

#include "eqb/errors.hpp"

namespace eqb {

GroupPtr preimage_group(const MatrixGroup& image) {
  if (!image.projective()) throw FormatError("preimage requested for a linear group");
  std::vector<SL2Elem> gens = image.generators();
  gens.push_back(-SL2Elem::identity(image.field()));
  const std::size_t target = 2 * image.order();
  auto pre = MatrixGroup::generate(image.field(), std::move(gens), target);
  if (pre->order() != target) throw DomainError("preimage has the wrong order");
  return pre;
}

PGLGroup make_pgl_group(GroupPtr image) {
  PGLGroup out;
  out.preimage = preimage_group(*image);
  for (const auto& x : image->elements()) out.lift.push_back(*out.preimage->find(x));
  for (const auto& x : out.preimage->elements()) out.project.push_back(*image->find(x));
  out.minus_identity = *out.preimage->minus_identity();
  out.image = std::move(image);
  return out;
}

std::optional<SplittingHom> extension_splits(const MatrixGroup& image) {
  if (!image.projective()) throw FormatError("splitting requested for a linear group");
  const std::size_t k = image.generators().size();
  const std::size_t n = image.order();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<SL2Elem> gen_lifts;
    for (std::size_t j = 0; j < k; ++j) {
      const SL2Elem& g = image.generators()[j];
      gen_lifts.push_back((mask >> j) & 1U ? -g : g);
    }
    std::vector<SL2Elem> gamma;
    gamma.reserve(n);
    gamma.push_back(SL2Elem::identity(image.field()));
    for (std::size_t i = 1; i < n; ++i) gamma.push_back(gen_lifts[image.word_gen(i)] * gamma[image.word_parent(i)]);
    bool ok = true;
    for (std::size_t j = 0; ok && j < k; ++j) ok = gamma[image.generator_index(j)] == gen_lifts[j];
    for (std::size_t a = 0; ok && a < n; ++a) {
      for (std::size_t b = 0; ok && b < n; ++b) ok = gamma[a] * gamma[b] == gamma[image.mul(a, b)];
    }
    if (ok) return SplittingHom{std::move(gamma), std::move(gen_lifts)};
  }
  return std::nullopt;
}

bool odd_twist_valid(const Representation& r) {
  const auto m = r.group()->minus_identity();
  if (!m) throw DomainError("group does not contain -I");
  return r.image(*m).is_scalar(CycNum(r.group()->field(), Rational(-1)));
}

std::shared_ptr<const ActingGroup> ActingGroup::linear(GroupPtr group) {
  if (group->projective()) throw FormatError("expected a linear group");
  std::shared_ptr<ActingGroup> g(new ActingGroup());
  g->group_ = std::move(group);
  return g;
}

std::shared_ptr<const ActingGroup> ActingGroup::projective(GroupPtr group) {
  if (!group->projective()) throw FormatError("expected a projective group");
  std::shared_ptr<ActingGroup> g(new ActingGroup());
  g->gamma_ = extension_splits(*group);
  g->pgl_ = make_pgl_group(group);
  g->group_ = std::move(group);
  return g;
}

Parity ActingGroup::parity(int degree) const {
  return degree % 2 != 0 && !splits() ? Parity::odd_twist : Parity::plain;
}

const GroupPtr& ActingGroup::module_group(int degree) const {
  return parity(degree) == Parity::odd_twist ? pgl_->preimage : group_;
}

std::size_t ActingGroup::module_projection(int degree, std::size_t i) const {
  return parity(degree) == Parity::odd_twist ? pgl_->project[i] : i;
}

SL2Elem ActingGroup::lift(int degree, std::size_t i) const {
  if (!is_projective()) return group_->element(i);
  if (parity(degree) == Parity::odd_twist) return pgl_->preimage->element(i);
  if (degree % 2 == 0) return group_->element(i);
  return gamma_->lifts[i];
}

}  // namespace eqb

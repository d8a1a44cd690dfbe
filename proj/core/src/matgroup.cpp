#include "eqb/matgroup.hpp"

#include <algorithm>

#include "eqb/errors.hpp"

namespace eqb {

namespace {

SL2Elem normalize(const SL2Elem& g, bool projective) {
  return projective ? g.projective_normal() : g;
}

CycNum zeta_order(const CycField& f, int n, int k = 1) {
  if (f.modulus() % n != 0) throw FormatError("modulus does not contain the required roots of unity");
  return CycNum::zeta(f, static_cast<std::int64_t>(f.modulus() / n) * k);
}

}  // namespace

std::shared_ptr<const MatrixGroup> MatrixGroup::generate(const CycField& field,
                                                         std::vector<SL2Elem> generators,
                                                         std::size_t cap, bool projective) {
  std::shared_ptr<MatrixGroup> g(new MatrixGroup());
  g->field_ = &field;
  g->projective_ = projective;
  for (auto& x : generators) {
    if (&x.field() != &field) throw FormatError("generator over a different cyclotomic field");
    g->gens_.push_back(normalize(x, projective));
  }

  auto add = [&](SL2Elem x, std::size_t gen, std::size_t parent) {
    if (g->elements_.size() >= cap) {
      throw DomainError("group closure exceeds " + std::to_string(cap) + " elements");
    }
    g->index_.emplace(x, g->elements_.size());
    g->elements_.push_back(std::move(x));
    g->word_gen_.push_back(gen);
    g->word_parent_.push_back(parent);
  };
  add(SL2Elem::identity(field), 0, 0);
  for (std::size_t next = 0; next < g->elements_.size(); ++next) {
    for (std::size_t k = 0; k < g->gens_.size(); ++k) {
      SL2Elem y = normalize(g->gens_[k] * g->elements_[next], projective);
      if (!g->index_.contains(y)) add(std::move(y), k, next);
    }
  }
  for (const auto& x : g->gens_) g->gen_index_.push_back(g->index_.at(x));

  const std::size_t n = g->elements_.size();
  g->mul_.resize(n * n);
  g->sign_.assign(n * n, 1);
  g->inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SL2Elem p = g->elements_[i] * g->elements_[j];
      const SL2Elem q = normalize(p, projective);
      const std::size_t k = g->index_.at(q);
      g->mul_[i * n + j] = k;
      if (!(p == q)) g->sign_[i * n + j] = -1;
      if (k == 0) g->inv_[i] = j;
    }
  }

  g->class_of_.assign(n, n);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (g->class_of_[i] != n) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t c = g->mul(g->mul(h, i), g->inv_[h]);
      if (g->class_of_[c] == n) {
        g->class_of_[c] = 0;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    const auto tx = g->elements_[x[0]].trace();
    const auto ty = g->elements_[y[0]].trace();
    if (auto c = tx <=> ty; c != 0) return c < 0;
    return x[0] < y[0];
  });
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t i : classes[c]) g->class_of_[i] = c;
  }
  g->classes_ = std::move(classes);
  return g;
}

std::optional<std::size_t> MatrixGroup::find(const SL2Elem& g) const {
  auto it = index_.find(normalize(g, projective_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t x = i; x != 0; x = mul(x, i)) ++k;
  return i == 0 ? 1 : k;
}

std::optional<std::size_t> MatrixGroup::minus_identity() const {
  if (projective_) return std::nullopt;
  return find(-SL2Elem::identity(*field_));
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cyclic") return Family::cyclic;
  if (name == "binary_dihedral") return Family::binary_dihedral;
  if (name == "binary_tetrahedral") return Family::binary_tetrahedral;
  if (name == "binary_octahedral") return Family::binary_octahedral;
  if (name == "binary_icosahedral") return Family::binary_icosahedral;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::binary_dihedral: return "binary_dihedral";
    case Family::binary_tetrahedral: return "binary_tetrahedral";
    case Family::binary_octahedral: return "binary_octahedral";
    case Family::binary_icosahedral: return "binary_icosahedral";
  }
  return "";
}

int catalog_modulus(Family family, int n) {
  switch (family) {
    case Family::cyclic:
    case Family::binary_dihedral:
      if (n < 1) throw DomainError("family parameter must be at least 1");
      return 2 * n;
    case Family::binary_tetrahedral: return 4;
    case Family::binary_octahedral: return 8;
    case Family::binary_icosahedral: return 20;
  }
  return 1;
}

namespace {

std::vector<SL2Elem> family_generators(Family family, int n, const CycField& f, bool pgl_cyclic) {
  const CycNum one(f, Rational(1));
  const CycNum zero(f);
  const CycNum half(f, Rational(1, 2));
  auto diag = [&](const CycNum& x) { return SL2Elem(x, zero, zero, x.inverse()); };
  switch (family) {
    case Family::cyclic:
      return {pgl_cyclic ? diag(zeta_order(f, 2 * n)) : diag(zeta_order(f, n))};
    case Family::binary_dihedral:
      return {diag(zeta_order(f, 2 * n)), SL2Elem(zero, one, -one, zero)};
    case Family::binary_tetrahedral:
    case Family::binary_octahedral:
    case Family::binary_icosahedral: {
      const CycNum i = zeta_order(f, 4);
      const SL2Elem omega((i - one) * half, (i + one) * half, (i - one) * half, -(i + one) * half);
      if (family == Family::binary_tetrahedral) return {diag(i), omega};
      if (family == Family::binary_octahedral) return {omega, diag(zeta_order(f, 8))};
      const CycNum z5 = zeta_order(f, 5);
      const CycNum phi_inv = z5 + z5.pow(4);
      const CycNum phi = one + phi_inv;
      const SL2Elem q((phi + phi_inv * i) * half, half, -half, (phi - phi_inv * i) * half);
      return {diag(i), q};
    }
  }
  return {};
}

std::size_t family_order(Family family, int n, bool projective) {
  std::size_t o = 0;
  switch (family) {
    case Family::cyclic: return static_cast<std::size_t>(n);
    case Family::binary_dihedral: o = 4 * static_cast<std::size_t>(n); break;
    case Family::binary_tetrahedral: o = 24; break;
    case Family::binary_octahedral: o = 48; break;
    case Family::binary_icosahedral: o = 120; break;
  }
  return projective ? o / 2 : o;
}

}  // namespace

CatalogEntry catalog(Family family, int n, const CycField& field) {
  const int m = catalog_modulus(family, n);
  if (field.modulus() % m != 0) throw FormatError("field does not contain the catalog modulus");
  return {m, family_generators(family, n, field, false), family_order(family, n, false)};
}

CatalogEntry catalog(Family family, int n) {
  return catalog(family, n, CycField::get(catalog_modulus(family, n)));
}

CatalogEntry pgl_catalog(Family family, int n, const CycField& field) {
  const int m = catalog_modulus(family, n);
  if (field.modulus() % m != 0) throw FormatError("field does not contain the catalog modulus");
  return {m, family_generators(family, n, field, true), family_order(family, n, true)};
}

CatalogEntry pgl_catalog(Family family, int n) {
  return pgl_catalog(family, n, CycField::get(catalog_modulus(family, n)));
}

Representation Representation::from_generators(GroupPtr group, const std::vector<CycMatrix>& images) {
  const MatrixGroup& g = *group;
  if (images.size() != g.generators().size()) {
    throw FormatError("expected one image per generator");
  }
  const std::size_t dim = images.empty() ? 1 : images[0].rows();
  for (const auto& m : images) {
    if (m.rows() != dim || m.cols() != dim) throw FormatError("generator images must be square of equal size");
    if (&m.field() != &g.field()) throw FormatError("image over a different cyclotomic field");
  }
  std::vector<CycMatrix> all;
  all.reserve(g.order());
  all.push_back(CycMatrix::identity(g.field(), dim));
  for (std::size_t i = 1; i < g.order(); ++i) all.push_back(images[g.word_gen(i)] * all[g.word_parent(i)]);
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (!(all[g.mul(g.generator_index(k), i)] == images[k] * all[i])) {
        throw DomainError("generator images do not define a representation");
      }
    }
  }
  return Representation(std::move(group), dim, std::move(all));
}

Representation Representation::from_images(GroupPtr group, std::vector<CycMatrix> images) {
  const MatrixGroup& g = *group;
  if (images.size() != g.order()) throw FormatError("expected one image per element");
  const std::size_t dim = images[0].rows();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (!(images[g.mul(i, j)] == images[i] * images[j])) {
        throw DomainError("images do not respect the multiplication table");
      }
    }
  }
  return Representation(std::move(group), dim, std::move(images));
}

Representation Representation::trivial(GroupPtr group, std::size_t dim) {
  std::vector<CycMatrix> all(group->order(), CycMatrix::identity(group->field(), dim));
  return Representation(std::move(group), dim, std::move(all));
}

Representation Representation::standard(GroupPtr group) {
  if (group->projective()) throw DomainError("a projective group has no defining 2-dimensional representation");
  std::vector<CycMatrix> all;
  for (const auto& x : group->elements()) all.push_back(x.matrix());
  return Representation(std::move(group), 2, std::move(all));
}

Representation Representation::regular(GroupPtr group) {
  const std::size_t n = group->order();
  std::vector<CycMatrix> all;
  const CycNum one(group->field(), Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    CycMatrix m(group->field(), n, n);
    for (std::size_t j = 0; j < n; ++j) m(group->mul(i, j), j) = one;
    all.push_back(std::move(m));
  }
  return Representation(std::move(group), n, std::move(all));
}

Representation Representation::symmetric_power(GroupPtr group, int d) {
  if (d < 0) throw DomainError("negative symmetric power");
  if (group->projective() && d % 2 != 0) {
    throw DomainError("odd symmetric powers are not representations of a projective group");
  }
  std::vector<CycMatrix> all;
  for (const auto& x : group->elements()) all.push_back(eqb::symmetric_power(x, d));
  return Representation(std::move(group), static_cast<std::size_t>(d) + 1, std::move(all));
}

Representation Representation::character_from_values(GroupPtr group, const std::vector<CycNum>& values) {
  std::vector<CycMatrix> images;
  for (const auto& v : values) images.push_back(CycMatrix::from_rows(group->field(), {{v}}));
  return from_generators(std::move(group), images);
}

std::vector<CycMatrix> Representation::generator_images() const {
  std::vector<CycMatrix> out;
  for (std::size_t k = 0; k < group_->generators().size(); ++k) out.push_back(images_[group_->generator_index(k)]);
  return out;
}

Representation Representation::conjugated(const CycMatrix& p) const {
  const CycMatrix pinv = p.inverse();
  std::vector<CycMatrix> all;
  for (const auto& m : images_) all.push_back(pinv * m * p);
  return Representation(group_, dim_, std::move(all));
}

Representation Representation::dual() const {
  std::vector<CycMatrix> all;
  for (const auto& m : images_) all.push_back(m.inverse().transpose());
  return Representation(group_, dim_, std::move(all));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw FormatError("representations of different groups");
  std::vector<CycMatrix> all;
  for (std::size_t i = 0; i < a.group()->order(); ++i) all.push_back(direct_sum(a.image(i), b.image(i)));
  return Representation::from_images(a.group(), std::move(all));
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw FormatError("representations of different groups");
  std::vector<CycMatrix> all;
  for (std::size_t i = 0; i < a.group()->order(); ++i) all.push_back(kron(a.image(i), b.image(i)));
  return Representation::from_images(a.group(), std::move(all));
}

std::vector<CycNum> character(const Representation& r) {
  std::vector<CycNum> out;
  for (const auto& cls : r.group()->classes()) out.push_back(r.image(cls[0]).trace());
  return out;
}

bool module_isomorphic(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw FormatError("representations of different groups");
  return a.dim() == b.dim() && character(a) == character(b);
}

CycMatrix reynolds(const Representation& r) {
  CycMatrix sum(r.group()->field(), r.dim(), r.dim());
  for (const auto& m : r.images()) sum = sum + m;
  return sum.scaled(CycNum(r.group()->field(), Rational(1, static_cast<std::int64_t>(r.group()->order()))));
}

std::vector<Representation> linear_characters(const GroupPtr& group) {
  const MatrixGroup& g = *group;
  const auto roots = roots_of_unity(g.field());
  std::vector<std::vector<CycNum>> candidates;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const std::size_t o = g.element_order(g.generator_index(k));
    std::vector<CycNum> c;
    for (const auto& r : roots) {
      if (r.pow(static_cast<std::int64_t>(o)).is_one()) c.push_back(r);
    }
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<CycNum>> found;
  std::vector<std::size_t> pick(candidates.size(), 0);
  std::vector<CycNum> value(g.order(), CycNum(g.field()));
  while (true) {
    value[0] = CycNum(g.field(), Rational(1));
    for (std::size_t i = 1; i < g.order(); ++i) {
      value[i] = candidates[g.word_gen(i)][pick[g.word_gen(i)]] * value[g.word_parent(i)];
    }
    bool ok = true;
    for (std::size_t k = 0; ok && k < candidates.size(); ++k) {
      const CycNum& v = candidates[k][pick[k]];
      for (std::size_t i = 0; ok && i < g.order(); ++i) ok = value[g.mul(g.generator_index(k), i)] == v * value[i];
    }
    if (ok) {
      std::vector<CycNum> vals;
      for (std::size_t k = 0; k < candidates.size(); ++k) vals.push_back(candidates[k][pick[k]]);
      found.push_back(std::move(vals));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Representation> out;
  for (const auto& vals : found) out.push_back(Representation::character_from_values(group, vals));
  return out;
}

}  // namespace eqb

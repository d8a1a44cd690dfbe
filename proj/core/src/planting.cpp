#include "eqb/planting.hpp"

#include <algorithm>

#include "eqb/extensions.hpp"

namespace eqb {

std::vector<Representation> module_pool(const GroupPtr& group, bool odd_only) {
  std::vector<Representation> pool;
  auto keep = [&](Representation r) {
    if (!odd_only || odd_twist_valid(r)) pool.push_back(std::move(r));
  };
  const auto chars = linear_characters(group);
  for (const auto& c : chars) keep(c);
  if (!group->projective()) {
    const auto st = Representation::standard(group);
    keep(st);
    for (const auto& c : chars) {
      const auto g = c.generator_images();
      if (std::all_of(g.begin(), g.end(), [](const CycMatrix& m) { return m.is_identity(); })) continue;
      keep(tensor(st, c));
    }
  }
  keep(Representation::symmetric_power(group, 2));
  return pool;
}

Representation random_module(const std::vector<Representation>& pool, std::size_t max_dim, Rng& rng) {
  std::vector<const Representation*> fits;
  for (const auto& r : pool) {
    if (r.dim() <= max_dim) fits.push_back(&r);
  }
  if (fits.empty()) throw DomainError("no module of dimension <= " + std::to_string(max_dim) + " in the pool");
  Representation out = *fits[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(fits.size()) - 1))];
  while (out.dim() < max_dim && rng.uniform(0, 2) == 0) {
    std::vector<const Representation*> more;
    for (const auto* r : fits) {
      if (out.dim() + r->dim() <= max_dim) more.push_back(r);
    }
    if (more.empty()) break;
    out = direct_sum(out, *more[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(more.size()) - 1))]);
  }
  return out.conjugated(random_invertible(out.group()->field(), out.dim(), rng));
}

CanonicalForm random_canonical_form(const ActingGroupPtr& group, const FormShape& shape, Rng& rng) {
  std::vector<int> degrees;
  for (int d = shape.min_degree; d <= shape.max_degree; ++d) degrees.push_back(d);
  for (std::size_t i = degrees.size(); i > 1; --i) {
    std::swap(degrees[i - 1], degrees[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  }
  const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<CanonicalEntry> entries;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < count && k < degrees.size() && rank < shape.max_rank; ++k) {
    const int d = degrees[k];
    const Parity p = group->parity(d);
    const auto pool = module_pool(group->module_group(d), p == Parity::odd_twist);
    const std::size_t room = std::min(shape.max_module_dim, shape.max_rank - rank);
    bool fits = false;
    for (const auto& r : pool) fits = fits || r.dim() <= room;
    if (!fits) continue;
    Representation m = random_module(pool, room, rng);
    rank += m.dim();
    entries.push_back({d, p, std::move(m)});
  }
  return normalize(group, std::move(entries));
}

RatMat random_automorphism(const EquivariantBundle& e, int max_entry_degree, Rng& rng) {
  const CycField& f = e.base().field();
  const std::size_t r = e.rank();
  const RatMat& t = e.base().matrix();
  std::vector<int> d;
  for (std::size_t i = 0; i < r; ++i) {
    const RatFun& x = t(i, i);
    if (!x.is_laurent() || x.laurent_low() != x.laurent_high()) throw DomainError("expected a diagonal transition");
    d.push_back(x.laurent_low());
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (d[i] > d[i - 1]) throw DomainError("expected decreasing degrees");
  }
  RatMat phi(f, r, r);
  std::size_t start = 0;
  while (start < r) {
    std::size_t end = start;
    while (end < r && d[end] == d[start]) ++end;
    phi.set_block(start, start, RatMat::from_constant(random_invertible(f, end - start, rng)));
    start = end;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (d[i] > d[j]) phi(i, j) = RatFun(random_poly(f, std::min(d[i] - d[j], max_entry_degree), rng));
    }
  }
  return phi;
}

EquivariantBundle random_twist(const EquivariantBundle& e, int max_entry_degree, int frame_degree, Rng& rng) {
  const CycField& f = e.base().field();
  const std::size_t r = e.rank();
  const EquivariantBundle twisted = apply_automorphism(e, random_automorphism(e, max_entry_degree, rng));
  return change_frame(twisted, random_unimodular(f, r, frame_degree, rng),
                      random_unimodular_inverse(f, r, frame_degree, rng));
}

}  // namespace eqb

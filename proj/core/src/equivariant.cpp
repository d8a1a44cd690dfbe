#include "eqb/equivariant.hpp"

#include <algorithm>

#include "eqb/errors.hpp"
#include "eqb/moebius.hpp"

namespace eqb {

namespace {

// Every denominator divides a power of (c z + d).
bool poles_within(const RatMat& m, const CycNum& c, const CycNum& d) {
  const CycField& f = m.field();
  const CycNum one(f, Rational(1));
  std::optional<Poly> base;
  if (!c.is_zero()) base = Poly::linear(one, d / c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& den = m(i, j).den();
      if (den.is_one()) continue;
      if (!base) return false;
      if (!(den == base->pow(static_cast<unsigned>(den.degree())))) return false;
    }
  }
  return true;
}

RatMat flip(const RatMat& m) {
  const CycField& f = m.field();
  const CycNum zero(f);
  const CycNum one(f, Rational(1));
  return m.substitute(zero, one, one, zero);
}

bool lower_left_zero(const RatMat& m, std::size_t s) {
  for (std::size_t i = s; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool polynomial_in_inverse_z(const RatMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFun& x = m(i, j);
      if (!x.is_zero() && (!x.is_laurent() || x.laurent_high() > 0)) return false;
    }
  }
  return true;
}

RatMat scalar_block(const RatFun& s, const CycMatrix& m) { return RatMat::from_constant(m).scaled(s); }

}  // namespace

EquivariantBundle::EquivariantBundle(TransitionCocycle base, ActingGroupPtr group, std::vector<RatMat> generator_actions)
    : base_(std::move(base)), group_(std::move(group)), gen_actions_(std::move(generator_actions)) {
  const MatrixGroup& g = *group_->group();
  if (&g.field() != &base_.field()) throw FormatError("group and bundle use different cyclotomic fields");
  if (gen_actions_.size() != g.generators().size()) throw FormatError("expected one action matrix per generator");
  for (const auto& a : gen_actions_) {
    if (a.rows() != rank() || a.cols() != rank()) throw FormatError("action matrix size differs from the rank");
    if (&a.field() != &base_.field()) throw FormatError("action over a different cyclotomic field");
  }
}

const std::vector<RatMat>& EquivariantBundle::all_actions() const {
  std::call_once(cache_->once, [this] {
    const MatrixGroup& g = group();
    auto& acts = cache_->actions;
    acts.reserve(g.order());
    acts.push_back(RatMat::identity(base_.field(), rank()));
    for (std::size_t i = 1; i < g.order(); ++i) {
      const std::size_t p = g.word_parent(i);
      acts.push_back(compose(gen_actions_[g.word_gen(i)], g.element(p)) * acts[p]);
    }
  });
  return cache_->actions;
}

RatMat EquivariantBundle::inverse_action(std::size_t i) const {
  return compose(action(group().inverse(i)), group().element(i));
}

RatMat chart1_action(const EquivariantBundle& e, std::size_t i) {
  const SL2Elem& g = e.group().element(i);
  return flip(compose(e.base().inverse(), g) * e.action(i) * e.base().matrix());
}

EquivariantBundle change_frame(const EquivariantBundle& e, const RatMat& a, const RatMat& b) {
  const RatMat ainv = laurent_inverse(a);
  TransitionCocycle t(ainv * e.base().matrix() * b);
  std::vector<RatMat> acts;
  const MatrixGroup& g = e.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    acts.push_back(compose(ainv, g.generators()[k]) * e.generator_actions()[k] * a);
  }
  return EquivariantBundle(std::move(t), e.acting(), std::move(acts));
}

EquivariantBundle apply_automorphism(const EquivariantBundle& e, const RatMat& phi) {
  return change_frame(e, phi, e.base().inverse() * phi * e.base().matrix());
}

EquivariantBundle natural_structure(int n, const ActingGroupPtr& group) {
  if (group->parity(n) == Parity::odd_twist) {
    throw DomainError("O(" + std::to_string(n) +
                      ") has no equivariant structure: the central extension does not split");
  }
  const CycField& f = group->field();
  RatMat t(f, 1, 1);
  t(0, 0) = RatFun::monomial(CycNum(f, Rational(1)), n);
  std::vector<RatMat> acts;
  for (std::size_t k = 0; k < group->group()->generators().size(); ++k) {
    RatMat a(f, 1, 1);
    a(0, 0) = automorphy_factor(group->lift(n, group->group()->generator_index(k)), n);
    acts.push_back(std::move(a));
  }
  return EquivariantBundle(TransitionCocycle(std::move(t)), group, std::move(acts));
}

EquivarianceReport validate_equivariance(const EquivariantBundle& e) {
  EquivarianceReport rep;
  const MatrixGroup& g = e.group();
  auto issue = [&](Violation v, std::size_t a, std::size_t b, std::string detail) {
    rep.valid = false;
    rep.issues.push_back({v, a, b, std::move(detail)});
  };
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const std::size_t gi = g.generator_index(k);
    for (std::size_t h = 0; h < g.order(); ++h) {
      const std::size_t gh = g.mul(gi, h);
      // a_{gh} was defined by this very product
      if (gh != 0 && g.word_gen(gh) == k && g.word_parent(gh) == h) continue;
      const RatMat rhs = compose(e.generator_actions()[k], g.element(h)) * e.action(h);
      if (!(e.action(gh) == rhs)) issue(Violation::cocycle, gi, h, "a_{gh}(z) != a_g(h.z) a_h(z)");
    }
  }
  // Regularity of the generators implies it for their products and inverses
  // once the cocycle law holds, since each a_g is then a composite of
  // holomorphic bundle maps.
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const std::size_t i = g.generator_index(k);
    const SL2Elem& x = g.element(i);
    if (!poles_within(e.action(i), x.c, x.d)) issue(Violation::chart0_pole, i, 0, "a_g has a pole where g.z is finite");
    if (!poles_within(e.inverse_action(i), x.c, x.d)) {
      issue(Violation::chart0_inverse_pole, i, 0, "a_g^-1 has a pole where g.z is finite");
    }
    if (!poles_within(chart1_action(e, i), x.b, x.a)) {
      issue(Violation::chart1_pole, i, 0, "chart-1 action has a pole where g.z != 0");
    }
    const RatMat a1inv = flip(e.base().inverse() * e.inverse_action(i) * compose(e.base().matrix(), x));
    if (!poles_within(a1inv, x.b, x.a)) {
      issue(Violation::chart1_inverse_pole, i, 0, "chart-1 inverse action has a pole where g.z != 0");
    }
  }
  return rep;
}

HNInvarianceReport check_hn_invariance(const EquivariantBundle& e) {
  HNInvarianceReport rep;
  const HNFiltration hn = hn_filtration(e.base());
  const MatrixGroup& g = e.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    for (std::size_t j = 0; j < hn.length(); ++j) {
      const RatMat& basis = hn.bases[j];
      const std::size_t r = basis.cols();
      const RatMat image = e.generator_actions()[k] * basis;
      const RatMat target = compose(basis, g.generators()[k]);
      RatMat both(e.base().field(), basis.rows(), 2 * r);
      both.set_block(0, 0, target);
      both.set_block(0, r, image);
      if (both.rank() != r) {
        rep.invariant = false;
        rep.failures.emplace_back(k, j);
      }
    }
  }
  return rep;
}

AveragedSplitting equivariant_splitting(const EquivariantBundle& e, std::size_t sub_rank, const RatMat& psi) {
  const std::size_t n = e.rank();
  const std::size_t s = sub_rank;
  if (s == 0 || s >= n) throw DomainError("subbundle rank must lie strictly between 0 and the rank");
  const std::size_t q = n - s;
  if (psi.rows() != n || psi.cols() != q) throw DomainError("splitting has the wrong shape");
  const MatrixGroup& g = e.group();
  const RatMat& t = e.base().matrix();
  if (!lower_left_zero(t, s)) throw DomainError("the frame does not exhibit the subbundle");
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!lower_left_zero(e.action(i), s)) throw DomainError("the subbundle is not invariant under the action");
  }
  const RatMat tq = t.block(s, s, q, q);
  auto holomorphic = [&](const RatMat& m) {
    return m.is_polynomial() && polynomial_in_inverse_z(e.base().inverse() * m * tq);
  };
  if (!psi.block(s, 0, q, q).is_identity()) throw DomainError("psi is not a section of the quotient map");
  if (!holomorphic(psi)) throw DomainError("psi is not holomorphic");

  AveragedSplitting out{psi, RatMat(e.base().field(), n, q)};
  for (std::size_t i = 0; i < g.order(); ++i) {
    const RatMat zg = e.action(i).block(s, s, q, q);
    out.averaged = out.averaged + e.inverse_action(i) * compose(psi, g.element(i)) * zg;
  }
  const CycNum inv_order(e.base().field(), Rational(1, static_cast<std::int64_t>(g.order())));
  out.averaged = out.averaged.scaled(RatFun::constant(inv_order));

  out.is_section = out.averaged.block(s, 0, q, q).is_identity();
  out.holomorphic = holomorphic(out.averaged);
  out.equivariant = true;
  for (std::size_t i = 0; i < g.order() && out.equivariant; ++i) {
    const RatMat zg = e.action(i).block(s, s, q, q);
    out.equivariant = e.action(i) * out.averaged == compose(out.averaged, g.element(i)) * zg;
  }
  return out;
}

ExtractedModule extract_module(const EquivariantBundle& w, int degree) {
  const std::size_t r = w.rank();
  const CycField& f = w.base().field();
  for (int d : splitting_type(w.base())) {
    if (d != degree) throw DomainError("graded piece is not semistable of slope " + std::to_string(degree));
  }
  const RatMat s = h0_basis(w.base(), -degree);
  if (s.cols() != r) throw DomainError("H^0(Hom(O(d), W)) has the wrong dimension");

  ExtractionCertificate cert{degree, s};
  RatMat sinv(f, r, r);
  try {
    sinv = laurent_inverse(s);
    const RatMat chart1 = w.base().inverse() * s.scaled(RatFun::monomial(CycNum(f, Rational(1)), degree));
    cert.isomorphism = s.is_polynomial() && is_unimodular_in_z(s) && is_unimodular_in_inverse_z(chart1);
  } catch (const DomainError&) {
    cert.isomorphism = false;
  }
  if (!cert.isomorphism) throw DomainError("evaluation map is not an isomorphism");

  const ActingGroup& acting = *w.acting();
  const GroupPtr& mg = acting.module_group(degree);
  const MatrixGroup& g = w.group();
  std::vector<CycMatrix> images;
  std::vector<RatFun> factors;
  std::vector<std::size_t> through;
  for (std::size_t k = 0; k < mg->generators().size(); ++k) {
    const std::size_t gi = mg->generator_index(k);
    const std::size_t x = acting.module_projection(degree, gi);
    const SL2Elem lift = acting.lift(degree, gi);
    const RatFun j = automorphy_factor(lift, degree);
    // (g.s)(z) = a_g(u) s(u) j_g(u)^-1 at u = g^-1 z
    const RatMat moved = compose(w.action(x) * s.scaled(j.inverse()), g.element(g.inverse(x)));
    const auto m = (sinv * moved).to_constant();
    if (!m) throw DomainError("transported section is not a combination of the basis");
    images.push_back(*m);
    factors.push_back(j);
    through.push_back(x);
  }
  Representation module = Representation::from_generators(mg, images);
  cert.equivariant = true;
  for (std::size_t k = 0; k < images.size() && cert.equivariant; ++k) {
    const std::size_t x = through[k];
    cert.equivariant = w.action(x) * s == compose(s, g.element(x)) * scalar_block(factors[k], images[k]);
  }
  return {std::move(module), std::move(cert)};
}

std::size_t CanonicalForm::rank() const {
  std::size_t r = 0;
  for (const auto& e : entries) r += e.module.dim();
  return r;
}

CanonicalForm normalize(ActingGroupPtr group, std::vector<CanonicalEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CanonicalEntry& a, const CanonicalEntry& b) { return a.degree > b.degree; });
  CanonicalForm out{std::move(group), {}};
  for (auto& e : entries) {
    if (!out.entries.empty() && out.entries.back().degree == e.degree) {
      out.entries.back().module = direct_sum(out.entries.back().module, e.module);
    } else {
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

bool same_canonical_form(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.group != b.group) throw FormatError("canonical forms over different group objects");
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.degree != y.degree || x.parity != y.parity) return false;
    if (x.module.group() != y.module.group() || !module_isomorphic(x.module, y.module)) return false;
  }
  return true;
}

EquivariantBundle build_from_canonical(const CanonicalForm& cf) {
  const ActingGroup& acting = *cf.group;
  const CycField& f = acting.field();
  if (cf.entries.empty()) throw FormatError("canonical form without entries");
  for (const auto& e : cf.entries) {
    const Parity expected = acting.parity(e.degree);
    if (e.parity != expected) {
      if (expected == Parity::odd_twist) {
        throw DomainError("O(" + std::to_string(e.degree) +
                          ") (x) M with a plain module: the central extension does not split");
      }
      throw DomainError("odd_twist module attached to O(" + std::to_string(e.degree) + ") where none is allowed");
    }
    if (e.module.group() != acting.module_group(e.degree)) throw FormatError("module over the wrong group");
    if (e.parity == Parity::odd_twist && !odd_twist_valid(e.module)) {
      throw DomainError("odd_twist module on which -I does not act as -1");
    }
  }
  const std::size_t r = cf.rank();
  std::vector<RatFun> diag;
  for (const auto& e : cf.entries) {
    for (std::size_t i = 0; i < e.module.dim(); ++i) diag.push_back(RatFun::monomial(CycNum(f, Rational(1)), e.degree));
  }
  const MatrixGroup& g = *acting.group();
  std::vector<RatMat> acts;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const std::size_t gi = g.generator_index(k);
    RatMat a(f, r, r);
    std::size_t off = 0;
    for (const auto& e : cf.entries) {
      const std::size_t mi = e.parity == Parity::odd_twist ? acting.pgl()->lift[gi] : gi;
      a.set_block(off, off, scalar_block(automorphy_factor(acting.lift(e.degree, mi), e.degree), e.module.image(mi)));
      off += e.module.dim();
    }
    acts.push_back(std::move(a));
  }
  return EquivariantBundle(TransitionCocycle(RatMat::diagonal(diag)), cf.group, std::move(acts));
}

namespace {

EquivariantBundle restrict(const EquivariantBundle& e, std::size_t off, std::size_t n,
                           const std::vector<RatMat>& gen_actions) {
  std::vector<RatMat> acts;
  for (const auto& a : gen_actions) acts.push_back(a.block(off, off, n, n));
  return EquivariantBundle(TransitionCocycle(e.base().matrix().block(off, off, n, n)), e.acting(), std::move(acts));
}

}  // namespace

Classification classify(const EquivariantBundle& e) {
  const CycField& f = e.base().field();
  Classification out{CanonicalForm{e.acting(), {}}, birkhoff_factor(e.base()), false, {}, {}, {}, {}};
  out.factorization_verified = verify_factorization(e.base(), out.factorization);
  if (!out.factorization_verified) throw DomainError("internal error: Birkhoff factorization failed verification");

  // Validity and HN invariance are unchanged by a change of frame, and the
  // split frame keeps the entries small.
  EquivariantBundle cur = change_frame(e, out.factorization.plus, laurent_inverse(out.factorization.minus));
  out.validation = validate_equivariance(cur);
  if (!out.validation.valid) {
    throw DomainError("invalid equivariant structure: " + out.validation.issues.front().detail);
  }
  out.invariance = check_hn_invariance(cur);
  if (!out.invariance.invariant) {
    throw DomainError("invalid equivariant structure: the Harder-Narasimhan filtration is not preserved");
  }

  std::vector<int> degrees = out.factorization.degrees;
  std::vector<std::pair<int, EquivariantBundle>> pieces;
  while (degrees.front() != degrees.back()) {
    const std::size_t n = degrees.size();
    std::size_t q = 0;
    while (degrees[n - 1 - q] == degrees.back()) ++q;
    const std::size_t s = n - q;
    RatMat psi(f, n, q);
    psi.set_block(s, 0, RatMat::identity(f, q));
    SplitStage stage{degrees, s, cur.generator_actions(), equivariant_splitting(cur, s, psi)};
    const AveragedSplitting& avg = stage.splitting;
    if (!avg.is_section || !avg.equivariant || !avg.holomorphic) {
      throw DomainError("averaged splitting failed its identities");
    }
    RatMat fm = RatMat::identity(f, n);
    fm.set_block(0, s, avg.averaged.block(0, 0, s, q));
    const RatMat& t = cur.base().matrix();
    const EquivariantBundle split = change_frame(cur, fm, cur.base().inverse() * fm * t);
    for (const auto& a : split.generator_actions()) {
      if (!a.block(0, s, s, q).is_zero()) throw DomainError("averaged splitting did not decouple the action");
    }
    out.stages.push_back(std::move(stage));
    pieces.emplace_back(degrees.back(), restrict(split, s, q, split.generator_actions()));
    cur = restrict(split, 0, s, split.generator_actions());
    degrees.resize(s);
  }
  pieces.emplace_back(degrees.front(), cur);

  std::vector<CanonicalEntry> entries;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    ExtractedModule m = extract_module(it->second, it->first);
    if (!m.certificate.equivariant) throw DomainError("evaluation map is not equivariant");
    out.extractions.push_back(m.certificate);
    entries.push_back({it->first, e.acting()->parity(it->first), std::move(m.module)});
  }
  out.form = normalize(e.acting(), std::move(entries));
  return out;
}

bool equiv_isomorphic(const EquivariantBundle& a, const EquivariantBundle& b) {
  if (a.acting() != b.acting()) throw FormatError("bundles over different group objects");
  return same_canonical_form(classify(a).form, classify(b).form);
}

}  // namespace eqb

#include "eqb/sections.hpp"

#include <algorithm>

#include "eqb/errors.hpp"
#include "eqb/moebius.hpp"

namespace eqb {

namespace {

std::size_t module_index(const ActingGroup& g, const CanonicalEntry& e, std::size_t i) {
  return e.parity == Parity::odd_twist ? g.pgl()->lift[i] : i;
}

CycNum sym_trace(int d, const CycNum& t) {
  const CycField& f = t.field();
  CycNum prev(f);
  CycNum cur(f, Rational(1));
  for (int k = 1; k <= d; ++k) {
    CycNum next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Coefficient vectors of the columns of a polynomial matrix, degrees < len.
CycMatrix coefficients(const RatMat& m, std::size_t len) {
  CycMatrix out(m.field(), m.rows() * len, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& p = m(i, j).num();
      for (int k = 0; k <= p.degree(); ++k) out(i * len + static_cast<std::size_t>(k), j) = p.coeff(k);
    }
  }
  return out;
}

int max_degree(const RatMat& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_polynomial()) throw DomainError("section with a pole");
      d = std::max(d, m(i, j).num().degree());
    }
  }
  return d;
}

}  // namespace

std::size_t sections_dimension(const CanonicalForm& cf) {
  std::size_t n = 0;
  for (const auto& e : cf.entries) {
    if (e.degree >= 0) n += static_cast<std::size_t>(e.degree + 1) * e.module.dim();
  }
  return n;
}

bool central_cancellation(const CanonicalForm& cf) {
  const ActingGroup& g = *cf.group;
  for (const auto& e : cf.entries) {
    if (e.parity != Parity::odd_twist || e.degree < 0) continue;
    const std::size_t m = g.pgl()->minus_identity;
    const CycMatrix act = kron(symmetric_power(e.module.group()->element(m), e.degree), e.module.image(m));
    if (!act.is_identity()) return false;
  }
  return true;
}

Representation sections_module(const CanonicalForm& cf) {
  if (!central_cancellation(cf)) throw DomainError("-I does not act trivially on the sections");
  const ActingGroup& g = *cf.group;
  const MatrixGroup& h = *g.group();
  std::vector<CycMatrix> images;
  for (std::size_t i = 0; i < h.order(); ++i) {
    std::optional<CycMatrix> acc;
    for (const auto& e : cf.entries) {
      if (e.degree < 0) continue;
      const std::size_t mi = module_index(g, e, i);
      CycMatrix block = kron(symmetric_power(g.lift(e.degree, mi), e.degree), e.module.image(mi));
      acc = acc ? direct_sum(*acc, block) : std::move(block);
    }
    images.push_back(acc ? std::move(*acc) : CycMatrix(g.field(), 0, 0));
  }
  return Representation::from_images(g.group(), std::move(images));
}

std::vector<CycNum> sections_character(const CanonicalForm& cf) {
  const ActingGroup& g = *cf.group;
  std::vector<CycNum> out;
  for (const auto& cls : g.group()->classes()) {
    CycNum v(g.field());
    for (const auto& e : cf.entries) {
      if (e.degree < 0) continue;
      const std::size_t mi = module_index(g, e, cls.front());
      v += sym_trace(e.degree, g.lift(e.degree, mi).trace()) * e.module.image(mi).trace();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CycNum> transported_sections_character(const CanonicalForm& cf) {
  const EquivariantBundle e = build_from_canonical(cf);
  const RatMat s = h0_basis(e.base(), 0);
  const MatrixGroup& g = e.group();
  std::vector<CycNum> out;
  if (s.cols() == 0) {
    out.assign(g.classes().size(), CycNum(e.base().field()));
    return out;
  }
  for (const auto& cls : g.classes()) {
    const std::size_t i = cls.front();
    const RatMat moved = compose(e.action(i) * s, g.element(g.inverse(i)));
    const auto len = static_cast<std::size_t>(std::max(max_degree(s), max_degree(moved)) + 1);
    const auto r = coefficients(s, len).solve(coefficients(moved, len));
    if (!r) throw DomainError("transported section is not a global section");
    out.push_back(r->trace());
  }
  return out;
}

}  // namespace eqb

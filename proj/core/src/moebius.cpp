#include "eqb/moebius.hpp"

#include "eqb/errors.hpp"

namespace eqb {

SL2Elem::SL2Elem(CycNum a_, CycNum b_, CycNum c_, CycNum d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (!(a * d - b * c).is_one()) throw DomainError("SL(2) element with determinant != 1");
}

SL2Elem SL2Elem::identity(const CycField& field) {
  const CycNum one(field, Rational(1));
  const CycNum zero(field);
  return SL2Elem(one, zero, zero, one, Unchecked{});
}

bool SL2Elem::is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

bool SL2Elem::is_minus_identity() const {
  return (-a).is_one() && b.is_zero() && c.is_zero() && (-d).is_one();
}

CycMatrix SL2Elem::matrix() const { return CycMatrix::from_rows(field(), {{a, b}, {c, d}}); }

SL2Elem SL2Elem::projective_normal() const {
  for (const CycNum* x : {&a, &b, &c, &d}) {
    if (x->is_zero()) continue;
    for (const auto& q : x->coeffs()) {
      if (q.is_zero()) continue;
      return q.sign() > 0 ? *this : -*this;
    }
  }
  return *this;
}

SL2Elem operator*(const SL2Elem& x, const SL2Elem& y) {
  return SL2Elem(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                 x.c * y.b + x.d * y.d, SL2Elem::Unchecked{});
}

std::strong_ordering operator<=>(const SL2Elem& x, const SL2Elem& y) {
  if (auto c = x.a <=> y.a; c != 0) return c;
  if (auto c = x.b <=> y.b; c != 0) return c;
  if (auto c = x.c <=> y.c; c != 0) return c;
  return x.d <=> y.d;
}

ProjPoint::ProjPoint(CycNum x_, CycNum y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x.is_zero() && y.is_zero()) throw DomainError("[0 : 0] is not a point of P^1");
}

ProjPoint ProjPoint::affine(const CycNum& z) { return ProjPoint(z, CycNum(z.field(), Rational(1))); }

ProjPoint ProjPoint::infinity(const CycField& field) {
  return ProjPoint(CycNum(field, Rational(1)), CycNum(field));
}

bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.x * q.y == p.y * q.x; }

ProjPoint act_point(const SL2Elem& g, const ProjPoint& p) {
  return ProjPoint(g.a * p.x + g.b * p.y, g.c * p.x + g.d * p.y);
}

std::vector<ProjPoint> fixed_points(const SL2Elem& g) {
  std::vector<ProjPoint> out;
  const CycField& f = g.field();
  for (const auto& mu : roots_of_unity(f)) {
    // g - mu I, kernel vector gives an eigenvector
    const CycMatrix m = CycMatrix::from_rows(f, {{g.a - mu, g.b}, {g.c, g.d - mu}});
    const CycMatrix ker = m.kernel();
    for (std::size_t k = 0; k < ker.cols(); ++k) {
      ProjPoint p(ker(0, k), ker(1, k));
      bool seen = false;
      for (const auto& q : out) seen = seen || q == p;
      if (!seen) out.push_back(p);
    }
  }
  if (out.empty()) throw DomainError("fixed points of this element do not lie in the field");
  return out;
}

MoebiusSubstitution moebius_substitution(const SL2Elem& g) { return MoebiusSubstitution(g.a, g.b, g.c, g.d); }

RatFun compose(const RatFun& f, const SL2Elem& g) {
  auto sub = moebius_substitution(g);
  return sub.apply(f);
}

RatMat compose(const RatMat& m, const SL2Elem& g) {
  auto sub = moebius_substitution(g);
  return m.substitute(sub);
}

Poly automorphy_base(const SL2Elem& g) { return Poly::linear(g.c, g.d); }

RatFun automorphy_factor(const SL2Elem& g, int n) { return RatFun(automorphy_base(g)).pow(-n); }

CycMatrix symmetric_power(const SL2Elem& g, int n) {
  if (n < 0) throw DomainError("negative symmetric power");
  const CycField& f = g.field();
  const auto size = static_cast<std::size_t>(n) + 1;
  CycMatrix out(f, size, size);
  const Poly first = Poly::linear(g.c, g.a);   // image of e1 as a + c t
  const Poly second = Poly::linear(g.d, g.b);  // image of e2 as b + d t
  for (int k = 0; k <= n; ++k) {
    const Poly col = first.pow(static_cast<unsigned>(n - k)) * second.pow(static_cast<unsigned>(k));
    for (int j = 0; j <= n; ++j) out(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = col.coeff(j);
  }
  return out;
}

}  // namespace eqb

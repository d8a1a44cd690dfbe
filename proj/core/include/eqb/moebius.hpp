#pragma once

#include <compare>
#include <vector>

#include "eqb/cyclotomic.hpp"
#include "eqb/linalg.hpp"
#include "eqb/ratfun.hpp"

namespace eqb {

/// An element [[a, b], [c, d]] of SL(2) over a cyclotomic field.
struct SL2Elem {
  CycNum a, b, c, d;

  /// Throws DomainError unless ad - bc = 1.
  SL2Elem(CycNum a, CycNum b, CycNum c, CycNum d);
  static SL2Elem identity(const CycField& field);

  const CycField& field() const { return a.field(); }
  SL2Elem inverse() const { return SL2Elem(d, -b, -c, a, Unchecked{}); }
  SL2Elem operator-() const { return SL2Elem(-a, -b, -c, -d, Unchecked{}); }
  CycNum trace() const { return a + d; }
  bool is_identity() const;
  bool is_minus_identity() const;
  CycMatrix matrix() const;

  /// Of the pair {g, -g}, the one whose first nonzero coefficient (in a, b, c,
  /// d order) is lexicographically positive. Used to name PGL cosets.
  SL2Elem projective_normal() const;

  friend SL2Elem operator*(const SL2Elem& x, const SL2Elem& y);
  friend bool operator==(const SL2Elem& x, const SL2Elem& y) = default;
  friend std::strong_ordering operator<=>(const SL2Elem& x, const SL2Elem& y);

 private:
  struct Unchecked {};
  SL2Elem(CycNum a_, CycNum b_, CycNum c_, CycNum d_, Unchecked)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
};

/// A point of P^1 in homogeneous coordinates [x : y]; chart 0 is y != 0 with
/// affine coordinate z = x / y, chart 1 is x != 0 with w = y / x.
struct ProjPoint {
  CycNum x, y;
  ProjPoint(CycNum x_, CycNum y_);
  static ProjPoint affine(const CycNum& z);
  static ProjPoint infinity(const CycField& field);
  bool is_infinity() const { return y.is_zero(); }
  /// Equality as points of P^1 (cross-multiplication).
  friend bool operator==(const ProjPoint& p, const ProjPoint& q);
};

/// The projectivized linear action [x : y] -> [a x + b y : c x + d y].
ProjPoint act_point(const SL2Elem& g, const ProjPoint& p);

/// Fixed points of g found among eigenvectors whose eigenvalue is a root of
/// unity in the field. Throws DomainError when none lie in the field.
std::vector<ProjPoint> fixed_points(const SL2Elem& g);

/// The substitution z -> g.z = (a z + b)/(c z + d) on chart-0 functions.
MoebiusSubstitution moebius_substitution(const SL2Elem& g);
RatFun compose(const RatFun& f, const SL2Elem& g);
RatMat compose(const RatMat& m, const SL2Elem& g);

/// c z + d, the chart-0 denominator of g.
Poly automorphy_base(const SL2Elem& g);

/// The factor of automorphy j_g(z) = (c z + d)^(-n) of the natural
/// structure on O(n) in chart 0 (transition z^n).
RatFun automorphy_factor(const SL2Elem& g, int n);

/// Matrix of g on homogeneous polynomials of degree n in (x, y) with basis
/// x^n, x^(n-1) y, ..., y^n; n = 1 returns g itself.
CycMatrix symmetric_power(const SL2Elem& g, int n);

}  // namespace eqb

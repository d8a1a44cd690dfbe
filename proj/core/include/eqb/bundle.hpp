#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "eqb/errors.hpp"
#include "eqb/ratfun.hpp"

namespace eqb {

enum class CocycleDefect { not_square, empty, not_laurent, singular, non_unit_determinant };

/// Rejection of a transition matrix, with the reason kept separate so that a
/// singular matrix and a non-monomial determinant can be told apart.
class InvalidCocycle : public DomainError {
 public:
  InvalidCocycle(CocycleDefect defect, const std::string& what) : DomainError(what), defect_(defect) {}
  CocycleDefect defect() const { return defect_; }

 private:
  CocycleDefect defect_;
};

/// A vector bundle on P^1 glued from the trivial bundles on the charts
/// z != infinity (chart 0) and w = 1/z != infinity (chart 1). The transition
/// expresses chart-1 coordinates in chart 0: s0(z) = T(z) s1(1/z). With this
/// convention O(n) has transition z^n and n + 1 global sections for n >= 0.
/// Frames change as T' = A(z)^-1 T(z) B(1/z) with A polynomial in z and B
/// polynomial in 1/z, both of constant nonzero determinant.
class TransitionCocycle {
 public:
  /// Throws InvalidCocycle unless T is square, nonempty, has Laurent entries
  /// and det T = c z^k with c != 0.
  explicit TransitionCocycle(RatMat transition);

  const CycField& field() const { return t_.field(); }
  const RatMat& matrix() const { return t_; }
  std::size_t rank() const { return t_.rows(); }
  /// The exponent k of det T, the degree of the bundle.
  int degree() const { return degree_; }
  /// T^-1, again a Laurent matrix.
  const RatMat& inverse() const { return *inverse_; }

 private:
  RatMat t_;
  int degree_;
  std::shared_ptr<const RatMat> inverse_;
};

/// T = plus(z) * diag(z^d_1, ..., z^d_r) * minus(1/z) with d_1 >= ... >= d_r.
/// `plus` is polynomial in z and `minus` polynomial in 1/z, both with
/// constant nonzero determinant; the columns of plus are a frame of chart 0
/// in which the bundle is the direct sum of the O(d_i).
struct BirkhoffFactorization {
  RatMat plus;
  std::vector<int> degrees;
  RatMat minus;

  RatMat diagonal() const;
  RatMat product() const { return plus * diagonal() * minus; }
};

BirkhoffFactorization birkhoff_factor(const TransitionCocycle& e);
std::vector<int> splitting_type(const TransitionCocycle& e);

/// True when `f` reproduces T exactly and both factors are unimodular in the
/// right variable with a sorted degree list.
bool verify_factorization(const TransitionCocycle& e, const BirkhoffFactorization& f);

/// Inverse of a square Laurent matrix whose determinant is c z^k, by
/// cofactors; throws InvalidCocycle otherwise.
RatMat laurent_inverse(const RatMat& a);

bool is_unimodular_in_z(const RatMat& a);
bool is_unimodular_in_inverse_z(const RatMat& a);

/// dim H^0(E(m)), by solving for chart-1 sections s1 of degree at most
/// m - (lowest exponent of T^-1) whose image z^m T(z) s1(1/z) is polynomial.
std::size_t h0_dimension(const TransitionCocycle& e, int m);

/// A basis of H^0(E(m)); column j is the chart-0 polynomial vector s0 of the
/// j-th section. Zero columns when there are no sections.
RatMat h0_basis(const TransitionCocycle& e, int m);

/// 0 = E_0 ⊂ E_1 ⊂ ... ⊂ E_l = E with E_j spanned by the factor columns of
/// degree >= slopes[j-1].
struct HNFiltration {
  std::vector<int> slopes;
  /// Cumulative ranks, strictly increasing, last = rank E.
  std::vector<std::size_t> ranks;
  /// Chart-0 basis columns of each E_j.
  std::vector<RatMat> bases;
  std::size_t length() const { return slopes.size(); }
};

HNFiltration hn_filtration(const BirkhoffFactorization& f);
HNFiltration hn_filtration(const TransitionCocycle& e);

}  // namespace eqb

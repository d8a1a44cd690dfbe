#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eqb/rational.hpp"

namespace eqb {

/// The cyclotomic field Q(zeta_N), presented as Q[x] / Phi_N(x).
///
/// Instances are interned: `get(N)` always returns the same object for the same
/// N, so two numbers share a field exactly when their field pointers agree.
class CycField {
 public:
  static const CycField& get(int modulus);

  int modulus() const { return modulus_; }
  /// phi(N), the dimension over Q.
  int degree() const { return degree_; }
  /// Coefficients of Phi_N, lowest first, monic.
  const std::vector<std::int64_t>& min_poly() const { return min_poly_; }
  /// x^k mod Phi_N for 0 <= k < power_table_size().
  const std::vector<std::int64_t>& reduced_power(int k) const { return powers_[k]; }
  int power_table_size() const { return static_cast<int>(powers_.size()); }

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

 private:
  explicit CycField(int modulus);

  int modulus_;
  int degree_;
  std::vector<std::int64_t> min_poly_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// The coefficient vector always has length phi(N) and is fully reduced, so
/// equality is coefficient equality. Values are immutable in spirit: every
/// operation returns a fresh canonical number. Mixing fields throws FormatError.
class CycNum {
 public:
  explicit CycNum(const CycField& field);
  CycNum(const CycField& field, Rational value);
  /// Reduces an arbitrary-length coefficient vector modulo Phi_N.
  CycNum(const CycField& field, std::vector<Rational> coeffs);

  /// zeta_N^k for any integer k.
  static CycNum zeta(const CycField& field, std::int64_t k);

  const CycField& field() const { return *field_; }
  int modulus() const { return field_->modulus(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycNum operator-() const;
  CycNum inverse() const;
  /// Complex conjugation, zeta -> zeta^-1.
  CycNum conj() const;
  CycNum pow(std::int64_t e) const;
  CycNum scaled(const Rational& r) const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  /// Lexicographic order on coefficient vectors; used only for determinism.
  friend std::strong_ordering operator<=>(const CycNum& a, const CycNum& b);

  /// Principal complex embedding zeta -> exp(2 pi i / N). Diagnostics only.
  std::complex<double> embed() const;
  std::string to_string() const;

 private:
  const CycField* field_;
  std::vector<Rational> c_;

  void check_same_field(const CycNum& other) const;
};

/// Every root of unity contained in the field, as zeta^k (and -zeta^k for odd N).
std::vector<CycNum> roots_of_unity(const CycField& field);

}  // namespace eqb

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqb/cyclotomic.hpp"
#include "eqb/linalg.hpp"

namespace eqb {

/// Univariate polynomial over Q(zeta_N), lowest degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(const CycField& field) : field_(&field) {}
  Poly(const CycField& field, std::vector<CycNum> coeffs);

  static Poly constant(const CycNum& c);
  /// c * z^k, k >= 0.
  static Poly monomial(const CycNum& c, int k);
  /// c1 * z + c0.
  static Poly linear(const CycNum& c1, const CycNum& c0);

  const CycField& field() const { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;
  const std::vector<CycNum>& coeffs() const { return c_; }
  /// Coefficient of z^k; zero outside the stored range.
  CycNum coeff(int k) const;
  const CycNum& lead() const { return c_.back(); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monomial() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CycNum& s) const;
  /// Multiplies by z^k; negative k requires valuation() >= -k.
  Poly shifted(int k) const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  CycNum eval(const CycNum& x) const;

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Throws DomainError unless b divides *this.
  Poly exact_div(const Poly& b) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "z") const;

 private:
  const CycField* field_;
  std::vector<CycNum> c_;
  void trim();
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Rational function num/den in canonical form: den monic, gcd(num, den) = 1,
/// zero is 0/1. Laurent polynomials are the case den = z^k.
class RatFun {
 public:
  explicit RatFun(const CycField& field);
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);

  static RatFun constant(const CycNum& c);
  /// c * z^k for any integer k.
  static RatFun monomial(const CycNum& c, int k);

  const CycField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// True when the denominator is a power of z.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Lowest and highest exponents of a nonzero Laurent polynomial.
  int laurent_low() const;
  int laurent_high() const;
  /// Coefficient of z^e of a Laurent polynomial.
  CycNum laurent_coeff(int e) const;
  /// Constant value; requires is_constant().
  CycNum constant_value() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun scaled(const CycNum& s) const;
  RatFun inverse() const;
  RatFun pow(int e) const;
  /// Value at a point; throws DomainError at a pole.
  CycNum eval(const CycNum& x) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "z") const;

 private:
  Poly num_;
  Poly den_;
  void canonicalize();
};

/// Decides whether f = c * z^k exactly.
std::optional<std::pair<CycNum, int>> laurent_is_unit(const RatFun& f);

/// Substitution z -> (a z + b) / (c z + d) applied to rational functions.
/// Powers of the two linear forms are cached across calls.
class MoebiusSubstitution {
 public:
  MoebiusSubstitution(CycNum a, CycNum b, CycNum c, CycNum d);
  RatFun apply(const RatFun& f);

 private:
  Poly top_;     // a z + b
  Poly bottom_;  // c z + d
  std::vector<Poly> top_pow_;
  std::vector<Poly> bottom_pow_;
  const Poly& top_power(int k);
  const Poly& bottom_power(int k);
  Poly homogenize(const Poly& p, int degree);
};

/// Matrix of rational functions, row-major.
class RatMat {
 public:
  RatMat(const CycField& field, std::size_t rows, std::size_t cols);
  static RatMat identity(const CycField& field, std::size_t n);
  static RatMat from_constant(const CycMatrix& m);
  static RatMat diagonal(const std::vector<RatFun>& d);

  const CycField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFun& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFun& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b);
  RatMat scaled(const RatFun& s) const;
  RatMat transpose() const;
  RatMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMat& b);

  /// Fraction-free (Bareiss) determinant over the polynomial ring after
  /// clearing row denominators.
  RatFun det() const;
  /// Adjugate for n <= 3, Gauss-Jordan above. Throws DomainError if singular.
  RatMat inverse() const;
  /// Rank over the field of rational functions.
  std::size_t rank() const;
  /// Entrywise substitution z -> (a z + b)/(c z + d).
  RatMat substitute(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) const;
  RatMat substitute(MoebiusSubstitution& sub) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_polynomial() const;
  bool is_laurent() const;
  std::optional<CycMatrix> to_constant() const;

 private:
  const CycField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatFun> data_;
};

}  // namespace eqb

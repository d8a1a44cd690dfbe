#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace eqb {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 63 bits are kept
/// inline; anything larger is promoted to a GMP rational and demoted again
/// once it fits. The representation is canonical: a value is either small or
/// big, never both, so equality is a field comparison.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses decimal-string numerator and denominator.
  static Rational parse(std::string_view num, std::string_view den);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  mpq_class to_mpq() const;
  std::string num_str() const;
  std::string den_str() const;
  std::string to_string() const;
  double to_double() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  static Rational from_mpq(mpq_class q);
  // Reduces n/d with d > 0.
  static Rational reduced(__int128 n, __int128 d);
};

}  // namespace eqb

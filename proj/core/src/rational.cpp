#include "eqb/rational.hpp"

#include <limits>
#include <numeric>

#include "eqb/errors.hpp"

namespace eqb {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool fits(i128 v) { return v > kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
  const u128 u = uabs(v);
  mpz_class r = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (v < 0) r = -r;
  return r;
}

bool mpz_fits_small(const mpz_class& z) {
  return z.fits_slong_p() && z.get_si() != kMin;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

Rational Rational::reduced(i128 n, i128 d) {
  const u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  Rational r;
  r.big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
  return r;
}

Rational Rational::parse(std::string_view num, std::string_view den) {
  mpz_class n;
  mpz_class d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw FormatError("invalid rational literal \"" + std::string(num) + "/" + std::string(den) + "\"");
  }
  if (d == 0) throw FormatError("rational literal with zero denominator");
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-*big_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!big_) {
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }
  return from_mpq(1 / *big_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (b.num_ == 0) return a;
  if (a.num_ == 0) return b;
  if (a.den_ == b.den_) {
    const i128 n = static_cast<i128>(a.num_) + b.num_;
    if (a.den_ == 1 && fits(n)) return Rational(static_cast<std::int64_t>(n));
    return Rational::reduced(n, a.den_);
  }
  const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  const i128 d = static_cast<i128>(a.den_) * b.den_;
  return Rational::reduced(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t out = 0;
    if (!__builtin_mul_overflow(a.num_, b.num_, &out) && out != kMin) return Rational(out);
  }
  const auto g1 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(uabs(a.num_)),
                                                     static_cast<std::uint64_t>(b.den_)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(uabs(b.num_)),
                                                     static_cast<std::uint64_t>(a.den_)));
  const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::num_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::den_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace eqb

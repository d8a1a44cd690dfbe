#include "eqb/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "eqb/errors.hpp"

namespace eqb {
namespace {

// Exact quotient of integer polynomials; divisor must be monic.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t t = num[k];
    q[k - dn] = t;
    if (t == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= t * den[i];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

CycField::CycField(int modulus) : modulus_(modulus), min_poly_(cyclotomic_polynomial(modulus)) {
  degree_ = static_cast<int>(min_poly_.size()) - 1;
  const int table = std::max(modulus_, 2 * degree_ - 1);
  powers_.assign(static_cast<std::size_t>(table), std::vector<std::int64_t>(degree_, 0));
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < table; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce the overflow coefficient with the monic relation
    const std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1] - top * min_poly_[i];
    cur[0] = -top * min_poly_[0];
  }
}

const CycField& CycField::get(int modulus) {
  if (modulus < 1) throw FormatError("cyclotomic modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[modulus];
  if (!slot) slot.reset(new CycField(modulus));
  return *slot;
}

CycNum::CycNum(const CycField& field)
    : field_(&field), c_(static_cast<std::size_t>(field.degree())) {}

CycNum::CycNum(const CycField& field, Rational value) : CycNum(field) { c_[0] = std::move(value); }

CycNum::CycNum(const CycField& field, std::vector<Rational> coeffs) : CycNum(field) {
  const int n = field.modulus();
  const int phi = field.degree();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const int e = static_cast<int>(k % static_cast<std::size_t>(n));
    if (e < phi) {
      c_[e] += coeffs[k];
      continue;
    }
    const auto& row = field.reduced_power(e);
    for (int i = 0; i < phi; ++i) {
      if (row[i] != 0) c_[i] += coeffs[k] * Rational(row[i]);
    }
  }
}

CycNum CycNum::zeta(const CycField& field, std::int64_t k) {
  const std::int64_t n = field.modulus();
  const auto e = static_cast<int>(((k % n) + n) % n);
  CycNum out(field);
  const auto& row = field.reduced_power(e);
  for (int i = 0; i < field.degree(); ++i) out.c_[i] = Rational(row[i]);
  return out;
}

void CycNum::check_same_field(const CycNum& other) const {
  if (field_ != other.field_) {
    throw FormatError("cyclotomic modulus mismatch: " + std::to_string(field_->modulus()) + " vs " +
                      std::to_string(other.field_->modulus()));
  }
}

bool CycNum::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool CycNum::is_one() const { return c_[0].is_one() && is_rational(); }

CycNum CycNum::operator-() const {
  CycNum out(*field_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) out.c_[i] = -c_[i];
  }
  return out;
}

CycNum CycNum::scaled(const Rational& r) const {
  CycNum out(*field_);
  if (r.is_zero()) return out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) out.c_[i] = c_[i] * r;
  }
  return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum out = a;
  out += b;
  return out;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum out = a;
  out -= b;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!b.c_[i].is_zero()) c_[i] -= b.c_[i];
  }
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same_field(b);
  if (a.is_rational()) return b.scaled(a.c_[0]);
  if (b.is_rational()) return a.scaled(b.c_[0]);
  const CycField& f = *a.field_;
  const int phi = f.degree();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycNum out(f);
  for (int i = 0; i < phi; ++i) out.c_[i] = std::move(prod[i]);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k].is_zero()) continue;
    const auto& row = f.reduced_power(k);
    for (int i = 0; i < phi; ++i) {
      const std::int64_t r = row[i];
      if (r == 0) continue;
      if (r == 1) {
        out.c_[i] += prod[k];
      } else if (r == -1) {
        out.c_[i] -= prod[k];
      } else {
        out.c_[i] += prod[k] * Rational(r);
      }
    }
  }
  return out;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (is_rational()) return CycNum(*field_, c_[0].inverse());
  // Solve (a * x) = 1 as a phi x phi rational system; column j holds a * zeta^j.
  const int phi = field_->degree();
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  CycNum col = *this;
  const CycNum z = zeta(*field_, 1);
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    col = col * z;
  }
  m[0][phi] = Rational(1);
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && m[piv][c].is_zero()) ++piv;
    if (piv == phi) throw DomainError("singular multiplication map in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    const Rational inv = m[c][c].inverse();
    for (int k = c; k <= phi; ++k) m[c][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational t = m[r][c];
      for (int k = c; k <= phi; ++k) {
        if (!m[c][k].is_zero()) m[r][k] -= t * m[c][k];
      }
    }
  }
  CycNum out(*field_);
  for (int i = 0; i < phi; ++i) out.c_[i] = m[i][phi];
  return out;
}

CycNum operator/(const CycNum& a, const CycNum& b) {
  a.check_same_field(b);
  if (b.is_rational()) {
    if (b.c_[0].is_zero()) throw DomainError("division by zero in cyclotomic field");
    return a.scaled(b.c_[0].inverse());
  }
  return a * b.inverse();
}

CycNum CycNum::conj() const {
  const int n = field_->modulus();
  std::vector<Rational> raw(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    raw[(n - static_cast<int>(i)) % n] += c_[i];
  }
  return CycNum(*field_, std::move(raw));
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(*field_, Rational(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.check_same_field(b);
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const CycNum& a, const CycNum& b) {
  a.check_same_field(b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::complex<double> CycNum::embed() const {
  const double step = 2.0 * std::numbers::pi / field_->modulus();
  std::complex<double> out = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    out += c_[i].to_double() * std::polar(1.0, step * static_cast<double>(i));
  }
  return out;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    if (!first) {
      if (coef.front() == '-') {
        os << " - ";
        coef.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (i == 0) {
      os << coef;
    } else {
      if (coef != "1") os << (coef == "-1" ? "-" : coef + "*");
      os << "zeta" << field_->modulus();
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

std::vector<CycNum> roots_of_unity(const CycField& field) {
  const int n = field.modulus();
  std::vector<CycNum> out;
  for (int k = 0; k < n; ++k) out.push_back(CycNum::zeta(field, k));
  if (n % 2 == 1) {
    for (int k = 0; k < n; ++k) out.push_back(-CycNum::zeta(field, k));
  }
  return out;
}

}  // namespace eqb

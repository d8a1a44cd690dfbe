#include "eqb/ratfun.hpp"

#include <algorithm>
#include <sstream>

#include "eqb/errors.hpp"

namespace eqb {

// ---------------------------------------------------------------- Poly

Poly::Poly(const CycField& field, std::vector<CycNum> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (const auto& x : c_) {
    if (&x.field() != field_) throw FormatError("polynomial coefficient modulus mismatch");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const CycNum& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const CycNum& c, int k) {
  if (k < 0) throw DomainError("negative exponent in polynomial monomial");
  std::vector<CycNum> v(static_cast<std::size_t>(k) + 1, CycNum(c.field()));
  v[static_cast<std::size_t>(k)] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const CycNum& c1, const CycNum& c0) { return Poly(c1.field(), {c0, c1}); }

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

bool Poly::is_monomial() const { return !c_.empty() && valuation() == degree(); }

CycNum Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return CycNum(*field_);
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly out(*field_);
  out.c_.reserve(c_.size());
  for (const auto& x : c_) out.c_.push_back(-x);
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly out = a.c_.size() >= b.c_.size() ? a : b;
  const Poly& other = a.c_.size() >= b.c_.size() ? b : a;
  for (std::size_t i = 0; i < other.c_.size(); ++i) out.c_[i] += other.c_[i];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
  if (a.c_.size() == 1) return b.scaled(a.c_[0]);
  if (b.c_.size() == 1) return a.scaled(b.c_[0]);
  std::vector<CycNum> v(a.c_.size() + b.c_.size() - 1, CycNum(*a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(*a.field_, std::move(v));
}

Poly Poly::scaled(const CycNum& s) const {
  if (s.is_zero()) return Poly(*field_);
  if (s.is_one()) return *this;
  Poly out(*field_);
  out.c_.reserve(c_.size());
  for (const auto& x : c_) out.c_.push_back(x.is_zero() ? x : x * s);
  return out;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly out(*field_);
  if (k > 0) {
    out.c_.assign(static_cast<std::size_t>(k), CycNum(*field_));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
  }
  if (valuation() < -k) throw DomainError("shift below the constant term");
  out.c_.assign(c_.begin() + (-k), c_.end());
  return out;
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(CycNum(*field_, Rational(1)));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

CycNum Poly::eval(const CycNum& x) const {
  CycNum acc(*field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Poly(*a.field_), a};
  std::vector<CycNum> rem = a.c_;
  std::vector<CycNum> q(static_cast<std::size_t>(a.degree() - db + 1), CycNum(*a.field_));
  const bool monic = b.lead().is_one();
  const CycNum inv = monic ? b.lead() : b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const CycNum t = monic ? rem[k] : rem[k] * inv;
    for (int i = 0; i <= db; ++i) {
      if (!b.c_[i].is_zero()) rem[k - db + i] -= t * b.c_[i];
    }
    q[k - db] = t;
  }
  rem.erase(rem.begin() + db, rem.end());
  return {Poly(*a.field_, std::move(q)), Poly(*a.field_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& b) const {
  if (b.is_constant()) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    return scaled(b.c_[0].inverse());
  }
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string s = c_[i].to_string();
    const bool compound = s.find(' ') != std::string::npos;
    if (i == 0) {
      os << s;
      continue;
    }
    if (!c_[i].is_one()) os << (compound ? "(" + s + ")" : s) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const CycField& f = a.field();
  const Poly one = Poly::constant(CycNum(f, Rational(1)));
  if (a.is_constant() || b.is_constant()) return one;
  if (a.is_monomial() || b.is_monomial()) {
    const int k = std::min(a.valuation(), b.valuation());
    return Poly::monomial(CycNum(f, Rational(1)), k);
  }
  if (a.degree() == 1 || b.degree() == 1) {
    const Poly& lin = a.degree() == 1 ? a : b;
    const Poly& other = a.degree() == 1 ? b : a;
    const CycNum root = -(lin.coeff(0) / lin.coeff(1));
    return other.eval(root).is_zero() ? lin.monic() : one;
  }
  Poly x = a.degree() >= b.degree() ? a.monic() : b.monic();
  Poly y = a.degree() >= b.degree() ? b.monic() : a.monic();
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
    if (y.is_constant() && !y.is_zero()) return one;
  }
  return x;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(const CycField& field) : num_(field), den_(Poly::constant(CycNum(field, Rational(1)))) {}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(CycNum(num_.field(), Rational(1)))) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field()) throw FormatError("rational function modulus mismatch");
  canonicalize();
}

RatFun RatFun::constant(const CycNum& c) { return RatFun(Poly::constant(c)); }

RatFun RatFun::monomial(const CycNum& c, int k) {
  const CycNum one(c.field(), Rational(1));
  if (k >= 0) return RatFun(Poly::monomial(c, k));
  RatFun out(c.field());
  out.num_ = Poly::constant(c);
  out.den_ = Poly::monomial(one, -k);
  if (c.is_zero()) out.den_ = Poly::constant(one);
  return out;
}

void RatFun::canonicalize() {
  const CycField& f = num_.field();
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(CycNum(f, Rational(1)));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.lead().inverse());
      den_ = Poly::constant(CycNum(f, Rational(1)));
    }
    return;
  }
  if (den_.is_monomial()) {
    const int k = den_.degree();
    const int v = std::min(k, num_.valuation());
    if (!den_.lead().is_one()) num_ = num_.scaled(den_.lead().inverse());
    num_ = num_.shifted(-v);
    den_ = Poly::monomial(CycNum(f, Rational(1)), k - v);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (!den_.lead().is_one()) {
    const CycNum inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int RatFun::laurent_low() const {
  if (!is_laurent() || is_zero()) throw DomainError("laurent_low of a non-Laurent or zero function");
  return num_.valuation() - den_.degree();
}

int RatFun::laurent_high() const {
  if (!is_laurent() || is_zero()) throw DomainError("laurent_high of a non-Laurent or zero function");
  return num_.degree() - den_.degree();
}

CycNum RatFun::laurent_coeff(int e) const {
  if (!is_laurent()) throw DomainError("laurent_coeff of a non-Laurent function");
  return num_.coeff(e + den_.degree());
}

CycNum RatFun::constant_value() const {
  if (!is_constant()) throw DomainError("not a constant function");
  return num_.coeff(0);
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -num_;
  return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFun(a.num_ + b.num_);
    return RatFun(a.num_ + b.num_, a.den_);
  }
  if (a.is_laurent() && b.is_laurent()) {
    const int ka = a.den_.degree();
    const int kb = b.den_.degree();
    const int k = std::max(ka, kb);
    return RatFun(a.num_.shifted(k - ka) + b.num_.shifted(k - kb),
                  Poly::monomial(CycNum(a.field(), Rational(1)), k));
  }
  const Poly g = gcd(a.den_, b.den_);
  const Poly da = a.den_.exact_div(g);
  const Poly db = b.den_.exact_div(g);
  Poly num = a.num_ * db + b.num_ * da;
  Poly den = a.den_ * db;
  RatFun out(a.field());
  if (num.is_zero()) return out;
  const Poly g2 = gcd(num, g);
  if (!g2.is_one()) {
    num = num.exact_div(g2);
    den = den.exact_div(g2);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun(a.field());
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
  const Poly g1 = b.den_.is_one() ? b.den_ : gcd(a.num_, b.den_);
  const Poly g2 = a.den_.is_one() ? a.den_ : gcd(b.num_, a.den_);
  RatFun out(a.field());
  const Poly an = g1.is_one() ? a.num_ : a.num_.exact_div(g1);
  const Poly bn = g2.is_one() ? b.num_ : b.num_.exact_div(g2);
  const Poly ad = g2.is_one() ? a.den_ : a.den_.exact_div(g2);
  const Poly bd = g1.is_one() ? b.den_ : b.den_.exact_div(g1);
  out.num_ = an * bn;
  out.den_ = ad * bd;
  return out;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::scaled(const CycNum& s) const {
  RatFun out = *this;
  out.num_ = num_.scaled(s);
  if (out.num_.is_zero()) out.den_ = Poly::constant(CycNum(field(), Rational(1)));
  return out;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  RatFun out(field());
  const CycNum inv = num_.lead().inverse();
  out.num_ = den_.scaled(inv);
  out.den_ = num_.scaled(inv);
  return out;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun out(field());
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  return out;
}

CycNum RatFun::eval(const CycNum& x) const {
  const CycNum d = den_.eval(x);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFun::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::optional<std::pair<CycNum, int>> laurent_is_unit(const RatFun& f) {
  if (f.is_zero() || !f.num().is_monomial() || !f.den().is_monomial()) return std::nullopt;
  return std::make_pair(f.num().lead(), f.num().degree() - f.den().degree());
}

// ---------------------------------------------------------------- substitution

MoebiusSubstitution::MoebiusSubstitution(CycNum a, CycNum b, CycNum c, CycNum d)
    : top_(Poly::linear(a, b)), bottom_(Poly::linear(c, d)) {
  if ((a * d - b * c).is_zero()) throw DomainError("degenerate Moebius substitution");
}

const Poly& MoebiusSubstitution::top_power(int k) {
  if (top_pow_.empty()) top_pow_.push_back(Poly::constant(CycNum(top_.field(), Rational(1))));
  while (static_cast<int>(top_pow_.size()) <= k) top_pow_.push_back(top_pow_.back() * top_);
  return top_pow_[static_cast<std::size_t>(k)];
}

const Poly& MoebiusSubstitution::bottom_power(int k) {
  if (bottom_pow_.empty()) bottom_pow_.push_back(Poly::constant(CycNum(bottom_.field(), Rational(1))));
  while (static_cast<int>(bottom_pow_.size()) <= k) bottom_pow_.push_back(bottom_pow_.back() * bottom_);
  return bottom_pow_[static_cast<std::size_t>(k)];
}

Poly MoebiusSubstitution::homogenize(const Poly& p, int degree) {
  Poly acc(p.field());
  for (int i = 0; i <= p.degree(); ++i) {
    const CycNum& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    acc = acc + (top_power(i) * bottom_power(degree - i)).scaled(c);
  }
  return acc;
}

RatFun MoebiusSubstitution::apply(const RatFun& f) {
  if (f.is_zero() || f.is_constant()) return f;
  const int n = f.num().degree();
  const int m = f.den().degree();
  Poly num = homogenize(f.num(), n);
  Poly den = homogenize(f.den(), m);
  if (m >= n) {
    num = num * bottom_power(m - n);
  } else {
    den = den * bottom_power(n - m);
  }
  return RatFun(std::move(num), std::move(den));
}

// ---------------------------------------------------------------- RatMat

RatMat::RatMat(const CycField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, RatFun(field)) {}

RatMat RatMat::identity(const CycField& field, std::size_t n) {
  RatMat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFun::constant(CycNum(field, Rational(1)));
  return m;
}

RatMat RatMat::from_constant(const CycMatrix& c) {
  RatMat m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (!c(i, j).is_zero()) m(i, j) = RatFun::constant(c(i, j));
    }
  }
  return m;
}

RatMat RatMat::diagonal(const std::vector<RatFun>& d) {
  if (d.empty()) throw DomainError("empty diagonal");
  RatMat m(d.front().field(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  RatMat out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  RatMat out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  RatMat out(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RatFun acc(*a.field_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const RatFun& x = a(i, k);
        const RatFun& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

bool operator==(const RatMat& a, const RatMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMat RatMat::scaled(const RatFun& s) const {
  RatMat out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x = x * s;
  }
  return out;
}

RatMat RatMat::transpose() const {
  RatMat out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RatMat RatMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
  RatMat out(*field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

void RatMat::set_block(std::size_t r0, std::size_t c0, const RatMat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

RatFun RatMat::det() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  const CycField& f = *field_;
  const CycNum one(f, Rational(1));
  if (n == 0) return RatFun::constant(one);
  if (n == 1) return data_[0];
  if (n == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);

  // Clear denominators row by row, then run Bareiss over Q(zeta)[z].
  std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n, Poly(f)));
  Poly scale = Poly::constant(one);
  for (std::size_t i = 0; i < n; ++i) {
    Poly l = Poly::constant(one);
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& d = (*this)(i, j).den();
      if (d.is_one()) continue;
      l = l * d.exact_div(gcd(l, d));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const RatFun& e = (*this)(i, j);
      if (!e.is_zero()) p[i][j] = e.num() * l.exact_div(e.den());
    }
    scale = scale * l;
  }
  Poly prev = Poly::constant(one);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (p[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && p[piv][k].is_zero()) ++piv;
      if (piv == n) return RatFun(f);
      std::swap(p[piv], p[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        p[i][j] = (p[k][k] * p[i][j] - p[i][k] * p[k][j]).exact_div(prev);
      }
      p[i][k] = Poly(f);
    }
    prev = p[k][k];
  }
  Poly d = p[n - 1][n - 1];
  if (negate) d = -d;
  return RatFun(std::move(d), std::move(scale));
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  const CycField& f = *field_;
  if (n <= 3) {
    const RatFun d = det();
    if (d.is_zero()) throw DomainError("singular matrix");
    const RatFun inv = d.inverse();
    RatMat out(f, n, n);
    if (n == 1) {
      out(0, 0) = inv;
      return out;
    }
    if (n == 2) {
      out(0, 0) = (*this)(1, 1) * inv;
      out(0, 1) = -(*this)(0, 1) * inv;
      out(1, 0) = -(*this)(1, 0) * inv;
      out(1, 1) = (*this)(0, 0) * inv;
      return out;
    }
    const auto& m = *this;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        // cofactor of entry (j, i) goes to (i, j)
        const std::size_t r0 = (j + 1) % 3;
        const std::size_t r1 = (j + 2) % 3;
        const std::size_t c0 = (i + 1) % 3;
        const std::size_t c1 = (i + 2) % 3;
        out(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * inv;
      }
    }
    return out;
  }
  RatMat a = *this;
  RatMat out = identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    int best = 0;
    for (std::size_t r = c; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const int cost = a(r, c).num().degree() + a(r, c).den().degree();
      if (piv == n || cost < best) {
        piv = r;
        best = cost;
      }
    }
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(out(piv, j), out(c, j));
      }
    }
    const RatFun inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) = a(c, j) * inv;
      if (!out(c, j).is_zero()) out(c, j) = out(c, j) * inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const RatFun t = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= t * a(c, j);
        if (!out(c, j).is_zero()) out(r, j) -= t * out(c, j);
      }
    }
  }
  return out;
}

std::size_t RatMat::rank() const {
  RatMat a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && a(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
    }
    const RatFun inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c).is_zero()) continue;
      const RatFun t = a(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= t * a(r, j);
      }
    }
    ++r;
  }
  return r;
}

RatMat RatMat::substitute(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) const {
  MoebiusSubstitution sub(a, b, c, d);
  return substitute(sub);
}

RatMat RatMat::substitute(MoebiusSubstitution& sub) const {
  RatMat out(*field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = sub.apply(data_[k]);
  return out;
}

bool RatMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const RatFun& x) { return x.is_zero(); });
}

bool RatMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool RatMat::is_polynomial() const {
  return std::all_of(data_.begin(), data_.end(), [](const RatFun& x) { return x.is_polynomial(); });
}

bool RatMat::is_laurent() const {
  return std::all_of(data_.begin(), data_.end(), [](const RatFun& x) { return x.is_laurent(); });
}

std::optional<CycMatrix> RatMat::to_constant() const {
  CycMatrix out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const RatFun& x = (*this)(i, j);
      if (!x.is_constant()) return std::nullopt;
      if (!x.is_zero()) out(i, j) = x.constant_value();
    }
  }
  return out;
}

}  // namespace eqb

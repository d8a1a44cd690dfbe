#include "eqb/bundle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <optional>

namespace eqb {

namespace {

// Laurent polynomial: c[i] is the coefficient of z^(low + i); no zero at
// either end, empty for zero.
struct Laurent {
  int low = 0;
  std::vector<CycNum> c;

  bool is_zero() const { return c.empty(); }
  int high() const { return low + static_cast<int>(c.size()) - 1; }
  CycNum coeff(int e, const CycField& f) const {
    if (e < low || e > high()) return CycNum(f);
    return c[static_cast<std::size_t>(e - low)];
  }
  void trim() {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead].is_zero()) ++lead;
    if (lead == c.size()) {
      c.clear();
      low = 0;
      return;
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    low += static_cast<int>(lead);
    while (c.back().is_zero()) c.pop_back();
  }
  // this += s * z^shift * x
  void add_scaled(const Laurent& x, const CycNum& s, int shift, const CycField& f) {
    if (x.is_zero() || s.is_zero()) return;
    const int lo = x.low + shift;
    const int hi = x.high() + shift;
    if (is_zero()) {
      low = lo;
      for (const auto& v : x.c) c.push_back(v * s);
      trim();
      return;
    }
    const int new_low = std::min(low, lo);
    const int new_high = std::max(high(), hi);
    if (new_low < low) c.insert(c.begin(), static_cast<std::size_t>(low - new_low), CycNum(f));
    low = new_low;
    c.resize(static_cast<std::size_t>(new_high - new_low + 1), CycNum(f));
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      if (!x.c[i].is_zero()) c[static_cast<std::size_t>(lo - low) + i] += x.c[i] * s;
    }
    trim();
  }
};

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  if (a.is_zero() || b.is_zero()) return out;
  const CycField& f = a.c[0].field();
  out.low = a.low + b.low;
  out.c.assign(a.c.size() + b.c.size() - 1, CycNum(f));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (!b.c[j].is_zero()) out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  out.trim();
  return out;
}

Laurent to_laurent(const RatFun& f) {
  Laurent out;
  if (f.is_zero()) return out;
  out.low = -f.den().degree();
  out.c = f.num().coeffs();
  out.trim();
  return out;
}

RatFun to_ratfun(const Laurent& l, const CycField& f) {
  if (l.is_zero()) return RatFun(f);
  const CycNum one(f, Rational(1));
  if (l.low >= 0) return RatFun(Poly(f, l.c).shifted(l.low));
  return RatFun(Poly(f, l.c), Poly::monomial(one, -l.low));
}

using LMat = std::vector<std::vector<Laurent>>;

LMat to_lmat(const RatMat& m) {
  LMat out(m.rows(), std::vector<Laurent>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_laurent(m(i, j));
  }
  return out;
}

RatMat to_ratmat(const LMat& m, const CycField& f) {
  RatMat out(f, m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = to_ratfun(m[i][j], f);
  }
  return out;
}

// Lowest exponent over the nonzero entries of a Laurent matrix.
int lowest_exponent(const LMat& m) {
  int lo = INT_MAX;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (!x.is_zero()) lo = std::min(lo, x.low);
    }
  }
  return lo;
}

int highest_exponent(const LMat& m) {
  int hi = INT_MIN;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (!x.is_zero()) hi = std::max(hi, x.high());
    }
  }
  return hi;
}

// z -> 1/z on every entry.
LMat flipped(const LMat& m) {
  LMat out = m;
  for (auto& row : out) {
    for (auto& x : row) {
      if (x.is_zero()) continue;
      std::reverse(x.c.begin(), x.c.end());
      x.low = -(x.low + static_cast<int>(x.c.size()) - 1);
    }
  }
  return out;
}

// Vectors x(w) = sum_{t <= d} x_t w^t such that z^m P(z) x(1/z) has no
// negative powers of z. Returns the kernel basis (columns indexed t * r + col).
CycMatrix polynomial_image_kernel(const LMat& p, int m, int d, const CycField& f) {
  const std::size_t r = p.size();
  const std::size_t unknowns = r * static_cast<std::size_t>(d + 1);
  const int emin = lowest_exponent(p) + m - d;
  if (emin >= 0) return CycMatrix::identity(f, unknowns);
  const std::size_t neg = static_cast<std::size_t>(-emin);
  CycMatrix sys(f, r * neg, unknowns);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t col = 0; col < r; ++col) {
      const Laurent& x = p[i][col];
      for (std::size_t k = 0; k < x.c.size(); ++k) {
        if (x.c[k].is_zero()) continue;
        const int exp = x.low + static_cast<int>(k) + m;
        for (int t = 0; t <= d; ++t) {
          const int e = exp - t;
          if (e >= 0) continue;
          sys(i * neg + static_cast<std::size_t>(e - emin), static_cast<std::size_t>(t) * r + col) = x.c[k];
        }
      }
    }
  }
  return sys.kernel();
}

// Determinant of the submatrix on `rows` x (columns in `mask`) by Laplace
// expansion along the first row, memoized on the column mask.
Laurent minor_det(const LMat& m, const std::vector<std::size_t>& rows, std::size_t depth, unsigned mask,
                  std::vector<std::optional<Laurent>>& memo, const CycField& f) {
  if (depth == rows.size()) return Laurent{0, {CycNum(f, Rational(1))}};
  if (memo[mask]) return *memo[mask];
  Laurent acc;
  int sign = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!(mask & (1U << j))) continue;
    const Laurent& x = m[rows[depth]][j];
    if (!x.is_zero()) {
      const Laurent sub = minor_det(m, rows, depth + 1, mask & ~(1U << j), memo, f);
      acc.add_scaled(x * sub, CycNum(f, Rational(sign)), 0, f);
    }
    sign = -sign;
  }
  memo[mask] = acc;
  return acc;
}

Laurent laurent_det(const LMat& m, std::size_t skip_row, std::size_t skip_col, const CycField& f) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != skip_row) rows.push_back(i);
  }
  unsigned mask = (1U << m.size()) - 1;
  if (skip_col < m.size()) mask &= ~(1U << skip_col);
  std::vector<std::optional<Laurent>> memo(std::size_t{1} << m.size());
  return minor_det(m, rows, 0, mask, memo, f);
}

LMat inverse_lmat(const TransitionCocycle& e) { return to_lmat(e.inverse()); }

}  // namespace

TransitionCocycle::TransitionCocycle(RatMat transition) : t_(std::move(transition)), degree_(0) {
  if (t_.rows() == 0) throw InvalidCocycle(CocycleDefect::empty, "transition matrix of rank 0");
  if (t_.rows() != t_.cols()) throw InvalidCocycle(CocycleDefect::not_square, "transition matrix is not square");
  if (!t_.is_laurent()) {
    throw InvalidCocycle(CocycleDefect::not_laurent, "transition entries must be Laurent polynomials");
  }
  const CycField& f = t_.field();
  const std::size_t r = t_.rows();
  if (r > 16) throw InvalidCocycle(CocycleDefect::not_square, "transition rank above 16 is not supported");
  const LMat m = to_lmat(t_);
  const Laurent det = laurent_det(m, r, r, f);
  if (det.is_zero()) throw InvalidCocycle(CocycleDefect::singular, "transition matrix is singular");
  if (det.c.size() != 1) {
    throw InvalidCocycle(CocycleDefect::non_unit_determinant,
                         "transition determinant is not a monomial unit on C*: " + to_ratfun(det, f).to_string());
  }
  degree_ = det.low;
  // adjugate divided by c z^k
  const CycNum cinv = det.c[0].inverse();
  LMat inv(r, std::vector<Laurent>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Laurent cof = laurent_det(m, j, i, f);
      if (cof.is_zero()) continue;
      inv[i][j].add_scaled(cof, (i + j) % 2 == 0 ? cinv : -cinv, -degree_, f);
    }
  }
  inverse_ = std::make_shared<const RatMat>(to_ratmat(inv, f));
}

RatMat BirkhoffFactorization::diagonal() const {
  const CycField& f = plus.field();
  std::vector<RatFun> d;
  for (int k : degrees) d.push_back(RatFun::monomial(CycNum(f, Rational(1)), k));
  return RatMat::diagonal(d);
}

BirkhoffFactorization birkhoff_factor(const TransitionCocycle& e) {
  const CycField& f = e.field();
  const std::size_t r = e.rank();
  LMat m = to_lmat(e.matrix());
  LMat binv(r, std::vector<Laurent>(r));
  for (std::size_t i = 0; i < r; ++i) binv[i][i] = Laurent{0, {CycNum(f, Rational(1))}};

  // Column operations over k[1/z] raise the lowest exponent of one column
  // until the lowest-order coefficient vectors are independent.
  std::vector<int> nu(r);
  while (true) {
    for (std::size_t j = 0; j < r; ++j) {
      nu[j] = INT_MAX;
      for (std::size_t i = 0; i < r; ++i) {
        if (!m[i][j].is_zero()) nu[j] = std::min(nu[j], m[i][j].low);
      }
    }
    if (std::accumulate(nu.begin(), nu.end(), 0LL) > e.degree()) {
      throw DomainError("internal error: Birkhoff reduction overshot the degree");
    }
    CycMatrix lead(f, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) lead(i, j) = m[i][j].coeff(nu[j], f);
    }
    const CycMatrix ker = lead.kernel();
    if (ker.cols() == 0) break;
    std::size_t js = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (!ker(j, 0).is_zero() && (js == r || nu[j] < nu[js])) js = j;
    }
    const CycNum inv = ker(js, 0).inverse();
    for (std::size_t i = 0; i < r; ++i) {
      if (i == js || ker(i, 0).is_zero()) continue;
      const CycNum s = ker(i, 0) * inv;
      const int shift = nu[js] - nu[i];
      for (std::size_t k = 0; k < r; ++k) m[k][js].add_scaled(m[k][i], s, shift, f);
      for (std::size_t k = 0; k < r; ++k) binv[i][k].add_scaled(binv[js][k], -s, shift, f);
    }
  }

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nu[a] > nu[b]; });
  LMat plus(r, std::vector<Laurent>(r));
  LMat minus(r);
  BirkhoffFactorization out{RatMat(f, r, r), {}, RatMat(f, r, r)};
  for (std::size_t jj = 0; jj < r; ++jj) {
    const std::size_t j = order[jj];
    for (std::size_t i = 0; i < r; ++i) {
      plus[i][jj] = m[i][j];
      plus[i][jj].low -= nu[j];
    }
    minus[jj] = binv[j];
    out.degrees.push_back(nu[j]);
  }
  out.plus = to_ratmat(plus, f);
  out.minus = to_ratmat(minus, f);
  return out;
}

RatMat laurent_inverse(const RatMat& a) { return TransitionCocycle(a).inverse(); }

std::vector<int> splitting_type(const TransitionCocycle& e) { return birkhoff_factor(e).degrees; }

bool is_unimodular_in_z(const RatMat& a) {
  if (!a.is_polynomial()) return false;
  const RatFun d = a.det();
  return !d.is_zero() && d.is_constant();
}

bool is_unimodular_in_inverse_z(const RatMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RatFun& x = a(i, j);
      if (!x.is_zero() && (!x.is_laurent() || x.laurent_high() > 0)) return false;
    }
  }
  const RatFun d = a.det();
  return !d.is_zero() && d.is_constant();
}

bool verify_factorization(const TransitionCocycle& e, const BirkhoffFactorization& f) {
  if (f.degrees.size() != e.rank()) return false;
  if (!std::is_sorted(f.degrees.rbegin(), f.degrees.rend())) return false;
  if (std::accumulate(f.degrees.begin(), f.degrees.end(), 0) != e.degree()) return false;
  return is_unimodular_in_z(f.plus) && is_unimodular_in_inverse_z(f.minus) && f.product() == e.matrix();
}

namespace {

struct SectionSystem {
  bool chart1_unknowns;
  LMat p;
  int d;
};

// Picks the smaller of two exact formulations. Chart-1 unknowns: s1 of
// degree <= m - low(T^-1) with z^m T s1(1/z) polynomial. Chart-0 unknowns:
// s0 of degree <= m + high(T) with w^m T^-1(1/w) s0(1/w) polynomial in w.
SectionSystem section_system(const TransitionCocycle& e, int m) {
  const LMat t = to_lmat(e.matrix());
  const LMat tinv = inverse_lmat(e);
  const int d1 = m - lowest_exponent(tinv);
  const int d0 = m + highest_exponent(t);
  if (d1 <= d0) return {true, t, d1};
  return {false, flipped(tinv), d0};
}

}  // namespace

std::size_t h0_dimension(const TransitionCocycle& e, int m) {
  const SectionSystem s = section_system(e, m);
  if (s.d < 0) return 0;
  return polynomial_image_kernel(s.p, m, s.d, e.field()).cols();
}

RatMat h0_basis(const TransitionCocycle& e, int m) {
  const CycField& f = e.field();
  const std::size_t r = e.rank();
  const SectionSystem s = section_system(e, m);
  if (s.d < 0) return RatMat(f, r, 0);
  const CycMatrix ker = polynomial_image_kernel(s.p, m, s.d, f);
  RatMat out(f, r, ker.cols());
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    for (std::size_t i = 0; i < r; ++i) {
      if (s.chart1_unknowns) {
        // s0 = z^m T(z) s1(1/z)
        Laurent acc;
        for (std::size_t col = 0; col < r; ++col) {
          for (int t = 0; t <= s.d; ++t) {
            const CycNum& v = ker(static_cast<std::size_t>(t) * r + col, b);
            if (!v.is_zero()) acc.add_scaled(s.p[i][col], v, m - t, f);
          }
        }
        out(i, b) = to_ratfun(acc, f);
      } else {
        std::vector<CycNum> c;
        for (int t = 0; t <= s.d; ++t) c.push_back(ker(static_cast<std::size_t>(t) * r + i, b));
        out(i, b) = RatFun(Poly(f, std::move(c)));
      }
    }
  }
  return out;
}

HNFiltration hn_filtration(const BirkhoffFactorization& f) {
  HNFiltration out;
  const std::size_t r = f.degrees.size();
  for (std::size_t j = 0; j < r; ++j) {
    if (j + 1 < r && f.degrees[j + 1] == f.degrees[j]) continue;
    out.slopes.push_back(f.degrees[j]);
    out.ranks.push_back(j + 1);
    out.bases.push_back(f.plus.block(0, 0, r, j + 1));
  }
  return out;
}

HNFiltration hn_filtration(const TransitionCocycle& e) { return hn_filtration(birkhoff_factor(e)); }

}  // namespace eqb

#include "eqb/linalg.hpp"

#include "eqb/errors.hpp"

namespace eqb {

CycMatrix::CycMatrix(const CycField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, CycNum(field)) {}

CycMatrix CycMatrix::identity(const CycField& field, std::size_t n) {
  CycMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(field, Rational(1));
  return m;
}

CycMatrix CycMatrix::from_rows(const CycField& field, const std::vector<std::vector<CycNum>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  CycMatrix m(field, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw FormatError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (&rows[i][j].field() != &field) throw FormatError("matrix entry modulus mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  CycMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  CycMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  CycMatrix out(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
  CycMatrix out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x = x * s;
  }
  return out;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

CycNum CycMatrix::trace() const {
  CycNum t(*field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<std::size_t> row_reduce(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  auto nnz = [&](std::size_t r) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < nc; ++j) n += m(r, j).is_zero() ? 0 : 1;
    return n;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t best = nr;
    std::size_t best_nnz = 0;
    for (std::size_t i = r; i < nr; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::size_t n = nnz(i);
      if (best == nr || n < best_nnz) {
        best = i;
        best_nnz = n;
      }
    }
    if (best == nr) continue;
    if (best != r) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(best, j), m(r, j));
    }
    const CycNum inv = m(r, c).inverse();
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < nc; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) = m(r, j) * inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycNum t = m(i, c);
      for (std::size_t j : support) m(i, j) -= t * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

CycNum CycMatrix::det() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  CycMatrix m = *this;
  CycNum d(*field_, Rational(1));
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return CycNum(*field_);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d = d * m(c, c);
    const CycNum inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const CycNum t = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= t * m(c, j);
      }
    }
  }
  return d;
}

CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  CycMatrix aug(*field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = CycNum(*field_, Rational(1));
  }
  const auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  return aug.block(0, n, n, n);
}

std::size_t CycMatrix::rank() const {
  CycMatrix m = *this;
  return row_reduce(m).size();
}

CycMatrix CycMatrix::kernel() const {
  CycMatrix m = *this;
  const auto piv = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  CycMatrix out(*field_, cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    out(f, k) = CycNum(*field_, Rational(1));
    for (std::size_t r = 0; r < piv.size(); ++r) out(piv[r], k) = -m(r, f);
  }
  return out;
}

std::optional<CycMatrix> CycMatrix::solve(const CycMatrix& rhs) const {
  if (rhs.rows_ != rows_) throw DomainError("matrix dimension mismatch");
  CycMatrix aug(*field_, rows_, cols_ + rhs.cols_);
  aug.set_block(0, 0, *this);
  aug.set_block(0, cols_, rhs);
  const auto piv = row_reduce(aug);
  CycMatrix x(*field_, cols_, rhs.cols_);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= cols_) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols_; ++j) x(piv[r], j) = aug(r, cols_ + j);
  }
  return x;
}

CycMatrix CycMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  CycMatrix out(*field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

void CycMatrix::set_block(std::size_t r0, std::size_t c0, const CycMatrix& b) {
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool CycMatrix::is_identity() const { return is_scalar(CycNum(*field_, Rational(1))); }

bool CycMatrix::is_scalar(const CycNum& s) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !((*this)(i, j) == s) : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

CycMatrix direct_sum(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace eqb

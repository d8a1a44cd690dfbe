#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqb/cyclotomic.hpp"

namespace eqb {

/// Dense matrix over a cyclotomic field, row-major.
class CycMatrix {
 public:
  CycMatrix(const CycField& field, std::size_t rows, std::size_t cols);
  static CycMatrix identity(const CycField& field, std::size_t n);
  /// Builds from nested rows; all rows must have equal length.
  static CycMatrix from_rows(const CycField& field, const std::vector<std::vector<CycNum>>& rows);

  const CycField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  CycMatrix scaled(const CycNum& s) const;
  CycMatrix operator-() const;

  CycNum trace() const;
  CycMatrix transpose() const;
  CycNum det() const;
  /// Throws DomainError when singular.
  CycMatrix inverse() const;
  std::size_t rank() const;
  /// Columns form a basis of the right kernel.
  CycMatrix kernel() const;
  /// Solves A X = B; nullopt when inconsistent. Picks the solution with free
  /// variables set to zero.
  std::optional<CycMatrix> solve(const CycMatrix& rhs) const;

  CycMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CycMatrix& b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar(const CycNum& s) const;

 private:
  const CycField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycNum> data_;
};

CycMatrix kron(const CycMatrix& a, const CycMatrix& b);
CycMatrix direct_sum(const CycMatrix& a, const CycMatrix& b);

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order. Pivot rows are chosen with the fewest nonzeros.
std::vector<std::size_t> row_reduce(CycMatrix& m);

}  // namespace eqb

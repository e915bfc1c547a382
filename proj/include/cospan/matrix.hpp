#ifndef COSPAN_MATRIX_HPP
#define COSPAN_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cospan/rational.hpp"

namespace cospan {

// Dense matrix over Q, row-major. Everything here is desk scale (n <= ~60),
// so no sparsity and no cleverness: exact arithmetic and deterministic
// results are the priorities.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  // Throws DomainError("ShapeMismatch") on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                  std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column_sums() const;
  bool is_zero() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

// Column-reorder: result column j = m column `perm[j]`.
RationalMatrix select_columns(const RationalMatrix& m, const std::vector<std::size_t>& perm);

}  // namespace cospan

#endif

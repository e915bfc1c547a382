#include "cospan/subspace.hpp"

#include <vector>

#include "cospan/errors.hpp"

namespace cospan {

namespace {

// Gauss-Jordan elimination. Returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    }
    const Rational inv = 1 / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

RationalMatrix drop_zero_rows(const RationalMatrix& m, std::size_t keep) {
  RationalMatrix out(keep, m.cols());
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m) {
  RationalMatrix r = m;
  rref_in_place(r);
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix r = m;
  return rref_in_place(r).size();
}

RationalSubspace RationalSubspace::zero(std::size_t ambient) {
  RationalSubspace s;
  s.ambient_ = ambient;
  s.basis_ = RationalMatrix(0, ambient);
  return s;
}

RationalSubspace RationalSubspace::full(std::size_t ambient) {
  RationalSubspace s;
  s.ambient_ = ambient;
  s.basis_ = RationalMatrix::identity(ambient);
  return s;
}

RationalSubspace RationalSubspace::span_of_rows(const RationalMatrix& rows) {
  RationalMatrix r = rows;
  const auto pivots = rref_in_place(r);
  RationalSubspace s;
  s.ambient_ = rows.cols();
  s.basis_ = drop_zero_rows(r, pivots.size());
  return s;
}

RationalSubspace kernel(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  RationalMatrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t row = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(row, free_col) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis.at(row, pivots[k]) = -r.at(k, free_col);
    ++row;
  }
  return RationalSubspace::span_of_rows(basis);
}

RationalSubspace image(const RationalMatrix& m) {
  return RationalSubspace::span_of_rows(m.transpose());
}

RationalSubspace sum(const RationalSubspace& u, const RationalSubspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DomainError("AmbientMismatch", "subspace sum in different ambient spaces");
  return RationalSubspace::span_of_rows(vconcat(u.basis(), w.basis()));
}

RationalSubspace intersect(const RationalSubspace& u, const RationalSubspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DomainError("AmbientMismatch", "subspace intersection in different ambient spaces");
  // x in U cap W iff x = Bu^T a = Bw^T b; solve for (a, b) and piece x back.
  const RationalMatrix but = u.basis().transpose();
  const RationalMatrix bwt = w.basis().transpose();
  RationalMatrix neg_bwt = bwt;
  for (std::size_t i = 0; i < neg_bwt.rows(); ++i)
    for (std::size_t j = 0; j < neg_bwt.cols(); ++j) neg_bwt.at(i, j) = -neg_bwt.at(i, j);
  const RationalSubspace pairs = kernel(hconcat(but, neg_bwt));

  RationalMatrix to_x(u.ambient_dim(), u.dim() + w.dim());
  for (std::size_t i = 0; i < u.ambient_dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) to_x.at(i, j) = but.at(i, j);
  return apply(to_x, pairs);
}

RationalSubspace apply(const RationalMatrix& m, const RationalSubspace& u) {
  if (m.cols() != u.ambient_dim())
    throw DomainError("ShapeMismatch", "operator does not match subspace ambient dimension");
  return RationalSubspace::span_of_rows(u.basis() * m.transpose());
}

bool contains(const RationalSubspace& u, const RationalSubspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DomainError("AmbientMismatch", "containment check in different ambient spaces");
  // Reduce each basis vector of W against U's RREF basis.
  const RationalMatrix& b = u.basis();
  std::vector<std::size_t> pivot_col(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t c = 0;
    while (c < b.cols() && b.at(i, c) == 0) ++c;
    pivot_col[i] = c;
  }
  for (std::size_t wi = 0; wi < w.dim(); ++wi) {
    std::vector<Rational> v = w.basis().row(wi);
    for (std::size_t i = 0; i < b.rows(); ++i) {
      const Rational factor = v[pivot_col[i]];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) v[j] -= factor * b.at(i, j);
    }
    for (const auto& x : v)
      if (x != 0) return false;
  }
  return true;
}

RationalSubspace direct_sum(const RationalSubspace& u, const RationalSubspace& w) {
  return RationalSubspace::span_of_rows(block_diag(u.basis(), w.basis()));
}

}  // namespace cospan

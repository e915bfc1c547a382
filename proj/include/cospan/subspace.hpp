#ifndef COSPAN_SUBSPACE_HPP
#define COSPAN_SUBSPACE_HPP

#include <cstddef>

#include "cospan/matrix.hpp"

namespace cospan {

// Reduced row echelon form with fully deterministic pivoting (first nonzero
// column, first nonzero row). Row space is preserved.
RationalMatrix rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// A linear subspace of Q^n held in canonical form: the basis matrix is the
// unique RREF of its row space with zero rows dropped. Two subspaces are
// equal iff their bases are identical entrywise; this is the equality oracle
// everything downstream leans on.
class RationalSubspace {
public:
  RationalSubspace() = default;

  static RationalSubspace zero(std::size_t ambient);
  static RationalSubspace full(std::size_t ambient);
  // Rows span the subspace; they are canonicalized here.
  static RationalSubspace span_of_rows(const RationalMatrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;  // dim x ambient, RREF, no zero rows
};

// {v : Mv = 0}; dim = cols - rank.
RationalSubspace kernel(const RationalMatrix& m);
// Column space of M.
RationalSubspace image(const RationalMatrix& m);
RationalSubspace sum(const RationalSubspace& u, const RationalSubspace& w);
RationalSubspace intersect(const RationalSubspace& u, const RationalSubspace& w);
// Image of U under M; M.cols must equal U.ambient_dim.
RationalSubspace apply(const RationalMatrix& m, const RationalSubspace& u);
// True iff W is contained in U (every basis vector of W reduces to zero
// against U's RREF basis).
bool contains(const RationalSubspace& u, const RationalSubspace& w);
// Block subspace of Q^(m+n); dimensions add.
RationalSubspace direct_sum(const RationalSubspace& u, const RationalSubspace& w);

}  // namespace cospan

#endif

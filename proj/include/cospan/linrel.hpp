#ifndef COSPAN_LINREL_HPP
#define COSPAN_LINREL_HPP

#include <cstddef>

#include "cospan/subspace.hpp"

namespace cospan {

// Linear relation V -|-> W: a subspace of V (+) W in canonical form.
// Coordinate convention, fixed globally: the first dom_dim coordinates are
// the domain block, the rest the codomain block.
class LinearRelation {
public:
  LinearRelation() = default;
  // graph.ambient_dim must equal dom_dim + cod_dim.
  LinearRelation(std::size_t dom_dim, std::size_t cod_dim, RationalSubspace graph);

  std::size_t dom_dim() const { return dom_dim_; }
  std::size_t cod_dim() const { return cod_dim_; }
  const RationalSubspace& graph() const { return graph_; }

  friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
    return a.dom_dim_ == b.dom_dim_ && a.cod_dim_ == b.cod_dim_ && a.graph_ == b.graph_;
  }
  friend bool operator!=(const LinearRelation& a, const LinearRelation& b) { return !(a == b); }

private:
  std::size_t dom_dim_ = 0;
  std::size_t cod_dim_ = 0;
  RationalSubspace graph_;
};

// {(v, v)}; the horizontal identity.
LinearRelation identity_relation(std::size_t n);
// {(v, Mv)} for a linear map given by its matrix (cols = dom, rows = cod).
LinearRelation graph_of_matrix(const RationalMatrix& m);
// All of V (+) W.
LinearRelation full_relation(std::size_t dom_dim, std::size_t cod_dim);

// Usual relational composite: {(v, u) : exists w with (v, w) in R, (w, u) in S}.
// Computed as the projection of (R (+) full) cap (full (+) S) inside
// V (+) W (+) U; the result is canonical.
LinearRelation compose_relations(const LinearRelation& r, const LinearRelation& s);

// Direct sum with the block convention (v1, v2 | w1, w2); dims add.
LinearRelation tensor_relations(const LinearRelation& r, const LinearRelation& s);

// Square in the double category of linear relations: vertical maps f, g and
// horizontal relations top, bottom. A (unique) 2-morphism fills it iff
// (f (+) g) top  is contained in  bottom.
struct RelSquare {
  RationalMatrix f;  // top.dom -> bottom.dom
  RationalMatrix g;  // top.cod -> bottom.cod
  LinearRelation top, bottom;
};

bool is_rel_2morphism(const RelSquare& sq);

}  // namespace cospan

#endif

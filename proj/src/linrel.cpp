#include "cospan/linrel.hpp"

#include <numeric>

#include "cospan/errors.hpp"

namespace cospan {

LinearRelation::LinearRelation(std::size_t dom_dim, std::size_t cod_dim, RationalSubspace graph)
    : dom_dim_(dom_dim), cod_dim_(cod_dim), graph_(std::move(graph)) {
  if (graph_.ambient_dim() != dom_dim_ + cod_dim_)
    throw DomainError("DimensionMismatch", "relation graph does not match dom + cod dimensions");
}

LinearRelation identity_relation(std::size_t n) {
  RationalMatrix basis(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    basis.at(i, i) = 1;
    basis.at(i, n + i) = 1;
  }
  return LinearRelation(n, n, RationalSubspace::span_of_rows(basis));
}

LinearRelation graph_of_matrix(const RationalMatrix& m) {
  return LinearRelation(m.cols(), m.rows(),
                        RationalSubspace::span_of_rows(
                            hconcat(RationalMatrix::identity(m.cols()), m.transpose())));
}

LinearRelation full_relation(std::size_t dom_dim, std::size_t cod_dim) {
  return LinearRelation(dom_dim, cod_dim, RationalSubspace::full(dom_dim + cod_dim));
}

LinearRelation compose_relations(const LinearRelation& r, const LinearRelation& s) {
  if (r.cod_dim() != s.dom_dim())
    throw DomainError("DimensionMismatch", "relation composition with mismatched middle space");
  const std::size_t nv = r.dom_dim(), nw = r.cod_dim(), nu = s.cod_dim();

  const RationalSubspace left = direct_sum(r.graph(), RationalSubspace::full(nu));
  const RationalSubspace right = direct_sum(RationalSubspace::full(nv), s.graph());
  const RationalSubspace meet = intersect(left, right);

  RationalMatrix project(nv + nu, nv + nw + nu);
  for (std::size_t i = 0; i < nv; ++i) project.at(i, i) = 1;
  for (std::size_t i = 0; i < nu; ++i) project.at(nv + i, nv + nw + i) = 1;
  return LinearRelation(nv, nu, apply(project, meet));
}

LinearRelation tensor_relations(const LinearRelation& r, const LinearRelation& s) {
  const std::size_t m1 = r.dom_dim(), n1 = r.cod_dim();
  const std::size_t m2 = s.dom_dim(), n2 = s.cod_dim();
  // direct_sum yields blocks (v1, w1, v2, w2); shuffle to (v1, v2, w1, w2).
  std::vector<std::size_t> shuffle(m1 + m2 + n1 + n2);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m1; ++i) shuffle[pos++] = i;
  for (std::size_t i = 0; i < m2; ++i) shuffle[pos++] = m1 + n1 + i;
  for (std::size_t i = 0; i < n1; ++i) shuffle[pos++] = m1 + i;
  for (std::size_t i = 0; i < n2; ++i) shuffle[pos++] = m1 + n1 + m2 + i;
  const RationalSubspace both = direct_sum(r.graph(), s.graph());
  const RationalMatrix permuted = select_columns(both.basis(), shuffle);
  return LinearRelation(m1 + m2, n1 + n2, RationalSubspace::span_of_rows(permuted));
}

bool is_rel_2morphism(const RelSquare& sq) {
  if (sq.f.cols() != sq.top.dom_dim() || sq.f.rows() != sq.bottom.dom_dim() ||
      sq.g.cols() != sq.top.cod_dim() || sq.g.rows() != sq.bottom.cod_dim())
    throw DomainError("DimensionMismatch", "relation square with incompatible vertical maps");
  return contains(sq.bottom.graph(), apply(block_diag(sq.f, sq.g), sq.top.graph()));
}

}  // namespace cospan

#include "cospan/markov.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "cospan/errors.hpp"

namespace cospan {

bool is_infinitesimal_stochastic(const RationalMatrix& h) {
  if (h.rows() != h.cols()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j && h.at(i, j) < 0) return false;
  for (const auto& s : h.column_sums())
    if (s != 0) return false;
  return true;
}

Generator validate_generator(const FinSet& states, const RationalMatrix& h) {
  if (h.rows() != states.size() || h.cols() != states.size())
    throw DomainError("ShapeMismatch", "rate matrix is not |X| x |X|");
  for (std::size_t j = 0; j < h.cols(); ++j) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (i != j && h.at(i, j) < 0)
        throw DomainError("NegativeOffDiagonal", "rate from '" + states.label(j) + "' to '" +
                                                     states.label(i) + "' is negative");
    }
  }
  const auto sums = h.column_sums();
  for (std::size_t j = 0; j < sums.size(); ++j) {
    if (sums[j] != 0)
      throw DomainError("ColumnSumNonzero", "column '" + states.label(j) + "' sums to " +
                                                rational_to_string(sums[j]));
  }
  return Generator{states, h};
}

OpenMarkov::OpenMarkov(FinSet inputs, FinSet outputs, Generator gen, FinFunction in_map,
                       FinFunction out_map)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      gen_(std::move(gen)),
      in_map_(std::move(in_map)),
      out_map_(std::move(out_map)) {
  if (in_map_.dom() != inputs_ || out_map_.dom() != outputs_)
    throw DomainError("BoundaryMismatch", "leg domains do not match the declared feet");
  if (in_map_.cod() != gen_.states || out_map_.cod() != gen_.states)
    throw DomainError("BoundaryMismatch", "legs do not land in the state set");
  if (!in_map_.is_injective() || !out_map_.is_injective())
    throw DomainError("NonInjectiveLeg", "open Markov process legs must be injective");
}

OpenMarkov identity_open(const FinSet& s) {
  Generator zero{s, RationalMatrix(s.size(), s.size())};
  return OpenMarkov(s, s, zero, FinFunction::identity(s), FinFunction::identity(s));
}

OpenMarkov compose_open(const OpenMarkov& m, const OpenMarkov& n) {
  if (m.outputs() != n.inputs())
    throw DomainError("BoundaryMismatch", "outputs of the first do not equal inputs of the second");
  const PushoutResult po = pushout(m.out_map(), n.in_map());
  const RationalMatrix j_push = pushforward_matrix(po.from_left);
  const RationalMatrix k_push = pushforward_matrix(po.from_right);
  const RationalMatrix composite = j_push * m.hamiltonian() * j_push.transpose() +
                                   k_push * n.hamiltonian() * k_push.transpose();
  return OpenMarkov(m.inputs(), n.outputs(), validate_generator(po.apex, composite),
                    compose(m.in_map(), po.from_left), compose(n.out_map(), po.from_right));
}

RationalMatrix compose_hamiltonian_via_copairing(const OpenMarkov& m, const OpenMarkov& n) {
  if (m.outputs() != n.inputs())
    throw DomainError("BoundaryMismatch", "outputs of the first do not equal inputs of the second");
  const PushoutResult po = pushout(m.out_map(), n.in_map());
  const FinFunction ell = copair(po.from_left, po.from_right);
  const RationalMatrix ell_push = pushforward_matrix(ell);
  return ell_push * block_diag(m.hamiltonian(), n.hamiltonian()) * ell_push.transpose();
}

OpenMarkov tensor_open(const OpenMarkov& m, const OpenMarkov& n) {
  const Coproduct states = coproduct(m.states(), n.states());
  return OpenMarkov(coproduct(m.inputs(), n.inputs()).sum, coproduct(m.outputs(), n.outputs()).sum,
                    validate_generator(states.sum, block_diag(m.hamiltonian(), n.hamiltonian())),
                    coproduct_map(m.in_map(), n.in_map()),
                    coproduct_map(m.out_map(), n.out_map()));
}

std::vector<Rational> open_master_rhs(const OpenMarkov& m, const std::vector<Rational>& v,
                                      const BoundaryData& bd) {
  if (v.size() != m.states().size() || bd.inflows.size() != m.inputs().size() ||
      bd.outflows.size() != m.outputs().size())
    throw DomainError("ShapeMismatch", "state or boundary vector of wrong length");
  std::vector<Rational> rhs = m.hamiltonian().apply(v);
  for (std::size_t s = 0; s < bd.inflows.size(); ++s)
    rhs[m.in_map().apply_index(s)] += bd.inflows[s];
  for (std::size_t t = 0; t < bd.outflows.size(); ++t)
    rhs[m.out_map().apply_index(t)] -= bd.outflows[t];
  return rhs;
}

namespace {

// Plain dense double matrices, only used by the numeric semigroup check.
using DMat = std::vector<double>;

DMat dmul(const DMat& a, const DMat& b, std::size_t n) {
  DMat c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

DMat didentity(std::size_t n) {
  DMat m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return m;
}

// Solves q X = p by Gaussian elimination with partial pivoting.
DMat dsolve(DMat q, DMat p, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(q[r * n + col]) > std::fabs(q[piv * n + col])) piv = r;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(q[piv * n + j], q[col * n + j]);
      std::swap(p[piv * n + j], p[col * n + j]);
    }
    const double d = q[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      q[col * n + j] /= d;
      p[col * n + j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = q[r * n + col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        q[r * n + j] -= factor * q[col * n + j];
        p[r * n + j] -= factor * p[col * n + j];
      }
    }
  }
  return p;
}

// exp(A) by scaling and squaring with a degree-6 Pade approximant.
DMat dexp(DMat a, std::size_t n) {
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double colsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) colsum += std::fabs(a[i * n + j]);
    norm = std::max(norm, colsum);
  }
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& x : a) x *= scale;
  }

  static const double c[7] = {1.0,          1.0 / 2.0,     5.0 / 44.0, 1.0 / 66.0,
                              1.0 / 792.0,  1.0 / 15840.0, 1.0 / 665280.0};
  const DMat a2 = dmul(a, a, n);
  const DMat a4 = dmul(a2, a2, n);
  const DMat a6 = dmul(a4, a2, n);
  DMat u(n * n), v(n * n);
  const DMat id = didentity(n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const double odd = c[1] * id[k] + c[3] * a2[k] + c[5] * a4[k];
    v[k] = c[0] * id[k] + c[2] * a2[k] + c[4] * a4[k] + c[6] * a6[k];
    u[k] = odd;
  }
  u = dmul(a, u, n);
  DMat p(n * n), q(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    p[k] = v[k] + u[k];
    q[k] = v[k] - u[k];
  }
  DMat result = dsolve(std::move(q), std::move(p), n);
  for (int s = 0; s < squarings; ++s) result = dmul(result, result, n);
  return result;
}

}  // namespace

bool matrix_exp_stochastic_check(const Generator& g, double t, double tol) {
  if (t < 0) throw DomainError("NegativeTime", "semigroup check needs t >= 0");
  const std::size_t n = g.states.size();
  DMat a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = t * rational_to_double(g.rates.at(i, j));
  const DMat e = dexp(std::move(a), n);
  for (std::size_t j = 0; j < n; ++j) {
    double colsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i * n + j] < -tol) return false;
      colsum += e[i * n + j];
    }
    if (std::fabs(colsum - 1.0) > tol) return false;
  }
  return true;
}

RationalMatrix stochastic_section(const FinFunction& p,
                                  const std::optional<std::map<std::string, Rational>>& weights) {
  if (!p.is_surjective())
    throw DomainError("NotSurjective", "stochastic sections exist only for surjections");
  const auto fibers = p.fibers();
  RationalMatrix s(p.dom().size(), p.cod().size());
  for (std::size_t c = 0; c < fibers.size(); ++c) {
    const auto& fiber = fibers[c];
    bool any_given = false;
    if (weights) {
      for (auto x : fiber) any_given = any_given || weights->count(p.dom().label(x)) != 0;
    }
    if (!any_given) {
      const Rational share = Rational(1) / Rational(static_cast<long>(fiber.size()));
      for (auto x : fiber) s.at(x, c) = share;
      continue;
    }
    Rational total(0);
    for (auto x : fiber) {
      auto it = weights->find(p.dom().label(x));
      if (it == weights->end())
        throw DomainError("BadWeights", "fiber of '" + p.cod().label(c) +
                                            "' is only partially weighted");
      if (it->second < 0)
        throw DomainError("BadWeights", "negative weight for '" + p.dom().label(x) + "'");
      s.at(x, c) = it->second;
      total += it->second;
    }
    if (total != 1)
      throw DomainError("BadWeights", "weights on the fiber of '" + p.cod().label(c) +
                                          "' sum to " + rational_to_string(total));
  }
  return s;
}

bool is_lumpable(const Generator& g, const FinFunction& p) {
  if (p.dom() != g.states)
    throw DomainError("BoundaryMismatch", "lumping map domain is not the state set");
  if (!p.is_surjective()) throw DomainError("NotSurjective", "lumping map must be onto");
  const RationalMatrix ph = pushforward_matrix(p) * g.rates;
  for (const auto& fiber : p.fibers()) {
    for (std::size_t k = 1; k < fiber.size(); ++k) {
      for (std::size_t row = 0; row < ph.rows(); ++row)
        if (ph.at(row, fiber[0]) != ph.at(row, fiber[k])) return false;
    }
  }
  return true;
}

Generator lump(const Generator& g, const FinFunction& p, const RationalMatrix& s) {
  if (p.dom() != g.states)
    throw DomainError("BoundaryMismatch", "lumping map domain is not the state set");
  if (!p.is_surjective()) throw DomainError("NotSurjective", "lumping map must be onto");
  if (s.rows() != p.dom().size() || s.cols() != p.cod().size())
    throw DomainError("SectionMismatch", "section has the wrong shape");
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.at(i, j) < 0) throw DomainError("SectionMismatch", "section has a negative entry");
  if (!(pushforward_matrix(p) * s == RationalMatrix::identity(p.cod().size())))
    throw DomainError("SectionMismatch", "matrix is not a section of the lumping map");
  return validate_generator(p.cod(), pushforward_matrix(p) * g.rates * s);
}

bool check_morphism(const MarkovMorphism& m) {
  if (m.f.dom() != m.source.inputs() || m.f.cod() != m.target.inputs() ||
      m.p.dom() != m.source.states() || m.p.cod() != m.target.states() ||
      m.g.dom() != m.source.outputs() || m.g.cod() != m.target.outputs())
    throw DomainError("BoundaryMismatch", "morphism components do not match source/target");
  const SquareFS in_square{m.source.in_map(), m.target.in_map(), m.f, m.p};
  const SquareFS out_square{m.source.out_map(), m.target.out_map(), m.g, m.p};
  if (!square_commutes(in_square) || !square_commutes(out_square)) return false;
  if (!is_pullback(in_square) || !is_pullback(out_square)) return false;
  const RationalMatrix p_push = pushforward_matrix(m.p);
  return p_push * m.source.hamiltonian() == m.target.hamiltonian() * p_push;
}

MarkovMorphism identity_morphism(const OpenMarkov& m) {
  return MarkovMorphism{FinFunction::identity(m.inputs()), FinFunction::identity(m.states()),
                        FinFunction::identity(m.outputs()), m, m};
}

MarkovMorphism vertical_compose(const MarkovMorphism& m1, const MarkovMorphism& m2) {
  if (!(m1.target == m2.source))
    throw DomainError("BoundaryMismatch", "vertical composite needs matching middle cell");
  return MarkovMorphism{compose(m1.f, m2.f), compose(m1.p, m2.p), compose(m1.g, m2.g), m1.source,
                        m2.target};
}

MarkovMorphism horizontal_compose(const MarkovMorphism& m1, const MarkovMorphism& m2) {
  if (m1.g != m2.f)
    throw DomainError("BoundaryMismatch", "horizontal composite needs a shared boundary map");
  const OpenMarkov src = compose_open(m1.source, m2.source);
  const OpenMarkov tgt = compose_open(m1.target, m2.target);

  const PushoutResult po_src = pushout(m1.source.out_map(), m2.source.in_map());
  const PushoutResult po_tgt = pushout(m1.target.out_map(), m2.target.in_map());
  // p +_g q, induced on the pushout by the universal property.
  const FinFunction q1 = copair(po_src.from_left, po_src.from_right);
  const FinFunction q2 = copair(compose(m1.p, po_tgt.from_left), compose(m2.p, po_tgt.from_right));
  return MarkovMorphism{m1.f, mediating_map(q1, q2), m2.g, src, tgt};
}

LinearRelation black_box(const OpenMarkov& m) {
  const std::size_t nx = m.states().size();
  const std::size_t ns = m.inputs().size();
  const std::size_t nt = m.outputs().size();

  RationalMatrix o_push = pushforward_matrix(m.out_map());
  for (std::size_t i = 0; i < o_push.rows(); ++i)
    for (std::size_t j = 0; j < o_push.cols(); ++j) o_push.at(i, j) = -o_push.at(i, j);
  const RationalMatrix steady =
      hconcat(hconcat(m.hamiltonian(), pushforward_matrix(m.in_map())), o_push);
  const RationalSubspace solutions = kernel(steady);

  // (v, I, O) |-> (i*v, I, o*v, O)
  RationalMatrix observe(2 * ns + 2 * nt, nx + ns + nt);
  const RationalMatrix i_pull = pullback_matrix(m.in_map());
  const RationalMatrix o_pull = pullback_matrix(m.out_map());
  for (std::size_t r = 0; r < ns; ++r)
    for (std::size_t c = 0; c < nx; ++c) observe.at(r, c) = i_pull.at(r, c);
  for (std::size_t r = 0; r < ns; ++r) observe.at(ns + r, nx + r) = 1;
  for (std::size_t r = 0; r < nt; ++r)
    for (std::size_t c = 0; c < nx; ++c) observe.at(2 * ns + r, c) = o_pull.at(r, c);
  for (std::size_t r = 0; r < nt; ++r) observe.at(2 * ns + nt + r, nx + ns + r) = 1;

  return LinearRelation(2 * ns, 2 * nt, apply(observe, solutions));
}

RelSquare black_box_morphism(const MarkovMorphism& m) {
  if (!check_morphism(m))
    throw DomainError("InvalidMorphism", "not a morphism of open Markov processes");
  const RationalMatrix f_push = pushforward_matrix(m.f);
  const RationalMatrix g_push = pushforward_matrix(m.g);
  return RelSquare{block_diag(f_push, f_push), block_diag(g_push, g_push), black_box(m.source),
                   black_box(m.target)};
}

RationalMatrix boundary_interleave(std::size_t a, std::size_t b) {
  RationalMatrix m(2 * (a + b), 2 * (a + b));
  for (std::size_t i = 0; i < a; ++i) {
    m.at(i, i) = 1;              // a-probabilities stay in front
    m.at(a + b + i, a + i) = 1;  // a-flows move past the b-probabilities
  }
  for (std::size_t i = 0; i < b; ++i) {
    m.at(a + i, 2 * a + i) = 1;
    m.at(a + b + a + i, 2 * a + b + i) = 1;
  }
  return m;
}

LinearRelation tensor_black_boxes(const LinearRelation& bb_m, std::size_t in_m, std::size_t out_m,
                                  const LinearRelation& bb_n, std::size_t in_n,
                                  std::size_t out_n) {
  if (bb_m.dom_dim() != 2 * in_m || bb_m.cod_dim() != 2 * out_m ||
      bb_n.dom_dim() != 2 * in_n || bb_n.cod_dim() != 2 * out_n)
    throw DomainError("DimensionMismatch", "black boxes do not match the stated boundary sizes");
  const LinearRelation plain = tensor_relations(bb_m, bb_n);
  const RationalMatrix shuffle =
      block_diag(boundary_interleave(in_m, in_n), boundary_interleave(out_m, out_n));
  return LinearRelation(plain.dom_dim(), plain.cod_dim(), apply(shuffle, plain.graph()));
}

Companion companion_of(const FinFunction& f) {
  if (!f.is_bijective())
    throw DomainError("NotBijection", "companions exist only for bijections here");
  const FinSet& s = f.dom();
  const FinSet& s2 = f.cod();
  Generator zero{s2, RationalMatrix(s2.size(), s2.size())};
  OpenMarkov cell(s, s2, zero, f, FinFunction::identity(s2));
  OpenMarkov conjoint(s2, s, zero, FinFunction::identity(s2), f);
  MarkovMorphism unit{FinFunction::identity(s), f, f, identity_open(s), cell};
  MarkovMorphism counit{f, FinFunction::identity(s2), FinFunction::identity(s2), cell,
                        identity_open(s2)};
  return Companion{cell, unit, counit, conjoint};
}

bool companion_equations_hold(const Companion& c) {
  const FinSet& s = c.cell.inputs();
  const FinSet& s2 = c.cell.outputs();
  const FinFunction& f = c.cell.in_map();

  // Vertical paste of unit and counit is the identity-assigning square on f.
  const MarkovMorphism vert = vertical_compose(c.unit, c.counit);
  if (vert.f != f || vert.p != f || vert.g != f) return false;
  if (!(vert.source == identity_open(s)) || !(vert.target == identity_open(s2))) return false;
  if (!check_morphism(vert)) return false;

  // Horizontal paste reduces to the identity on the cell under the unitors.
  const MarkovMorphism horiz = horizontal_compose(c.unit, c.counit);
  if (horiz.f != FinFunction::identity(s) || horiz.g != FinFunction::identity(s2)) return false;

  const PushoutResult po_left = pushout(identity_open(s).out_map(), c.cell.in_map());
  const FinFunction lambda = mediating_map(copair(po_left.from_left, po_left.from_right),
                                           copair(f, FinFunction::identity(s2)));
  const PushoutResult po_right = pushout(c.cell.out_map(), identity_open(s2).in_map());
  const FinFunction rho =
      mediating_map(copair(po_right.from_left, po_right.from_right),
                    copair(FinFunction::identity(s2), FinFunction::identity(s2)));
  if (!lambda.is_bijective() || !rho.is_bijective()) return false;

  // Unitors carry the composite legs to the cell legs.
  if (compose(horiz.source.in_map(), lambda) != c.cell.in_map()) return false;
  if (compose(horiz.source.out_map(), lambda) != c.cell.out_map()) return false;
  if (compose(horiz.target.in_map(), rho) != c.cell.in_map()) return false;
  if (compose(horiz.target.out_map(), rho) != c.cell.out_map()) return false;

  return compose(horiz.p, rho) == lambda;
}

}  // namespace cospan

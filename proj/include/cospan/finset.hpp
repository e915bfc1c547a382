#ifndef COSPAN_FINSET_HPP
#define COSPAN_FINSET_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cospan/matrix.hpp"

namespace cospan {

// Finite set of distinct string labels. Label order is the canonical element
// order; equality is by label sequence, isomorphism is a separate relation.
class FinSet {
public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Total map between finite sets, stored as dom-index -> cod-index.
class FinFunction {
public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> map);

  static FinFunction identity(const FinSet& s);
  static FinFunction from_labels(const FinSet& dom, const FinSet& cod,
                                 const std::map<std::string, std::string>& map);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::size_t apply_index(std::size_t i) const { return map_.at(i); }
  const std::string& apply(const std::string& label) const {
    return cod_.label(map_.at(dom_.index_of(label)));
  }
  const std::vector<std::size_t>& mapping() const { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  // dom indices mapped to each cod index.
  std::vector<std::vector<std::size_t>> fibers() const;

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map_ == b.map_;
  }
  friend bool operator!=(const FinFunction& a, const FinFunction& b) { return !(a == b); }

private:
  FinSet dom_, cod_;
  std::vector<std::size_t> map_;
};

// Diagrammatic composite: (g after f)(x) = g(f(x)). Requires f.cod == g.dom.
FinFunction compose(const FinFunction& f, const FinFunction& g);

// Cospan of finite sets: left_foot -i-> apex <-o- right_foot.
struct CospanFS {
  FinSet left_foot, apex, right_foot;
  FinFunction in_map, out_map;
};

struct Coproduct {
  FinSet sum;
  FinFunction from_left, from_right;
};

// Disjoint union with "L:"/"R:" label prefixes; files need concrete names
// even though everything downstream only cares up to isomorphism.
Coproduct coproduct(const FinSet& a, const FinSet& b);
// [f, g] : A + B -> C for f : A -> C, g : B -> C.
FinFunction copair(const FinFunction& f, const FinFunction& g);
// f + g : A + A' -> B + B'.
FinFunction coproduct_map(const FinFunction& f, const FinFunction& g);

struct PushoutResult {
  FinSet apex;
  FinFunction from_left;   // X -> apex
  FinFunction from_right;  // Y -> apex
};

// Pushout of f : T -> X, g : T -> Y, computed by union-find on X + Y with
// canonical representative = lexicographically least merged label and element
// order = first appearance scanning X then Y.
PushoutResult pushout(const FinFunction& f, const FinFunction& g);

// Commuting square top: S -> X, left: S -> S', bottom: S' -> X',
// right: X -> X'.
struct SquareFS {
  FinFunction top, bottom, left, right;
};

bool square_commutes(const SquareFS& sq);
// Fiberwise-bijection criterion: for every s' in S', top restricts to a
// bijection {s : left(s) = s'} -> {x : right(x) = bottom(s')}.
// Throws DomainError("NonCommutingSquare") when the square does not commute.
bool is_pullback(const SquareFS& sq);

// (f*)_{ij} = 1 iff f(j) = i; shape |cod| x |dom|. Columns sum to 1.
RationalMatrix pushforward_matrix(const FinFunction& f);
// Transpose of the pushforward.
RationalMatrix pullback_matrix(const FinFunction& f);

// Given q1 : A ->> P1 (surjective) and q2 : A -> P2 with the same domain,
// returns the unique m : P1 -> P2 with m . q1 = q2, or throws
// DomainError("NoMediatingMap") if q2 does not factor through q1.
FinFunction mediating_map(const FinFunction& q1, const FinFunction& q2);

}  // namespace cospan

#endif

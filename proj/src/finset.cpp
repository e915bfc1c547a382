#include "cospan/finset.hpp"

#include <algorithm>
#include <numeric>

#include "cospan/errors.hpp"

namespace cospan {

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw DomainError("DuplicateLabel", "label '" + labels_[i] + "' appears twice");
  }
}

std::size_t FinSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw DomainError("UnknownLabel", "label '" + label + "' not in set");
  return it->second;
}

FinFunction::FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size())
    throw DomainError("TotalityViolation", "mapping does not cover the whole domain");
  for (auto v : map_)
    if (v >= cod_.size()) throw DomainError("CodomainViolation", "image index out of range");
}

FinFunction FinFunction::identity(const FinSet& s) {
  std::vector<std::size_t> map(s.size());
  std::iota(map.begin(), map.end(), 0);
  return FinFunction(s, s, std::move(map));
}

FinFunction FinFunction::from_labels(const FinSet& dom, const FinSet& cod,
                                     const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> idx(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto it = map.find(dom.label(i));
    if (it == map.end())
      throw DomainError("TotalityViolation", "no image for label '" + dom.label(i) + "'");
    if (!cod.contains(it->second))
      throw DomainError("CodomainViolation", "image '" + it->second + "' not in codomain");
    idx[i] = cod.index_of(it->second);
  }
  return FinFunction(dom, cod, std::move(idx));
}

bool FinFunction::is_injective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (auto v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinFunction::is_surjective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (auto v : map_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::vector<std::size_t>> FinFunction::fibers() const {
  std::vector<std::vector<std::size_t>> f(cod_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) f[map_[i]].push_back(i);
  return f;
}

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.dom())
    throw DomainError("BoundaryMismatch", "composition with mismatched codomain/domain");
  std::vector<std::size_t> map(f.dom().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.apply_index(f.apply_index(i));
  return FinFunction(f.dom(), g.cod(), std::move(map));
}

Coproduct coproduct(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  FinSet sum(std::move(labels));

  std::vector<std::size_t> inl(a.size()), inr(b.size());
  std::iota(inl.begin(), inl.end(), 0);
  std::iota(inr.begin(), inr.end(), a.size());
  return Coproduct{sum, FinFunction(a, sum, std::move(inl)), FinFunction(b, sum, std::move(inr))};
}

FinFunction copair(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod()) throw DomainError("BoundaryMismatch", "copairing with unequal codomains");
  const Coproduct cp = coproduct(f.dom(), g.dom());
  std::vector<std::size_t> map;
  map.reserve(cp.sum.size());
  for (auto v : f.mapping()) map.push_back(v);
  for (auto v : g.mapping()) map.push_back(v);
  return FinFunction(cp.sum, f.cod(), std::move(map));
}

FinFunction coproduct_map(const FinFunction& f, const FinFunction& g) {
  const Coproduct dom = coproduct(f.dom(), g.dom());
  const Coproduct cod = coproduct(f.cod(), g.cod());
  std::vector<std::size_t> map;
  map.reserve(dom.sum.size());
  for (auto v : f.mapping()) map.push_back(cod.from_left.apply_index(v));
  for (auto v : g.mapping()) map.push_back(cod.from_right.apply_index(v));
  return FinFunction(dom.sum, cod.sum, std::move(map));
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PushoutResult pushout(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom()) throw DomainError("BoundaryMismatch", "pushout legs with unequal domains");
  const Coproduct cp = coproduct(f.cod(), g.cod());
  const std::size_t n = cp.sum.size();

  UnionFind uf(n);
  for (std::size_t t = 0; t < f.dom().size(); ++t) {
    uf.unite(cp.from_left.apply_index(f.apply_index(t)),
             cp.from_right.apply_index(g.apply_index(t)));
  }

  // Representative label of a class = lexicographically least merged label.
  std::vector<std::string> rep_label(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (rep_label[r].empty() || cp.sum.label(i) < rep_label[r]) rep_label[r] = cp.sum.label(i);
  }

  // Element order of the apex = first appearance scanning X then Y.
  std::vector<std::string> apex_labels;
  std::vector<std::size_t> class_slot(n, n);
  std::vector<std::size_t> quotient(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (class_slot[r] == n) {
      class_slot[r] = apex_labels.size();
      apex_labels.push_back(rep_label[r]);
    }
    quotient[i] = class_slot[r];
  }
  FinSet apex(std::move(apex_labels));

  std::vector<std::size_t> jx(f.cod().size()), ky(g.cod().size());
  for (std::size_t x = 0; x < jx.size(); ++x) jx[x] = quotient[cp.from_left.apply_index(x)];
  for (std::size_t y = 0; y < ky.size(); ++y) ky[y] = quotient[cp.from_right.apply_index(y)];
  return PushoutResult{apex, FinFunction(f.cod(), apex, std::move(jx)),
                       FinFunction(g.cod(), apex, std::move(ky))};
}

bool square_commutes(const SquareFS& sq) {
  return compose(sq.top, sq.right) == compose(sq.left, sq.bottom);
}

bool is_pullback(const SquareFS& sq) {
  if (!square_commutes(sq)) throw DomainError("NonCommutingSquare", "pullback test on a non-commuting square");
  const auto left_fibers = sq.left.fibers();
  for (std::size_t sp = 0; sp < sq.left.cod().size(); ++sp) {
    const std::size_t target = sq.bottom.apply_index(sp);
    std::vector<bool> hit(sq.right.dom().size(), false);
    std::size_t right_fiber_size = 0;
    for (std::size_t x = 0; x < sq.right.dom().size(); ++x)
      if (sq.right.apply_index(x) == target) ++right_fiber_size;
    if (left_fibers[sp].size() != right_fiber_size) return false;
    for (auto s : left_fibers[sp]) {
      const std::size_t x = sq.top.apply_index(s);
      if (sq.right.apply_index(x) != target || hit[x]) return false;
      hit[x] = true;
    }
  }
  return true;
}

RationalMatrix pushforward_matrix(const FinFunction& f) {
  RationalMatrix m(f.cod().size(), f.dom().size());
  for (std::size_t j = 0; j < f.dom().size(); ++j) m.at(f.apply_index(j), j) = 1;
  return m;
}

RationalMatrix pullback_matrix(const FinFunction& f) { return pushforward_matrix(f).transpose(); }

FinFunction mediating_map(const FinFunction& q1, const FinFunction& q2) {
  if (q1.dom() != q2.dom())
    throw DomainError("BoundaryMismatch", "mediating map needs a common source");
  if (!q1.is_surjective())
    throw DomainError("NoMediatingMap", "first quotient map is not surjective");
  const std::size_t unset = q2.cod().size();
  std::vector<std::size_t> map(q1.cod().size(), unset);
  for (std::size_t a = 0; a < q1.dom().size(); ++a) {
    const std::size_t p1 = q1.apply_index(a);
    const std::size_t p2 = q2.apply_index(a);
    if (map[p1] == unset) {
      map[p1] = p2;
    } else if (map[p1] != p2) {
      throw DomainError("NoMediatingMap", "map does not factor through the quotient");
    }
  }
  return FinFunction(q1.cod(), q2.cod(), std::move(map));
}

}  // namespace cospan

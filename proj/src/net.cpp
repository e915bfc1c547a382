#include "cospan/net.hpp"

#include <algorithm>
#include <sstream>

#include "cospan/errors.hpp"

namespace cospan {

Multiset apply_monoid_map(const FinFunction& f, const Multiset& m) {
  Multiset out;
  for (const auto& [label, count] : m) {
    if (count == 0) continue;
    out[f.apply(label)] += count;
  }
  return out;
}

Graph validate_graph(Graph g) {
  if (g.src.dom() != g.edges || g.tgt.dom() != g.edges || g.src.cod() != g.nodes ||
      g.tgt.cod() != g.nodes)
    throw DomainError("ShapeMismatch", "graph src/tgt must map edges to nodes");
  if (g.rates) {
    if (g.rates->size() != g.edges.size())
      throw DomainError("ShapeMismatch", "one rate per edge required");
    for (std::size_t e = 0; e < g.rates->size(); ++e)
      if ((*g.rates)[e] <= 0)
        throw DomainError("NonPositiveRate", "edge '" + g.edges.label(e) + "' needs rate > 0");
  }
  return g;
}

PetriRates validate_petri(PetriRates p) {
  if (p.pre.size() != p.transitions.size() || p.post.size() != p.transitions.size() ||
      p.rates.size() != p.transitions.size())
    throw DomainError("ShapeMismatch", "one pre/post/rate triple per transition required");
  for (std::size_t t = 0; t < p.transitions.size(); ++t) {
    for (const auto* side : {&p.pre[t], &p.post[t]}) {
      for (const auto& [label, count] : *side) {
        if (!p.species.contains(label))
          throw DomainError("UnknownLabel", "multiset mentions unknown species '" + label + "'");
        if (count == 0)
          throw DomainError("ShapeMismatch", "zero multiplicities must be omitted");
      }
    }
    if (p.rates[t] < 0)
      throw DomainError("NegativeRate", "transition '" + p.transitions.label(t) + "' needs rate >= 0");
  }
  return p;
}

OpenNet::OpenNet(FinSet left_foot, FinSet right_foot, Decoration dec, FinFunction in_map,
                 FinFunction out_map)
    : left_foot_(std::move(left_foot)),
      right_foot_(std::move(right_foot)),
      dec_(std::move(dec)),
      in_map_(std::move(in_map)),
      out_map_(std::move(out_map)) {
  if (std::holds_alternative<Graph>(dec_)) {
    dec_ = validate_graph(std::get<Graph>(dec_));
  } else {
    dec_ = validate_petri(std::get<PetriRates>(dec_));
  }
  if (in_map_.dom() != left_foot_ || out_map_.dom() != right_foot_)
    throw DomainError("BoundaryMismatch", "leg domains do not match the declared feet");
  if (in_map_.cod() != carrier() || out_map_.cod() != carrier())
    throw DomainError("BoundaryMismatch", "legs must land in the vertex/species set");
}

NetKind OpenNet::kind() const {
  if (std::holds_alternative<PetriRates>(dec_)) return NetKind::Petri;
  return std::get<Graph>(dec_).rates ? NetKind::RatedGraph : NetKind::Graph;
}

const FinSet& OpenNet::carrier() const {
  if (std::holds_alternative<Graph>(dec_)) return std::get<Graph>(dec_).nodes;
  return std::get<PetriRates>(dec_).species;
}

std::size_t OpenNet::cell_count() const {
  if (std::holds_alternative<Graph>(dec_)) return std::get<Graph>(dec_).edges.size();
  return std::get<PetriRates>(dec_).transitions.size();
}

OpenNet identity_open_net(const FinSet& s, NetKind kind) {
  const FinSet none;
  if (kind == NetKind::Petri) {
    PetriRates p{s, none, {}, {}, {}};
    return OpenNet(s, s, p, FinFunction::identity(s), FinFunction::identity(s));
  }
  Graph g{s, none, FinFunction(none, s, {}), FinFunction(none, s, {}), std::nullopt};
  if (kind == NetKind::RatedGraph) g.rates = std::vector<Rational>{};
  return OpenNet(s, s, g, FinFunction::identity(s), FinFunction::identity(s));
}

OpenNet compose_open_net(const OpenNet& m, const OpenNet& n) {
  if (m.right_foot() != n.left_foot())
    throw DomainError("BoundaryMismatch", "right foot of the first must equal left foot of the second");
  if (m.kind() != n.kind()) throw DomainError("KindMismatch", "cannot compose different kinds");

  const PushoutResult po = pushout(m.out_map(), n.in_map());
  const FinFunction in_leg = compose(m.in_map(), po.from_left);
  const FinFunction out_leg = compose(n.out_map(), po.from_right);

  if (m.kind() == NetKind::Petri) {
    const auto& a = std::get<PetriRates>(m.decoration());
    const auto& b = std::get<PetriRates>(n.decoration());
    PetriRates out;
    out.species = po.apex;
    out.transitions = coproduct(a.transitions, b.transitions).sum;
    for (std::size_t t = 0; t < a.transitions.size(); ++t) {
      out.pre.push_back(apply_monoid_map(po.from_left, a.pre[t]));
      out.post.push_back(apply_monoid_map(po.from_left, a.post[t]));
      out.rates.push_back(a.rates[t]);
    }
    for (std::size_t t = 0; t < b.transitions.size(); ++t) {
      out.pre.push_back(apply_monoid_map(po.from_right, b.pre[t]));
      out.post.push_back(apply_monoid_map(po.from_right, b.post[t]));
      out.rates.push_back(b.rates[t]);
    }
    return OpenNet(m.left_foot(), n.right_foot(), out, in_leg, out_leg);
  }

  const auto& a = std::get<Graph>(m.decoration());
  const auto& b = std::get<Graph>(n.decoration());
  Graph out;
  out.nodes = po.apex;
  out.edges = coproduct(a.edges, b.edges).sum;
  out.src = copair(compose(a.src, po.from_left), compose(b.src, po.from_right));
  out.tgt = copair(compose(a.tgt, po.from_left), compose(b.tgt, po.from_right));
  if (a.rates) {
    std::vector<Rational> rates = *a.rates;
    rates.insert(rates.end(), b.rates->begin(), b.rates->end());
    out.rates = std::move(rates);
  }
  return OpenNet(m.left_foot(), n.right_foot(), out, in_leg, out_leg);
}

OpenNet tensor_open_net(const OpenNet& m, const OpenNet& n) {
  if (m.kind() != n.kind()) throw DomainError("KindMismatch", "cannot tensor different kinds");
  const Coproduct carrier = coproduct(m.carrier(), n.carrier());
  const FinFunction in_leg = coproduct_map(m.in_map(), n.in_map());
  const FinFunction out_leg = coproduct_map(m.out_map(), n.out_map());
  const FinSet left = coproduct(m.left_foot(), n.left_foot()).sum;
  const FinSet right = coproduct(m.right_foot(), n.right_foot()).sum;

  if (m.kind() == NetKind::Petri) {
    const auto& a = std::get<PetriRates>(m.decoration());
    const auto& b = std::get<PetriRates>(n.decoration());
    PetriRates out;
    out.species = carrier.sum;
    out.transitions = coproduct(a.transitions, b.transitions).sum;
    for (std::size_t t = 0; t < a.transitions.size(); ++t) {
      out.pre.push_back(apply_monoid_map(carrier.from_left, a.pre[t]));
      out.post.push_back(apply_monoid_map(carrier.from_left, a.post[t]));
      out.rates.push_back(a.rates[t]);
    }
    for (std::size_t t = 0; t < b.transitions.size(); ++t) {
      out.pre.push_back(apply_monoid_map(carrier.from_right, b.pre[t]));
      out.post.push_back(apply_monoid_map(carrier.from_right, b.post[t]));
      out.rates.push_back(b.rates[t]);
    }
    return OpenNet(left, right, out, in_leg, out_leg);
  }

  const auto& a = std::get<Graph>(m.decoration());
  const auto& b = std::get<Graph>(n.decoration());
  Graph out;
  out.nodes = carrier.sum;
  out.edges = coproduct(a.edges, b.edges).sum;
  out.src = coproduct_map(a.src, b.src);
  out.tgt = coproduct_map(a.tgt, b.tgt);
  if (a.rates) {
    std::vector<Rational> rates = *a.rates;
    rates.insert(rates.end(), b.rates->begin(), b.rates->end());
    out.rates = std::move(rates);
  }
  return OpenNet(left, right, out, in_leg, out_leg);
}

namespace {

bool preserves_decoration(const DecMorphism& alpha, const OpenNet& src, const OpenNet& tgt) {
  if (src.kind() != tgt.kind()) return false;
  if (src.kind() == NetKind::Petri) {
    const auto& a = std::get<PetriRates>(src.decoration());
    const auto& b = std::get<PetriRates>(tgt.decoration());
    if (alpha.vertices.dom() != a.species || alpha.vertices.cod() != b.species ||
        alpha.cells.dom() != a.transitions || alpha.cells.cod() != b.transitions)
      return false;
    for (std::size_t t = 0; t < a.transitions.size(); ++t) {
      const std::size_t t2 = alpha.cells.apply_index(t);
      if (apply_monoid_map(alpha.vertices, a.pre[t]) != b.pre[t2]) return false;
      if (apply_monoid_map(alpha.vertices, a.post[t]) != b.post[t2]) return false;
      if (a.rates[t] != b.rates[t2]) return false;
    }
    return true;
  }
  const auto& a = std::get<Graph>(src.decoration());
  const auto& b = std::get<Graph>(tgt.decoration());
  if (alpha.vertices.dom() != a.nodes || alpha.vertices.cod() != b.nodes ||
      alpha.cells.dom() != a.edges || alpha.cells.cod() != b.edges)
    return false;
  if (compose(a.src, alpha.vertices) != compose(alpha.cells, b.src)) return false;
  if (compose(a.tgt, alpha.vertices) != compose(alpha.cells, b.tgt)) return false;
  if (a.rates) {
    for (std::size_t e = 0; e < a.edges.size(); ++e)
      if ((*a.rates)[e] != (*b.rates)[alpha.cells.apply_index(e)]) return false;
  }
  return true;
}

}  // namespace

bool check_net_square(const NetSquare& sq) {
  if (sq.f.dom() != sq.source.left_foot() || sq.f.cod() != sq.target.left_foot() ||
      sq.g.dom() != sq.source.right_foot() || sq.g.cod() != sq.target.right_foot())
    throw DomainError("BoundaryMismatch", "foot maps do not match source/target feet");
  if (compose(sq.source.in_map(), sq.alpha.vertices) != compose(sq.f, sq.target.in_map()))
    return false;
  if (compose(sq.source.out_map(), sq.alpha.vertices) != compose(sq.g, sq.target.out_map()))
    return false;
  return preserves_decoration(sq.alpha, sq.source, sq.target);
}

NetSquare identity_net_square(const OpenNet& m) {
  const FinSet& cells = std::holds_alternative<Graph>(m.decoration())
                            ? std::get<Graph>(m.decoration()).edges
                            : std::get<PetriRates>(m.decoration()).transitions;
  return NetSquare{FinFunction::identity(m.left_foot()), FinFunction::identity(m.right_foot()),
                   DecMorphism{FinFunction::identity(m.carrier()), FinFunction::identity(cells)},
                   m, m};
}

NetSquare vertical_compose(const NetSquare& a, const NetSquare& b) {
  if (!(a.target == b.source))
    throw DomainError("BoundaryMismatch", "vertical composite needs matching middle cell");
  return NetSquare{compose(a.f, b.f), compose(a.g, b.g),
                   DecMorphism{compose(a.alpha.vertices, b.alpha.vertices),
                               compose(a.alpha.cells, b.alpha.cells)},
                   a.source, b.target};
}

NetSquare horizontal_compose(const NetSquare& a, const NetSquare& b) {
  if (a.g != b.f)
    throw DomainError("BoundaryMismatch", "horizontal composite needs a shared boundary map");
  const OpenNet src = compose_open_net(a.source, b.source);
  const OpenNet tgt = compose_open_net(a.target, b.target);

  const PushoutResult po_src = pushout(a.source.out_map(), b.source.in_map());
  const PushoutResult po_tgt = pushout(a.target.out_map(), b.target.in_map());
  const FinFunction q1 = copair(po_src.from_left, po_src.from_right);
  const FinFunction q2 = copair(compose(a.alpha.vertices, po_tgt.from_left),
                                compose(b.alpha.vertices, po_tgt.from_right));
  return NetSquare{a.f, b.g,
                   DecMorphism{mediating_map(q1, q2), coproduct_map(a.alpha.cells, b.alpha.cells)},
                   src, tgt};
}

namespace {

constexpr std::size_t kIsoVertexCap = 9;

std::string graph_vertex_signature(const Graph& g, std::size_t v) {
  std::vector<std::string> out, in;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::string rate = g.rates ? rational_to_string((*g.rates)[e]) : "-";
    if (g.src.apply_index(e) == v) out.push_back(rate);
    if (g.tgt.apply_index(e) == v) in.push_back(rate);
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  std::ostringstream sig;
  sig << "o:";
  for (const auto& r : out) sig << r << ",";
  sig << "|i:";
  for (const auto& r : in) sig << r << ",";
  return sig.str();
}

std::string petri_vertex_signature(const PetriRates& p, std::size_t v) {
  const std::string& label = p.species.label(v);
  std::vector<std::string> involvements;
  for (std::size_t t = 0; t < p.transitions.size(); ++t) {
    const auto pre_it = p.pre[t].find(label);
    const auto post_it = p.post[t].find(label);
    const std::uint64_t c_pre = pre_it == p.pre[t].end() ? 0 : pre_it->second;
    const std::uint64_t c_post = post_it == p.post[t].end() ? 0 : post_it->second;
    if (c_pre == 0 && c_post == 0) continue;
    involvements.push_back(std::to_string(c_pre) + ":" + std::to_string(c_post) + ":" +
                           rational_to_string(p.rates[t]));
  }
  std::sort(involvements.begin(), involvements.end());
  std::ostringstream sig;
  for (const auto& s : involvements) sig << s << ";";
  return sig.str();
}

// Tries to extend the vertex bijection to a cell bijection; the cells of a
// decoration are interchangeable exactly within equal (endpoints, rate) or
// (pre, post, rate) groups.
std::optional<FinFunction> match_cells(const OpenNet& m, const OpenNet& n,
                                       const std::vector<std::size_t>& vertex_map) {
  std::map<std::string, std::vector<std::size_t>> groups_m, groups_n;
  const auto key_of = [&](const OpenNet& net, std::size_t cell, bool mapped) -> std::string {
    if (net.kind() == NetKind::Petri) {
      const auto& p = std::get<PetriRates>(net.decoration());
      Multiset pre = p.pre[cell], post = p.post[cell];
      if (mapped) {
        Multiset pre2, post2;
        for (const auto& [l, c] : pre) pre2[n.carrier().label(vertex_map[m.carrier().index_of(l)])] += c;
        for (const auto& [l, c] : post) post2[n.carrier().label(vertex_map[m.carrier().index_of(l)])] += c;
        pre = pre2;
        post = post2;
      }
      std::ostringstream key;
      for (const auto& [l, c] : pre) key << l << "*" << c << ",";
      key << "->";
      for (const auto& [l, c] : post) key << l << "*" << c << ",";
      key << "@" << rational_to_string(p.rates[cell]);
      return key.str();
    }
    const auto& g = std::get<Graph>(net.decoration());
    std::size_t s = g.src.apply_index(cell), t = g.tgt.apply_index(cell);
    if (mapped) {
      s = vertex_map[s];
      t = vertex_map[t];
    }
    return std::to_string(s) + "->" + std::to_string(t) + "@" +
           (g.rates ? rational_to_string((*g.rates)[cell]) : "-");
  };

  const std::size_t cells_m = m.cell_count(), cells_n = n.cell_count();
  if (cells_m != cells_n) return std::nullopt;
  for (std::size_t c = 0; c < cells_m; ++c) groups_m[key_of(m, c, true)].push_back(c);
  for (std::size_t c = 0; c < cells_n; ++c) groups_n[key_of(n, c, false)].push_back(c);
  if (groups_m.size() != groups_n.size()) return std::nullopt;

  std::vector<std::size_t> cell_map(cells_m);
  for (const auto& [key, cm] : groups_m) {
    auto it = groups_n.find(key);
    if (it == groups_n.end() || it->second.size() != cm.size()) return std::nullopt;
    for (std::size_t k = 0; k < cm.size(); ++k) cell_map[cm[k]] = it->second[k];
  }
  const FinSet& dom = m.kind() == NetKind::Petri ? std::get<PetriRates>(m.decoration()).transitions
                                                 : std::get<Graph>(m.decoration()).edges;
  const FinSet& cod = n.kind() == NetKind::Petri ? std::get<PetriRates>(n.decoration()).transitions
                                                 : std::get<Graph>(n.decoration()).edges;
  return FinFunction(dom, cod, std::move(cell_map));
}

}  // namespace

std::optional<NetSquare> are_isomorphic(const OpenNet& m, const OpenNet& n) {
  if (m.left_foot() != n.left_foot() || m.right_foot() != n.right_foot())
    throw DomainError("BoundaryMismatch", "isomorphism search requires equal feet");
  if (m.carrier().size() > kIsoVertexCap || n.carrier().size() > kIsoVertexCap)
    throw DomainError("SizeLimitExceeded", "isomorphism search is capped at 9 vertices");
  if (m.kind() != n.kind() || m.carrier().size() != n.carrier().size() ||
      m.cell_count() != n.cell_count())
    return std::nullopt;

  const std::size_t nv = m.carrier().size();
  std::vector<std::string> sig_m(nv), sig_n(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (m.kind() == NetKind::Petri) {
      sig_m[v] = petri_vertex_signature(std::get<PetriRates>(m.decoration()), v);
      sig_n[v] = petri_vertex_signature(std::get<PetriRates>(n.decoration()), v);
    } else {
      sig_m[v] = graph_vertex_signature(std::get<Graph>(m.decoration()), v);
      sig_n[v] = graph_vertex_signature(std::get<Graph>(n.decoration()), v);
    }
  }
  {
    auto sorted_m = sig_m, sorted_n = sig_n;
    std::sort(sorted_m.begin(), sorted_m.end());
    std::sort(sorted_n.begin(), sorted_n.end());
    if (sorted_m != sorted_n) return std::nullopt;
  }

  // Foot maps are identities, so leg images are forced.
  const std::size_t unset = nv;
  std::vector<std::size_t> forced(nv, unset);
  const auto force = [&](const FinFunction& leg_m, const FinFunction& leg_n) {
    for (std::size_t x = 0; x < leg_m.dom().size(); ++x) {
      const std::size_t from = leg_m.apply_index(x), to = leg_n.apply_index(x);
      if (forced[from] != unset && forced[from] != to) return false;
      forced[from] = to;
    }
    return true;
  };
  if (!force(m.in_map(), n.in_map()) || !force(m.out_map(), n.out_map())) return std::nullopt;

  std::vector<std::size_t> vertex_map(nv, unset);
  std::vector<bool> used(nv, false);

  const auto build_square = [&]() -> std::optional<NetSquare> {
    auto cells = match_cells(m, n, vertex_map);
    if (!cells) return std::nullopt;
    NetSquare sq{FinFunction::identity(m.left_foot()), FinFunction::identity(m.right_foot()),
                 DecMorphism{FinFunction(m.carrier(), n.carrier(), vertex_map), *cells}, m, n};
    return check_net_square(sq) ? std::optional<NetSquare>(sq) : std::nullopt;
  };

  std::optional<NetSquare> found;
  const auto backtrack = [&](auto&& self, std::size_t v) -> bool {
    if (v == nv) {
      found = build_square();
      return found.has_value();
    }
    if (forced[v] != unset) {
      const std::size_t w = forced[v];
      if (used[w] || sig_m[v] != sig_n[w]) return false;
      used[w] = true;
      vertex_map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
      return false;
    }
    for (std::size_t w = 0; w < nv; ++w) {
      if (used[w] || sig_m[v] != sig_n[w]) continue;
      used[w] = true;
      vertex_map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  backtrack(backtrack, 0);
  return found;
}

}  // namespace cospan

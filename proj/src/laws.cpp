#include "cospan/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "cospan/errors.hpp"
#include "cospan/json_io.hpp"

namespace cospan::laws {

using nlohmann::json;

int Rng::range(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Rng::chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
}

Rational Rng::rational(int num_bound, int den_bound) {
  Rational q(range(-num_bound, num_bound), range(1, den_bound));
  q.canonicalize();
  return q;
}

Rational Rng::nonneg_rational(int num_bound, int den_bound) {
  Rational q(range(0, num_bound), range(1, den_bound));
  q.canonicalize();
  return q;
}

Rational Rng::positive_rational(int num_bound, int den_bound) {
  Rational q(range(1, std::max(1, num_bound)), range(1, den_bound));
  q.canonicalize();
  return q;
}

FinSet gen_finset(Rng& rng, int min_size, int max_size, const std::string& prefix) {
  const int n = rng.range(min_size, std::max(min_size, max_size));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet(std::move(labels));
}

FinFunction gen_function(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (cod.empty() && !dom.empty())
    throw DomainError("EmptyCodomain", "no function into the empty set from a nonempty one");
  std::vector<std::size_t> map(dom.size());
  for (auto& v : map) v = static_cast<std::size_t>(rng.range(0, static_cast<int>(cod.size()) - 1));
  return FinFunction(dom, cod, std::move(map));
}

FinFunction gen_injection(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (dom.size() > cod.size())
    throw DomainError("ShapeMismatch", "no injection into a smaller set");
  std::vector<std::size_t> targets(cod.size());
  std::iota(targets.begin(), targets.end(), 0);
  for (std::size_t i = targets.size(); i > 1; --i)
    std::swap(targets[i - 1], targets[static_cast<std::size_t>(rng.range(0, static_cast<int>(i) - 1))]);
  targets.resize(dom.size());
  return FinFunction(dom, cod, std::move(targets));
}

FinFunction gen_surjection(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (dom.size() < cod.size())
    throw DomainError("ShapeMismatch", "no surjection onto a larger set");
  std::vector<std::size_t> order(dom.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.range(0, static_cast<int>(i) - 1))]);
  std::vector<std::size_t> map(dom.size());
  for (std::size_t c = 0; c < cod.size(); ++c) map[order[c]] = c;
  for (std::size_t i = cod.size(); i < dom.size(); ++i)
    map[order[i]] = static_cast<std::size_t>(rng.range(0, static_cast<int>(cod.size()) - 1));
  return FinFunction(dom, cod, std::move(map));
}

Generator gen_valid_generator(Rng& rng, int max_states, const std::string& prefix) {
  const FinSet states = gen_finset(rng, 1, max_states, prefix);
  const std::size_t n = states.size();
  RationalMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational colsum(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !rng.chance(0.55)) continue;
      h.at(i, j) = rng.nonneg_rational(8, 4);
      colsum += h.at(i, j);
    }
    h.at(j, j) = -colsum;
  }
  return Generator{states, h};
}

SquareFS gen_pullback_square(Rng& rng, int size_bound) {
  const FinSet d = gen_finset(rng, 1, size_bound, "d");
  const FinSet b = gen_finset(rng, 0, size_bound, "b");
  const FinSet c = gen_finset(rng, 0, size_bound, "c");
  const FinFunction right = gen_function(rng, b, d);
  const FinFunction bottom = gen_function(rng, c, d);
  // Apex = the fiber product {(b, c) : right(b) = bottom(c)}.
  std::vector<std::string> labels;
  std::vector<std::size_t> top_map, left_map;
  for (std::size_t cb = 0; cb < b.size(); ++cb) {
    for (std::size_t cc = 0; cc < c.size(); ++cc) {
      if (right.apply_index(cb) != bottom.apply_index(cc)) continue;
      labels.push_back(b.label(cb) + "|" + c.label(cc));
      top_map.push_back(cb);
      left_map.push_back(cc);
    }
  }
  FinSet a(std::move(labels));
  return SquareFS{FinFunction(a, b, std::move(top_map)), bottom,
                  FinFunction(a, c, std::move(left_map)), right};
}

namespace {

// k nonnegative rationals with the prescribed exact sum.
std::vector<Rational> random_split(Rng& rng, const Rational& total, std::size_t k) {
  std::vector<Rational> parts(k, Rational(0));
  if (k == 0 || total == 0) return parts;
  Rational weight_sum(0);
  for (auto& p : parts) {
    p = rng.nonneg_rational(6, 3);
    weight_sum += p;
  }
  if (weight_sum == 0) {
    parts[0] = total;
    return parts;
  }
  for (auto& p : parts) p = total * p / weight_sum;
  return parts;
}

struct SplitResult {
  Generator fine;
  FinFunction p;  // fine states -> coarse states
};

// Refines each coarse state into a block of the given size and distributes
// every aggregate inter-block rate over the target block, so the projection
// intertwines the two rate matrices exactly. Intra-block rates are free.
SplitResult split_generator(Rng& rng, const Generator& coarse,
                            const std::vector<std::size_t>& fiber_sizes) {
  const std::size_t nc = coarse.states.size();
  std::vector<std::string> fine_labels;
  std::vector<std::size_t> p_map;
  std::vector<std::vector<std::size_t>> fiber(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t k = 0; k < fiber_sizes[c]; ++k) {
      fiber[c].push_back(fine_labels.size());
      fine_labels.push_back(coarse.states.label(c) + "." + std::to_string(k));
      p_map.push_back(c);
    }
  }
  FinSet fine_states(std::move(fine_labels));
  const std::size_t n = fine_states.size();
  RationalMatrix h(n, n);

  for (std::size_t c_src = 0; c_src < nc; ++c_src) {
    for (std::size_t x : fiber[c_src]) {
      for (std::size_t c_tgt = 0; c_tgt < nc; ++c_tgt) {
        if (c_tgt == c_src) continue;
        const auto parts = random_split(rng, coarse.rates.at(c_tgt, c_src), fiber[c_tgt].size());
        for (std::size_t k = 0; k < parts.size(); ++k) h.at(fiber[c_tgt][k], x) = parts[k];
      }
      for (std::size_t y : fiber[c_src]) {
        if (y != x && rng.chance(0.4)) h.at(y, x) = rng.nonneg_rational(5, 3);
      }
      Rational colsum(0);
      for (std::size_t y = 0; y < n; ++y)
        if (y != x) colsum += h.at(y, x);
      h.at(x, x) = -colsum;
    }
  }
  FinFunction p(fine_states, coarse.states, std::move(p_map));
  return SplitResult{validate_generator(fine_states, h), p};
}

}  // namespace

LumpablePair gen_lumpable_pair(Rng& rng, int size_bound) {
  const int blocks = rng.range(2, std::max(2, size_bound / 2));
  Generator coarse = gen_valid_generator(rng, blocks, "b");
  while (coarse.states.size() < 2) coarse = gen_valid_generator(rng, blocks, "b");
  std::vector<std::size_t> sizes(coarse.states.size(), 1);
  for (auto& s : sizes) s = static_cast<std::size_t>(rng.range(1, 3));
  sizes[0] = std::max<std::size_t>(sizes[0], 2);  // keep at least one real fiber
  auto split = split_generator(rng, coarse, sizes);
  return LumpablePair{split.fine, split.p};
}

RationalMatrix gen_stochastic_section(Rng& rng, const FinFunction& p) {
  std::map<std::string, Rational> weights;
  for (const auto& fiber : p.fibers()) {
    auto parts = random_split(rng, Rational(1), fiber.size());
    for (std::size_t k = 0; k < fiber.size(); ++k) weights[p.dom().label(fiber[k])] = parts[k];
  }
  return stochastic_section(p, weights);
}

OpenMarkov gen_open_markov(Rng& rng, int max_states, int max_boundary, const std::string& prefix) {
  Generator gen = gen_valid_generator(rng, max_states, prefix);
  const int cap = std::min<int>(max_boundary, static_cast<int>(gen.states.size()));
  const FinSet inputs = gen_finset(rng, 0, cap, prefix + "s");
  const FinSet outputs = gen_finset(rng, 0, cap, prefix + "t");
  return OpenMarkov(inputs, outputs, gen, gen_injection(rng, inputs, gen.states),
                    gen_injection(rng, outputs, gen.states));
}

ComposablePair gen_composable_pair(Rng& rng, int max_states, int max_boundary) {
  Generator gx = gen_valid_generator(rng, max_states, "x");
  Generator gy = gen_valid_generator(rng, max_states, "y");
  const int cap = std::min<int>({max_boundary, static_cast<int>(gx.states.size()),
                                 static_cast<int>(gy.states.size())});
  const FinSet s =
      gen_finset(rng, 0, std::min<int>(max_boundary, static_cast<int>(gx.states.size())), "s");
  const FinSet t = gen_finset(rng, 0, cap, "t");
  const FinSet u =
      gen_finset(rng, 0, std::min<int>(max_boundary, static_cast<int>(gy.states.size())), "u");
  OpenMarkov first(s, t, gx, gen_injection(rng, s, gx.states), gen_injection(rng, t, gx.states));
  OpenMarkov second(t, u, gy, gen_injection(rng, t, gy.states), gen_injection(rng, u, gy.states));
  return ComposablePair{first, second};
}

ComposableTriple gen_composable_triple(Rng& rng, int max_states, int max_boundary) {
  ComposablePair pair = gen_composable_pair(rng, max_states, max_boundary);
  const FinSet& u = pair.second.outputs();
  Generator gz = gen_valid_generator(rng, std::max<int>(max_states, static_cast<int>(u.size())), "z");
  while (gz.states.size() < u.size())
    gz = gen_valid_generator(rng, std::max<int>(max_states, static_cast<int>(u.size())), "z");
  const FinSet v =
      gen_finset(rng, 0, std::min<int>(max_boundary, static_cast<int>(gz.states.size())), "v");
  OpenMarkov third(u, v, gz, gen_injection(rng, u, gz.states), gen_injection(rng, v, gz.states));
  return ComposableTriple{pair.first, pair.second, third};
}

namespace {

// Boundary of a refined process: the full preimage of the coarse boundary,
// which keeps both boundary squares pullbacks.
struct RefinedBoundary {
  FinSet foot;
  FinFunction leg;       // foot -> fine states
  FinFunction foot_map;  // foot -> coarse foot
};

RefinedBoundary refine_boundary(const FinSet& coarse_foot, const FinFunction& coarse_leg,
                                const FinFunction& p, const std::string& prefix) {
  const auto fibers = p.fibers();
  std::vector<std::string> labels;
  std::vector<std::size_t> leg_map, foot_map;
  for (std::size_t s = 0; s < coarse_foot.size(); ++s) {
    const std::size_t coarse_state = coarse_leg.apply_index(s);
    const auto& fiber = fibers[coarse_state];
    for (std::size_t k = 0; k < fiber.size(); ++k) {
      labels.push_back(prefix + coarse_foot.label(s) + "." + std::to_string(k));
      leg_map.push_back(fiber[k]);
      foot_map.push_back(s);
    }
  }
  FinSet foot(std::move(labels));
  return RefinedBoundary{foot, FinFunction(foot, p.dom(), std::move(leg_map)),
                         FinFunction(foot, coarse_foot, std::move(foot_map))};
}

}  // namespace

MarkovMorphism gen_markov_morphism(Rng& rng, int size_bound) {
  const OpenMarkov target = gen_open_markov(rng, std::max(2, size_bound / 2), 2, "c");
  std::vector<std::size_t> sizes(target.states().size());
  for (auto& s : sizes) s = static_cast<std::size_t>(rng.range(1, 2));
  const auto split = split_generator(rng, target.generator(), sizes);
  const auto in = refine_boundary(target.inputs(), target.in_map(), split.p, "i#");
  const auto out = refine_boundary(target.outputs(), target.out_map(), split.p, "o#");
  OpenMarkov source(in.foot, out.foot, split.fine, in.leg, out.leg);
  return MarkovMorphism{in.foot_map, split.p, out.foot_map, source, target};
}

namespace {

// A composable pair of open Markov processes refined into a finer composable
// pair plus the two morphisms down to the originals; fiber sizes are matched
// along the shared boundary so the refined pair shares one middle foot.
struct RefinedPair {
  MarkovMorphism left;
  MarkovMorphism right;
};

RefinedPair refine_composable_pair(Rng& rng, const OpenMarkov& m, const OpenMarkov& n,
                                   const std::string& tag) {
  std::vector<std::size_t> sizes_x(m.states().size());
  for (auto& s : sizes_x) s = static_cast<std::size_t>(rng.range(1, 2));
  std::vector<std::size_t> sizes_y(n.states().size());
  for (auto& s : sizes_y) s = static_cast<std::size_t>(rng.range(1, 2));
  for (std::size_t t = 0; t < m.outputs().size(); ++t)
    sizes_y[n.in_map().apply_index(t)] = sizes_x[m.out_map().apply_index(t)];

  const auto split_x = split_generator(rng, m.generator(), sizes_x);
  const auto split_y = split_generator(rng, n.generator(), sizes_y);

  const auto s_side = refine_boundary(m.inputs(), m.in_map(), split_x.p, tag + "s#");
  const auto u_side = refine_boundary(n.outputs(), n.out_map(), split_y.p, tag + "u#");

  const auto fibers_x = split_x.p.fibers();
  const auto fibers_y = split_y.p.fibers();
  std::vector<std::string> t_labels;
  std::vector<std::size_t> o_map, i_map, g_map;
  for (std::size_t t = 0; t < m.outputs().size(); ++t) {
    const auto& fx = fibers_x[m.out_map().apply_index(t)];
    const auto& fy = fibers_y[n.in_map().apply_index(t)];
    for (std::size_t k = 0; k < fx.size(); ++k) {
      t_labels.push_back(tag + "t#" + m.outputs().label(t) + "." + std::to_string(k));
      o_map.push_back(fx[k]);
      i_map.push_back(fy[k]);
      g_map.push_back(t);
    }
  }
  FinSet t_foot(std::move(t_labels));
  FinFunction o_fine(t_foot, split_x.fine.states, std::move(o_map));
  FinFunction i_fine(t_foot, split_y.fine.states, std::move(i_map));
  FinFunction g(t_foot, m.outputs(), std::move(g_map));

  OpenMarkov fine_m(s_side.foot, t_foot, split_x.fine, s_side.leg, o_fine);
  OpenMarkov fine_n(t_foot, u_side.foot, split_y.fine, i_fine, u_side.leg);
  return RefinedPair{MarkovMorphism{s_side.foot_map, split_x.p, g, fine_m, m},
                     MarkovMorphism{g, split_y.p, u_side.foot_map, fine_n, n}};
}

}  // namespace

MorphismQuadruple gen_markov_interchange_quadruple(Rng& rng, int size_bound) {
  const ComposablePair base = gen_composable_pair(rng, std::max(2, size_bound / 2), 2);
  const RefinedPair mid = refine_composable_pair(rng, base.first, base.second, "m");
  const RefinedPair top = refine_composable_pair(rng, mid.left.source, mid.right.source, "f");
  return MorphismQuadruple{top.left, top.right, mid.left, mid.right};
}

LinearRelation gen_relation(Rng& rng, int dom_dim, int cod_dim) {
  const std::size_t ambient = static_cast<std::size_t>(dom_dim + cod_dim);
  const int rows = rng.range(0, static_cast<int>(ambient));
  RationalMatrix basis(static_cast<std::size_t>(rows), ambient);
  for (int i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      if (rng.chance(0.6)) basis.at(static_cast<std::size_t>(i), j) = rng.rational(6, 3);
  return LinearRelation(static_cast<std::size_t>(dom_dim), static_cast<std::size_t>(cod_dim),
                        RationalSubspace::span_of_rows(basis));
}

OpenNet gen_open_net(Rng& rng, int max_vertices, int max_boundary, NetKind kind,
                     const std::string& prefix) {
  const FinSet vertices = gen_finset(rng, 1, max_vertices, prefix);
  Decoration dec;
  if (kind == NetKind::Petri) {
    PetriRates p;
    p.species = vertices;
    const int nt = rng.range(0, std::max(1, max_vertices - 1));
    std::vector<std::string> tnames;
    for (int t = 0; t < nt; ++t) {
      tnames.push_back(prefix + "T" + std::to_string(t));
      Multiset pre, post;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (rng.chance(0.4)) pre[vertices.label(v)] = static_cast<std::uint64_t>(rng.range(1, 2));
        if (rng.chance(0.4)) post[vertices.label(v)] = static_cast<std::uint64_t>(rng.range(1, 2));
      }
      p.pre.push_back(std::move(pre));
      p.post.push_back(std::move(post));
      p.rates.push_back(rng.nonneg_rational(6, 3));
    }
    p.transitions = FinSet(std::move(tnames));
    dec = p;
  } else {
    Graph g;
    g.nodes = vertices;
    const int ne = rng.range(0, 2 * max_vertices);
    std::vector<std::string> enames;
    std::vector<std::size_t> src, tgt;
    std::vector<Rational> rates;
    for (int e = 0; e < ne; ++e) {
      enames.push_back(prefix + "E" + std::to_string(e));
      src.push_back(static_cast<std::size_t>(rng.range(0, static_cast<int>(vertices.size()) - 1)));
      tgt.push_back(static_cast<std::size_t>(rng.range(0, static_cast<int>(vertices.size()) - 1)));
      if (kind == NetKind::RatedGraph) rates.push_back(rng.positive_rational(6, 3));
    }
    g.edges = FinSet(std::move(enames));
    g.src = FinFunction(g.edges, g.nodes, std::move(src));
    g.tgt = FinFunction(g.edges, g.nodes, std::move(tgt));
    if (kind == NetKind::RatedGraph) g.rates = std::move(rates);
    dec = g;
  }
  const FinSet left = gen_finset(rng, 0, max_boundary, prefix + "a");
  const FinSet right = gen_finset(rng, 0, max_boundary, prefix + "b");
  return OpenNet(left, right, dec, gen_function(rng, left, vertices),
                 gen_function(rng, right, vertices));
}

ComposableNetPair gen_composable_net_pair(Rng& rng, int max_vertices, int max_boundary,
                                          NetKind kind) {
  OpenNet first = gen_open_net(rng, max_vertices, max_boundary, kind, "p");
  OpenNet second = gen_open_net(rng, max_vertices, max_boundary, kind, "q");
  const FinSet& shared = first.right_foot();
  OpenNet glued(shared, second.right_foot(), second.decoration(),
                gen_function(rng, shared, second.carrier()), second.out_map());
  return ComposableNetPair{first, glued};
}

ComposableNetTriple gen_composable_net_triple(Rng& rng, int max_vertices, int max_boundary,
                                              NetKind kind) {
  ComposableNetPair pair = gen_composable_net_pair(rng, max_vertices, max_boundary, kind);
  OpenNet third = gen_open_net(rng, max_vertices, max_boundary, kind, "r");
  const FinSet& shared = pair.second.right_foot();
  OpenNet glued(shared, third.right_foot(), third.decoration(),
                gen_function(rng, shared, third.carrier()), third.out_map());
  return ComposableNetTriple{pair.first, pair.second, glued};
}

namespace {

// Partition 0..n-1 into nonempty groups numbered by first appearance.
std::vector<std::size_t> random_partition(Rng& rng, std::size_t n, std::size_t& group_count) {
  std::vector<std::size_t> raw(n);
  if (n == 0) {
    group_count = 0;
    return raw;
  }
  const int k = rng.range(1, static_cast<int>(n));
  for (auto& g : raw) g = static_cast<std::size_t>(rng.range(0, k - 1));
  std::vector<std::size_t> relabel(static_cast<std::size_t>(k), n);
  std::size_t next = 0;
  for (auto& g : raw) {
    if (relabel[g] == n) relabel[g] = next++;
    g = relabel[g];
  }
  group_count = next;
  return raw;
}

}  // namespace

NetSquare gen_net_square(Rng& rng, const OpenNet& source) {
  const FinSet& v = source.carrier();
  std::size_t vertex_groups = 0;
  const auto vertex_part = random_partition(rng, v.size(), vertex_groups);

  std::vector<std::string> vlabels(vertex_groups);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto& l = vlabels[vertex_part[i]];
    if (l.empty() || v.label(i) < l) l = v.label(i);
  }
  FinSet vq(vlabels);
  FinFunction alpha_v(v, vq, std::vector<std::size_t>(vertex_part));

  if (source.kind() == NetKind::Petri) {
    const auto& p = std::get<PetriRates>(source.decoration());
    // Transitions may merge only when their mapped pre/post/rate agree.
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t t = 0; t < p.transitions.size(); ++t) {
      std::string key;
      for (const auto& [l, c] : apply_monoid_map(alpha_v, p.pre[t]))
        key += l + "*" + std::to_string(c) + ",";
      key += "->";
      for (const auto& [l, c] : apply_monoid_map(alpha_v, p.post[t]))
        key += l + "*" + std::to_string(c) + ",";
      key += "@" + rational_to_string(p.rates[t]);
      groups[key].push_back(t);
    }
    std::vector<std::size_t> cell_part(p.transitions.size());
    std::vector<std::string> tlabels;
    PetriRates q;
    q.species = vq;
    for (auto& [key, members] : groups) {
      std::size_t subgroups = 0;
      const auto sub = random_partition(rng, members.size(), subgroups);
      std::vector<std::string> sublabel(subgroups);
      std::vector<std::size_t> rep(subgroups, p.transitions.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        auto& l = sublabel[sub[k]];
        const std::string& cand = p.transitions.label(members[k]);
        if (l.empty() || cand < l) l = cand;
        if (rep[sub[k]] == p.transitions.size()) rep[sub[k]] = members[k];
      }
      const std::size_t base = tlabels.size();
      for (std::size_t g = 0; g < subgroups; ++g) {
        tlabels.push_back(sublabel[g]);
        q.pre.push_back(apply_monoid_map(alpha_v, p.pre[rep[g]]));
        q.post.push_back(apply_monoid_map(alpha_v, p.post[rep[g]]));
        q.rates.push_back(p.rates[rep[g]]);
      }
      for (std::size_t k = 0; k < members.size(); ++k) cell_part[members[k]] = base + sub[k];
    }
    q.transitions = FinSet(tlabels);
    OpenNet target(source.left_foot(), source.right_foot(), q,
                   compose(source.in_map(), alpha_v), compose(source.out_map(), alpha_v));
    return NetSquare{FinFunction::identity(source.left_foot()),
                     FinFunction::identity(source.right_foot()),
                     DecMorphism{alpha_v, FinFunction(p.transitions, q.transitions, cell_part)},
                     source, target};
  }

  const auto& g = std::get<Graph>(source.decoration());
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::string key = std::to_string(vertex_part[g.src.apply_index(e)]) + "->" +
                            std::to_string(vertex_part[g.tgt.apply_index(e)]) + "@" +
                            (g.rates ? rational_to_string((*g.rates)[e]) : "-");
    groups[key].push_back(e);
  }
  std::vector<std::size_t> cell_part(g.edges.size());
  std::vector<std::string> elabels;
  std::vector<std::size_t> qsrc, qtgt;
  std::vector<Rational> qrates;
  for (auto& [key, members] : groups) {
    std::size_t subgroups = 0;
    const auto sub = random_partition(rng, members.size(), subgroups);
    std::vector<std::string> sublabel(subgroups);
    std::vector<std::size_t> rep(subgroups, g.edges.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      auto& l = sublabel[sub[k]];
      const std::string& cand = g.edges.label(members[k]);
      if (l.empty() || cand < l) l = cand;
      if (rep[sub[k]] == g.edges.size()) rep[sub[k]] = members[k];
    }
    const std::size_t base = elabels.size();
    for (std::size_t gi = 0; gi < subgroups; ++gi) {
      elabels.push_back(sublabel[gi]);
      qsrc.push_back(vertex_part[g.src.apply_index(rep[gi])]);
      qtgt.push_back(vertex_part[g.tgt.apply_index(rep[gi])]);
      if (g.rates) qrates.push_back((*g.rates)[rep[gi]]);
    }
    for (std::size_t k = 0; k < members.size(); ++k) cell_part[members[k]] = base + sub[k];
  }
  Graph q;
  q.nodes = vq;
  q.edges = FinSet(elabels);
  q.src = FinFunction(q.edges, vq, std::move(qsrc));
  q.tgt = FinFunction(q.edges, vq, std::move(qtgt));
  if (g.rates) q.rates = std::move(qrates);
  OpenNet target(source.left_foot(), source.right_foot(), q, compose(source.in_map(), alpha_v),
                 compose(source.out_map(), alpha_v));
  return NetSquare{FinFunction::identity(source.left_foot()),
                   FinFunction::identity(source.right_foot()),
                   DecMorphism{alpha_v, FinFunction(g.edges, q.edges, cell_part)}, source, target};
}

NetSquareQuadruple gen_net_interchange_quadruple(Rng& rng, int size_bound, NetKind kind) {
  const ComposableNetPair base = gen_composable_net_pair(rng, std::min(size_bound, 3), 2, kind);
  NetSquare top_left = gen_net_square(rng, base.first);
  NetSquare top_right = gen_net_square(rng, base.second);
  NetSquare bottom_left = gen_net_square(rng, top_left.target);
  NetSquare bottom_right = gen_net_square(rng, top_right.target);
  return NetSquareQuadruple{top_left, top_right, bottom_left, bottom_right};
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

using CaseOutcome = std::optional<std::pair<std::string, json>>;
using CaseFn = std::function<CaseOutcome(Rng&, int)>;

LawReport run_cases(const std::string& name, std::uint64_t seed, int size_bound, int cases,
                    const CaseFn& fn) {
  LawReport report;
  report.suite = name;
  report.seed = seed;
  report.cases_run = static_cast<std::size_t>(std::max(0, cases));
  for (std::size_t i = 0; i < report.cases_run; ++i) {
    Rng rng(case_seed(seed, i));
    CaseOutcome outcome;
    try {
      outcome = fn(rng, size_bound);
    } catch (const std::exception& e) {
      outcome = {{std::string("unexpected error: ") + e.what(), json::object()}};
    }
    if (outcome) report.failures.push_back(LawFailure{i, outcome->first, outcome->second});
  }
  return report;
}

json square_to_json(const SquareFS& sq) {
  return json{{"top", io::finfunction_to_json(sq.top)},
              {"bottom", io::finfunction_to_json(sq.bottom)},
              {"left", io::finfunction_to_json(sq.left)},
              {"right", io::finfunction_to_json(sq.right)}};
}

json pair_to_json(const OpenMarkov& a, const OpenMarkov& b) {
  return json{{"first", io::openmarkov_to_json(a)}, {"second", io::openmarkov_to_json(b)}};
}

json morphism_to_json(const MarkovMorphism& m) {
  return json{{"source", io::openmarkov_to_json(m.source)},
              {"target", io::openmarkov_to_json(m.target)},
              {"f", io::label_map_to_json(m.f)},
              {"p", io::label_map_to_json(m.p)},
              {"g", io::label_map_to_json(m.g)}};
}

CaseOutcome beck_chevalley_case(Rng& rng, int bound) {
  const SquareFS sq = gen_pullback_square(rng, bound);
  if (!is_pullback(sq)) return {{"constructed square is not a pullback", square_to_json(sq)}};
  const RationalMatrix lhs = pushforward_matrix(sq.left) * pullback_matrix(sq.top);
  const RationalMatrix rhs = pullback_matrix(sq.bottom) * pushforward_matrix(sq.right);
  if (!(lhs == rhs)) return {{"pushforward/pullback exchange fails", square_to_json(sq)}};
  return std::nullopt;
}

CaseOutcome push_pull_closure_case(Rng& rng, int bound) {
  const Generator g = gen_valid_generator(rng, bound);
  const FinSet y = gen_finset(rng, 1, bound, "y");
  const FinFunction f = gen_function(rng, g.states, y);
  const RationalMatrix pushed = pushforward_matrix(f) * g.rates * pullback_matrix(f);
  if (!is_infinitesimal_stochastic(pushed))
    return {{"pushed generator is not infinitesimal stochastic",
             json{{"H", io::generator_to_json(g)}, {"f", io::finfunction_to_json(f)}}}};
  return std::nullopt;
}

CaseOutcome odot_equivalence_case(Rng& rng, int bound) {
  const ComposablePair pair = gen_composable_pair(rng, bound, 3);
  const OpenMarkov composed = compose_open(pair.first, pair.second);
  if (!(composed.hamiltonian() == compose_hamiltonian_via_copairing(pair.first, pair.second)))
    return {{"pushout-leg and copairing formulas disagree",
             pair_to_json(pair.first, pair.second)}};
  return std::nullopt;
}

CaseOutcome blackbox_functorial_case(Rng& rng, int bound) {
  const ComposablePair pair = gen_composable_pair(rng, std::min(bound, 6), 3);
  const LinearRelation composite = black_box(compose_open(pair.first, pair.second));
  const LinearRelation pieces = compose_relations(black_box(pair.first), black_box(pair.second));
  if (!(composite == pieces))
    return {{"black box does not preserve composition", pair_to_json(pair.first, pair.second)}};

  const OpenMarkov a = gen_open_markov(rng, std::min(bound, 4), 2, "a");
  const OpenMarkov b = gen_open_markov(rng, std::min(bound, 4), 2, "b");
  const LinearRelation tensored =
      tensor_black_boxes(black_box(a), a.inputs().size(), a.outputs().size(), black_box(b),
                         b.inputs().size(), b.outputs().size());
  if (!(black_box(tensor_open(a, b)) == tensored))
    return {{"black box does not preserve tensoring", pair_to_json(a, b)}};
  return std::nullopt;
}

CaseOutcome blackbox_identity_case(Rng& rng, int bound) {
  const FinSet s = gen_finset(rng, 0, std::min(bound, 4), "s");
  if (!(black_box(identity_open(s)) == identity_relation(2 * s.size())))
    return {{"black box of an identity is not the identity relation",
             json{{"set", io::finset_to_json(s)}}}};
  return std::nullopt;
}

CaseOutcome lumpability_equiv_case(Rng& rng, int bound) {
  const LumpablePair lp = gen_lumpable_pair(rng, bound);
  const json ctx{{"H", io::generator_to_json(lp.gen)}, {"p", io::finfunction_to_json(lp.p)}};
  if (!is_lumpable(lp.gen, lp.p)) return {{"constructed pair reported non-lumpable", ctx}};
  const Generator lumped = lump(lp.gen, lp.p, stochastic_section(lp.p));
  for (int k = 0; k < 10; ++k) {
    const Generator again = lump(lp.gen, lp.p, gen_stochastic_section(rng, lp.p));
    if (!(again.rates == lumped.rates))
      return {{"lumping depends on the section despite lumpability", ctx}};
  }
  const RationalMatrix p_push = pushforward_matrix(lp.p);
  if (!(p_push * lp.gen.rates == lumped.rates * p_push))
    return {{"lumped generator fails the intertwining identity", ctx}};

  // Break the column criterion with one inter-block nudge: detection must
  // flip, and two point-mass sections must start disagreeing.
  const auto fibers = lp.p.fibers();
  std::size_t block = fibers.size();
  for (std::size_t c = 0; c < fibers.size(); ++c)
    if (fibers[c].size() >= 2) block = c;
  if (block == fibers.size()) return {{"generator produced no fiber of size >= 2", ctx}};
  std::size_t other = fibers.size();
  for (std::size_t c = 0; c < fibers.size(); ++c)
    if (c != block) other = c;
  if (other == fibers.size()) return {{"generator produced a single block", ctx}};
  const std::size_t x = fibers[block][0];
  const std::size_t y = fibers[other][0];
  RationalMatrix perturbed = lp.gen.rates;
  perturbed.at(y, x) += 1;
  perturbed.at(x, x) -= 1;
  const Generator bad = validate_generator(lp.gen.states, perturbed);
  if (is_lumpable(bad, lp.p)) return {{"perturbed generator still reported lumpable", ctx}};
  std::map<std::string, Rational> w0, w1;
  for (std::size_t k = 0; k < fibers[block].size(); ++k) {
    w0[lp.gen.states.label(fibers[block][k])] = Rational(k == 0 ? 1 : 0);
    w1[lp.gen.states.label(fibers[block][k])] = Rational(k == 1 ? 1 : 0);
  }
  const Generator l0 = lump(bad, lp.p, stochastic_section(lp.p, w0));
  const Generator l1 = lump(bad, lp.p, stochastic_section(lp.p, w1));
  if (l0.rates == l1.rates)
    return {{"point-mass sections agree on a non-lumpable generator", ctx}};
  return std::nullopt;
}

CaseOutcome interchange_mark_case(Rng& rng, int bound) {
  const MorphismQuadruple q = gen_markov_interchange_quadruple(rng, bound);
  for (const auto* m : {&q.top_left, &q.top_right, &q.bottom_left, &q.bottom_right}) {
    if (!check_morphism(*m)) return {{"generated square is not a morphism", morphism_to_json(*m)}};
  }
  const MarkovMorphism rows = vertical_compose(horizontal_compose(q.top_left, q.top_right),
                                               horizontal_compose(q.bottom_left, q.bottom_right));
  const MarkovMorphism cols = horizontal_compose(vertical_compose(q.top_left, q.bottom_left),
                                                 vertical_compose(q.top_right, q.bottom_right));
  if (!(rows.f == cols.f && rows.p == cols.p && rows.g == cols.g && rows.source == cols.source &&
        rows.target == cols.target))
    return {{"interchange law fails",
             json{{"rows", morphism_to_json(rows)}, {"cols", morphism_to_json(cols)}}}};
  if (!check_morphism(rows))
    return {{"interchange composite is not a morphism", morphism_to_json(rows)}};
  return std::nullopt;
}

NetKind pick_kind(Rng& rng) {
  static const NetKind kinds[3] = {NetKind::Graph, NetKind::RatedGraph, NetKind::Petri};
  return kinds[rng.range(0, 2)];
}

CaseOutcome interchange_net_case(Rng& rng, int bound) {
  const NetKind kind = pick_kind(rng);
  const NetSquareQuadruple q = gen_net_interchange_quadruple(rng, bound, kind);
  for (const auto* sq : {&q.top_left, &q.top_right, &q.bottom_left, &q.bottom_right}) {
    if (!check_net_square(*sq))
      return {{"generated net square is invalid", io::opennet_to_json(sq->source)}};
  }
  const NetSquare rows = vertical_compose(horizontal_compose(q.top_left, q.top_right),
                                          horizontal_compose(q.bottom_left, q.bottom_right));
  const NetSquare cols = horizontal_compose(vertical_compose(q.top_left, q.bottom_left),
                                            vertical_compose(q.top_right, q.bottom_right));
  const bool equal = rows.f == cols.f && rows.g == cols.g &&
                     rows.alpha.vertices == cols.alpha.vertices &&
                     rows.alpha.cells == cols.alpha.cells && rows.source == cols.source &&
                     rows.target == cols.target;
  if (!equal)
    return {{"net interchange law fails",
             json{{"rows_source", io::opennet_to_json(rows.source)},
                  {"cols_source", io::opennet_to_json(cols.source)}}}};
  if (!check_net_square(rows))
    return {{"net interchange composite is invalid", io::opennet_to_json(rows.source)}};
  return std::nullopt;
}

// Canonical comparison isomorphism between two composites of the same string
// of processes, from their descriptions as quotients of one coproduct; it
// must be a bijection intertwining the legs and the generators.
bool markov_cells_isomorphic(const OpenMarkov& a1, const OpenMarkov& a2, const FinFunction& q1,
                             const FinFunction& q2) {
  const FinFunction sigma = mediating_map(q1, q2);
  if (!sigma.is_bijective()) return false;
  if (compose(a1.in_map(), sigma) != a2.in_map()) return false;
  if (compose(a1.out_map(), sigma) != a2.out_map()) return false;
  const RationalMatrix s_push = pushforward_matrix(sigma);
  return s_push * a1.hamiltonian() == a2.hamiltonian() * s_push;
}

CaseOutcome unitors_associators_case(Rng& rng, int bound) {
  const ComposableTriple trip = gen_composable_triple(rng, std::min(bound, 4), 2);
  const OpenMarkov& m = trip.first;
  const OpenMarkov& n = trip.second;
  const OpenMarkov& p = trip.third;
  const OpenMarkov mn = compose_open(m, n);
  const OpenMarkov np = compose_open(n, p);
  const OpenMarkov left_first = compose_open(mn, p);
  const OpenMarkov right_first = compose_open(m, np);

  const PushoutResult po_mn = pushout(m.out_map(), n.in_map());
  const PushoutResult po_l = pushout(mn.out_map(), p.in_map());
  const FinFunction q1 =
      copair(compose(copair(po_mn.from_left, po_mn.from_right), po_l.from_left), po_l.from_right);
  const PushoutResult po_np = pushout(n.out_map(), p.in_map());
  const PushoutResult po_r = pushout(m.out_map(), np.in_map());
  const FinFunction q2 =
      copair(copair(po_r.from_left, compose(po_np.from_left, po_r.from_right)),
             compose(po_np.from_right, po_r.from_right));
  const json ctx{{"first", io::openmarkov_to_json(m)},
                 {"second", io::openmarkov_to_json(n)},
                 {"third", io::openmarkov_to_json(p)}};
  if (!markov_cells_isomorphic(left_first, right_first, q1, q2))
    return {{"associator is not a generator-compatible isomorphism", ctx}};

  const OpenMarkov lu = compose_open(identity_open(m.inputs()), m);
  const PushoutResult po_lu = pushout(FinFunction::identity(m.inputs()), m.in_map());
  if (!markov_cells_isomorphic(lu, m, copair(po_lu.from_left, po_lu.from_right),
                               copair(m.in_map(), FinFunction::identity(m.states()))))
    return {{"left unitor fails", io::openmarkov_to_json(m)}};
  const OpenMarkov ru = compose_open(m, identity_open(m.outputs()));
  const PushoutResult po_ru = pushout(m.out_map(), FinFunction::identity(m.outputs()));
  if (!markov_cells_isomorphic(ru, m, copair(po_ru.from_left, po_ru.from_right),
                               copair(FinFunction::identity(m.states()), m.out_map())))
    return {{"right unitor fails", io::openmarkov_to_json(m)}};

  const NetKind kind = pick_kind(rng);
  const ComposableNetTriple nets = gen_composable_net_triple(rng, 3, 2, kind);
  const OpenNet nl = compose_open_net(compose_open_net(nets.first, nets.second), nets.third);
  const OpenNet nr = compose_open_net(nets.first, compose_open_net(nets.second, nets.third));
  if (!are_isomorphic(nl, nr))
    return {{"net associator isomorphism not found",
             json{{"left", io::opennet_to_json(nl)}, {"right", io::opennet_to_json(nr)}}}};
  const OpenNet& net = nets.first;
  if (!are_isomorphic(compose_open_net(identity_open_net(net.left_foot(), kind), net), net))
    return {{"net left unitor isomorphism not found", io::opennet_to_json(net)}};
  if (!are_isomorphic(compose_open_net(net, identity_open_net(net.right_foot(), kind)), net))
    return {{"net right unitor isomorphism not found", io::opennet_to_json(net)}};
  return std::nullopt;
}

CaseOutcome chi_mu_case(Rng& rng, int bound) {
  Rng rng2(rng.raw());
  const ComposablePair one = gen_composable_pair(rng, std::min(bound, 4), 2);
  const ComposablePair two = gen_composable_pair(rng2, std::min(bound, 4), 2);
  const OpenMarkov lhs =
      tensor_open(compose_open(one.first, one.second), compose_open(two.first, two.second));
  const OpenMarkov rhs =
      compose_open(tensor_open(one.first, two.first), tensor_open(one.second, two.second));
  const PushoutResult po1 = pushout(one.first.out_map(), one.second.in_map());
  const PushoutResult po2 = pushout(two.first.out_map(), two.second.in_map());
  const Coproduct apexes = coproduct(po1.apex, po2.apex);
  const FinFunction q_lhs = copair(
      copair(compose(po1.from_left, apexes.from_left), compose(po1.from_right, apexes.from_left)),
      copair(compose(po2.from_left, apexes.from_right),
             compose(po2.from_right, apexes.from_right)));

  const OpenMarkov tens_m = tensor_open(one.first, two.first);
  const OpenMarkov tens_n = tensor_open(one.second, two.second);
  const PushoutResult po_r = pushout(tens_m.out_map(), tens_n.in_map());
  const Coproduct xs = coproduct(one.first.states(), two.first.states());
  const Coproduct ys = coproduct(one.second.states(), two.second.states());
  const FinFunction q_rhs = copair(
      copair(compose(xs.from_left, po_r.from_left), compose(ys.from_left, po_r.from_right)),
      copair(compose(xs.from_right, po_r.from_left), compose(ys.from_right, po_r.from_right)));
  if (!markov_cells_isomorphic(lhs, rhs, q_lhs, q_rhs))
    return {{"tensor/composition comparison fails for open Markov processes",
             json{{"one", pair_to_json(one.first, one.second)},
                  {"two", pair_to_json(two.first, two.second)}}}};

  const FinSet s = gen_finset(rng, 0, 3, "s");
  const FinSet t = gen_finset(rng, 0, 3, "t");
  if (!(tensor_open(identity_open(s), identity_open(t)) == identity_open(coproduct(s, t).sum)))
    return {{"identity-tensor comparison fails for open Markov processes",
             json{{"s", io::finset_to_json(s)}, {"t", io::finset_to_json(t)}}}};

  const NetKind kind = pick_kind(rng);
  const ComposableNetPair na = gen_composable_net_pair(rng, 2, 1, kind);
  Rng rng3(rng.raw());
  const ComposableNetPair nb = gen_composable_net_pair(rng3, 2, 1, kind);
  const OpenNet nl =
      tensor_open_net(compose_open_net(na.first, na.second), compose_open_net(nb.first, nb.second));
  const OpenNet nr =
      compose_open_net(tensor_open_net(na.first, nb.first), tensor_open_net(na.second, nb.second));
  if (!are_isomorphic(nl, nr))
    return {{"tensor/composition isomorphism not found for open nets",
             json{{"left", io::opennet_to_json(nl)}, {"right", io::opennet_to_json(nr)}}}};
  if (!(tensor_open_net(identity_open_net(s, kind), identity_open_net(t, kind)) ==
        identity_open_net(coproduct(s, t).sum, kind)))
    return {{"identity-tensor comparison fails for open nets", json::object()}};
  return std::nullopt;
}

CaseOutcome companion_equations_case(Rng& rng, int bound) {
  const FinSet s = gen_finset(rng, 0, bound, "s");
  const FinSet s2 = gen_finset(rng, static_cast<int>(s.size()), static_cast<int>(s.size()), "z");
  const FinFunction f = gen_injection(rng, s, s2);  // equal sizes, so a bijection
  const Companion c = companion_of(f);
  if (!check_morphism(c.unit) || !check_morphism(c.counit))
    return {{"companion unit/counit are not morphisms", io::finfunction_to_json(f)}};
  if (!companion_equations_hold(c))
    return {{"companion equations fail", io::finfunction_to_json(f)}};
  return std::nullopt;
}

CaseOutcome semigroup_numeric_case(Rng& rng, int bound) {
  const Generator g = gen_valid_generator(rng, std::min(bound, 10));
  for (const double t : {0.1, 1.0, 10.0}) {
    if (!matrix_exp_stochastic_check(g, t))
      return {{"exp(tH) fails the stochastic check at t = " + std::to_string(t),
               io::generator_to_json(g)}};
  }
  return std::nullopt;
}

CaseOutcome linrel_strictness_case(Rng& rng, int bound) {
  const int cap = std::min(bound, 5);
  const int a = rng.range(0, cap), b = rng.range(0, cap), c = rng.range(0, cap),
            d = rng.range(0, cap);
  const LinearRelation r = gen_relation(rng, a, b);
  const LinearRelation s = gen_relation(rng, b, c);
  const LinearRelation t = gen_relation(rng, c, d);
  const json ctx{{"R", io::relation_to_json(r)},
                 {"S", io::relation_to_json(s)},
                 {"T", io::relation_to_json(t)}};
  if (!(compose_relations(compose_relations(r, s), t) ==
        compose_relations(r, compose_relations(s, t))))
    return {{"relation composition is not associative", ctx}};
  if (!(compose_relations(identity_relation(a), r) == r) ||
      !(compose_relations(r, identity_relation(b)) == r))
    return {{"relation unit laws fail", ctx}};

  const LinearRelation r1 = gen_relation(rng, rng.range(0, cap), a);
  const LinearRelation s1 = gen_relation(rng, rng.range(0, cap), rng.range(0, cap));
  const LinearRelation s2 = gen_relation(rng, static_cast<int>(s1.cod_dim()), rng.range(0, cap));
  const LinearRelation lhs = tensor_relations(compose_relations(r1, r), compose_relations(s1, s2));
  const LinearRelation rhs = compose_relations(tensor_relations(r1, s1), tensor_relations(r, s2));
  if (!(lhs == rhs)) return {{"interchange of tensor and composition fails", ctx}};
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "beck_chevalley",    "push_pull_closure",   "odot_equivalence",
      "blackbox_functorial", "blackbox_identity",   "lumpability_equiv",
      "interchange_mark",  "interchange_net",     "unitors_associators",
      "chi_mu_instances",  "companion_equations", "semigroup_numeric",
      "linrel_strictness"};
  return names;
}

LawReport run_suite(const std::string& name, std::uint64_t seed, int size_bound, int cases) {
  static const std::map<std::string, CaseFn> suites{
      {"beck_chevalley", beck_chevalley_case},
      {"push_pull_closure", push_pull_closure_case},
      {"odot_equivalence", odot_equivalence_case},
      {"blackbox_functorial", blackbox_functorial_case},
      {"blackbox_identity", blackbox_identity_case},
      {"lumpability_equiv", lumpability_equiv_case},
      {"interchange_mark", interchange_mark_case},
      {"interchange_net", interchange_net_case},
      {"unitors_associators", unitors_associators_case},
      {"chi_mu_instances", chi_mu_case},
      {"companion_equations", companion_equations_case},
      {"semigroup_numeric", semigroup_numeric_case},
      {"linrel_strictness", linrel_strictness_case}};
  const auto it = suites.find(name);
  if (it == suites.end()) throw DomainError("UnknownSuite", "no law suite named '" + name + "'");
  return run_cases(name, seed, size_bound, cases, it->second);
}

json LawReport::to_json() const {
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back(json{{"case", f.case_index},
                         {"description", f.description},
                         {"counterexample", f.counterexample}});
  }
  return json{{"format_version", io::kFormatVersion}, {"suite", suite},   {"seed", seed},
              {"cases", cases_run},                   {"failures", fails}, {"ok", ok()}};
}

json generate(const std::string& kind, std::uint64_t seed, int size_bound) {
  Rng rng(case_seed(seed, 0));
  if (kind == "valid_generator") return io::generator_to_json(gen_valid_generator(rng, size_bound));
  if (kind == "pullback_square") return square_to_json(gen_pullback_square(rng, size_bound));
  if (kind == "lumpable_pair") {
    const LumpablePair lp = gen_lumpable_pair(rng, size_bound);
    return json{{"H", io::generator_to_json(lp.gen)}, {"p", io::finfunction_to_json(lp.p)}};
  }
  if (kind == "open_markov") return io::openmarkov_to_json(gen_open_markov(rng, size_bound, 3));
  if (kind == "composable_open_pair") {
    const ComposablePair pair = gen_composable_pair(rng, size_bound, 3);
    return pair_to_json(pair.first, pair.second);
  }
  if (kind == "markov_morphism") return morphism_to_json(gen_markov_morphism(rng, size_bound));
  if (kind == "linear_relation")
    return io::relation_to_json(gen_relation(rng, rng.range(0, std::min(size_bound, 5)),
                                             rng.range(0, std::min(size_bound, 5))));
  if (kind == "open_graph")
    return io::opennet_to_json(gen_open_net(rng, size_bound, 3, NetKind::Graph));
  if (kind == "open_rated_graph")
    return io::opennet_to_json(gen_open_net(rng, size_bound, 3, NetKind::RatedGraph));
  if (kind == "open_petri")
    return io::opennet_to_json(gen_open_net(rng, size_bound, 3, NetKind::Petri));
  throw DomainError("UnknownKind", "no generator named '" + kind + "'");
}

}  // namespace cospan::laws

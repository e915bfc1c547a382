#ifndef COSPAN_NET_HPP
#define COSPAN_NET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cospan/finset.hpp"
#include "cospan/rational.hpp"

namespace cospan {

// Free-commutative-monoid element over a species set: label -> multiplicity,
// zero entries never stored.
using Multiset = std::map<std::string, std::uint64_t>;

// Pushforward of multiset coefficients along f (coefficients of merged
// species add).
Multiset apply_monoid_map(const FinFunction& f, const Multiset& m);

// Directed multigraph, optionally with a positive rate per edge (the rated
// case covers k-graphs; plain graphs and rated graphs are distinct kinds).
struct Graph {
  FinSet nodes, edges;
  FinFunction src, tgt;  // edges -> nodes
  std::optional<std::vector<Rational>> rates;  // by edge index, all > 0

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes == b.nodes && a.edges == b.edges && a.src == b.src && a.tgt == b.tgt &&
           a.rates == b.rates;
  }
};

Graph validate_graph(Graph g);

// Petri net with rates: each transition consumes and produces multisets of
// species at a nonnegative rate.
struct PetriRates {
  FinSet species, transitions;
  std::vector<Multiset> pre, post;  // by transition index
  std::vector<Rational> rates;      // by transition index, all >= 0

  friend bool operator==(const PetriRates& a, const PetriRates& b) {
    return a.species == b.species && a.transitions == b.transitions && a.pre == b.pre &&
           a.post == b.post && a.rates == b.rates;
  }
};

PetriRates validate_petri(PetriRates p);

using Decoration = std::variant<Graph, PetriRates>;

enum class NetKind { Graph, RatedGraph, Petri };

// Structured cospan: feet are finite sets, legs land in the vertex/species
// set of the decoration. Legs need not be injective.
class OpenNet {
public:
  OpenNet() = default;
  OpenNet(FinSet left_foot, FinSet right_foot, Decoration dec, FinFunction in_map,
          FinFunction out_map);

  const FinSet& left_foot() const { return left_foot_; }
  const FinSet& right_foot() const { return right_foot_; }
  const Decoration& decoration() const { return dec_; }
  const FinFunction& in_map() const { return in_map_; }
  const FinFunction& out_map() const { return out_map_; }

  NetKind kind() const;
  // Vertex set of a graph decoration / species set of a Petri decoration.
  const FinSet& carrier() const;
  std::size_t cell_count() const;  // edges or transitions

  friend bool operator==(const OpenNet& a, const OpenNet& b) {
    return a.left_foot_ == b.left_foot_ && a.right_foot_ == b.right_foot_ && a.dec_ == b.dec_ &&
           a.in_map_ == b.in_map_ && a.out_map_ == b.out_map_;
  }

private:
  FinSet left_foot_, right_foot_;
  Decoration dec_;
  FinFunction in_map_, out_map_;
};

// Discrete (edge/transition-free) identity cospan on s, of the same kind
// as `like`.
OpenNet identity_open_net(const FinSet& s, NetKind kind);

// Glue along m.right_foot == n.left_foot: vertices/species by pushout,
// edges/transitions by disjoint union with endpoints pushed into the pushout,
// rates preserved. Errors: BoundaryMismatch, KindMismatch.
OpenNet compose_open_net(const OpenNet& m, const OpenNet& n);

// Coproducts everywhere. Errors: KindMismatch.
OpenNet tensor_open_net(const OpenNet& m, const OpenNet& n);

// Structure map between decorations: a vertex/species map and an
// edge/transition map preserving src, tgt and rates on the nose.
struct DecMorphism {
  FinFunction vertices;
  FinFunction cells;
};

struct NetSquare {
  FinFunction f, g;  // foot maps
  DecMorphism alpha;
  OpenNet source, target;
};

// Both cospan squares commute and alpha preserves all structure exactly.
bool check_net_square(const NetSquare& sq);

NetSquare identity_net_square(const OpenNet& m);
NetSquare vertical_compose(const NetSquare& a, const NetSquare& b);
// Composite square over a shared middle foot map; the vertex map on the
// pushout is induced by its universal property.
NetSquare horizontal_compose(const NetSquare& a, const NetSquare& b);

// Searches for an isomorphism with identity foot maps: a bijective NetSquare
// from m to n. Brute force over vertex bijections with degree/rate-signature
// pruning; desk scale only. Throws SizeLimitExceeded above 9 vertices.
std::optional<NetSquare> are_isomorphic(const OpenNet& m, const OpenNet& n);

}  // namespace cospan

#endif

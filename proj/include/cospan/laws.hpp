#ifndef COSPAN_LAWS_HPP
#define COSPAN_LAWS_HPP

#include <cstdint>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "cospan/markov.hpp"
#include "cospan/net.hpp"

namespace cospan::laws {

struct LawFailure {
  std::size_t case_index;
  std::string description;
  nlohmann::json counterexample;
};

// Deterministic given (suite, seed, size_bound, cases): each case draws from
// its own seed-derived stream, so the report does not depend on evaluation
// order and failures replay in isolation.
struct LawReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::vector<LawFailure> failures;

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Errors: UnknownSuite.
LawReport run_suite(const std::string& name, std::uint64_t seed, int size_bound, int cases);

// Named deterministic instance generators, exposed for tests and replay.
// Errors: UnknownKind.
nlohmann::json generate(const std::string& kind, std::uint64_t seed, int size_bound);

// Seeded stream with the small draw helpers the generators need.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int range(int lo, int hi);  // inclusive
  bool chance(double p);
  Rational rational(int num_bound = 20, int den_bound = 10);
  Rational nonneg_rational(int num_bound = 20, int den_bound = 10);
  Rational positive_rational(int num_bound = 20, int den_bound = 10);
  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

FinSet gen_finset(Rng& rng, int min_size, int max_size, const std::string& prefix);
FinFunction gen_function(Rng& rng, const FinSet& dom, const FinSet& cod);
FinFunction gen_injection(Rng& rng, const FinSet& dom, const FinSet& cod);
FinFunction gen_surjection(Rng& rng, const FinSet& dom, const FinSet& cod);

Generator gen_valid_generator(Rng& rng, int max_states, const std::string& prefix = "x");
SquareFS gen_pullback_square(Rng& rng, int size_bound);

struct LumpablePair {
  Generator gen;
  FinFunction p;
};
// Built by sampling per-block aggregate rates and distributing them inside
// blocks, so the pair satisfies the column-pushforward criterion by
// construction. Always has at least two blocks and one fiber of size >= 2.
LumpablePair gen_lumpable_pair(Rng& rng, int size_bound);

RationalMatrix gen_stochastic_section(Rng& rng, const FinFunction& p);

OpenMarkov gen_open_markov(Rng& rng, int max_states, int max_boundary,
                           const std::string& prefix = "x");
struct ComposablePair {
  OpenMarkov first, second;
};
ComposablePair gen_composable_pair(Rng& rng, int max_states, int max_boundary);
struct ComposableTriple {
  OpenMarkov first, second, third;
};
ComposableTriple gen_composable_triple(Rng& rng, int max_states, int max_boundary);

// Coarse-grains a generated target open Markov process by splitting states;
// the result passes check_morphism by construction.
MarkovMorphism gen_markov_morphism(Rng& rng, int size_bound);

// Four morphisms wired for the interchange law: top-left, top-right (sharing
// a boundary map), and their continuations downward.
struct MorphismQuadruple {
  MarkovMorphism top_left, top_right, bottom_left, bottom_right;
};
MorphismQuadruple gen_markov_interchange_quadruple(Rng& rng, int size_bound);

LinearRelation gen_relation(Rng& rng, int dom_dim, int cod_dim);

OpenNet gen_open_net(Rng& rng, int max_vertices, int max_boundary, NetKind kind,
                     const std::string& prefix = "v");
struct ComposableNetPair {
  OpenNet first, second;
};
ComposableNetPair gen_composable_net_pair(Rng& rng, int max_vertices, int max_boundary,
                                          NetKind kind);
struct ComposableNetTriple {
  OpenNet first, second, third;
};
ComposableNetTriple gen_composable_net_triple(Rng& rng, int max_vertices, int max_boundary,
                                              NetKind kind);

// Quotient-style square out of a source net (identity foot maps).
NetSquare gen_net_square(Rng& rng, const OpenNet& source);

struct NetSquareQuadruple {
  NetSquare top_left, top_right, bottom_left, bottom_right;
};
NetSquareQuadruple gen_net_interchange_quadruple(Rng& rng, int size_bound, NetKind kind);

}  // namespace cospan::laws

#endif

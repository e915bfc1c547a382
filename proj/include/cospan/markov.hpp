#ifndef COSPAN_MARKOV_HPP
#define COSPAN_MARKOV_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cospan/finset.hpp"
#include "cospan/linrel.hpp"
#include "cospan/matrix.hpp"

namespace cospan {

// Markov process: a finite state set with an infinitesimal stochastic rate
// matrix (nonnegative off-diagonal entries, zero column sums). Rates carry
// units of 1/time.
struct Generator {
  FinSet states;
  RationalMatrix rates;
};

bool is_infinitesimal_stochastic(const RationalMatrix& h);

// Errors: ShapeMismatch, NegativeOffDiagonal, ColumnSumNonzero (the message
// names the offending labels).
Generator validate_generator(const FinSet& states, const RationalMatrix& h);

// Open Markov process: inputs -i-> (X, H) <-o- outputs with injective legs.
// The leg images may overlap.
class OpenMarkov {
public:
  OpenMarkov() = default;
  OpenMarkov(FinSet inputs, FinSet outputs, Generator gen, FinFunction in_map,
             FinFunction out_map);

  const FinSet& inputs() const { return inputs_; }
  const FinSet& outputs() const { return outputs_; }
  const FinSet& states() const { return gen_.states; }
  const Generator& generator() const { return gen_; }
  const RationalMatrix& hamiltonian() const { return gen_.rates; }
  const FinFunction& in_map() const { return in_map_; }
  const FinFunction& out_map() const { return out_map_; }
  CospanFS cospan() const { return CospanFS{inputs_, gen_.states, outputs_, in_map_, out_map_}; }

  friend bool operator==(const OpenMarkov& a, const OpenMarkov& b) {
    return a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ && a.gen_.states == b.gen_.states &&
           a.gen_.rates == b.gen_.rates && a.in_map_ == b.in_map_ && a.out_map_ == b.out_map_;
  }

private:
  FinSet inputs_, outputs_;
  Generator gen_;
  FinFunction in_map_, out_map_;
};

// S -1-> (S, 0) <-1- S, the horizontal identity.
OpenMarkov identity_open(const FinSet& s);

// Glue along m.outputs == n.inputs via pushout; the composite generator is
// j H j-pull + k G k-pull, pushing each rate matrix through its pushout leg.
OpenMarkov compose_open(const OpenMarkov& m, const OpenMarkov& n);

// Alternative route to the composite rate matrix through the copairing
// X + Y -> X +_T Y: used as an independent oracle against compose_open.
RationalMatrix compose_hamiltonian_via_copairing(const OpenMarkov& m, const OpenMarkov& n);

// Side-by-side sum: coproducts of all three sets, block-diagonal generator.
OpenMarkov tensor_open(const OpenMarkov& m, const OpenMarkov& n);

struct BoundaryData {
  std::vector<Rational> inflows;   // indexed by inputs
  std::vector<Rational> outflows;  // indexed by outputs
};

// Hv + i I - o O: the instantaneous right-hand side of the open master
// equation (steady states are its zeros).
std::vector<Rational> open_master_rhs(const OpenMarkov& m, const std::vector<Rational>& v,
                                      const BoundaryData& bd);

// Numerically exponentiates tH (scaling and squaring, Pade(6)) and checks
// that the result is stochastic: entries >= -tol, column sums within tol
// of 1. The only floating-point computation in the project.
bool matrix_exp_stochastic_check(const Generator& g, double t, double tol = 1e-9);

// Stochastic matrix s with p_push s = 1, columns supported on the fibers of
// p. Weights (per dom label) must be nonnegative and sum to 1 on each fiber;
// uniform by default. Errors: NotSurjective, BadWeights.
RationalMatrix stochastic_section(const FinFunction& p,
                                  const std::optional<std::map<std::string, Rational>>& weights =
                                      std::nullopt);

// True iff coarse-graining H along the surjection p does not depend on the
// section: all columns within a fiber of p push forward identically.
bool is_lumpable(const Generator& g, const FinFunction& p);

// H' = p_push H s, validated infinitesimal stochastic. Errors:
// NotSurjective, SectionMismatch.
Generator lump(const Generator& g, const FinFunction& p, const RationalMatrix& s);

// Morphism of open Markov processes: boundary squares must be pullbacks and
// p must intertwine the generators (p_push H = H' p_push).
struct MarkovMorphism {
  FinFunction f;  // source.inputs  -> target.inputs
  FinFunction p;  // source.states  -> target.states
  FinFunction g;  // source.outputs -> target.outputs
  OpenMarkov source, target;
};

bool check_morphism(const MarkovMorphism& m);

MarkovMorphism identity_morphism(const OpenMarkov& m);
// (f' f, p' p, g' g); valid morphisms compose to valid morphisms.
MarkovMorphism vertical_compose(const MarkovMorphism& m1, const MarkovMorphism& m2);
// Side-by-side composite over the shared boundary map m1.g == m2.f; the new
// state map is induced by the pushout universal property.
MarkovMorphism horizontal_compose(const MarkovMorphism& m1, const MarkovMorphism& m2);

// The relation between (input probabilities, inflows, output probabilities,
// outflows) holding in steady state. Computed exactly: kernel of
// [H | i_push | -o_push] mapped through (v, I, O) |-> (i_pull v, I, o_pull v, O).
LinearRelation black_box(const OpenMarkov& m);

// Black-boxes a morphism into a relation square with vertical maps
// f_push (+) f_push and g_push (+) g_push. Errors: InvalidMorphism.
RelSquare black_box_morphism(const MarkovMorphism& m);

// Permutation identifying (R^A (+) R^A) (+) (R^B (+) R^B) with
// R^(A+B) (+) R^(A+B): the coordinate witness making the black box a
// monoidal functor. (a_probs, a_flows, b_probs, b_flows) |->
// (a_probs, b_probs, a_flows, b_flows).
RationalMatrix boundary_interleave(std::size_t a, std::size_t b);

// Tensor of two black boxes transported along boundary_interleave on both
// sides, so that it lands in the same coordinates as black_box(tensor_open).
LinearRelation tensor_black_boxes(const LinearRelation& bb_m, std::size_t in_m, std::size_t out_m,
                                  const LinearRelation& bb_n, std::size_t in_n, std::size_t out_n);

// Companion of a bijection f : S -> S': the cell S -f-> (S', 0) <-1- S'
// with its unit and counit squares. The conjoint is the reversed cell.
struct Companion {
  OpenMarkov cell;
  MarkovMorphism unit;    // identity_open(S) => cell
  MarkovMorphism counit;  // cell => identity_open(S')
  OpenMarkov conjoint;
};

Companion companion_of(const FinFunction& f);

// Checks both companion equations on c: the vertical paste of unit and
// counit equals the identity-assigning square on f, and the horizontal paste
// reduces to the identity on the cell under the canonical unitors.
bool companion_equations_hold(const Companion& c);

}  // namespace cospan

#endif

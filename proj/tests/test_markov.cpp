#include <doctest.h>

#include <vector>

#include "cospan/errors.hpp"
#include "cospan/laws.hpp"
#include "cospan/markov.hpp"

using namespace cospan;

namespace {

RationalMatrix qmat(const std::vector<std::vector<std::string>>& rows,
                    std::size_t cols_if_empty = 0) {
  std::vector<std::vector<Rational>> qs;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& s : r) row.push_back(rational_from_string(s));
    qs.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(qs, cols_if_empty);
}

FinSet fs(std::vector<std::string> labels) { return FinSet(std::move(labels)); }

// The worked coarse-graining example: four states, one input at a, one
// output at c, rates a->b1: 8, a->b2: 7, b1->b2: 4, b1->c: 6, b2->c: 6.
OpenMarkov lumping_example() {
  const FinSet states = fs({"a", "b1", "b2", "c"});
  const RationalMatrix h = qmat({{"-15", "0", "0", "0"},
                                 {"8", "-10", "0", "0"},
                                 {"7", "4", "-6", "0"},
                                 {"0", "6", "6", "0"}});
  return OpenMarkov(fs({"in"}), fs({"out"}), validate_generator(states, h),
                    FinFunction::from_labels(fs({"in"}), states, {{"in", "a"}}),
                    FinFunction::from_labels(fs({"out"}), states, {{"out", "c"}}));
}

FinFunction lumping_map() {
  return FinFunction::from_labels(
      fs({"a", "b1", "b2", "c"}), fs({"a", "b", "c"}),
      {{"a", "a"}, {"b1", "b"}, {"b2", "b"}, {"c", "c"}});
}

OpenMarkov lumped_example() {
  const FinSet states = fs({"a", "b", "c"});
  const RationalMatrix h = qmat({{"-15", "0", "0"}, {"15", "-6", "0"}, {"0", "6", "0"}});
  return OpenMarkov(fs({"in"}), fs({"out"}), validate_generator(states, h),
                    FinFunction::from_labels(fs({"in"}), states, {{"in", "a"}}),
                    FinFunction::from_labels(fs({"out"}), states, {{"out", "c"}}));
}

// The two processes glued in the introduction: a four-state process with
// rates 1/2, 2, 1, 4, 2 and a three-state process with rates 2, 12, 1, 1.
OpenMarkov intro_four_state() {
  const FinSet states = fs({"a", "b", "c", "d"});
  const RationalMatrix h = qmat({{"-1/2", "0", "0", "0"},
                                 {"0", "-2", "1", "0"},
                                 {"1/2", "2", "-5", "2"},
                                 {"0", "0", "4", "-2"}});
  return OpenMarkov(fs({"ia", "ib"}), fs({"t"}), validate_generator(states, h),
                    FinFunction::from_labels(fs({"ia", "ib"}), states, {{"ia", "a"}, {"ib", "b"}}),
                    FinFunction::from_labels(fs({"t"}), states, {{"t", "d"}}));
}

OpenMarkov intro_three_state() {
  const FinSet states = fs({"p", "q", "r"});
  const RationalMatrix g = qmat({{"-14", "1", "0"}, {"2", "-1", "1"}, {"12", "0", "-1"}});
  return OpenMarkov(fs({"t"}), fs({"u"}), validate_generator(states, g),
                    FinFunction::from_labels(fs({"t"}), states, {{"t", "p"}}),
                    FinFunction::from_labels(fs({"u"}), states, {{"u", "r"}}));
}

// Independent steady-state solver for the black-box oracle: right-to-left
// column elimination over the raw constraint matrix, then parametrize.
std::vector<std::vector<Rational>> oracle_nullspace(RationalMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_col_of_row(rows, cols);
  std::vector<bool> used_row(rows, false);
  for (std::size_t col = cols; col-- > 0;) {
    std::size_t pivot = rows;
    for (std::size_t r = rows; r-- > 0;) {
      if (!used_row[r] && m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    used_row[pivot] = true;
    pivot_col_of_row[pivot] = col;
    const Rational inv = 1 / m.at(pivot, col);
    for (std::size_t j = 0; j < cols; ++j) m.at(pivot, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t j = 0; j < cols; ++j) m.at(r, j) -= factor * m.at(pivot, j);
    }
  }
  std::vector<bool> is_pivot_col(cols, false);
  for (std::size_t r = 0; r < rows; ++r)
    if (pivot_col_of_row[r] != cols) is_pivot_col[pivot_col_of_row[r]] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < rows; ++r) {
      if (pivot_col_of_row[r] == cols) continue;
      v[pivot_col_of_row[r]] = -m.at(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

TEST_CASE("generator validation") {
  CHECK_NOTHROW(intro_four_state());
  CHECK_NOTHROW(validate_generator(fs({"x", "y"}), RationalMatrix(2, 2)));

  CHECK_THROWS_WITH_AS(validate_generator(fs({"x"}), qmat({{"1"}})),
                       doctest::Contains("ColumnSumNonzero"), DomainError);
  CHECK_THROWS_WITH_AS(
      validate_generator(fs({"x", "y"}), qmat({{"1", "-1"}, {"-1", "1"}})),
      doctest::Contains("NegativeOffDiagonal"), DomainError);
  CHECK_THROWS_AS(validate_generator(fs({"x"}), RationalMatrix(2, 2)), DomainError);
}

TEST_CASE("composing the introduction's processes") {
  const OpenMarkov m = intro_four_state();
  const OpenMarkov n = intro_three_state();
  const OpenMarkov glued = compose_open(m, n);
  CHECK(glued.states().size() == 6);
  CHECK(glued.states().labels() ==
        std::vector<std::string>{"L:a", "L:b", "L:c", "L:d", "R:q", "R:r"});
  const RationalMatrix expected = qmat({{"-1/2", "0", "0", "0", "0", "0"},
                                        {"0", "-2", "1", "0", "0", "0"},
                                        {"1/2", "2", "-5", "2", "0", "0"},
                                        {"0", "0", "4", "-16", "1", "0"},
                                        {"0", "0", "0", "2", "-1", "1"},
                                        {"0", "0", "0", "12", "0", "-1"}});
  CHECK(glued.hamiltonian() == expected);
  CHECK(glued.hamiltonian() == compose_hamiltonian_via_copairing(m, n));
  CHECK(glued.in_map().is_injective());
  CHECK(glued.out_map().is_injective());

  CHECK_THROWS_AS(compose_open(n, n), DomainError);
}

TEST_CASE("gluing over an empty boundary is a block diagonal sum") {
  laws::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const OpenMarkov a = laws::gen_open_markov(rng, 4, 0, "a");
    OpenMarkov a_closed(a.inputs(), fs({}), a.generator(), a.in_map(),
                        FinFunction(fs({}), a.states(), {}));
    const OpenMarkov b = laws::gen_open_markov(rng, 4, 0, "b");
    OpenMarkov b_open(fs({}), b.outputs(), b.generator(), FinFunction(fs({}), b.states(), {}),
                      b.out_map());
    const OpenMarkov glued = compose_open(a_closed, b_open);
    CHECK(glued.hamiltonian() == block_diag(a.hamiltonian(), b.hamiltonian()));
  }
}

TEST_CASE("tensoring open Markov processes") {
  const OpenMarkov m = intro_four_state();
  const OpenMarkov n = intro_three_state();
  const OpenMarkov sum = tensor_open(m, n);
  CHECK(sum.states().size() == 7);
  CHECK(sum.hamiltonian() == block_diag(m.hamiltonian(), n.hamiltonian()));
  CHECK(is_infinitesimal_stochastic(sum.hamiltonian()));

  const OpenMarkov unit = identity_open(fs({}));
  const OpenMarkov padded = tensor_open(m, unit);
  CHECK(padded.states().size() == m.states().size());
  CHECK(padded.hamiltonian() == m.hamiltonian());
  CHECK(padded.inputs().size() == m.inputs().size());
}

TEST_CASE("identity open processes") {
  CHECK(identity_open(fs({})).states().empty());
  const OpenMarkov one = identity_open(fs({"x"}));
  CHECK(one.hamiltonian() == RationalMatrix(1, 1));
  CHECK(one.in_map() == one.out_map());

  const CospanFS feet = lumping_example().cospan();
  CHECK(feet.left_foot == fs({"in"}));
  CHECK(feet.right_foot == fs({"out"}));
  CHECK(feet.apex == fs({"a", "b1", "b2", "c"}));
  CHECK(feet.in_map.apply("in") == "a");
  CHECK(feet.out_map.apply("out") == "c");

  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    CHECK(black_box(identity_open(fs(labels))) == identity_relation(2 * n));
  }
}

TEST_CASE("open master equation right-hand side") {
  const OpenMarkov m = lumping_example();
  const std::vector<Rational> steady{Rational(1), Rational(4, 5), Rational(17, 10), Rational(3)};
  const BoundaryData bd{{Rational(15)}, {Rational(15)}};
  for (const auto& entry : open_master_rhs(m, steady, bd)) CHECK(entry == 0);

  const std::vector<Rational> v{Rational(1), Rational(2), Rational(3), Rational(4)};
  const BoundaryData closed{{Rational(0)}, {Rational(0)}};
  CHECK(open_master_rhs(m, v, closed) == m.hamiltonian().apply(v));

  // The introduction's display: inflows at a and b, outflow at d.
  const OpenMarkov intro = intro_four_state();
  const BoundaryData intro_bd{{Rational(5), Rational(7)}, {Rational(11)}};
  const std::vector<Rational> rhs = open_master_rhs(intro, v, intro_bd);
  CHECK(rhs == std::vector<Rational>{Rational(9, 2), Rational(6), Rational(-5, 2), Rational(-7)});

  CHECK_THROWS_AS(open_master_rhs(m, {}, bd), DomainError);
}

TEST_CASE("matrix exponential stochasticity check") {
  const OpenMarkov m = lumping_example();
  CHECK(matrix_exp_stochastic_check(m.generator(), 0.0));

  laws::Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Generator g = laws::gen_valid_generator(rng, 6);
    for (double t : {0.1, 1.0, 10.0}) CHECK(matrix_exp_stochastic_check(g, t));
  }

  // An invalid generator (negative off-diagonal, built without validation)
  // must fail for small times.
  Generator bad{fs({"x", "y"}), qmat({{"1", "-1"}, {"-1", "1"}})};
  CHECK_FALSE(matrix_exp_stochastic_check(bad, 0.1));
  CHECK_FALSE(matrix_exp_stochastic_check(bad, 0.01));

  CHECK_THROWS_AS(matrix_exp_stochastic_check(bad, -1.0), DomainError);
}

TEST_CASE("stochastic sections") {
  // A bijection's only section is the inverse permutation matrix.
  const FinSet ab = fs({"a", "b"});
  const FinSet uv = fs({"u", "v"});
  const FinFunction swap = FinFunction::from_labels(ab, uv, {{"a", "v"}, {"b", "u"}});
  CHECK(stochastic_section(swap) == qmat({{"0", "1"}, {"1", "0"}}));

  const FinFunction p = lumping_map();
  const std::map<std::string, Rational> weights{{"b1", Rational(1, 3)}, {"b2", Rational(2, 3)}};
  CHECK(stochastic_section(p, weights) ==
        qmat({{"1", "0", "0"}, {"0", "1/3", "0"}, {"0", "2/3", "0"}, {"0", "0", "1"}}));
  CHECK(stochastic_section(p) ==
        qmat({{"1", "0", "0"}, {"0", "1/2", "0"}, {"0", "1/2", "0"}, {"0", "0", "1"}}));

  // On any surjection, every section is stochastic with p s = 1.
  laws::Rng rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const FinSet dom = laws::gen_finset(rng, 1, 6, "d");
    const FinSet cod = laws::gen_finset(rng, 1, static_cast<int>(dom.size()), "c");
    const FinFunction q = laws::gen_surjection(rng, dom, cod);
    const RationalMatrix s = laws::gen_stochastic_section(rng, q);
    CHECK(pushforward_matrix(q) * s == RationalMatrix::identity(cod.size()));
    for (const auto& colsum : s.column_sums()) CHECK(colsum == 1);
  }

  const FinFunction not_onto = FinFunction::from_labels(fs({"a"}), uv, {{"a", "u"}});
  CHECK_THROWS_WITH_AS(stochastic_section(not_onto), doctest::Contains("NotSurjective"),
                       DomainError);
  const std::map<std::string, Rational> bad{{"b1", Rational(1, 3)}, {"b2", Rational(1, 3)}};
  CHECK_THROWS_WITH_AS(stochastic_section(p, bad), doctest::Contains("BadWeights"), DomainError);
  const std::map<std::string, Rational> partial{{"b1", Rational(1)}};
  CHECK_THROWS_WITH_AS(stochastic_section(p, partial), doctest::Contains("BadWeights"),
                       DomainError);
}

TEST_CASE("lumpability of the worked example") {
  const OpenMarkov m = lumping_example();
  const FinFunction p = lumping_map();
  CHECK(is_lumpable(m.generator(), p));
  CHECK(pushforward_matrix(p) * m.hamiltonian() ==
        qmat({{"-15", "0", "0", "0"}, {"15", "-6", "-6", "0"}, {"0", "6", "6", "0"}}));

  // A bijection lumps anything.
  laws::Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const Generator g = laws::gen_valid_generator(rng, 5);
    CHECK(is_lumpable(g, FinFunction::identity(g.states)));
  }

  // Lowering the b1 -> c rate from 6 to 5 breaks the column criterion.
  RationalMatrix perturbed = m.hamiltonian();
  perturbed.at(3, 1) = 5;
  perturbed.at(1, 1) = Rational(-9);
  const Generator off = validate_generator(m.states(), perturbed);
  CHECK_FALSE(is_lumpable(off, p));
}

TEST_CASE("lumping the worked example") {
  const OpenMarkov m = lumping_example();
  const FinFunction p = lumping_map();
  const std::map<std::string, Rational> weights{{"b1", Rational(1, 3)}, {"b2", Rational(2, 3)}};
  const Generator lumped = lump(m.generator(), p, stochastic_section(p, weights));
  CHECK(lumped.rates == qmat({{"-15", "0", "0"}, {"15", "-6", "0"}, {"0", "6", "0"}}));
  CHECK(lumped.states == fs({"a", "b", "c"}));

  CHECK(lump(m.generator(), FinFunction::identity(m.states()),
             RationalMatrix::identity(4))
            .rates == m.hamiltonian());

  // Any two sections agree on a lumpable generator.
  laws::Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Generator again =
        lump(m.generator(), p, laws::gen_stochastic_section(rng, p));
    CHECK(again.rates == lumped.rates);
  }

  // A non-section is rejected.
  CHECK_THROWS_WITH_AS(lump(m.generator(), p, RationalMatrix::identity(4)),
                       doctest::Contains("SectionMismatch"), DomainError);
}

TEST_CASE("morphisms of open Markov processes") {
  const OpenMarkov m = lumping_example();
  CHECK(check_morphism(identity_morphism(m)));

  const OpenMarkov target = lumped_example();
  const MarkovMorphism coarse{FinFunction::identity(m.inputs()), lumping_map(),
                              FinFunction::identity(m.outputs()), m, target};
  CHECK(check_morphism(coarse));

  // Perturbing a diagonal entry of the coarse generator breaks the
  // intertwining equation.
  RationalMatrix wrong = target.hamiltonian();
  wrong.at(1, 1) = Rational(-7);
  wrong.at(2, 1) = Rational(7);
  const OpenMarkov bad_target(target.inputs(), target.outputs(),
                              validate_generator(target.states(), wrong), target.in_map(),
                              target.out_map());
  const MarkovMorphism bad{FinFunction::identity(m.inputs()), lumping_map(),
                           FinFunction::identity(m.outputs()), m, bad_target};
  CHECK_FALSE(check_morphism(bad));
}

TEST_CASE("black box of the worked example against an independent solver") {
  const OpenMarkov m = lumping_example();
  const LinearRelation bb = black_box(m);
  CHECK(bb.dom_dim() == 2);
  CHECK(bb.cod_dim() == 2);
  CHECK(bb.graph().dim() == 2);
  CHECK(bb.graph().basis() == qmat({{"1", "15", "0", "15"}, {"0", "0", "1", "0"}}));

  // Oracle route: eliminate the raw 4x6 steady-state system with a different
  // pivoting strategy, then push each solution through the observation map.
  RationalMatrix system = hconcat(
      hconcat(m.hamiltonian(), pushforward_matrix(m.in_map())),
      RationalMatrix::from_rows({{Rational(0)}, {Rational(0)}, {Rational(0)}, {Rational(-1)}}));
  const auto solutions = oracle_nullspace(system);
  CHECK(solutions.size() == bb.graph().dim());
  std::vector<std::vector<Rational>> observed;
  for (const auto& v : solutions) {
    // (v_a, v_b1, v_b2, v_c, I, O) |-> (v_a, I, v_c, O)
    observed.push_back({v[0], v[4], v[3], v[5]});
  }
  const RationalSubspace oracle_space =
      RationalSubspace::span_of_rows(RationalMatrix::from_rows(observed, 4));
  CHECK(oracle_space == bb.graph());
}

TEST_CASE("black-boxed coarse-graining of the worked example") {
  const OpenMarkov m = lumping_example();
  const MarkovMorphism coarse{FinFunction::identity(m.inputs()), lumping_map(),
                              FinFunction::identity(m.outputs()), m, lumped_example()};
  const RelSquare sq = black_box_morphism(coarse);
  CHECK(is_rel_2morphism(sq));

  const RelSquare id_sq = black_box_morphism(identity_morphism(m));
  CHECK(id_sq.top == id_sq.bottom);
  CHECK(is_rel_2morphism(id_sq));

  RationalMatrix wrong = lumped_example().hamiltonian();
  wrong.at(1, 1) = Rational(-7);
  wrong.at(2, 1) = Rational(7);
  const OpenMarkov bad_target(lumped_example().inputs(), lumped_example().outputs(),
                              validate_generator(lumped_example().states(), wrong),
                              lumped_example().in_map(), lumped_example().out_map());
  const MarkovMorphism bad{FinFunction::identity(m.inputs()), lumping_map(),
                           FinFunction::identity(m.outputs()), m, bad_target};
  CHECK_THROWS_WITH_AS(black_box_morphism(bad), doctest::Contains("InvalidMorphism"), DomainError);

  // Commuting boundary squares that are not pullbacks are rejected too:
  // placing the fine input inside a two-element fiber breaks the fiberwise
  // bijection even though everything commutes and intertwines.
  const OpenMarkov source_at_b1(
      m.inputs(), m.outputs(), m.generator(),
      FinFunction::from_labels(m.inputs(), m.states(), {{"in", "b1"}}), m.out_map());
  const OpenMarkov target_at_b(
      m.inputs(), m.outputs(), lumped_example().generator(),
      FinFunction::from_labels(m.inputs(), lumped_example().states(), {{"in", "b"}}),
      lumped_example().out_map());
  const MarkovMorphism not_pullback{FinFunction::identity(m.inputs()), lumping_map(),
                                    FinFunction::identity(m.outputs()), source_at_b1,
                                    target_at_b};
  CHECK_FALSE(check_morphism(not_pullback));
  CHECK_THROWS_WITH_AS(black_box_morphism(not_pullback), doctest::Contains("InvalidMorphism"),
                       DomainError);
}

TEST_CASE("companions of bijections") {
  const FinSet s = fs({"x", "y"});
  const Companion triv = companion_of(FinFunction::identity(s));
  CHECK(triv.cell == identity_open(s));
  CHECK(companion_equations_hold(triv));

  const FinSet s2 = fs({"u", "v"});
  const FinFunction swap = FinFunction::from_labels(s, s2, {{"x", "v"}, {"y", "u"}});
  const Companion c = companion_of(swap);
  CHECK(c.cell.in_map() == swap);
  CHECK(c.cell.out_map() == FinFunction::identity(s2));
  CHECK(c.conjoint.in_map() == FinFunction::identity(s2));
  CHECK(c.conjoint.out_map() == swap);
  CHECK(companion_equations_hold(c));

  // The vertical paste is the identity-assigning square on the bijection.
  const MarkovMorphism paste = vertical_compose(c.unit, c.counit);
  CHECK(paste.p == swap);
  CHECK(paste.source == identity_open(s));
  CHECK(paste.target == identity_open(s2));

  const FinFunction collapse = FinFunction::from_labels(s, fs({"w"}), {{"x", "w"}, {"y", "w"}});
  CHECK_THROWS_WITH_AS(companion_of(collapse), doctest::Contains("NotBijection"), DomainError);
}

TEST_CASE("push-pull closure and functoriality spot checks") {
  laws::Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Generator g = laws::gen_valid_generator(rng, 5);
    const FinSet y = laws::gen_finset(rng, 1, 5, "y");
    const FinFunction f = laws::gen_function(rng, g.states, y);
    CHECK(is_infinitesimal_stochastic(pushforward_matrix(f) * g.rates * pullback_matrix(f)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const laws::ComposablePair pair = laws::gen_composable_pair(rng, 5, 2);
    CHECK(black_box(compose_open(pair.first, pair.second)) ==
          compose_relations(black_box(pair.first), black_box(pair.second)));
  }
}

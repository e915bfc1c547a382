// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and case counts are pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cospan/laws.hpp"
#include "cospan/markov.hpp"
#include "cospan/net.hpp"

using namespace cospan;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool passed, const std::string& detail = "") {
  std::printf("%s criterion %2d: %s%s%s\n", passed ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!passed) ++failures;
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

RationalMatrix qmat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> qs;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& s : r) row.push_back(rational_from_string(s));
    qs.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(qs);
}

FinSet fs(std::vector<std::string> labels) { return FinSet(std::move(labels)); }

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
  return FinFunction::from_labels(fs({"a", "b1", "b2", "c"}), fs({"a", "b", "c"}),
                                  {{"a", "a"}, {"b1", "b"}, {"b2", "b"}, {"c", "c"}});
}

bool suite_ok(const std::string& name, std::uint64_t seed, int bound, int cases,
              std::string& detail) {
  const laws::LawReport r = laws::run_suite(name, seed, bound, cases);
  detail = name + ": " + std::to_string(r.cases_run - r.failures.size()) + "/" +
           std::to_string(r.cases_run) + " cases";
  if (!r.ok()) detail += " (first failure: " + r.failures.front().description + ")";
  return r.ok();
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const OpenMarkov m = lumping_example();
  const FinFunction p = lumping_map();
  const RationalMatrix section = stochastic_section(
      p, std::map<std::string, Rational>{{"b1", Rational(1, 3)}, {"b2", Rational(2, 3)}});
  const Generator lumped = lump(m.generator(), p, section);
  const bool lump_ok =
      lumped.rates == qmat({{"-15", "0", "0"}, {"15", "-6", "0"}, {"0", "6", "0"}});
  const bool ph_ok = pushforward_matrix(p) * m.hamiltonian() ==
                     qmat({{"-15", "0", "0", "0"}, {"15", "-6", "-6", "0"}, {"0", "6", "6", "0"}});
  const bool lumpable_ok = is_lumpable(m.generator(), p);
  const double elapsed = ms_since(start);
  report(1, "worked lumping example, exact",
         lump_ok && ph_ok && lumpable_ok && elapsed < 10.0,
         "elapsed " + std::to_string(elapsed) + " ms");
}

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  const OpenMarkov m = lumping_example();
  const FinFunction p = lumping_map();
  const Generator base = lump(m.generator(), p, stochastic_section(p));
  bool sections_agree = true;
  laws::Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const Generator again = lump(m.generator(), p, laws::gen_stochastic_section(rng, p));
    sections_agree = sections_agree && again.rates == base.rates;
  }
  // Lower the b1 -> c rate from 6 to 5.
  RationalMatrix perturbed = m.hamiltonian();
  perturbed.at(3, 1) = 5;
  perturbed.at(1, 1) = Rational(-9);
  const Generator off = validate_generator(m.states(), perturbed);
  const bool flipped = !is_lumpable(off, p);
  const std::map<std::string, Rational> w0{{"b1", Rational(1)}, {"b2", Rational(0)}};
  const std::map<std::string, Rational> w1{{"b1", Rational(0)}, {"b2", Rational(1)}};
  const bool disagree = !(lump(off, p, stochastic_section(p, w0)).rates ==
                          lump(off, p, stochastic_section(p, w1)).rates);
  const double elapsed = ms_since(start);
  report(2, "lump is section-independent exactly when lumpable",
         sections_agree && flipped && disagree && elapsed < 100.0,
         "elapsed " + std::to_string(elapsed) + " ms");
}

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  const bool ok = suite_ok("blackbox_functorial", 101, 6, 100, detail);
  const double elapsed = ms_since(start);
  report(3, "black box preserves composition on 100 random pairs", ok && elapsed < 30000.0,
         detail + ", elapsed " + std::to_string(elapsed) + " ms");
}

void criterion_4() {
  std::string detail;
  bool ok = suite_ok("blackbox_functorial", 202, 6, 100, detail);
  bool identities = true;
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    identities =
        identities && black_box(identity_open(fs(labels))) == identity_relation(2 * n);
  }
  std::string id_detail;
  ok = ok && suite_ok("blackbox_identity", 303, 6, 100, id_detail) && identities;
  report(4, "black box preserves tensors and identities", ok, detail + "; " + id_detail);
}

void criterion_5() {
  const OpenMarkov m = lumping_example();
  const FinSet lumped_states = fs({"a", "b", "c"});
  const Generator target_gen = validate_generator(
      lumped_states, qmat({{"-15", "0", "0"}, {"15", "-6", "0"}, {"0", "6", "0"}}));
  const OpenMarkov target(
      m.inputs(), m.outputs(), target_gen,
      FinFunction::from_labels(m.inputs(), lumped_states, {{"in", "a"}}),
      FinFunction::from_labels(m.outputs(), lumped_states, {{"out", "c"}}));
  const MarkovMorphism worked_morphism{FinFunction::identity(m.inputs()), lumping_map(),
                                      FinFunction::identity(m.outputs()), m, target};
  bool ok = check_morphism(worked_morphism) &&
            is_rel_2morphism(black_box_morphism(worked_morphism));
  int generated = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    laws::Rng rng(seed);
    const MarkovMorphism mm = laws::gen_markov_morphism(rng, 6);
    ok = ok && check_morphism(mm) && is_rel_2morphism(black_box_morphism(mm));
    ++generated;
  }
  report(5, "black-boxed coarse-grainings satisfy the containment", ok,
         std::to_string(generated) + " generated morphisms plus the worked example");
}

void criterion_6() {
  std::string detail;
  report(6, "pushforward/pullback exchange on 200 pullback squares",
         suite_ok("beck_chevalley", 6, 6, 200, detail), detail);
}

void criterion_7() {
  std::string detail;
  report(7, "conjugation by any map preserves infinitesimal stochasticity",
         suite_ok("push_pull_closure", 7, 6, 200, detail), detail);
}

void criterion_8() {
  std::string detail;
  report(8, "both composite-rate formulas agree on 200 pairs",
         suite_ok("odot_equivalence", 8, 6, 200, detail), detail);
}

void criterion_9() {
  std::string detail;
  report(9, "linear relations compose strictly with interchange",
         suite_ok("linrel_strictness", 9, 5, 200, detail), detail);
}

void criterion_10() {
  std::string d1, d2, d3, d4;
  const bool ok = suite_ok("interchange_mark", 10, 6, 100, d1) &&
                  suite_ok("interchange_net", 20, 6, 100, d2) &&
                  suite_ok("unitors_associators", 30, 6, 50, d3) &&
                  suite_ok("companion_equations", 40, 6, 50, d4);
  report(10, "double-categorical laws at desk scale", ok, d1 + "; " + d2 + "; " + d3 + "; " + d4);
}

void criterion_11() {
  std::string detail;
  report(11, "exp(tH) is numerically stochastic at tolerance 1e-9",
         suite_ok("semigroup_numeric", 11, 10, 50, detail), detail);
}

void criterion_12() {
  PetriRates water;
  water.species = fs({"H", "O", "H2O"});
  water.transitions = fs({"alpha"});
  water.pre = {Multiset{{"H", 2}, {"O", 1}}};
  water.post = {Multiset{{"H2O", 1}}};
  water.rates = {Rational(1)};
  const FinSet a = fs({"1", "2", "3"});
  const FinSet b = fs({"4"});
  const OpenNet formation(
      a, b, water, FinFunction::from_labels(a, water.species, {{"1", "H"}, {"2", "H"}, {"3", "O"}}),
      FinFunction::from_labels(b, water.species, {{"4", "H2O"}}));

  PetriRates splitting;
  splitting.species = fs({"H2O", "OH-", "H3O+"});
  splitting.transitions = fs({"beta"});
  splitting.pre = {Multiset{{"H2O", 2}}};
  splitting.post = {Multiset{{"OH-", 1}, {"H3O+", 1}}};
  splitting.rates = {Rational(1)};
  const FinSet c = fs({"5", "6"});
  const OpenNet ionization(
      b, c, splitting, FinFunction::from_labels(b, splitting.species, {{"4", "H2O"}}),
      FinFunction::from_labels(c, splitting.species, {{"5", "OH-"}, {"6", "H3O+"}}));

  const OpenNet composed = compose_open_net(formation, ionization);
  const OpenNet tensored = tensor_open_net(formation, ionization);
  const bool ok = composed.carrier().size() == 5 && composed.cell_count() == 2 &&
                  tensored.carrier().size() == 6 && tensored.cell_count() == 2;
  report(12, "chemistry nets compose to 5 species and tensor to 6", ok,
         "composed " + std::to_string(composed.carrier().size()) + " species / " +
             std::to_string(composed.cell_count()) + " transitions, tensored " +
             std::to_string(tensored.carrier().size()) + " / " +
             std::to_string(tensored.cell_count()));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("all 12 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}

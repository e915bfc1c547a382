#include <doctest.h>

#include "cospan/errors.hpp"
#include "cospan/json_io.hpp"
#include "cospan/laws.hpp"

using namespace cospan;
using nlohmann::json;

TEST_CASE("open Markov documents round-trip") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    laws::Rng rng(seed);
    const OpenMarkov m = laws::gen_open_markov(rng, 5, 3);
    const json doc = io::openmarkov_to_json(m);
    CHECK(io::openmarkov_from_json(doc, "roundtrip") == m);
    // Emitted documents re-serialize identically.
    CHECK(io::openmarkov_to_json(io::openmarkov_from_json(doc, "roundtrip")) == doc);
  }
}

TEST_CASE("open net documents round-trip") {
  laws::Rng rng(3);
  for (const NetKind kind : {NetKind::Graph, NetKind::RatedGraph, NetKind::Petri}) {
    for (int trial = 0; trial < 8; ++trial) {
      const OpenNet n = laws::gen_open_net(rng, 4, 2, kind, "n");
      const json doc = io::opennet_to_json(n);
      CHECK(io::opennet_from_json(doc, "roundtrip") == n);
    }
  }
}

TEST_CASE("relations and generators round-trip") {
  laws::Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const LinearRelation r = laws::gen_relation(rng, rng.range(0, 4), rng.range(0, 4));
    CHECK(io::relation_from_json(io::relation_to_json(r), "roundtrip") == r);
    const Generator g = laws::gen_valid_generator(rng, 4);
    const Generator back = io::generator_from_json(io::generator_to_json(g), "roundtrip");
    CHECK(back.states == g.states);
    CHECK(back.rates == g.rates);
  }
}

TEST_CASE("parse failures carry location context") {
  CHECK_THROWS_AS(io::openmarkov_from_json(json{{"states", 3}}, "bad"), ParseError);
  CHECK_THROWS_AS(io::openmarkov_from_json(json::object(), "bad"), ParseError);
  CHECK_THROWS_AS(io::relation_from_json(json{{"dom_dim", 1}}, "bad"), ParseError);
  CHECK_THROWS_AS(
      io::opennet_from_json(json{{"left_foot", json::array()}, {"right_foot", json::array()}},
                            "bad"),
      ParseError);
  CHECK_THROWS_AS(io::rational_from_json(json("1/x"), "bad"), ParseError);

  json wrong_version = io::generator_to_json(Generator{FinSet({"x"}), RationalMatrix(1, 1)});
  wrong_version["format_version"] = "2";
  CHECK_THROWS_AS(io::generator_from_json(wrong_version, "bad"), ParseError);
}

TEST_CASE("document classification") {
  laws::Rng rng(4);
  const OpenMarkov m = laws::gen_open_markov(rng, 3, 2);
  CHECK(io::classify_document(io::openmarkov_to_json(m), "doc") == io::DocKind::OpenMarkovDoc);
  const OpenNet n = laws::gen_open_net(rng, 3, 2, NetKind::Petri, "n");
  CHECK(io::classify_document(io::opennet_to_json(n), "doc") == io::DocKind::OpenNetDoc);
  const Generator g = laws::gen_valid_generator(rng, 3);
  CHECK(io::classify_document(io::generator_to_json(g), "doc") == io::DocKind::GeneratorDoc);
  CHECK_THROWS_AS(io::classify_document(json{{"weird", 1}}, "doc"), ParseError);
}

TEST_CASE("lump problems parse with a defaulted codomain") {
  json doc{{"states", {"a", "b1", "b2", "c"}},
           {"H",
            {{"-15", "0", "0", "0"},
             {"8", "-10", "0", "0"},
             {"7", "4", "-6", "0"},
             {"0", "6", "6", "0"}}},
           {"p", {{"a", "a"}, {"b1", "b"}, {"b2", "b"}, {"c", "c"}}}};
  const io::LumpProblem lp = io::lump_problem_from_json(doc, "doc");
  CHECK(lp.p.cod().labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(is_lumpable(lp.gen, lp.p));

  doc["lumped_states"] = {"c", "b", "a"};
  const io::LumpProblem pinned = io::lump_problem_from_json(doc, "doc");
  CHECK(pinned.p.cod().labels() == std::vector<std::string>{"c", "b", "a"});
}

TEST_CASE("morphism documents parse and check") {
  const json doc = laws::generate("markov_morphism", 17, 6);
  const MarkovMorphism m = io::morphism_from_json(doc, "doc");
  CHECK(check_morphism(m));
}

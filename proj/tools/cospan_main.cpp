#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cospan/errors.hpp"
#include "cospan/json_io.hpp"
#include "cospan/laws.hpp"

namespace {

using cospan::DomainError;
using cospan::ParseError;
using nlohmann::json;
namespace io = cospan::io;

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path, e.what());
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::map<std::string, cospan::Rational> parse_weights(const std::string& flag) {
  std::map<std::string, cospan::Rational> weights;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("--fiber-weights", "expected label=value in '" + item + "'");
    weights[item.substr(0, eq)] = cospan::rational_from_string(item.substr(eq + 1));
  }
  return weights;
}

int run_validate(const std::string& path) {
  const json doc = read_document(path);
  switch (io::classify_document(doc, path)) {
    case io::DocKind::OpenMarkovDoc: {
      const auto m = io::openmarkov_from_json(doc, path);
      emit(json{{"valid", true}, {"kind", "open_markov"}, {"states", m.states().size()}});
      return 0;
    }
    case io::DocKind::GeneratorDoc: {
      const auto g = io::generator_from_json(doc, path);
      emit(json{{"valid", true}, {"kind", "generator"}, {"states", g.states.size()}});
      return 0;
    }
    case io::DocKind::OpenNetDoc: {
      const auto n = io::opennet_from_json(doc, path);
      const char* kind = n.kind() == cospan::NetKind::Petri      ? "open_petri"
                         : n.kind() == cospan::NetKind::RatedGraph ? "open_rated_graph"
                                                                   : "open_graph";
      emit(json{{"valid", true}, {"kind", kind}, {"vertices", n.carrier().size()}});
      return 0;
    }
  }
  return 1;
}

int run_binary_op(const std::string& a_path, const std::string& b_path, bool tensor) {
  const json a = read_document(a_path);
  const json b = read_document(b_path);
  const auto kind_a = io::classify_document(a, a_path);
  const auto kind_b = io::classify_document(b, b_path);
  if (kind_a == io::DocKind::OpenNetDoc && kind_b == io::DocKind::OpenNetDoc) {
    const auto m = io::opennet_from_json(a, a_path);
    const auto n = io::opennet_from_json(b, b_path);
    emit(io::opennet_to_json(tensor ? tensor_open_net(m, n) : compose_open_net(m, n)));
    return 0;
  }
  if (kind_a == io::DocKind::OpenMarkovDoc && kind_b == io::DocKind::OpenMarkovDoc) {
    const auto m = io::openmarkov_from_json(a, a_path);
    const auto n = io::openmarkov_from_json(b, b_path);
    emit(io::openmarkov_to_json(tensor ? tensor_open(m, n) : compose_open(m, n)));
    return 0;
  }
  throw DomainError("KindMismatch", "both inputs must be open Markov processes or open nets");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open networks as structured cospans: compose, tensor, coarse-grain, black-box"};
  app.require_subcommand(1);

  std::string in_a, in_b, weights_flag, suite;
  std::uint64_t seed = 0;
  int cases = 100, size_bound = 6;

  auto* validate = app.add_subcommand("validate", "check a document against its invariants");
  validate->add_option("input", in_a, "file or - for stdin")->required();

  auto* compose_cmd = app.add_subcommand("compose", "glue two open systems along their boundary");
  compose_cmd->add_option("first", in_a)->required();
  compose_cmd->add_option("second", in_b)->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "place two open systems side by side");
  tensor_cmd->add_option("first", in_a)->required();
  tensor_cmd->add_option("second", in_b)->required();

  auto* blackbox = app.add_subcommand("blackbox", "steady-state boundary relation of an open Markov process");
  blackbox->add_option("input", in_a)->required();

  auto* lump = app.add_subcommand("lump", "coarse-grain a generator along a lumping map");
  lump->add_option("input", in_a)->required();
  lump->add_option("--fiber-weights", weights_flag, "comma list label=p/q of section weights");

  auto* check_lumpable = app.add_subcommand("check-lumpable", "test section-independence of lumping");
  check_lumpable->add_option("input", in_a)->required();

  auto* check_morphism = app.add_subcommand("check-morphism", "verify a morphism of open Markov processes");
  check_morphism->add_option("input", in_a)->required();

  auto* iso = app.add_subcommand("iso", "search for an isomorphism of open nets");
  iso->add_option("first", in_a)->required();
  iso->add_option("second", in_b)->required();

  auto* laws_cmd = app.add_subcommand("laws", "run a seeded law suite");
  laws_cmd->add_option("suite", suite, "suite id")->required();
  laws_cmd->add_option("--seed", seed, "PRNG seed (default 0)");
  laws_cmd->add_option("--cases", cases, "number of cases (default 100)");
  laws_cmd->add_option("--size", size_bound, "size bound (default 6)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return run_validate(in_a);
    if (app.got_subcommand(compose_cmd)) return run_binary_op(in_a, in_b, false);
    if (app.got_subcommand(tensor_cmd)) return run_binary_op(in_a, in_b, true);
    if (app.got_subcommand(blackbox)) {
      const json doc = read_document(in_a);
      emit(io::relation_to_json(black_box(io::openmarkov_from_json(doc, in_a))));
      return 0;
    }
    if (app.got_subcommand(lump)) {
      const json doc = read_document(in_a);
      const auto problem = io::lump_problem_from_json(doc, in_a);
      cospan::RationalMatrix section =
          weights_flag.empty()
              ? cospan::stochastic_section(problem.p)
              : cospan::stochastic_section(problem.p, parse_weights(weights_flag));
      const auto lumped = cospan::lump(problem.gen, problem.p, section);
      emit(json{{"lumped", io::generator_to_json(lumped)},
                {"section", io::matrix_to_json(section)},
                {"lumpable", cospan::is_lumpable(problem.gen, problem.p)}});
      return 0;
    }
    if (app.got_subcommand(check_lumpable)) {
      const json doc = read_document(in_a);
      const auto problem = io::lump_problem_from_json(doc, in_a);
      emit(json{{"lumpable", cospan::is_lumpable(problem.gen, problem.p)},
                {"pH", io::matrix_to_json(cospan::pushforward_matrix(problem.p) *
                                          problem.gen.rates)}});
      return 0;
    }
    if (app.got_subcommand(check_morphism)) {
      const json doc = read_document(in_a);
      emit(json{{"valid", cospan::check_morphism(io::morphism_from_json(doc, in_a))}});
      return 0;
    }
    if (app.got_subcommand(iso)) {
      const auto m = io::opennet_from_json(read_document(in_a), in_a);
      const auto n = io::opennet_from_json(read_document(in_b), in_b);
      const auto square = cospan::are_isomorphic(m, n);
      if (square) {
        json doc = io::netsquare_to_json(*square);
        doc["isomorphic"] = true;
        emit(doc);
      } else {
        emit(json{{"isomorphic", false}});
      }
      return 0;
    }
    if (app.got_subcommand(laws_cmd)) {
      const auto report = cospan::laws::run_suite(suite, seed, size_bound, cases);
      emit(report.to_json());
      return report.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    emit(json{{"error", json{{"kind", "parse"}, {"where", e.where()}, {"message", e.what()}}}});
    return 2;
  } catch (const DomainError& e) {
    emit(json{{"error", json{{"kind", "domain"}, {"code", e.code()}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}

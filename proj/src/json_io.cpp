#include "cospan/json_io.hpp"

#include <algorithm>

#include "cospan/errors.hpp"

namespace cospan::io {

namespace {

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where, "missing required key '" + key + "'");
  return j.at(key);
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

void check_format_version(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("format_version") &&
      j.at("format_version") != json(kFormatVersion))
    throw ParseError(where, "unsupported format_version");
}

json finset_to_json(const FinSet& s) { return json(s.labels()); }

FinSet finset_from_json(const json& j, const std::string& where) {
  try {
    return FinSet(string_array(j, where));
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

json label_map_to_json(const FinFunction& f) {
  json out = json::object();
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    out[f.dom().label(i)] = f.cod().label(f.apply_index(i));
  return out;
}

FinFunction label_map_from_json(const FinSet& dom, const FinSet& cod, const json& j,
                                const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object of label pairs");
  std::map<std::string, std::string> map;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ParseError(where, "map values must be labels");
    map[k] = v.get<std::string>();
  }
  try {
    return FinFunction::from_labels(dom, cod, map);
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

json finfunction_to_json(const FinFunction& f) {
  return json{{"dom", finset_to_json(f.dom())},
              {"cod", finset_to_json(f.cod())},
              {"map", label_map_to_json(f)}};
}

FinFunction finfunction_from_json(const json& j, const std::string& where) {
  const FinSet dom = finset_from_json(require(j, "dom", where), where + ".dom");
  const FinSet cod = finset_from_json(require(j, "cod", where), where + ".cod");
  return label_map_from_json(dom, cod, require(j, "map", where), where + ".map");
}

json rational_to_json(const Rational& q) { return json(rational_to_string(q)); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(where, "expected a rational as a 'p/q' string");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j, std::size_t cols_hint, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of matrix rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j.at(i);
    if (!row.is_array()) throw ParseError(where, "expected an array of matrix rows");
    std::vector<Rational> entries;
    for (std::size_t c = 0; c < row.size(); ++c)
      entries.push_back(rational_from_json(row.at(c), where + "[" + std::to_string(i) + "][" +
                                                          std::to_string(c) + "]"));
    rows.push_back(std::move(entries));
  }
  try {
    return RationalMatrix::from_rows(rows, cols_hint);
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

json generator_to_json(const Generator& g) {
  return json{{"format_version", kFormatVersion},
              {"states", finset_to_json(g.states)},
              {"H", matrix_to_json(g.rates)}};
}

Generator generator_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const FinSet states = finset_from_json(require(j, "states", where), where + ".states");
  const RationalMatrix h = matrix_from_json(require(j, "H", where), states.size(), where + ".H");
  return validate_generator(states, h);
}

json openmarkov_to_json(const OpenMarkov& m) {
  return json{{"format_version", kFormatVersion},
              {"states", finset_to_json(m.states())},
              {"inputs", finset_to_json(m.inputs())},
              {"outputs", finset_to_json(m.outputs())},
              {"i", label_map_to_json(m.in_map())},
              {"o", label_map_to_json(m.out_map())},
              {"H", matrix_to_json(m.hamiltonian())}};
}

OpenMarkov openmarkov_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const FinSet states = finset_from_json(require(j, "states", where), where + ".states");
  const FinSet inputs = finset_from_json(require(j, "inputs", where), where + ".inputs");
  const FinSet outputs = finset_from_json(require(j, "outputs", where), where + ".outputs");
  const RationalMatrix h = matrix_from_json(require(j, "H", where), states.size(), where + ".H");
  const FinFunction in_map = label_map_from_json(inputs, states, require(j, "i", where), where + ".i");
  const FinFunction out_map =
      label_map_from_json(outputs, states, require(j, "o", where), where + ".o");
  return OpenMarkov(inputs, outputs, validate_generator(states, h), in_map, out_map);
}

json relation_to_json(const LinearRelation& r) {
  return json{{"format_version", kFormatVersion},
              {"dom_dim", r.dom_dim()},
              {"cod_dim", r.cod_dim()},
              {"basis", matrix_to_json(r.graph().basis())}};
}

LinearRelation relation_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const auto& dd = require(j, "dom_dim", where);
  const auto& cd = require(j, "cod_dim", where);
  if (!dd.is_number_unsigned() || !cd.is_number_unsigned())
    throw ParseError(where, "dom_dim/cod_dim must be nonnegative integers");
  const std::size_t dom = dd.get<std::size_t>(), cod = cd.get<std::size_t>();
  const RationalMatrix basis =
      matrix_from_json(require(j, "basis", where), dom + cod, where + ".basis");
  if (basis.cols() != dom + cod)
    throw ParseError(where, "basis rows must have dom_dim + cod_dim entries");
  return LinearRelation(dom, cod, RationalSubspace::span_of_rows(basis));
}

namespace {

json multiset_to_json(const Multiset& m) {
  json out = json::object();
  for (const auto& [label, count] : m) out[label] = count;
  return out;
}

Multiset multiset_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object of species multiplicities");
  Multiset out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) throw ParseError(where, "multiplicities must be nonnegative integers");
    const std::uint64_t c = v.get<std::uint64_t>();
    if (c > 0) out[k] = c;
  }
  return out;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    json edge{{"name", g.edges.label(e)},
              {"src", g.nodes.label(g.src.apply_index(e))},
              {"tgt", g.nodes.label(g.tgt.apply_index(e))}};
    if (g.rates) edge["rate"] = rational_to_json((*g.rates)[e]);
    edges.push_back(edge);
  }
  return json{{"nodes", finset_to_json(g.nodes)}, {"edges", edges}};
}

Graph graph_from_json(const json& j, const std::string& where) {
  Graph g;
  g.nodes = finset_from_json(require(j, "nodes", where), where + ".nodes");
  const auto& edges = require(j, "edges", where);
  if (!edges.is_array()) throw ParseError(where, "edges must be an array");
  std::vector<std::string> names;
  std::vector<std::size_t> src, tgt;
  std::vector<Rational> rates;
  std::size_t rated = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string ew = where + ".edges[" + std::to_string(e) + "]";
    const auto& edge = edges.at(e);
    names.push_back(require(edge, "name", ew).get<std::string>());
    const std::string s = require(edge, "src", ew).get<std::string>();
    const std::string t = require(edge, "tgt", ew).get<std::string>();
    if (!g.nodes.contains(s) || !g.nodes.contains(t))
      throw ParseError(ew, "edge endpoint is not a declared node");
    src.push_back(g.nodes.index_of(s));
    tgt.push_back(g.nodes.index_of(t));
    if (edge.contains("rate")) {
      ++rated;
      rates.push_back(rational_from_json(edge.at("rate"), ew + ".rate"));
    }
  }
  if (rated != 0 && rated != edges.size())
    throw ParseError(where, "either all edges carry rates or none do");
  try {
    g.edges = FinSet(names);
    g.src = FinFunction(g.edges, g.nodes, std::move(src));
    g.tgt = FinFunction(g.edges, g.nodes, std::move(tgt));
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
  if (rated) g.rates = std::move(rates);
  return g;
}

json petri_to_json(const PetriRates& p) {
  json transitions = json::array();
  for (std::size_t t = 0; t < p.transitions.size(); ++t) {
    transitions.push_back(json{{"name", p.transitions.label(t)},
                               {"src", multiset_to_json(p.pre[t])},
                               {"tgt", multiset_to_json(p.post[t])},
                               {"rate", rational_to_json(p.rates[t])}});
  }
  return json{{"species", finset_to_json(p.species)}, {"transitions", transitions}};
}

PetriRates petri_from_json(const json& j, const std::string& where) {
  PetriRates p;
  p.species = finset_from_json(require(j, "species", where), where + ".species");
  const auto& transitions = require(j, "transitions", where);
  if (!transitions.is_array()) throw ParseError(where, "transitions must be an array");
  std::vector<std::string> names;
  for (std::size_t t = 0; t < transitions.size(); ++t) {
    const std::string tw = where + ".transitions[" + std::to_string(t) + "]";
    const auto& tr = transitions.at(t);
    names.push_back(require(tr, "name", tw).get<std::string>());
    p.pre.push_back(multiset_from_json(require(tr, "src", tw), tw + ".src"));
    p.post.push_back(multiset_from_json(require(tr, "tgt", tw), tw + ".tgt"));
    p.rates.push_back(rational_from_json(require(tr, "rate", tw), tw + ".rate"));
  }
  try {
    p.transitions = FinSet(names);
    return validate_petri(p);
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace

json opennet_to_json(const OpenNet& n) {
  json out{{"format_version", kFormatVersion},
           {"left_foot", finset_to_json(n.left_foot())},
           {"right_foot", finset_to_json(n.right_foot())},
           {"i", label_map_to_json(n.in_map())},
           {"o", label_map_to_json(n.out_map())}};
  if (n.kind() == NetKind::Petri) {
    out["petri"] = petri_to_json(std::get<PetriRates>(n.decoration()));
  } else {
    out["graph"] = graph_to_json(std::get<Graph>(n.decoration()));
  }
  return out;
}

OpenNet opennet_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const FinSet left = finset_from_json(require(j, "left_foot", where), where + ".left_foot");
  const FinSet right = finset_from_json(require(j, "right_foot", where), where + ".right_foot");
  Decoration dec;
  if (j.contains("graph")) {
    dec = graph_from_json(j.at("graph"), where + ".graph");
  } else if (j.contains("petri")) {
    dec = petri_from_json(j.at("petri"), where + ".petri");
  } else {
    throw ParseError(where, "open net needs a 'graph' or 'petri' decoration");
  }
  const FinSet& carrier = std::holds_alternative<Graph>(dec) ? std::get<Graph>(dec).nodes
                                                             : std::get<PetriRates>(dec).species;
  const FinFunction in_map = label_map_from_json(left, carrier, require(j, "i", where), where + ".i");
  const FinFunction out_map =
      label_map_from_json(right, carrier, require(j, "o", where), where + ".o");
  try {
    return OpenNet(left, right, dec, in_map, out_map);
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

json netsquare_to_json(const NetSquare& sq) {
  return json{{"format_version", kFormatVersion},
              {"f", label_map_to_json(sq.f)},
              {"g", label_map_to_json(sq.g)},
              {"vertex_map", label_map_to_json(sq.alpha.vertices)},
              {"cell_map", label_map_to_json(sq.alpha.cells)}};
}

LumpProblem lump_problem_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const FinSet states = finset_from_json(require(j, "states", where), where + ".states");
  const RationalMatrix h = matrix_from_json(require(j, "H", where), states.size(), where + ".H");
  Generator gen = validate_generator(states, h);

  const auto& pj = require(j, "p", where);
  if (!pj.is_object()) throw ParseError(where + ".p", "expected an object of label pairs");
  FinSet lumped;
  if (j.contains("lumped_states")) {
    lumped = finset_from_json(j.at("lumped_states"), where + ".lumped_states");
  } else {
    // Image labels in first-appearance order along the state order.
    std::vector<std::string> labels;
    for (const auto& s : states.labels()) {
      if (!pj.contains(s)) throw ParseError(where + ".p", "no image for state '" + s + "'");
      const std::string img = pj.at(s).get<std::string>();
      if (std::find(labels.begin(), labels.end(), img) == labels.end()) labels.push_back(img);
    }
    lumped = FinSet(labels);
  }
  const FinFunction p = label_map_from_json(states, lumped, pj, where + ".p");
  return LumpProblem{std::move(gen), p};
}

MarkovMorphism morphism_from_json(const json& j, const std::string& where) {
  check_format_version(j, where);
  const OpenMarkov source = openmarkov_from_json(require(j, "source", where), where + ".source");
  const OpenMarkov target = openmarkov_from_json(require(j, "target", where), where + ".target");
  return MarkovMorphism{
      label_map_from_json(source.inputs(), target.inputs(), require(j, "f", where), where + ".f"),
      label_map_from_json(source.states(), target.states(), require(j, "p", where), where + ".p"),
      label_map_from_json(source.outputs(), target.outputs(), require(j, "g", where), where + ".g"),
      source, target};
}

DocKind classify_document(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected a JSON object");
  if (j.contains("graph") || j.contains("petri")) return DocKind::OpenNetDoc;
  if (j.contains("inputs") || j.contains("i")) return DocKind::OpenMarkovDoc;
  if (j.contains("states") && j.contains("H")) return DocKind::GeneratorDoc;
  throw ParseError(where, "unrecognized document shape");
}

}  // namespace cospan::io

#ifndef COSPAN_JSON_IO_HPP
#define COSPAN_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "cospan/linrel.hpp"
#include "cospan/markov.hpp"
#include "cospan/net.hpp"

// JSON codecs for the file formats described in docs/formats.md. Output is
// canonical: object keys sorted, rationals in lowest terms, format_version
// stamped on every top-level document. Parsers accept a missing
// format_version and reject any value other than "1".
namespace cospan::io {

using nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

void check_format_version(const json& j, const std::string& where);

json finset_to_json(const FinSet& s);
FinSet finset_from_json(const json& j, const std::string& where);

// Standalone encoding {"dom": [...], "cod": [...], "map": {...}}.
json finfunction_to_json(const FinFunction& f);
FinFunction finfunction_from_json(const json& j, const std::string& where);
// The bare {label: label} object, used where dom/cod are implied.
json label_map_to_json(const FinFunction& f);
FinFunction label_map_from_json(const FinSet& dom, const FinSet& cod, const json& j,
                                const std::string& where);

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& where);

// Row-major array of arrays of rational strings. cols_hint disambiguates
// matrices with zero rows.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j, std::size_t cols_hint, const std::string& where);

json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j, const std::string& where);

json openmarkov_to_json(const OpenMarkov& m);
OpenMarkov openmarkov_from_json(const json& j, const std::string& where);

json relation_to_json(const LinearRelation& r);
LinearRelation relation_from_json(const json& j, const std::string& where);

json opennet_to_json(const OpenNet& n);
OpenNet opennet_from_json(const json& j, const std::string& where);

json netsquare_to_json(const NetSquare& sq);

// Input for lump / check-lumpable: a generator (possibly with open boundary
// data, which is ignored by lumping) plus the lumping map "p". The lumped
// state set defaults to the image labels of p in first-appearance order and
// may be pinned explicitly with "lumped_states".
struct LumpProblem {
  Generator gen;
  FinFunction p;
};

LumpProblem lump_problem_from_json(const json& j, const std::string& where);

// Input for check-morphism: {"source": ..., "target": ..., "f"/"p"/"g": label maps}.
MarkovMorphism morphism_from_json(const json& j, const std::string& where);

// Top-level dispatch: determines whether a document is an open Markov
// process or an open net and parses it.
enum class DocKind { OpenMarkovDoc, OpenNetDoc, GeneratorDoc };
DocKind classify_document(const json& j, const std::string& where);

}  // namespace cospan::io

#endif

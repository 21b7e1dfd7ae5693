#pragma once

#include "listpack/cover.hpp"
#include "listpack/probabilistic.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <variant>

namespace listpack::io {

/// Malformed or invalid instance text. The message names the offending field.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Instance files:
//   graph  {"n": int, "edges": [[u, v], ...]}
//   list   graph fields + "lists": [[c, ...], ...]
//   cover  graph fields + "k": int, "matchings": {"u-v": [[i, j], ...]}
//   packing {"k": int, "mode": "list" | "cover", "colourings": [[...], ...]}
//   (a,b)-colouring {"a": int, "b": int, "assignment": [[...], ...]}
// Unknown keys (such as the "schema" and "version" stamps written by the
// serialisers) are ignored when reading. Parsed covers are validated.

using Instance = std::variant<ListInstance, CorrespondenceCover>;

Graph parse_graph(const std::string& text);
ListInstance parse_list_instance(const std::string& text);
CorrespondenceCover parse_cover(const std::string& text);
/// A list instance if "lists" is present, a cover if "matchings" is.
Instance parse_instance(const std::string& text);
Packing parse_packing(const std::string& text);
probabilistic::FractionalColoring parse_fractional(const std::string& text);

/// Single-line JSON with "schema" and "version" fields.
std::string to_json(const Graph& g);
std::string to_json(const ListInstance& instance);
std::string to_json(const CorrespondenceCover& cover);
std::string to_json(const Packing& packing);
std::string to_json(const probabilistic::FractionalColoring& fc);

/// Whole file, or stdin for "-". Throws ParseError if unreadable.
std::string read_source(const std::string& path);

}  // namespace listpack::io

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Malformed input. `offset()` is the byte offset of the offending byte in
/// the text handed to the parser.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A graph plus non-fatal diagnostics (duplicate edges, header count mismatch).
struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line. An optional ">>graph6<<" header and one trailing
/// newline are accepted. Only the single-byte size form (n <= 62) is supported.
Graph parse_graph6(std::string_view text);
/// Encodes without header or newline. Throws std::invalid_argument for n > 62.
std::string to_graph6(const Graph& g);
/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// DIMACS .col: "c" comments, one "p edge n m" header, "e u v" 1-indexed edges.
ParsedGraph parse_dimacs_col(std::string_view text);
std::string to_dimacs_col(const Graph& g);

/// "n m" header then "u v" 0-indexed lines; '#' starts a comment line.
ParsedGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { Graph6, Dimacs, EdgeList };

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat f);
/// Sniffs the first meaningful line: "p"/"c" -> DIMACS, two integers -> edge
/// list, anything else -> graph6.
GraphFormat detect_format(std::string_view text);

struct ParsedGraphs {
  std::vector<Graph> graphs;
  std::vector<std::string> warnings;
};
/// graph6 input may hold many graphs (one per line); the other formats hold one.
ParsedGraphs parse_graphs(std::string_view text, GraphFormat format);

}  // namespace wheelfree

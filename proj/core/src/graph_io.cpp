#include "wheelfree/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace wheelfree {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6Bias = 63;

std::string_view strip_line_end(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

Graph decode_graph6(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::string_view body = strip_line_end(text);
  if (pos >= body.size()) throw ParseError(base + pos, "graph6: missing size byte");

  auto byte_value = [&](std::size_t at) {
    auto c = static_cast<unsigned char>(body[at]);
    if (c < kGraph6Bias || c > 126) {
      throw ParseError(base + at, "graph6: byte value " + std::to_string(c) + " outside printable range 63..126");
    }
    return static_cast<int>(c) - kGraph6Bias;
  };

  int n = byte_value(pos);
  if (n == 63) throw ParseError(base + pos, "graph6: long size form (n > 62) is not supported");
  ++pos;

  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::size_t nbytes = (bits + 5) / 6;
  if (body.size() - pos < nbytes) {
    throw ParseError(base + body.size(), "graph6: truncated, expected " + std::to_string(nbytes) + " data bytes for n=" + std::to_string(n));
  }
  if (body.size() - pos > nbytes) throw ParseError(base + pos + nbytes, "graph6: trailing bytes after adjacency data");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      int value = byte_value(pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (nbytes > 0) {
    std::size_t last = pos + nbytes - 1;
    int value = byte_value(last);
    int pad = static_cast<int>(nbytes * 6 - bits);
    if ((value & ((1 << pad) - 1)) != 0) throw ParseError(base + last, "graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

struct Line {
  std::string_view text;
  std::size_t offset;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  int number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, start, number++});
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, const Line& line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.offset, "line " + std::to_string(line.number) + ": expected integer " + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

bool is_blank(std::string_view s) { return tokens(s).empty(); }

// Shared body of the two integer formats. `index_base` is 1 for DIMACS.
struct EdgeCollector {
  int n = -1;
  long long declared_m = 0;
  int index_base = 0;
  std::vector<std::pair<Edge, const Line*>> raw;

  ParsedGraph finish(const char* format_name) {
    ParsedGraph out{Graph(n), {}};
    GraphBuilder b(n);
    for (const auto& [e, line] : raw) {
      if (!b.add_edge(e.u, e.v)) {
        out.warnings.push_back("line " + std::to_string(line->number) + ": duplicate edge " + std::to_string(e.u + index_base) + " " +
                               std::to_string(e.v + index_base) + " ignored");
      }
    }
    out.graph = std::move(b).build();
    if (static_cast<long long>(out.graph.size()) != declared_m) {
      out.warnings.push_back(std::string(format_name) + ": header declares " + std::to_string(declared_m) + " edges but input has " +
                             std::to_string(out.graph.size()) + " distinct edges");
    }
    return out;
  }

  void add(long long u, long long v, const Line& line) {
    long long lo = index_base;
    long long hi = n - 1 + index_base;
    if (u < lo || u > hi || v < lo || v > hi) {
      throw ParseError(line.offset, "line " + std::to_string(line.number) + ": endpoint out of range " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    if (u == v) throw ParseError(line.offset, "line " + std::to_string(line.number) + ": loop at vertex " + std::to_string(u));
    raw.push_back({Edge{static_cast<Vertex>(u - index_base), static_cast<Vertex>(v - index_base)}, &line});
  }
};

void set_header(EdgeCollector& c, long long n, long long m, const Line& line) {
  if (n < 0 || n > 1'000'000) throw ParseError(line.offset, "line " + std::to_string(line.number) + ": bad vertex count");
  if (m < 0) throw ParseError(line.offset, "line " + std::to_string(line.number) + ": bad edge count");
  c.n = static_cast<int>(n);
  c.declared_m = m;
}

}  // namespace

Graph parse_graph6(std::string_view text) { return decode_graph6(text, 0); }

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("to_graph6: only n <= 62 is supported, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + kGraph6Bias));
  int value = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kGraph6Bias));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kGraph6Bias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text)) continue;
    out.push_back(decode_graph6(line.text, line.offset));
  }
  return out;
}

ParsedGraph parse_dimacs_col(std::string_view text) {
  auto lines = split_lines(text);
  EdgeCollector c;
  c.index_base = 1;
  for (const Line& line : lines) {
    auto tok = tokens(line.text);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string where = "line " + std::to_string(line.number) + ": ";
    if (tok[0] == "p") {
      if (c.n >= 0) throw ParseError(line.offset, where + "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) throw ParseError(line.offset, where + "expected 'p edge <n> <m>'");
      set_header(c, parse_int(tok[2], line, "vertex count"), parse_int(tok[3], line, "edge count"), line);
    } else if (tok[0] == "e") {
      if (c.n < 0) throw ParseError(line.offset, where + "edge before 'p edge' header");
      if (tok.size() != 3) throw ParseError(line.offset, where + "expected 'e <u> <v>'");
      c.add(parse_int(tok[1], line, "endpoint"), parse_int(tok[2], line, "endpoint"), line);
    } else {
      throw ParseError(line.offset, where + "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (c.n < 0) throw ParseError(0, "dimacs: missing 'p edge <n> <m>' header");
  return c.finish("dimacs");
}

std::string to_dimacs_col(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

ParsedGraph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  EdgeCollector c;
  for (const Line& line : lines) {
    auto tok = tokens(line.text);
    if (tok.empty() || tok[0].starts_with('#')) continue;
    if (tok.size() != 2) throw ParseError(line.offset, "line " + std::to_string(line.number) + ": expected two integers");
    long long a = parse_int(tok[0], line, "value");
    long long b = parse_int(tok[1], line, "value");
    if (c.n < 0) {
      set_header(c, a, b, line);
    } else {
      c.add(a, b, line);
    }
  }
  if (c.n < 0) throw ParseError(0, "edge list: missing 'n m' header");
  return c.finish("edge list");
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edgelist";
  }
  return "unknown";
}

GraphFormat detect_format(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    auto tok = tokens(line.text);
    if (tok.empty()) continue;
    if (tok[0] == "p" || tok[0] == "c" || tok[0] == "e") return GraphFormat::Dimacs;
    if (tok[0].starts_with('#')) return GraphFormat::EdgeList;
    bool all_digits = tok.size() == 2;
    for (auto t : tok) {
      for (char ch : t) all_digits = all_digits && ch >= '0' && ch <= '9';
    }
    return all_digits ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return GraphFormat::Graph6;
}

ParsedGraphs parse_graphs(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return {parse_graph6_lines(text), {}};
    case GraphFormat::Dimacs: {
      auto p = parse_dimacs_col(text);
      return {{std::move(p.graph)}, std::move(p.warnings)};
    }
    case GraphFormat::EdgeList: {
      auto p = parse_edge_list(text);
      return {{std::move(p.graph)}, std::move(p.warnings)};
    }
  }
  return {};
}

}  // namespace wheelfree

#include "wheelfree/pool.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/oracles.hpp"

namespace wheelfree {

namespace {

std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2; }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

template <typename T>
T parse_number(std::string_view tok, std::string_view whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("pool descriptor '" + std::string(whole) + "': bad number '" + std::string(tok) + "'");
  }
  return value;
}

double parse_probability(std::string_view tok, std::string_view whole) {
  std::string copy(tok);
  std::istringstream is(copy);
  double p = -1;
  is >> p;
  if (!is || !is.eof() || p < 0.0 || p > 1.0) throw std::invalid_argument("pool descriptor '" + std::string(whole) + "': bad probability");
  return p;
}

std::pair<int, int> parse_range(std::string_view tok, std::string_view whole) {
  auto dash = tok.find('-');
  if (dash == std::string_view::npos) {
    int n = parse_number<int>(tok, whole);
    return {n, n};
  }
  int a = parse_number<int>(tok.substr(0, dash), whole);
  int b = parse_number<int>(tok.substr(dash + 1), whole);
  if (a > b) throw std::invalid_argument("pool descriptor '" + std::string(whole) + "': empty order range");
  return {a, b};
}

std::string range_text(int a, int b) { return a == b ? std::to_string(a) : std::to_string(a) + "-" + std::to_string(b); }

std::vector<Graph> build_classes(int n) {
  if (n == 0) return {Graph(0)};
  std::map<std::uint64_t, Graph> seen;
  for (const Graph& h : isomorphism_classes(n - 1)) {
    for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (n - 1)); ++attach) {
      GraphBuilder b(n);
      for (const Edge& e : h.edges()) b.add_edge(e.u, e.v);
      for (Vertex v = 0; v < n - 1; ++v) {
        if (attach >> v & 1U) b.add_edge(v, n - 1);
      }
      Graph g = std::move(b).build();
      std::uint64_t code = canonical_code(g);
      if (!seen.contains(code)) seen.emplace(code, canonical_form(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open pool file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph6_lines(buf.str());
}

}  // namespace

bool PoolFilters::accepts(const Graph& g) const {
  if (min_degree_at_least && g.order() > 0 && g.min_degree() < *min_degree_at_least) return false;
  if (max_degree_at_most && g.max_degree() > *max_degree_at_most) return false;
  if (connected && !is_connected(g)) return false;
  if (connectivity_at_least || connectivity_exactly) {
    if (connectivity_at_least && g.order() > 0 && g.min_degree() < *connectivity_at_least) return false;
    int kappa = vertex_connectivity(g);
    if (connectivity_at_least && kappa < *connectivity_at_least) return false;
    if (connectivity_exactly && kappa != *connectivity_exactly) return false;
  }
  if (wheel_free_k && oracles::brute_has_k_wheel(g, *wheel_free_k)) return false;
  return true;
}

PoolDescriptor PoolDescriptor::exhaustive(int n_min, int n_max, bool dedup) {
  PoolDescriptor d;
  d.kind = Kind::Exhaustive;
  d.n_min = n_min;
  d.n_max = n_max;
  d.dedup = dedup;
  if (n_min < 0 || n_max < n_min || n_max > kExhaustiveMaxOrder) {
    throw std::invalid_argument("exhaustive pools cover orders 0.." + std::to_string(kExhaustiveMaxOrder));
  }
  return d;
}

PoolDescriptor PoolDescriptor::random(int n_min, int n_max, double p, std::uint64_t seed, std::size_t count) {
  if (n_min < 0 || n_max < n_min) throw std::invalid_argument("random pool: bad order range");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random pool: edge probability outside [0, 1]");
  PoolDescriptor d;
  d.kind = Kind::Random;
  d.n_min = n_min;
  d.n_max = n_max;
  d.edge_probability = p;
  d.seed = seed;
  d.count = count;
  return d;
}

PoolDescriptor PoolDescriptor::curated(std::string name) {
  PoolDescriptor d;
  d.kind = Kind::Curated;
  d.name = std::move(name);
  return d;
}

PoolDescriptor PoolDescriptor::parse(std::string_view text) {
  auto parts = split(text, ':');
  const std::string_view kind = parts[0];
  if ((kind == "exhaustive" || kind == "iso") && parts.size() == 2) {
    auto [a, b] = parse_range(parts[1], text);
    return exhaustive(a, b, kind == "iso");
  }
  if (kind == "random" && parts.size() == 5) {
    auto [a, b] = parse_range(parts[1], text);
    return random(a, b, parse_probability(parts[2], text), parse_number<std::uint64_t>(parts[3], text), parse_number<std::size_t>(parts[4], text));
  }
  if (kind == "curated" && parts.size() == 2) {
    curated_pool(parts[1]);  // validates the name
    return curated(std::string(parts[1]));
  }
  if (kind == "file" && parts.size() >= 2) {
    PoolDescriptor d;
    d.kind = Kind::File;
    d.name = std::string(text.substr(5));
    return d;
  }
  throw std::invalid_argument("unrecognized pool descriptor '" + std::string(text) + "'");
}

std::string PoolDescriptor::to_string() const {
  switch (kind) {
    case Kind::Exhaustive: return (dedup ? "iso:" : "exhaustive:") + range_text(n_min, n_max);
    case Kind::Random: {
      std::ostringstream os;
      os << "random:" << range_text(n_min, n_max) << ':' << edge_probability << ':' << seed << ':' << count;
      return os.str();
    }
    case Kind::Curated: return "curated:" + name;
    case Kind::File: return "file:" + name;
  }
  return "unknown";
}

GraphPool::GraphPool(PoolDescriptor descriptor, PoolFilters filters) : descriptor_(std::move(descriptor)), filters_(filters) {}

Graph graph_from_bits(int n, std::uint64_t bits) {
  GraphBuilder b(n);
  int t = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++t) {
      if (bits >> t & 1U) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph random_graph(int n_min, int n_max, double p, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 engine(seq);
  const auto width = static_cast<std::uint64_t>(n_max - n_min + 1);
  const int n = n_min + static_cast<int>(engine() % width);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (draw < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

const std::vector<Graph>& isomorphism_classes(int n) {
  if (n < 0 || n > kExhaustiveMaxOrder) throw std::invalid_argument("isomorphism classes are available for orders 0.." + std::to_string(kExhaustiveMaxOrder));
  static std::array<std::once_flag, kExhaustiveMaxOrder + 1> once;
  static std::array<std::vector<Graph>, kExhaustiveMaxOrder + 1> classes;
  std::call_once(once[static_cast<std::size_t>(n)], [n] { classes[static_cast<std::size_t>(n)] = build_classes(n); });
  return classes[static_cast<std::size_t>(n)];
}

std::vector<Graph> curated_pool(std::string_view name) {
  if (name == "named") {
    return {complete(4),     complete(5),   complete(6),   complete_bipartite(4), complete_bipartite(5), cycle_graph(5),
            petersen(),      icosahedron(), octahedron(),  tight_example(4),      tight_example(5)};
  }
  if (name == "five-connected") return {complete(6), complete_bipartite(5), icosahedron()};
  if (name == "four-connected") {
    std::vector<Graph> out;
    for (int n = 5; n <= kExhaustiveMaxOrder; ++n) {
      for (const Graph& g : isomorphism_classes(n)) {
        if (g.min_degree() >= 4 && vertex_connectivity(g) >= 4) out.push_back(g);
      }
    }
    out.push_back(complete_bipartite(4, 5));
    out.push_back(complete_bipartite(5));
    out.push_back(icosahedron());
    return out;
  }
  if (name == "k44-neighborhood") {
    const Graph k44 = complete_bipartite(4);
    std::vector<Graph> out{k44};
    std::vector<std::uint64_t> codes;
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        if (k44.adjacent(u, v)) continue;
        GraphBuilder b(k44);
        b.add_edge(u, v);
        Graph g = std::move(b).build();
        std::uint64_t code = canonical_code(g);
        if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
          codes.push_back(code);
          out.push_back(std::move(g));
        }
      }
    }
    out.push_back(complete_bipartite(4, 5));
    out.push_back(complete_bipartite(5));
    return out;
  }
  throw std::invalid_argument("unknown curated pool '" + std::string(name) + "'");
}

std::vector<Graph> GraphPool::materialize_candidates() const {
  switch (descriptor_.kind) {
    case PoolDescriptor::Kind::Curated: return curated_pool(descriptor_.name);
    case PoolDescriptor::Kind::File: return load_graph6_file(descriptor_.name);
    case PoolDescriptor::Kind::Exhaustive: {
      std::vector<Graph> out;
      for (int n = descriptor_.n_min; n <= descriptor_.n_max; ++n) {
        const auto& cls = isomorphism_classes(n);
        out.insert(out.end(), cls.begin(), cls.end());
      }
      return out;
    }
    case PoolDescriptor::Kind::Random: {
      std::vector<Graph> out;
      const std::uint64_t cap = static_cast<std::uint64_t>(descriptor_.count) * 10000;
      for (std::uint64_t i = 0; out.size() < descriptor_.count && i < cap; ++i) {
        Graph g = random_graph(descriptor_.n_min, descriptor_.n_max, descriptor_.edge_probability, descriptor_.seed, i);
        if (filters_.accepts(g)) out.push_back(std::move(g));
      }
      return out;
    }
  }
  return {};
}

void GraphPool::for_each(const std::function<bool(const Graph&)>& visit) const {
  if (descriptor_.kind == PoolDescriptor::Kind::Exhaustive && !descriptor_.dedup) {
    for (int n = descriptor_.n_min; n <= descriptor_.n_max; ++n) {
      const std::uint64_t total = std::uint64_t{1} << pair_count(n);
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        Graph g = graph_from_bits(n, bits);
        if (filters_.accepts(g) && !visit(g)) return;
      }
    }
    return;
  }
  const bool prefiltered = descriptor_.kind == PoolDescriptor::Kind::Random;
  for (const Graph& g : materialize_candidates()) {
    if ((prefiltered || filters_.accepts(g)) && !visit(g)) return;
  }
}

void GraphPool::parallel_for_each(unsigned threads, const std::function<void(std::size_t, const Graph&)>& visit) const {
  threads = std::max(1U, threads);
  const bool labeled = descriptor_.kind == PoolDescriptor::Kind::Exhaustive && !descriptor_.dedup;
  std::vector<Graph> listed;
  std::vector<std::pair<int, std::uint64_t>> blocks;  // (order, first candidate index)
  std::uint64_t total = 0;
  if (labeled) {
    for (int n = descriptor_.n_min; n <= descriptor_.n_max; ++n) {
      blocks.emplace_back(n, total);
      total += std::uint64_t{1} << pair_count(n);
    }
  } else {
    listed = materialize_candidates();
    total = listed.size();
  }
  const bool prefiltered = descriptor_.kind == PoolDescriptor::Kind::Random;
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (labeled) {
        auto it = std::upper_bound(blocks.begin(), blocks.end(), i, [](std::uint64_t x, const auto& blk) { return x < blk.second; }) - 1;
        Graph g = graph_from_bits(it->first, i - it->second);
        if (filters_.accepts(g)) visit(static_cast<std::size_t>(i), g);
      } else if (prefiltered || filters_.accepts(listed[static_cast<std::size_t>(i)])) {
        visit(static_cast<std::size_t>(i), listed[static_cast<std::size_t>(i)]);
      }
    }
  };
  if (threads == 1) {
    work(0, total);
    return;
  }
  std::vector<std::jthread> workers;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t begin = std::min<std::uint64_t>(total, chunk * t);
    std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    workers.emplace_back(work, begin, end);
  }
}

std::vector<Graph> GraphPool::collect() const {
  std::vector<Graph> out;
  for_each([&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::string pool_to_graph6(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += to_graph6(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace wheelfree

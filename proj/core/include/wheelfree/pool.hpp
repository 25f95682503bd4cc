#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Predicates applied to every candidate, cheapest first: degree bounds,
/// connectedness, connectivity, then wheel-freeness (decided by the
/// brute-force oracle).
struct PoolFilters {
  std::optional<int> min_degree_at_least;
  std::optional<int> max_degree_at_most;
  bool connected = false;
  std::optional<int> connectivity_at_least;
  std::optional<int> connectivity_exactly;
  std::optional<int> wheel_free_k;

  bool accepts(const Graph& g) const;
};

/// Text forms:
///   exhaustive:N | exhaustive:A-B     every labeled graph, N <= 8
///   iso:N | iso:A-B                   one graph per isomorphism class, N <= 8
///   random:N:P:SEED:COUNT             (N may be A-B) COUNT accepted graphs
///   curated:NAME                      see curated_pool()
///   file:PATH                         graph6 lines
struct PoolDescriptor {
  enum class Kind { Exhaustive, Random, Curated, File };
  Kind kind = Kind::Exhaustive;
  int n_min = 0;
  int n_max = 0;
  bool dedup = false;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::string name;

  static PoolDescriptor exhaustive(int n_min, int n_max, bool dedup = false);
  static PoolDescriptor random(int n_min, int n_max, double p, std::uint64_t seed, std::size_t count);
  static PoolDescriptor curated(std::string name);
  /// Throws std::invalid_argument on malformed text.
  static PoolDescriptor parse(std::string_view text);
  std::string to_string() const;
};

inline constexpr int kExhaustiveMaxOrder = 8;

/// A deterministic, reproducible stream of graphs.
///
/// Random pools draw candidate i from an mt19937_64 seeded with
/// std::seed_seq{seed_lo, seed_hi, i_lo, i_hi} (32-bit halves). The order is
/// a uniform pick from [n_min, n_max] via engine() % width, then one draw per
/// vertex pair in graph6 order; the pair is an edge iff
/// (draw >> 11) * 2^-53 < p. Candidates are drawn until COUNT pass the
/// filters (or 10000 * COUNT candidates were tried).
class GraphPool {
 public:
  explicit GraphPool(PoolDescriptor descriptor, PoolFilters filters = {});

  const PoolDescriptor& descriptor() const { return descriptor_; }
  const PoolFilters& filters() const { return filters_; }

  /// Visits accepted graphs in pool order; stops when `visit` returns false.
  void for_each(const std::function<bool(const Graph&)>& visit) const;

  /// Shards the candidate stream over `threads` workers. `visit` gets the
  /// candidate index, which orders results independently of the schedule, and
  /// must be safe to call concurrently.
  void parallel_for_each(unsigned threads, const std::function<void(std::size_t, const Graph&)>& visit) const;

  std::vector<Graph> collect() const;

 private:
  std::vector<Graph> materialize_candidates() const;

  PoolDescriptor descriptor_;
  PoolFilters filters_;
};

/// The labeled graph whose adjacency bits, in graph6 pair order, are `bits`.
Graph graph_from_bits(int n, std::uint64_t bits);

/// One representative per isomorphism class on n vertices, sorted by
/// canonical code. n <= 8.
const std::vector<Graph>& isomorphism_classes(int n);

/// Named pools: "named" (small famous graphs), "five-connected",
/// "four-connected" (every 4-connected class on at most 8 vertices plus
/// larger named ones), "k44-neighborhood" (K_{4,4}, its one-edge
/// supergraphs, K_{4,5}, K_{5,5}). Throws std::invalid_argument otherwise.
std::vector<Graph> curated_pool(std::string_view name);

/// Reproducible random graph, as drawn by random pools.
Graph random_graph(int n_min, int n_max, double p, std::uint64_t seed, std::uint64_t index);

std::string pool_to_graph6(const std::vector<Graph>& graphs);

}  // namespace wheelfree

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheelfree/vertex_set.hpp"

namespace wheelfree {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with u < v.
  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Raised when an invariant that a theorem or classical result guarantees is
/// observed to fail. Always a bug (or a counterexample worth reporting).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive routines refuse inputs above their size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..order()-1. Immutable; build with
/// GraphBuilder.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[check(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  /// Neighborhood as a word; requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v)].mask(); }

  VertexSet vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }
  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;
  bool is_complete() const { return m_ == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  friend class GraphBuilder;
  std::size_t check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
    return static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Single-owner mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  /// Returns false when the edge was already present. Loops are rejected.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

struct InducedSubgraph {
  Graph graph;
  /// new id -> old id
  std::vector<Vertex> to_original;
  /// old id -> new id, or -1 when dropped
  std::vector<Vertex> to_local;
};

/// G[keep], vertices relabeled in increasing order of their old ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
/// G minus `drop`.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop);

/// N(F): vertices outside F with a neighbor in F.
VertexSet neighborhood(const Graph& g, const VertexSet& f);
/// V(G) minus (F united with N(F)).
VertexSet frontier_complement(const Graph& g, const VertexSet& f);

/// Connected components of G[within], each as a set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// "n=4 edges=[0-1 0-2 ...]" for diagnostics.
std::string describe(const Graph& g);

}  // namespace wheelfree

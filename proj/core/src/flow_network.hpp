#pragma once

// Unit-capacity vertex-split flow network used by connectivity.cpp.
// Vertex v becomes in(v) = 2v and out(v) = 2v+1 joined by an arc whose
// capacity is the vertex capacity; each graph edge uv becomes out(u)->in(v)
// and out(v)->in(u). Node 2n is a spare sink for multi-target queries.

#include <cstdint>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree::detail {

class FlowNetwork {
 public:
  static constexpr int kUnbounded = 1 << 20;

  explicit FlowNetwork(const Graph& g);

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  int sink() const { return 2 * n_; }

  /// Clears all flow and restores every vertex capacity to 1; removes sink arcs.
  void reset();
  void set_vertex_capacity(Vertex v, int cap);
  /// Adds in(v) -> sink with capacity 1.
  void connect_to_sink(Vertex v);

  /// Pushes one unit along an explicit path of node ids; capacities must allow it.
  bool push_path(const std::vector<int>& nodes);

  /// Augments from `source` to `target` until the total added flow reaches
  /// `limit` or no augmenting path remains. Returns the added flow.
  int augment(int source, int target, int limit);

  /// Positive flow on the arc from `from` to `to`, if such an arc exists.
  int flow(int from, int to) const;
  /// Successors of `node` along arcs carrying positive flow.
  std::vector<int> flow_successors(int node) const;

 private:
  struct Arc {
    int to;
    int rev;
    int cap;
    int base;
  };
  void add_arc(int from, int to, int cap);

  int n_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> internal_arc_;   // index of in(v)->out(v) inside arcs_[in(v)]
  std::vector<int> touched_sink_;   // vertices connected to the sink
  std::vector<int> parent_node_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

}  // namespace wheelfree::detail

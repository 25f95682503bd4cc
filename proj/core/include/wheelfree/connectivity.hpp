#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Vertex connectivity: the largest k such that |V| > k and removing fewer
/// than k vertices never disconnects. K_n gives n-1; disconnected graphs and
/// the one-vertex graph give 0.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally disjoint s-t paths for non-adjacent s, t.
int local_connectivity(const Graph& g, Vertex s, Vertex t);

/// k paths from `origin` to `targets` that share only the origin and whose
/// internal vertices avoid the targets.
struct Fan {
  Vertex origin = 0;
  VertexSet targets;
  std::vector<std::vector<Vertex>> paths;

  std::size_t size() const { return paths.size(); }
  /// Endpoints of the paths inside the target set.
  VertexSet ends() const;
};

/// Empty optional when `fan` is a valid fan of `g`, otherwise the first
/// violated invariant.
std::optional<std::string> check_fan(const Graph& g, const Fan& fan);

/// A k-fan from x to Y when one exists (exact). Paths are returned sorted.
std::optional<Fan> find_k_fan(const Graph& g, Vertex x, const VertexSet& targets, int k);

/// Grows `fan` to a k-fan over the same origin and targets whose ends contain
/// fan.ends(). Requires vertex_connectivity(g) >= k; failing to extend is
/// reported as InternalError.
Fan extend_fan(const Graph& g, const Fan& fan, int k);

inline constexpr int kDefaultFragmentBudget = 20;

enum class FragmentStatus {
  Ok,
  /// Complete graphs and graphs with fewer than two vertices have none.
  NoFragments,
  /// Order above the enumeration budget; the list is empty, not partial.
  BudgetExceeded,
};

struct FragmentList {
  FragmentStatus status = FragmentStatus::Ok;
  /// Sorted lexicographically by member list.
  std::vector<VertexSet> sets;
};

/// True when |N(F)| equals the connectivity and F-bar is non-empty.
bool is_fragment(const Graph& g, const VertexSet& f);
bool is_fragment(const Graph& g, const VertexSet& f, int connectivity);
/// A fragment with no proper sub-fragment.
bool is_end(const Graph& g, const VertexSet& f);

/// Every fragment, found by scanning all vertex subsets.
FragmentList fragments(const Graph& g, int budget = kDefaultFragmentBudget);
/// Every end.
FragmentList ends(const Graph& g, int budget = kDefaultFragmentBudget);

struct EndBlock {
  VertexSet fragment;    // ambient ids
  VertexSet attachment;  // N(F), ambient ids
  /// G[F + N(F)] with N(F) completed to a clique; vertex i is to_original[i].
  Graph block;
  std::vector<Vertex> to_original;
  /// Added clique edges, ambient ids, normalized and sorted.
  std::vector<Edge> marker_edges;
};

/// The end block on end F. With `check_connectivity`, a non-trivial end
/// whose block is not (kappa+1)-connected raises InternalError.
EndBlock end_block(const Graph& g, const VertexSet& end, bool check_connectivity = false);

}  // namespace wheelfree

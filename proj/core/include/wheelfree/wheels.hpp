#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// A cycle written as its vertex sequence without repeating the first vertex.
/// Normalized cycles start at their smallest vertex and continue towards the
/// smaller of its two cycle neighbors.
using Cycle = std::vector<Vertex>;

Cycle normalize_cycle(Cycle c);
/// Empty optional when `c` is a cycle of `g` (length >= 3, distinct, closed).
std::optional<std::string> check_cycle(const Graph& g, const Cycle& c);

/// A center outside a rim cycle, with one spoke per rim neighbor of the center.
struct Wheel {
  Vertex center = 0;
  Cycle rim;
  /// {center, rim vertex}, sorted by rim vertex.
  std::vector<Edge> spokes;

  std::size_t spoke_count() const { return spokes.size(); }
};

/// Empty optional when `w` is a wheel of `g` with at least k spokes.
std::optional<std::string> check_wheel(const Graph& g, const Wheel& w, int k);

/// A cycle through every vertex of `required`, or nothing when none exists.
/// The search is exhaustive. Absence for |required| >= 2 in a graph whose
/// connectivity is at least |required| raises InternalError.
std::optional<Cycle> find_cycle_through(const Graph& g, const VertexSet& required);

/// A cycle that uses edge `e` and passes through `required`. Absence with
/// connectivity >= |required| + 1 >= 2 raises InternalError.
std::optional<Cycle> find_cycle_through_edge(const Graph& g, Edge e, const VertexSet& required);

/// A k-wheel centered at v, if any. Requires order() <= 64.
std::optional<Wheel> is_wheel_center(const Graph& g, Vertex v, int k);
/// Centers of k-wheels (W(G) when k = 4).
VertexSet wheel_centers(const Graph& g, int k);
/// First k-wheel found scanning centers in increasing order.
std::optional<Wheel> find_k_wheel(const Graph& g, int k);
bool is_k_wheel_free(const Graph& g, int k);
/// At most three 4-wheel centers, pairwise adjacent.
bool is_almost_4_wheel_free(const Graph& g);

/// Separation showing no cycle of G - x passes through all of `targets`:
/// removing x and `cutset` leaves each target in its own component.
struct WMCertificate {
  Vertex x = 0;
  std::vector<Vertex> targets;
  std::vector<Vertex> cutset;
  /// components[i] is the component of targets[i] in G - x - cutset.
  std::vector<VertexSet> components;
};

std::optional<std::string> check_wm_certificate(const Graph& g, const WMCertificate& cert);

/// Certificate for (x, targets) where targets are |targets| >= 4 neighbors of
/// x and no cycle of G - x passes through all of them. The cutset has
/// |targets| - 1 vertices and is the lexicographically first that works.
/// Throws std::invalid_argument when such a cycle exists. When none is found
/// although connectivity >= |targets| guarantees one, raises InternalError;
/// otherwise returns nothing.
std::optional<WMCertificate> wm_certificate(const Graph& g, Vertex x, const VertexSet& targets);

namespace detail {
/// Exhaustive search for a cycle inside `allowed` through `required`, using
/// `forced` as one of its edges when given. Order <= 64.
std::optional<Cycle> cycle_through(const Graph& g, std::uint64_t allowed, std::uint64_t required, const Edge* forced);
}  // namespace detail

}  // namespace wheelfree

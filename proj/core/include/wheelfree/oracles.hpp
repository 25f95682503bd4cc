#pragma once

// Brute-force ground truth. Nothing here shares search code with the fast
// paths it is used to check.

#include <cstdint>
#include <functional>
#include <optional>

#include "wheelfree/graph.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree::oracles {

inline constexpr int kOracleMaxOrder = 12;

/// Exact chromatic number by backtracking over color classes.
int brute_chromatic_number(const Graph& g);

/// Calls `visit` once per cycle of g (each cycle listed from its smallest
/// vertex, in the direction of the smaller neighbor). Stops early when visit
/// returns false.
void enumerate_cycles(const Graph& g, const std::function<bool(const Cycle&, std::uint64_t members)>& visit);

/// A k-wheel found by scanning every cycle and every vertex off it.
std::optional<Wheel> brute_has_k_wheel(const Graph& g, int k);

/// A cycle containing all of `required` (and edge `e` when given), by full
/// cycle enumeration.
std::optional<Cycle> brute_cycle_through(const Graph& g, const VertexSet& required, const Edge* e = nullptr);

/// Smallest separating set size by trying every vertex subset; K_n gives n-1.
int brute_vertex_connectivity(const Graph& g);

/// Isomorphism by trying every permutation. Order <= 10.
bool brute_isomorphic(const Graph& a, const Graph& b);

}  // namespace wheelfree::oracles

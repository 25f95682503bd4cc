#pragma once

#include <cstdint>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Largest order accepted by the canonical labeling (the code is one word).
inline constexpr int kCanonicalMaxOrder = 11;

/// Isomorphism-invariant code: the largest upper-triangle adjacency word over
/// all labelings reachable from an equitable degree refinement. Two graphs of
/// the same order are isomorphic iff their codes match. Order <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The graph relabeled by the labeling that realizes canonical_code.
Graph canonical_form(const Graph& g);

/// Exact for order <= 11; larger graphs raise BudgetExceeded unless a cheap
/// invariant (order, size, degree sequence) already tells them apart.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Sorted degree sequence.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace wheelfree

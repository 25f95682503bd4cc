#pragma once

#include <optional>
#include <string_view>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// K_k.
Graph complete(int k);
/// K_{a,b}: one side 0..a-1, the other a..a+b-1.
Graph complete_bipartite(int a, int b);
inline Graph complete_bipartite(int k) { return complete_bipartite(k, k); }
/// C_n on 0-1-...-(n-1)-0, n >= 3.
Graph cycle_graph(int n);
/// P_n on 0-1-...-(n-1).
Graph path_graph(int n);
/// K_{1,leaves} with center 0.
Graph star(int leaves);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
Graph petersen();
/// 12 vertices, 5-regular, 5-connected.
Graph icosahedron();
/// K_{2,2,2}.
Graph octahedron();

/// Two disjoint K_{k-2} (H1 on 0..k-3, H2 on k-2..2k-5), a vertex x = 2k-4
/// complete to both, and adjacent a = 2k-3, b = 2k-2 with a complete to H1 and
/// b complete to H2. k-wheel-free with chromatic number k. Requires k >= 4.
Graph tight_example(int k);

/// Named constructions: "complete" (K_k), "kkk" (K_{k,k}), "tight", "cycle",
/// "path", "star", "petersen", "icosahedron", "octahedron". Parameterless
/// names ignore k.
std::optional<Graph> named_graph(std::string_view name, int k);

}  // namespace wheelfree

#include "wheelfree/generators.hpp"

#include <stdexcept>
#include <string>

namespace wheelfree {

Graph complete(int k) {
  if (k < 0) throw std::invalid_argument("complete: k must be non-negative");
  GraphBuilder b(k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: sides must be non-negative");
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
  }
  return std::move(gb).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be positive");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star: leaves must be non-negative");
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

Graph icosahedron() {
  GraphBuilder b(12);
  for (Vertex i = 0; i < 5; ++i) {
    Vertex upper = 1 + i;
    Vertex upper_next = 1 + (i + 1) % 5;
    Vertex lower = 6 + i;
    Vertex lower_next = 6 + (i + 1) % 5;
    b.add_edge(0, upper);
    b.add_edge(upper, upper_next);
    b.add_edge(lower, lower_next);
    b.add_edge(11, lower);
    b.add_edge(upper, lower);
    b.add_edge(upper_next, lower);
  }
  return std::move(b).build();
}

Graph octahedron() {
  GraphBuilder b(6);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (v != u + 3) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph tight_example(int k) {
  if (k < 4) throw std::invalid_argument("tight_example: k must be at least 4, got " + std::to_string(k));
  const int h = k - 2;
  const Vertex x = 2 * h;
  const Vertex a = x + 1;
  const Vertex b = x + 2;
  GraphBuilder g(2 * h + 3);
  for (int side = 0; side < 2; ++side) {
    const Vertex base = side * h;
    for (Vertex u = base; u < base + h; ++u) {
      for (Vertex v = u + 1; v < base + h; ++v) g.add_edge(u, v);
      g.add_edge(x, u);
      g.add_edge(side == 0 ? a : b, u);
    }
  }
  g.add_edge(a, b);
  return std::move(g).build();
}

std::optional<Graph> named_graph(std::string_view name, int k) {
  if (name == "complete") return complete(k);
  if (name == "kkk" || name == "complete-bipartite") return complete_bipartite(k);
  if (name == "tight") return tight_example(k);
  if (name == "cycle") return cycle_graph(k);
  if (name == "path") return path_graph(k);
  if (name == "star") return star(k);
  if (name == "petersen") return petersen();
  if (name == "icosahedron") return icosahedron();
  if (name == "octahedron") return octahedron();
  return std::nullopt;
}

}  // namespace wheelfree

#include "wheelfree/graph.hpp"

#include <algorithm>
#include <sstream>

namespace wheelfree {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = adj_[static_cast<std::size_t>(u)].next(u); v != VertexSet::npos; v = adj_[static_cast<std::size_t>(u)].next(v)) {
      out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check(u);
  g_.check(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  auto& nu = g_.adj_[static_cast<std::size_t>(u)];
  if (nu.contains(v)) return false;
  nu.insert(v);
  g_.adj_[static_cast<std::size_t>(v)].insert(u);
  ++g_.m_;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  g_.check(u);
  g_.check(v);
  auto& nu = g_.adj_[static_cast<std::size_t>(u)];
  if (!nu.contains(v)) return false;
  nu.erase(v);
  g_.adj_[static_cast<std::size_t>(v)].erase(u);
  --g_.m_;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (Vertex v : keep) {
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
  }
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    out.to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  GraphBuilder b(static_cast<int>(out.to_original.size()));
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    Vertex old = out.to_original[i];
    for (Vertex w : g.neighbors(old)) {
      Vertex nw = out.to_local[static_cast<std::size_t>(w)];
      if (nw > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), nw);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  VertexSet keep = g.vertices();
  for (Vertex v : drop) {
    if (v >= g.order()) throw std::out_of_range("remove_vertices: vertex " + std::to_string(v) + " not in graph");
    keep.erase(v);
  }
  return induced_subgraph(g, keep);
}

VertexSet neighborhood(const Graph& g, const VertexSet& f) {
  VertexSet out = g.empty_set();
  for (Vertex v : f) out |= g.neighbors(v);
  return out - f;
}

VertexSet frontier_complement(const Graph& g, const VertexSet& f) {
  return g.vertices() - f - neighborhood(g, f);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  for (Vertex root = unseen.first(); root != VertexSet::npos; root = unseen.first()) {
    VertexSet comp = g.empty_set();
    stack.assign(1, root);
    unseen.erase(root);
    comp.insert(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (unseen.contains(w)) {
          unseen.erase(w);
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    os << e.u << '-' << e.v;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace wheelfree

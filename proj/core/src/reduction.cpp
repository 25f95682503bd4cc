#include "wheelfree/reduction.hpp"

#include <algorithm>

namespace wheelfree {

namespace {

void check_mode(int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("reduction mode k must be 3 or 4, got " + std::to_string(k));
}

int degree_within(const Graph& g, Vertex v, const VertexSet& alive) { return static_cast<int>((g.neighbors(v) & alive).size()); }

std::optional<std::pair<Vertex, Vertex>> twins_within(const Graph& g, const VertexSet& alive) {
  for (Vertex u : alive) {
    const VertexSet nu = g.neighbors(u) & alive;
    for (Vertex v = alive.next(u); v != VertexSet::npos; v = alive.next(v)) {
      if (nu.contains(v)) continue;
      if ((g.neighbors(v) & alive) == nu) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

Wheel to_ambient(const Wheel& w, const std::vector<Vertex>& to_original) {
  auto map = [&](Vertex v) { return to_original[static_cast<std::size_t>(v)]; };
  Wheel out{map(w.center), {}, {}};
  for (Vertex r : w.rim) out.rim.push_back(map(r));
  out.rim = normalize_cycle(std::move(out.rim));
  for (const Edge& s : w.spokes) out.spokes.push_back(Edge{map(s.u), map(s.v)});
  std::sort(out.spokes.begin(), out.spokes.end());
  return out;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> find_twins(const Graph& g) { return twins_within(g, g.vertices()); }

ReductionWitness reduction_witness(const Graph& g, const VertexSet& alive, int k) {
  check_mode(k);
  if (alive.empty()) throw std::invalid_argument("reduction_witness: empty graph");
  const int bound = k - 1;
  for (Vertex v : alive) {
    int d = degree_within(g, v, alive);
    if (d <= bound) return LowDegree{v, d, bound};
  }
  if (auto t = twins_within(g, alive)) return TwinPair{t->first, t->second};
  auto sub = induced_subgraph(g, alive);
  auto wheel = find_k_wheel(sub.graph, k);
  if (!wheel) {
    throw TheoremViolation(sub.graph, "no twins, minimum degree above " + std::to_string(bound) + ", and no " + std::to_string(k) + "-wheel");
  }
  return Stuck{to_ambient(*wheel, sub.to_original)};
}

ReductionWitness reduction_witness(const Graph& g, int k) { return reduction_witness(g, g.vertices(), k); }

int Coloring::colors_used() const {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(palette, 0)), false);
  int used = 0;
  for (int c : colors) {
    if (c >= 0 && c < palette && !seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      ++used;
    }
  }
  return used;
}

std::optional<std::string> check_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != static_cast<std::size_t>(g.order())) return "coloring covers " + std::to_string(c.colors.size()) + " vertices";
  for (Vertex v = 0; v < g.order(); ++v) {
    int col = c.colors[static_cast<std::size_t>(v)];
    if (col < 0 || col >= c.palette) return "vertex " + std::to_string(v) + " has color " + std::to_string(col) + " outside the palette";
  }
  for (const Edge& e : g.edges()) {
    if (c.colors[static_cast<std::size_t>(e.u)] == c.colors[static_cast<std::size_t>(e.v)]) {
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is monochromatic";
    }
  }
  return std::nullopt;
}

ColoringResult reduce_and_color(const Graph& g, int k) {
  check_mode(k);
  ColoringResult result;
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    ReductionWitness w = reduction_witness(g, alive, k);
    if (auto* stuck = std::get_if<Stuck>(&w)) {
      result.status = ColoringResult::Status::ContainsWheel;
      result.wheel = stuck->wheel;
      return result;
    }
    Vertex removed = std::holds_alternative<LowDegree>(w) ? std::get<LowDegree>(w).vertex : std::get<TwinPair>(w).removed;
    alive.erase(removed);
    result.trace.push_back({std::move(w), removed});
  }

  Coloring coloring{std::vector<int>(static_cast<std::size_t>(g.order()), -1), k};
  for (auto it = result.trace.rbegin(); it != result.trace.rend(); ++it) {
    const Vertex v = it->removed;
    if (const auto* twin = std::get_if<TwinPair>(&it->witness)) {
      coloring.colors[static_cast<std::size_t>(v)] = coloring.colors[static_cast<std::size_t>(twin->kept)];
      continue;
    }
    std::vector<bool> taken(static_cast<std::size_t>(k) + 1, false);
    for (Vertex w : g.neighbors(v)) {
      int c = coloring.colors[static_cast<std::size_t>(w)];
      if (c >= 0 && c <= k) taken[static_cast<std::size_t>(c)] = true;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    if (c >= k) throw InternalError("reduce_and_color: low-degree vertex " + std::to_string(v) + " saw all colors");
    coloring.colors[static_cast<std::size_t>(v)] = c;
  }
  result.coloring = std::move(coloring);
  return result;
}

std::optional<std::string> check_trace(const Graph& g, const ReductionTrace& trace, int k) {
  check_mode(k);
  VertexSet alive = g.vertices();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& step = trace[i];
    const std::string tag = "step " + std::to_string(i) + ": ";
    if (!alive.contains(step.removed)) return tag + "removes a vertex that is already gone";
    if (const auto* low = std::get_if<LowDegree>(&step.witness)) {
      if (low->vertex != step.removed) return tag + "low-degree vertex differs from removed vertex";
      if (degree_within(g, low->vertex, alive) > k - 1) return tag + "vertex degree exceeds the bound";
    } else if (const auto* twin = std::get_if<TwinPair>(&step.witness)) {
      if (twin->removed != step.removed) return tag + "twin removal mismatch";
      if (!alive.contains(twin->kept) || twin->kept == twin->removed) return tag + "twin partner missing";
      if (g.adjacent(twin->removed, twin->kept)) return tag + "twins are adjacent";
      if ((g.neighbors(twin->removed) & alive) != (g.neighbors(twin->kept) & alive)) return tag + "twin neighborhoods differ";
    } else {
      return tag + "stuck witness inside a trace";
    }
    alive.erase(step.removed);
  }
  return std::nullopt;
}

}  // namespace wheelfree

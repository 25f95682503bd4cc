#include "wheelfree/connectivity.hpp"

#include <algorithm>
#include <bit>

#include "flow_network.hpp"

namespace wheelfree {

namespace {

using detail::FlowNetwork;
using Mask = std::uint64_t;

Mask neighbor_union(const Graph& g, Mask set) {
  Mask out = 0;
  for (Mask m = set; m != 0; m &= m - 1) out |= g.neighbor_mask(std::countr_zero(m));
  return out & ~set;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void prepare_fan_network(FlowNetwork& net, Vertex x, const VertexSet& targets) {
  net.reset();
  net.set_vertex_capacity(x, 0);
  for (Vertex y : targets) {
    net.set_vertex_capacity(y, 0);
    net.connect_to_sink(y);
  }
}

std::vector<std::vector<Vertex>> decompose_fan(const FlowNetwork& net, Vertex x) {
  std::vector<std::vector<Vertex>> paths;
  for (int first : net.flow_successors(net.out(x))) {
    std::vector<Vertex> path{x};
    int node = first;
    while (true) {
      Vertex v = node / 2;
      path.push_back(v);
      if (net.flow(net.in(v), net.sink()) > 0) break;
      auto next = net.flow_successors(net.out(v));
      if (next.size() != 1) throw InternalError("fan decomposition: flow does not continue at vertex " + std::to_string(v));
      node = next.front();
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

void check_fan_arguments(const Graph& g, Vertex x, const VertexSet& targets, int k) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("fan origin " + std::to_string(x) + " not in graph");
  if (targets.universe() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("fan targets drawn from a different universe");
  if (targets.contains(x)) throw std::invalid_argument("fan origin lies in the target set");
  if (k < 0) throw std::invalid_argument("fan size must be non-negative");
  if (targets.size() < static_cast<std::size_t>(k)) throw std::invalid_argument("target set smaller than requested fan size");
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  int best = std::min(g.min_degree(), n - 2);
  FlowNetwork net(g);
  // Some vertex among the first best+1 avoids a minimum cut.
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = 0; t < n && best > 0; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      net.reset();
      net.set_vertex_capacity(s, FlowNetwork::kUnbounded);
      net.set_vertex_capacity(t, FlowNetwork::kUnbounded);
      best = std::min(best, net.augment(net.out(s), net.in(t), best));
    }
  }
  return best;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local_connectivity needs distinct non-adjacent vertices");
  FlowNetwork net(g);
  net.set_vertex_capacity(s, FlowNetwork::kUnbounded);
  net.set_vertex_capacity(t, FlowNetwork::kUnbounded);
  return net.augment(net.out(s), net.in(t), g.order());
}

VertexSet Fan::ends() const {
  VertexSet out(targets.universe());
  for (const auto& p : paths) {
    if (!p.empty()) out.insert(p.back());
  }
  return out;
}

std::optional<std::string> check_fan(const Graph& g, const Fan& fan) {
  const int n = g.order();
  if (fan.origin < 0 || fan.origin >= n) return "origin out of range";
  if (fan.targets.universe() != static_cast<std::size_t>(n)) return "targets drawn from a different universe";
  if (fan.targets.contains(fan.origin)) return "origin lies in targets";
  VertexSet used(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < fan.paths.size(); ++i) {
    const auto& p = fan.paths[i];
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (p.size() < 2) return tag + "fewer than two vertices";
    if (p.front() != fan.origin) return tag + "does not start at the origin";
    for (std::size_t j = 1; j < p.size(); ++j) {
      Vertex v = p[j];
      if (v < 0 || v >= n) return tag + "vertex out of range";
      if (!g.adjacent(p[j - 1], v)) return tag + "consecutive vertices not adjacent";
      if (v == fan.origin) return tag + "revisits the origin";
      if (used.contains(v)) return tag + "vertex " + std::to_string(v) + " repeated or shared";
      used.insert(v);
      bool last = j + 1 == p.size();
      if (last && !fan.targets.contains(v)) return tag + "does not end in targets";
      if (!last && fan.targets.contains(v)) return tag + "internal vertex lies in targets";
    }
  }
  return std::nullopt;
}

std::optional<Fan> find_k_fan(const Graph& g, Vertex x, const VertexSet& targets, int k) {
  check_fan_arguments(g, x, targets, k);
  Fan fan{x, targets, {}};
  if (k == 0) return fan;
  FlowNetwork net(g);
  prepare_fan_network(net, x, targets);
  if (net.augment(net.out(x), net.sink(), k) < k) return std::nullopt;
  fan.paths = decompose_fan(net, x);
  return fan;
}

Fan extend_fan(const Graph& g, const Fan& fan, int k) {
  check_fan_arguments(g, fan.origin, fan.targets, k);
  if (auto bad = check_fan(g, fan)) throw std::invalid_argument("extend_fan: invalid fan: " + *bad);
  const int have = static_cast<int>(fan.size());
  if (have > k) throw std::invalid_argument("extend_fan: fan already larger than k");
  if (k < 2) throw std::invalid_argument("extend_fan: k must be at least 2");
  if (vertex_connectivity(g) < k) throw std::invalid_argument("extend_fan: graph is not k-connected");

  FlowNetwork net(g);
  prepare_fan_network(net, fan.origin, fan.targets);
  for (const auto& p : fan.paths) {
    std::vector<int> nodes{net.out(p.front())};
    for (std::size_t j = 1; j < p.size(); ++j) {
      nodes.push_back(net.in(p[j]));
      if (j + 1 < p.size()) nodes.push_back(net.out(p[j]));
    }
    nodes.push_back(net.sink());
    if (!net.push_path(nodes)) throw InternalError("extend_fan: could not load a path of a validated fan");
  }
  int added = net.augment(net.out(fan.origin), net.sink(), k - have);
  if (added < k - have) {
    throw InternalError("extend_fan: augmentation stalled at " + std::to_string(have + added) + " paths in a " + std::to_string(k) +
                        "-connected graph: " + describe(g));
  }
  Fan grown{fan.origin, fan.targets, decompose_fan(net, fan.origin)};
  if (!fan.ends().is_subset_of(grown.ends())) throw InternalError("extend_fan: lost an endpoint of the input fan");
  return grown;
}

bool is_fragment(const Graph& g, const VertexSet& f, int connectivity) {
  if (f.empty()) return false;
  return neighborhood(g, f).size() == static_cast<std::size_t>(connectivity) && !frontier_complement(g, f).empty();
}

bool is_fragment(const Graph& g, const VertexSet& f) { return is_fragment(g, f, vertex_connectivity(g)); }

bool is_end(const Graph& g, const VertexSet& f) {
  if (g.order() > 64) throw BudgetExceeded("is_end: order above 64");
  const int kappa = vertex_connectivity(g);
  if (!is_fragment(g, f, kappa)) return false;
  const Mask whole = f.mask();
  const Mask full = full_mask(g.order());
  for (Mask sub = (whole - 1) & whole; sub != 0; sub = (sub - 1) & whole) {
    Mask nb = neighbor_union(g, sub);
    if (std::popcount(nb) == kappa && (full & ~sub & ~nb) != 0) return false;
  }
  return true;
}

FragmentList fragments(const Graph& g, int budget) {
  const int n = g.order();
  if (n > budget || n > 64) return {FragmentStatus::BudgetExceeded, {}};
  if (n <= 1 || g.is_complete()) return {FragmentStatus::NoFragments, {}};
  const int kappa = vertex_connectivity(g);
  const Mask full = full_mask(n);
  FragmentList out;
  for (Mask set = 1; set < full; ++set) {
    Mask nb = neighbor_union(g, set);
    if (std::popcount(nb) == kappa && (full & ~set & ~nb) != 0) out.sets.push_back(VertexSet::from_mask(static_cast<std::size_t>(n), set));
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

FragmentList ends(const Graph& g, int budget) {
  FragmentList all = fragments(g, budget);
  if (all.status != FragmentStatus::Ok) return all;
  std::vector<Mask> masks;
  masks.reserve(all.sets.size());
  for (const auto& s : all.sets) masks.push_back(s.mask());
  std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<Mask> minimal;
  for (Mask m : masks) {
    bool contains_end = std::any_of(minimal.begin(), minimal.end(), [m](Mask e) { return (e & m) == e && e != m; });
    if (!contains_end) minimal.push_back(m);
  }
  FragmentList out;
  for (Mask m : minimal) out.sets.push_back(VertexSet::from_mask(static_cast<std::size_t>(g.order()), m));
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

EndBlock end_block(const Graph& g, const VertexSet& end, bool check_connectivity) {
  if (!is_end(g, end)) throw std::invalid_argument("end_block: " + end.to_string() + " is not an end");
  EndBlock eb;
  eb.fragment = end;
  eb.attachment = neighborhood(g, end);
  auto sub = induced_subgraph(g, end | eb.attachment);
  GraphBuilder b(sub.graph);
  const auto attach = eb.attachment.to_vector();
  for (std::size_t i = 0; i < attach.size(); ++i) {
    for (std::size_t j = i + 1; j < attach.size(); ++j) {
      Vertex li = sub.to_local[static_cast<std::size_t>(attach[i])];
      Vertex lj = sub.to_local[static_cast<std::size_t>(attach[j])];
      if (b.add_edge(li, lj)) eb.marker_edges.push_back(Edge{attach[i], attach[j]});
    }
  }
  eb.block = std::move(b).build();
  eb.to_original = std::move(sub.to_original);
  if (check_connectivity && end.size() >= 2) {
    int ambient = vertex_connectivity(g);
    int local = vertex_connectivity(eb.block);
    if (local < ambient + 1) {
      throw InternalError("end block of non-trivial end " + end.to_string() + " has connectivity " + std::to_string(local) + " < " +
                          std::to_string(ambient + 1) + " in " + describe(g));
    }
  }
  return eb;
}

}  // namespace wheelfree

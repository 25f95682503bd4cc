#include "wheelfree/wheels.hpp"

#include <algorithm>
#include <bit>

#include "wheelfree/connectivity.hpp"

namespace wheelfree {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }
Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_small(const Graph& g, const char* what) {
  if (g.order() > 64) throw BudgetExceeded(std::string(what) + ": exhaustive search needs order <= 64");
}

Mask to_mask(const Graph& g, const VertexSet& s, const char* what) {
  for (Vertex v : s) {
    if (v >= g.order()) throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) + " not in graph");
  }
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, Mask allowed) : g_(g), allowed_(allowed) {}

  std::optional<Cycle> run(Mask required, const Edge* forced) {
    path_.clear();
    if (forced != nullptr) {
      Vertex a = forced->u;
      Vertex b = forced->v;
      if (!(allowed_ & bit(a)) || !(allowed_ & bit(b))) return std::nullopt;
      start_ = a;
      path_ = {a, b};
      if (dfs(b, bit(a) | bit(b), required & ~(bit(a) | bit(b)))) return normalize_cycle(path_);
      return std::nullopt;
    }
    if (required == 0) return std::nullopt;
    start_ = std::countr_zero(required);
    if (!(allowed_ & bit(start_))) return std::nullopt;
    path_ = {start_};
    if (dfs(start_, bit(start_), required & ~bit(start_))) return normalize_cycle(path_);
    return std::nullopt;
  }

 private:
  // Vertices reachable from `from` without touching `visited`.
  Mask reachable(Vertex from, Mask visited) const {
    const Mask open = allowed_ & ~visited;
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= g_.neighbor_mask(std::countr_zero(m));
      next &= open & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool dfs(Vertex cur, Mask visited, Mask remaining) {
    const Mask start_adj = g_.neighbor_mask(start_);
    if (remaining == 0 && path_.size() >= 3 && (start_adj & bit(cur))) return true;
    const Mask reach = reachable(cur, visited);
    if ((remaining & ~reach) != 0) return false;
    // Some vertex still reachable must close the cycle; the start's successor cannot.
    Mask closers = reach & start_adj;
    if (path_.size() == 2) closers &= ~bit(path_[1]);
    if (closers == 0) return false;
    Mask options = g_.neighbor_mask(cur) & allowed_ & ~visited;
    for (; options != 0; options &= options - 1) {
      Vertex nxt = std::countr_zero(options);
      path_.push_back(nxt);
      if (dfs(nxt, visited | bit(nxt), remaining & ~bit(nxt))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Mask allowed_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

std::vector<Vertex> members(Mask m) { return mask_members(m); }

// Calls `fn(mask)` for each k-subset of `items` in lexicographic order; stops when fn returns true.
template <typename Fn>
bool for_each_subset(const std::vector<Vertex>& items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k > n || k < 0) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= bit(items[static_cast<std::size_t>(i)]);
    if (fn(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Mask component_of(const Graph& g, Vertex v, Mask open) {
  Mask seen = bit(v);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
    next &= open & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

Cycle normalize_cycle(Cycle c) {
  if (c.size() < 2) return c;
  auto smallest = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), smallest, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

std::optional<std::string> check_cycle(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return "cycle has fewer than three vertices";
  VertexSet seen = g.empty_set();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex v = c[i];
    if (v < 0 || v >= g.order()) return "cycle vertex out of range";
    if (seen.contains(v)) return "cycle repeats vertex " + std::to_string(v);
    seen.insert(v);
    Vertex w = c[(i + 1) % c.size()];
    if (w < 0 || w >= g.order() || !g.adjacent(v, w)) return "cycle step " + std::to_string(v) + "-" + std::to_string(w) + " is not an edge";
  }
  return std::nullopt;
}

std::optional<std::string> check_wheel(const Graph& g, const Wheel& w, int k) {
  if (auto bad = check_cycle(g, w.rim)) return "rim: " + *bad;
  if (w.center < 0 || w.center >= g.order()) return "center out of range";
  if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return "center lies on the rim";
  VertexSet ends = g.empty_set();
  for (const Edge& s : w.spokes) {
    if (s.u != w.center) return "spoke does not start at the center";
    if (std::find(w.rim.begin(), w.rim.end(), s.v) == w.rim.end()) return "spoke end " + std::to_string(s.v) + " not on the rim";
    if (!g.adjacent(s.u, s.v)) return "spoke " + std::to_string(s.u) + "-" + std::to_string(s.v) + " is not an edge";
    if (ends.contains(s.v)) return "duplicate spoke";
    ends.insert(s.v);
  }
  if (static_cast<int>(w.spokes.size()) < k) return "only " + std::to_string(w.spokes.size()) + " spokes, need " + std::to_string(k);
  return std::nullopt;
}

namespace detail {
std::optional<Cycle> cycle_through(const Graph& g, std::uint64_t allowed, std::uint64_t required, const Edge* forced) {
  if ((required & ~allowed) != 0) return std::nullopt;
  return CycleSearch(g, allowed).run(required, forced);
}
}  // namespace detail

std::optional<Cycle> find_cycle_through(const Graph& g, const VertexSet& required) {
  require_small(g, "find_cycle_through");
  if (required.empty()) throw std::invalid_argument("find_cycle_through: required set is empty");
  const Mask req = to_mask(g, required, "find_cycle_through");
  auto found = detail::cycle_through(g, full_mask(g.order()), req, nullptr);
  const int k = static_cast<int>(required.size());
  if (!found && k >= 2 && g.min_degree() >= k && vertex_connectivity(g) >= k) {
    throw InternalError("no cycle through " + required.to_string() + " in a " + std::to_string(k) + "-connected graph: " + describe(g));
  }
  return found;
}

std::optional<Cycle> find_cycle_through_edge(const Graph& g, Edge e, const VertexSet& required) {
  require_small(g, "find_cycle_through_edge");
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("find_cycle_through_edge: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
  }
  const Mask req = to_mask(g, required, "find_cycle_through_edge");
  auto found = detail::cycle_through(g, full_mask(g.order()), req, &e);
  const int k = static_cast<int>(required.size()) + 1;
  if (!found && k >= 2 && g.min_degree() >= k && vertex_connectivity(g) >= k) {
    throw InternalError("no cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " and " + required.to_string() + " in a " +
                        std::to_string(k) + "-connected graph: " + describe(g));
  }
  return found;
}

std::optional<Wheel> is_wheel_center(const Graph& g, Vertex v, int k) {
  require_small(g, "is_wheel_center");
  if (k < 3) throw std::invalid_argument("wheels need k >= 3");
  if (v < 0 || v >= g.order()) throw std::out_of_range("is_wheel_center: vertex not in graph");
  if (g.degree(v) < k) return std::nullopt;
  const Mask allowed = full_mask(g.order()) & ~bit(v);
  const Mask nbrs = g.neighbor_mask(v);
  std::optional<Cycle> rim;
  CycleSearch search(g, allowed);
  for_each_subset(members(nbrs), k, [&](Mask subset) {
    rim = search.run(subset, nullptr);
    return rim.has_value();
  });
  if (!rim) return std::nullopt;
  Wheel w{v, *rim, {}};
  std::vector<Vertex> on_rim;
  for (Vertex r : w.rim) {
    if (nbrs & bit(r)) on_rim.push_back(r);
  }
  std::sort(on_rim.begin(), on_rim.end());
  for (Vertex r : on_rim) w.spokes.push_back(Edge{v, r});
  return w;
}

VertexSet wheel_centers(const Graph& g, int k) {
  VertexSet out = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_wheel_center(g, v, k)) out.insert(v);
  }
  return out;
}

std::optional<Wheel> find_k_wheel(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (auto w = is_wheel_center(g, v, k)) return w;
  }
  return std::nullopt;
}

bool is_k_wheel_free(const Graph& g, int k) { return !find_k_wheel(g, k).has_value(); }

bool is_almost_4_wheel_free(const Graph& g) {
  VertexSet centers = wheel_centers(g, 4);
  if (centers.size() > 3) return false;
  for (Vertex a : centers) {
    for (Vertex b : centers) {
      if (a < b && !g.adjacent(a, b)) return false;
    }
  }
  return true;
}

std::optional<std::string> check_wm_certificate(const Graph& g, const WMCertificate& cert) {
  require_small(g, "check_wm_certificate");
  const int n = g.order();
  if (cert.x < 0 || cert.x >= n) return "x out of range";
  if (cert.components.size() != cert.targets.size()) return "one component per target required";
  if (cert.cutset.size() + 1 != cert.targets.size()) return "cutset must have one vertex fewer than the targets";
  Mask removed = bit(cert.x);
  for (Vertex s : cert.cutset) {
    if (s < 0 || s >= n) return "cutset vertex out of range";
    if (std::find(cert.targets.begin(), cert.targets.end(), s) != cert.targets.end()) return "cutset meets the targets";
    if (s == cert.x) return "cutset contains x";
    removed |= bit(s);
  }
  if (std::popcount(removed) != static_cast<int>(cert.cutset.size()) + 1) return "cutset has repeated vertices";
  const Mask open = full_mask(n) & ~removed;
  Mask seen = 0;
  for (std::size_t i = 0; i < cert.targets.size(); ++i) {
    Vertex t = cert.targets[i];
    if (t < 0 || t >= n || (removed & bit(t))) return "target removed or out of range";
    if (!g.adjacent(cert.x, t)) return "target " + std::to_string(t) + " is not a neighbor of x";
    Mask comp = component_of(g, t, open);
    if (comp & seen) return "targets share a component";
    seen |= comp;
    if (cert.components[i].universe() != static_cast<std::size_t>(n) || cert.components[i].mask() != comp) {
      return "component of target " + std::to_string(t) + " is misreported";
    }
  }
  return std::nullopt;
}

std::optional<WMCertificate> wm_certificate(const Graph& g, Vertex x, const VertexSet& targets) {
  require_small(g, "wm_certificate");
  const int n = g.order();
  if (x < 0 || x >= n) throw std::out_of_range("wm_certificate: x not in graph");
  const Mask tmask = to_mask(g, targets, "wm_certificate");
  const int k = std::popcount(tmask);
  if (k < 4) throw std::invalid_argument("wm_certificate: need at least four targets");
  if (tmask & bit(x)) throw std::invalid_argument("wm_certificate: x is among the targets");
  if ((tmask & ~g.neighbor_mask(x)) != 0) throw std::invalid_argument("wm_certificate: targets must be neighbors of x");
  if (detail::cycle_through(g, full_mask(n) & ~bit(x), tmask, nullptr)) {
    throw std::invalid_argument("wm_certificate: a cycle of G - x passes through all targets; no certificate applies");
  }

  const auto target_list = members(tmask);
  const auto candidates = members(full_mask(n) & ~tmask & ~bit(x));
  std::optional<WMCertificate> found;
  for_each_subset(candidates, k - 1, [&](Mask cut) {
    const Mask open = full_mask(n) & ~cut & ~bit(x);
    Mask seen = 0;
    std::vector<Mask> comps;
    for (Vertex t : target_list) {
      if (seen & bit(t)) return false;
      Mask comp = component_of(g, t, open);
      seen |= comp;
      comps.push_back(comp);
    }
    WMCertificate cert{x, target_list, members(cut), {}};
    for (Mask c : comps) cert.components.push_back(VertexSet::from_mask(static_cast<std::size_t>(n), c));
    found = std::move(cert);
    return true;
  });
  if (!found && vertex_connectivity(g) >= k) {
    throw InternalError("wm_certificate: no separating set for x=" + std::to_string(x) + " targets " + targets.to_string() + " in " + describe(g));
  }
  return found;
}

}  // namespace wheelfree

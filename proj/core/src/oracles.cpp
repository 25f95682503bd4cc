#include "wheelfree/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace wheelfree::oracles {

namespace {

using Mask = std::uint64_t;

void require_budget(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) throw BudgetExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " above " + std::to_string(limit));
}

bool colorable(const Graph& g, int k, std::vector<int>& color, Vertex v, int used) {
  if (v == g.order()) return true;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v)) {
      if (w < v && color[static_cast<std::size_t>(w)] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (colorable(g, k, color, v + 1, std::max(used, c + 1))) return true;
  }
  color[static_cast<std::size_t>(v)] = -1;
  return false;
}

// Plain flood fill over a subset, written independently of graph.cpp.
bool subset_connected(const std::vector<Mask>& adj, Mask subset) {
  if (subset == 0) return true;
  Mask seen = subset & (~subset + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if ((seen >> v & 1U) && (adj[static_cast<std::size_t>(v)] & subset & ~seen)) {
        seen |= adj[static_cast<std::size_t>(v)] & subset;
        grew = true;
      }
    }
  }
  return seen == subset;
}

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, const std::function<bool(const Cycle&, Mask)>& visit) : g_(g), visit_(visit) {}

  void run() {
    for (Vertex s = 0; s < g_.order() && !stop_; ++s) {
      start_ = s;
      path_ = {s};
      extend(s, Mask{1} << s);
    }
  }

 private:
  void extend(Vertex cur, Mask members) {
    if (path_.size() >= 3 && g_.adjacent(cur, start_) && path_[1] < cur) {
      if (!visit_(path_, members)) {
        stop_ = true;
        return;
      }
    }
    for (Vertex w : g_.neighbors(cur)) {
      if (w <= start_ || (members >> w & 1U)) continue;
      path_.push_back(w);
      extend(w, members | Mask{1} << w);
      path_.pop_back();
      if (stop_) return;
    }
  }

  const Graph& g_;
  const std::function<bool(const Cycle&, Mask)>& visit_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  bool stop_ = false;
};

}  // namespace

int brute_chromatic_number(const Graph& g) {
  require_budget(g, kOracleMaxOrder, "brute_chromatic_number");
  if (g.order() == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int k = 1;; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (colorable(g, k, color, 0, 0)) return k;
  }
}

void enumerate_cycles(const Graph& g, const std::function<bool(const Cycle&, std::uint64_t)>& visit) {
  require_budget(g, kOracleMaxOrder, "enumerate_cycles");
  CycleEnumerator(g, visit).run();
}

std::optional<Wheel> brute_has_k_wheel(const Graph& g, int k) {
  std::optional<Wheel> found;
  enumerate_cycles(g, [&](const Cycle& c, Mask members) {
    for (Vertex u = 0; u < g.order(); ++u) {
      if (members >> u & 1U) continue;
      Mask spokes = g.neighbor_mask(u) & members;
      if (std::popcount(spokes) >= k) {
        Wheel w{u, c, {}};
        for (Vertex r : mask_members(spokes)) w.spokes.push_back(Edge{u, r});
        found = std::move(w);
        return false;
      }
    }
    return true;
  });
  return found;
}

std::optional<Cycle> brute_cycle_through(const Graph& g, const VertexSet& required, const Edge* e) {
  Mask need = 0;
  for (Vertex v : required) need |= Mask{1} << v;
  std::optional<Cycle> found;
  enumerate_cycles(g, [&](const Cycle& c, Mask members) {
    if ((need & ~members) != 0) return true;
    if (e != nullptr) {
      bool uses = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        Vertex a = c[i];
        Vertex b = c[(i + 1) % c.size()];
        if ((a == e->u && b == e->v) || (a == e->v && b == e->u)) uses = true;
      }
      if (!uses) return true;
    }
    found = c;
    return false;
  });
  return found;
}

int brute_vertex_connectivity(const Graph& g) {
  require_budget(g, kOracleMaxOrder, "brute_vertex_connectivity");
  const int n = g.order();
  if (n <= 1) return 0;
  std::vector<Mask> adj;
  for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbor_mask(v));
  const Mask full = (Mask{1} << n) - 1;
  if (!subset_connected(adj, full)) return 0;
  for (int size = 1; size <= n - 2; ++size) {
    // Gosper's hack walks the size-element subsets in increasing order.
    for (Mask cut = (Mask{1} << size) - 1; cut <= full;) {
      if (!subset_connected(adj, full & ~cut)) return size;
      Mask low = cut & (~cut + 1);
      Mask ripple = cut + low;
      cut = (((ripple ^ cut) >> 2) / low) | ripple;
    }
  }
  return n - 1;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  require_budget(a, 10, "brute_isomorphic");
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](const Edge& e) { return b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]); });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace wheelfree::oracles

#include "wheelfree/isomorphism.hpp"

#include <algorithm>
#include <bit>

namespace wheelfree {

namespace {

using Mask = std::uint64_t;
using Partition = std::vector<std::vector<Vertex>>;

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const Graph& g) : n_(g.order()) {
    if (n_ > kCanonicalMaxOrder) throw BudgetExceeded("canonical labeling supports order <= " + std::to_string(kCanonicalMaxOrder));
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  }

  void run() {
    Partition p;
    if (n_ > 0) {
      p.emplace_back();
      for (Vertex v = 0; v < n_; ++v) p.back().push_back(v);
    }
    refine(p);
    search(p);
  }

  Mask best_code() const { return best_code_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Splits cells by neighbor counts into every cell until stable; the split
  // order depends only on the counts, so it commutes with relabeling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> cell_mask;
      cell_mask.reserve(p.size());
      for (const auto& cell : p) {
        Mask m = 0;
        for (Vertex v : cell) m |= Mask{1} << v;
        cell_mask.push_back(m);
      }
      Partition next;
      next.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<Mask, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          Mask key = 0;
          for (Mask cm : cell_mask) key = (key << 4) | static_cast<Mask>(std::popcount(adj_[static_cast<std::size_t>(v)] & cm));
          keyed.emplace_back(key, v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = next.size();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      p = std::move(next);
    }
  }

  void search(const Partition& p) {
    auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<Vertex> order;
      order.reserve(static_cast<std::size_t>(n_));
      for (const auto& cell : p) order.push_back(cell.front());
      Mask code = encode(order);
      if (best_order_.empty() || code > best_code_) {
        best_code_ = code;
        best_order_ = std::move(order);
      }
      return;
    }
    const std::size_t ci = static_cast<std::size_t>(target - p.begin());
    for (Vertex v : p[ci]) {
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < ci; ++i) child.push_back(p[i]);
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : p[ci]) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      for (std::size_t i = ci + 1; i < p.size(); ++i) child.push_back(p[i]);
      refine(child);
      search(child);
    }
  }

  // Bit order matches graph6: (0,1), (0,2), (1,2), (0,3), ...
  Mask encode(const std::vector<Vertex>& order) const {
    Mask code = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> order[static_cast<std::size_t>(i)]) & 1U);
    }
    return code;
  }

  int n_;
  std::vector<Mask> adj_;
  Mask best_code_ = 0;
  std::vector<Vertex> best_order_;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  CanonicalLabeler labeler(g);
  labeler.run();
  return labeler.best_code();
}

Graph canonical_form(const Graph& g) {
  CanonicalLabeler labeler(g);
  labeler.run();
  const auto& order = labeler.best_order();
  std::vector<Vertex> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
  return std::move(b).build();
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace wheelfree

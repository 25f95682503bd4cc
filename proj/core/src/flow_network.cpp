#include "flow_network.hpp"

#include <algorithm>

namespace wheelfree::detail {

FlowNetwork::FlowNetwork(const Graph& g) : n_(g.order()), arcs_(static_cast<std::size_t>(2 * g.order() + 1)) {
  internal_arc_.resize(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    internal_arc_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_[static_cast<std::size_t>(in(v))].size());
    add_arc(in(v), out(v), 1);
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : g.neighbors(u)) add_arc(out(u), in(v), kUnbounded);
  }
  parent_node_.resize(arcs_.size());
  parent_arc_.resize(arcs_.size());
  queue_.reserve(arcs_.size());
}

void FlowNetwork::add_arc(int from, int to, int cap) {
  auto& a = arcs_[static_cast<std::size_t>(from)];
  auto& b = arcs_[static_cast<std::size_t>(to)];
  a.push_back({to, static_cast<int>(b.size()), cap, cap});
  b.push_back({from, static_cast<int>(a.size()) - 1, 0, 0});
}

void FlowNetwork::reset() {
  for (int v : touched_sink_) arcs_[static_cast<std::size_t>(in(v))].pop_back();
  touched_sink_.clear();
  arcs_[static_cast<std::size_t>(sink())].clear();
  for (auto& list : arcs_) {
    for (auto& arc : list) arc.cap = arc.base;
  }
  for (Vertex v = 0; v < n_; ++v) set_vertex_capacity(v, 1);
}

void FlowNetwork::set_vertex_capacity(Vertex v, int cap) {
  auto& arc = arcs_[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(internal_arc_[static_cast<std::size_t>(v)])];
  arc.base = cap;
  arc.cap = cap;
}

void FlowNetwork::connect_to_sink(Vertex v) {
  add_arc(in(v), sink(), 1);
  touched_sink_.push_back(v);
}

bool FlowNetwork::push_path(const std::vector<int>& nodes) {
  std::vector<Arc*> used;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto& list = arcs_[static_cast<std::size_t>(nodes[i])];
    auto it = std::find_if(list.begin(), list.end(), [&](const Arc& a) { return a.to == nodes[i + 1] && a.cap > 0 && a.base > 0; });
    if (it == list.end()) return false;
    used.push_back(&*it);
  }
  for (Arc* a : used) {
    a->cap -= 1;
    arcs_[static_cast<std::size_t>(a->to)][static_cast<std::size_t>(a->rev)].cap += 1;
  }
  return true;
}

int FlowNetwork::augment(int source, int target, int limit) {
  int added = 0;
  while (added < limit) {
    std::fill(parent_node_.begin(), parent_node_.end(), -1);
    parent_node_[static_cast<std::size_t>(source)] = source;
    queue_.clear();
    queue_.push_back(source);
    bool reached = false;
    for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
      int u = queue_[head];
      const auto& list = arcs_[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Arc& a = list[i];
        if (a.cap <= 0 || parent_node_[static_cast<std::size_t>(a.to)] != -1) continue;
        parent_node_[static_cast<std::size_t>(a.to)] = u;
        parent_arc_[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
        if (a.to == target) {
          reached = true;
          break;
        }
        queue_.push_back(a.to);
      }
    }
    if (!reached) break;
    for (int v = target; v != source; v = parent_node_[static_cast<std::size_t>(v)]) {
      int u = parent_node_[static_cast<std::size_t>(v)];
      Arc& a = arcs_[static_cast<std::size_t>(u)][static_cast<std::size_t>(parent_arc_[static_cast<std::size_t>(v)])];
      a.cap -= 1;
      arcs_[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)].cap += 1;
    }
    ++added;
  }
  return added;
}

int FlowNetwork::flow(int from, int to) const {
  for (const Arc& a : arcs_[static_cast<std::size_t>(from)]) {
    if (a.to == to && a.base > 0) return a.base - a.cap;
  }
  return 0;
}

std::vector<int> FlowNetwork::flow_successors(int node) const {
  std::vector<int> out;
  for (const Arc& a : arcs_[static_cast<std::size_t>(node)]) {
    if (a.base > 0 && a.cap < a.base) out.push_back(a.to);
  }
  return out;
}

}  // namespace wheelfree::detail

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wheelfree/graph.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree {

/// Two non-adjacent vertices with equal neighborhoods; `removed` < `kept` is
/// dropped first and later takes the color of `kept`.
struct TwinPair {
  Vertex removed = 0;
  Vertex kept = 0;
  auto operator<=>(const TwinPair&) const = default;
};

/// A vertex whose degree in the current graph is at most `bound`.
struct LowDegree {
  Vertex vertex = 0;
  int degree = 0;
  int bound = 0;
  auto operator<=>(const LowDegree&) const = default;
};

/// Neither reduction applies; the carried wheel shows the graph is not
/// k-wheel-free.
struct Stuck {
  Wheel wheel;
};

using ReductionWitness = std::variant<LowDegree, TwinPair, Stuck>;

/// A reduction step in ambient vertex ids.
struct ReductionStep {
  ReductionWitness witness;
  Vertex removed = 0;
};

using ReductionTrace = std::vector<ReductionStep>;

/// No twins and no low-degree vertex in a graph without a k-wheel. Carries
/// the offending graph; this must never be thrown.
class TheoremViolation : public InternalError {
 public:
  TheoremViolation(Graph g, const std::string& what) : InternalError(what + ": " + describe(g)), graph_(std::move(g)) {}
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

/// Lexicographically first twin pair (u < v).
std::optional<std::pair<Vertex, Vertex>> find_twins(const Graph& g);

/// For k = 4: a vertex of degree <= 3, else a twin pair, else Stuck with a
/// 4-wheel. For k = 3 the degree bound is 2. Among low-degree vertices the
/// smallest id wins. Raises TheoremViolation when Stuck finds no wheel.
ReductionWitness reduction_witness(const Graph& g, int k);
/// The same, restricted to G[alive]; witness ids are ambient.
ReductionWitness reduction_witness(const Graph& g, const VertexSet& alive, int k);

struct Coloring {
  /// colors[v] in 0..palette-1
  std::vector<int> colors;
  int palette = 0;

  int colors_used() const;
};

/// Empty optional when every vertex has a color below the palette size and no
/// edge is monochromatic.
std::optional<std::string> check_coloring(const Graph& g, const Coloring& c);

struct ColoringResult {
  enum class Status { Colored, ContainsWheel };
  Status status = Status::Colored;
  /// Set when Colored.
  std::optional<Coloring> coloring;
  /// Set when ContainsWheel; ambient ids.
  std::optional<Wheel> wheel;
  /// Complete when Colored, otherwise the steps taken before getting stuck.
  ReductionTrace trace;
};

/// Peels off low-degree vertices and twins until one vertex remains, then
/// colors in reverse: a low-degree vertex takes the least color missing from
/// its colored neighbors, a removed twin copies its partner. Uses at most k
/// colors whenever it does not get stuck. k is 3 or 4.
ColoringResult reduce_and_color(const Graph& g, int k);
inline ColoringResult color4(const Graph& g) { return reduce_and_color(g, 4); }

/// Empty optional when replaying the trace on g reproduces every step's
/// precondition.
std::optional<std::string> check_trace(const Graph& g, const ReductionTrace& trace, int k);

}  // namespace wheelfree

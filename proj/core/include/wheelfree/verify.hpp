#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Universally quantified statements about wheel-free graphs and the
/// connectivity tools, each checkable on a single graph.
enum class Statement {
  TwinsOrDegree3,        // no 4-wheel => twins or a vertex of degree <= 3
  TwinsOrDegree2,        // no 3-wheel => twins or a vertex of degree <= 2
  MinDegreeBound,        // no 4-wheel => minimum degree <= 4
  FourColoring,          // no 4-wheel => color4 succeeds with <= 4 colors
  FiveConnectedCenters,  // 5-connected => every vertex centers a 4-wheel
  TriangleCenters,       // 4-connected => triangle vertices center 4-wheels
  FourConnectedIsK44,    // 4-connected, almost 4-wheel-free => K_{4,4}
  CenterFreeEndTrivial,  // connectivity 3, end avoiding 4-wheel centers => trivial
  TwoDegree3Vertices,    // connectivity 3, no 4-wheel => two vertices of degree 3
  Connectivity2Ends,     // connectivity 2, no 4-wheel => each end has a degree <= 3
                         // vertex or a K_{4,4} end block
  DiracCycles,           // k-connected => cycles through any k vertices, or any
                         // edge and k-1 vertices
  FanLemma,              // k-connected => k-fan to any set of >= k targets
  FanExtension,          // smaller fans extend to k-fans keeping their ends
  EndBlockConnectivity,  // non-trivial end => end block is (kappa+1)-connected
  WatkinsMesner,         // 4-connected, no cycle through X in G-x => certificate
  TwoDisjointEnds,       // connected, not complete => two disjoint ends
};

std::string_view statement_id(Statement s);
std::optional<Statement> statement_from_id(std::string_view id);
const std::vector<Statement>& all_statements();

struct VerifyOutcome {
  enum class Status { Pass, NotApplicable, Counterexample, BudgetExceeded };
  Status status = Status::Pass;
  /// The violated clause for counterexamples; the unmet hypothesis for
  /// not-applicable.
  std::string clause;
  /// Certificates backing the verdict (structured text).
  std::vector<std::string> certificates;
  /// Which branch of a disjunctive conclusion held, counted per graph.
  std::map<std::string, long long> tallies;
};

std::string_view status_name(VerifyOutcome::Status s);

inline constexpr int kVerifyMaxOrder = 16;

/// Checks the hypotheses first and reports NotApplicable when they fail.
VerifyOutcome verify_statement(const Graph& g, Statement s);

/// Self-contained record of a failed check.
std::string render_counterexample(const Graph& g, Statement s, const VerifyOutcome& outcome);

}  // namespace wheelfree

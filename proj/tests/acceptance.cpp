// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/oracles.hpp"
#include "wheelfree/pool.hpp"
#include "wheelfree/reduction.hpp"
#include "wheelfree/verify.hpp"
#include "wheelfree/wheels.hpp"

using namespace wheelfree;

namespace {

using Status = VerifyOutcome::Status;

struct Tally {
  long long graphs = 0;
  long long applicable = 0;
  long long violations = 0;
  std::map<std::string, long long> branches;
  std::string first_violation;

  void fail(const Graph& g, const std::string& what) {
    if (violations++ == 0) first_violation = what + " on " + describe(g);
  }
  void record(const Graph& g, Statement s, const VerifyOutcome& out) {
    ++graphs;
    if (out.status == Status::Pass) ++applicable;
    if (out.status == Status::Counterexample) fail(g, std::string(statement_id(s)) + ": " + out.clause);
    if (out.status == Status::BudgetExceeded) fail(g, std::string(statement_id(s)) + ": budget exceeded");
    for (const auto& [k, v] : out.tallies) branches[k] += v;
  }
  std::string summary() const {
    std::string s = "graphs=" + std::to_string(graphs) + " applicable=" + std::to_string(applicable) + " violations=" + std::to_string(violations);
    for (const auto& [k, v] : branches) s += " " + k + "=" + std::to_string(v);
    if (violations > 0) s += " first: " + first_violation;
    return s;
  }
};

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s  [%s] (%.1fs)\n", id, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, title, ok, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

void for_labeled(int n_min, int n_max, const std::function<void(const Graph&)>& visit) {
  GraphPool(PoolDescriptor::exhaustive(n_min, n_max)).for_each([&](const Graph& g) {
    visit(g);
    return true;
  });
}

std::vector<Graph> classes_up_to(int n) {
  std::vector<Graph> out;
  for (int i = 1; i <= n; ++i) {
    const auto& c = isomorphism_classes(i);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::pair<bool, std::string> result(const Tally& t) { return {t.violations == 0, t.summary()}; }

// 1. Twins or a vertex of degree <= 3 in every 4-wheel-free graph on 7 vertices.
std::pair<bool, std::string> twins_or_degree3() {
  Tally t;
  long long wheel_checks = 0;
  for_labeled(7, 7, [&](const Graph& g) {
    ++t.graphs;
    if (g.min_degree() <= 3) {
      ++t.branches["low-degree"];
      return;
    }
    ++wheel_checks;
    if (!is_k_wheel_free(g, 4)) return;
    ++t.applicable;
    if (find_twins(g)) {
      ++t.branches["twins"];
      return;
    }
    t.fail(g, "no twins, minimum degree " + std::to_string(g.min_degree()));
  });
  t.branches["wheel-checks"] = wheel_checks;
  return result(t);
}

// 2. color4 on every 4-wheel-free graph on 7 vertices, checked against the oracles.
std::pair<bool, std::string> four_coloring() {
  Tally t;
  for_labeled(7, 7, [&](const Graph& g) {
    ++t.graphs;
    if (oracles::brute_has_k_wheel(g, 4)) return;
    ++t.applicable;
    auto r = color4(g);
    if (r.status != ColoringResult::Status::Colored) return t.fail(g, "color4 got stuck");
    if (auto bad = check_coloring(g, *r.coloring)) return t.fail(g, "improper coloring: " + *bad);
    if (auto bad = check_trace(g, r.trace, 4)) return t.fail(g, "trace does not replay: " + *bad);
    const int used = r.coloring->colors_used();
    const int chi = oracles::brute_chromatic_number(g);
    if (used > 4 || chi > 4 || chi > used) return t.fail(g, "colors=" + std::to_string(used) + " chi=" + std::to_string(chi));
    ++t.branches["chi-" + std::to_string(chi)];
  });
  return result(t);
}

// 3. Twins or a vertex of degree <= 2 in every 3-wheel-free graph on <= 7 vertices.
std::pair<bool, std::string> twins_or_degree2() {
  Tally t;
  for_labeled(1, 7, [&](const Graph& g) {
    ++t.graphs;
    if (g.min_degree() <= 2) {
      ++t.branches["low-degree"];
      return;
    }
    if (find_twins(g)) {
      ++t.branches["twins"];
      return;
    }
    if (oracles::brute_has_k_wheel(g, 3)) return;
    ++t.applicable;
    t.fail(g, "3-wheel-free without twins or low degree");
  });
  // The k = 3 reduction must color every 3-wheel-free graph.
  for (const Graph& g : classes_up_to(7)) {
    if (oracles::brute_has_k_wheel(g, 3)) continue;
    auto r = reduce_and_color(g, 3);
    if (r.status != ColoringResult::Status::Colored) t.fail(g, "k=3 reduction stuck");
    else if (check_coloring(g, *r.coloring) || r.coloring->colors_used() > 3) t.fail(g, "bad 3-coloring");
    else ++t.branches["three-colored-classes"];
  }
  return result(t);
}

// 4. 4-connected almost 4-wheel-free graphs are K_{4,4}.
std::pair<bool, std::string> four_connected_k44() {
  std::string detail;
  auto a = verify_statement(complete_bipartite(4), Statement::FourConnectedIsK44);
  bool ok = a.status == Status::Pass;
  detail += std::string("(a) K44 ") + std::string(status_name(a.status));

  Tally small;
  for_labeled(1, 7, [&](const Graph& g) {
    if (g.min_degree() < 4) return;
    small.record(g, Statement::FourConnectedIsK44, verify_statement(g, Statement::FourConnectedIsK44));
  });
  ok = ok && small.violations == 0 && small.applicable == 0;
  detail += "; (b) n<=7 4-connected candidates=" + std::to_string(small.graphs) + " almost-free=" + std::to_string(small.applicable) +
            " violations=" + std::to_string(small.violations);

  Tally large;
  long long isomorphic = 0;
  auto check = [&](const Graph& g) {
    auto out = verify_statement(g, Statement::FourConnectedIsK44);
    large.record(g, Statement::FourConnectedIsK44, out);
    if (out.status == Status::Pass) ++isomorphic;
  };
  for (const Graph& g : curated_pool("k44-neighborhood")) {
    if (vertex_connectivity(g) >= 4) check(g);
  }
  for (const Graph& g : curated_pool("four-connected")) {
    if (g.order() >= 8 && g.order() <= 10) check(g);
  }
  PoolFilters filters;
  filters.min_degree_at_least = 4;
  filters.connectivity_at_least = 4;
  for (const auto& [p, seed] : {std::pair{0.55, 11ULL}, std::pair{0.7, 12ULL}}) {
    GraphPool(PoolDescriptor::random(8, 10, p, seed, 5000), filters).for_each([&](const Graph& g) {
      check(g);
      return true;
    });
  }
  ok = ok && large.violations == 0 && large.graphs >= 10000;
  detail += "; (c) 4-connected n=8..10 graphs=" + std::to_string(large.graphs) + " almost-free(all K44)=" + std::to_string(isomorphic) +
            " violations=" + std::to_string(large.violations);
  if (small.violations) detail += " first: " + small.first_violation;
  if (large.violations) detail += " first: " + large.first_violation;
  return {ok, detail};
}

// 5. Connectivity 3: centre-free ends are trivial, and two degree-3 vertices.
std::pair<bool, std::string> connectivity3() {
  Tally ends_tally;
  Tally degree_tally;
  long long wheel_free_breaks = 0;
  std::map<std::uint64_t, Graph> broken_classes;
  for_labeled(4, 7, [&](const Graph& g) {
    if (g.min_degree() < 3 || vertex_connectivity(g) != 3) return;
    auto ends_out = verify_statement(g, Statement::CenterFreeEndTrivial);
    ends_tally.record(g, Statement::CenterFreeEndTrivial, ends_out);
    if (ends_out.status == Status::Counterexample) {
      broken_classes.try_emplace(canonical_code(g), canonical_form(g));
      if (is_k_wheel_free(g, 4)) ++wheel_free_breaks;
    }
    degree_tally.record(g, Statement::TwoDegree3Vertices, verify_statement(g, Statement::TwoDegree3Vertices));
  });
  std::string detail = "center-free ends: " + ends_tally.summary() + "; degree 3: " + degree_tally.summary();
  if (!broken_classes.empty()) {
    detail += "; violating classes=" + std::to_string(broken_classes.size()) + " (4-wheel-free labeled=" + std::to_string(wheel_free_breaks) + "):";
    for (const auto& [code, g] : broken_classes) detail += " " + to_graph6(g);
  }
  return {ends_tally.violations == 0 && degree_tally.violations == 0, detail};
}

// 6. Connectivity 2, 4-wheel-free: each end has a low-degree vertex or a K_{4,4} end block.
std::pair<bool, std::string> connectivity2() {
  Tally t;
  for_labeled(3, 7, [&](const Graph& g) {
    if (g.min_degree() < 2 || vertex_connectivity(g) != 2) return;
    t.record(g, Statement::Connectivity2Ends, verify_statement(g, Statement::Connectivity2Ends));
  });
  t.branches.try_emplace("k44-block", 0);
  return result(t);
}

// 7. Property suites over isomorphism classes and curated pools.
std::pair<bool, std::string> property_suites() {
  const auto classes = classes_up_to(7);
  std::string detail;
  bool ok = true;
  auto suite = [&](const std::string& name, Statement s, const std::vector<Graph>& pool) {
    Tally t;
    for (const Graph& g : pool) t.record(g, s, verify_statement(g, s));
    ok = ok && t.violations == 0;
    detail += (detail.empty() ? "" : "; ") + name + " " + std::to_string(t.applicable) + "/" + std::to_string(t.graphs);
    if (t.violations) detail += " VIOLATIONS=" + std::to_string(t.violations) + " first: " + t.first_violation;
  };

  std::vector<Graph> five = curated_pool("five-connected");
  std::vector<Graph> four = curated_pool("four-connected");
  std::vector<Graph> four_and_small = four;
  four_and_small.insert(four_and_small.end(), classes.begin(), classes.end());

  suite("five-connected-centers", Statement::FiveConnectedCenters, five);
  suite("triangle-centers", Statement::TriangleCenters, four_and_small);
  suite("dirac", Statement::DiracCycles, classes);
  suite("fan", Statement::FanLemma, classes);
  suite("fan-extension", Statement::FanExtension, classes);
  suite("end-block", Statement::EndBlockConnectivity, classes);
  suite("two-ends", Statement::TwoDisjointEnds, classes);
  suite("watkins-mesner", Statement::WatkinsMesner, four);
  suite("min-degree", Statement::MinDegreeBound, classes);

  // Cycle search against full cycle enumeration for every X with |X| <= 5.
  long long queries = 0;
  long long mismatches = 0;
  for (const Graph& g : classes) {
    const int n = g.order();
    std::vector<std::uint64_t> cycles;
    oracles::enumerate_cycles(g, [&](const Cycle&, std::uint64_t m) {
      cycles.push_back(m);
      return true;
    });
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t x = 1; x <= full; ++x) {
      if (std::popcount(x) > 5) continue;
      ++queries;
      bool slow = std::any_of(cycles.begin(), cycles.end(), [&](std::uint64_t m) { return (m & x) == x; });
      bool fast = detail::cycle_through(g, full, x, nullptr).has_value();
      if (slow != fast) ++mismatches;
    }
  }
  ok = ok && mismatches == 0;
  detail += "; cycle-through queries=" + std::to_string(queries) + " mismatches=" + std::to_string(mismatches);

  // Spoke count is bounded by degree.
  long long degree_breaks = 0;
  for (const Graph& g : classes) {
    VertexSet w = wheel_centers(g, 4);
    for (Vertex v : w) degree_breaks += g.degree(v) < 4 ? 1 : 0;
  }
  ok = ok && degree_breaks == 0;
  detail += "; center-degree breaks=" + std::to_string(degree_breaks);
  return {ok, detail};
}

// 8. Tight constructions.
std::pair<bool, std::string> tight_constructions() {
  const Graph t4 = tight_example(4);
  const Graph t5 = tight_example(5);
  const Graph k4 = complete(4);
  const bool t4_free = !oracles::brute_has_k_wheel(t4, 4);
  const bool t5_free = !oracles::brute_has_k_wheel(t5, 5);
  const bool k4_free = !oracles::brute_has_k_wheel(k4, 4);
  const int c4 = oracles::brute_chromatic_number(t4);
  const int c5 = oracles::brute_chromatic_number(t5);
  const int ck = oracles::brute_chromatic_number(k4);
  const bool ok = t4_free && t5_free && k4_free && c4 == 4 && c5 == 5 && ck == 4;
  auto yes = [](bool b) { return b ? "free" : "HAS-WHEEL"; };
  std::string detail = std::string("tight(4) 4-wheel ") + yes(t4_free) + " chi=" + std::to_string(c4) + "; tight(5) 5-wheel " + yes(t5_free) +
                       " chi=" + std::to_string(c5) + "; K4 4-wheel " + yes(k4_free) + " chi=" + std::to_string(ck);
  return {ok, detail};
}

// 9. Fast paths against the oracles.
std::pair<bool, std::string> oracle_agreement() {
  long long graphs = 0;
  long long disagreements = 0;
  std::string first;
  auto compare = [&](const Graph& g) {
    ++graphs;
    const int fast_kappa = vertex_connectivity(g);
    const int slow_kappa = oracles::brute_vertex_connectivity(g);
    const bool fast_free = is_k_wheel_free(g, 4);
    const bool slow_free = !oracles::brute_has_k_wheel(g, 4);
    if (fast_kappa != slow_kappa || fast_free != slow_free) {
      if (disagreements++ == 0) first = describe(g);
    }
  };
  for_labeled(1, 7, compare);
  const long long exhaustive = graphs;
  GraphPool(PoolDescriptor::random(8, 10, 0.5, 2024, 10000)).for_each([&](const Graph& g) {
    compare(g);
    return true;
  });
  std::string detail = "exhaustive=" + std::to_string(exhaustive) + " random=" + std::to_string(graphs - exhaustive) +
                       " disagreements=" + std::to_string(disagreements);
  if (disagreements) detail += " first: " + first;
  return {disagreements == 0 && graphs - exhaustive == 10000, detail};
}

// 10. Parser round trips and classical class counts.
std::pair<bool, std::string> parser_round_trip() {
  long long checked = 0;
  long long broken = 0;
  auto round_trip = [&](const Graph& g) {
    ++checked;
    const std::string g6 = to_graph6(g);
    const Graph back = parse_graph6(g6);
    const std::string col = to_dimacs_col(g);
    const Graph back_col = parse_dimacs_col(col).graph;
    if (back != g || to_graph6(back) != g6 || back_col != g || to_dimacs_col(back_col) != col) ++broken;
  };
  for_labeled(0, 6, round_trip);
  const long long exhaustive = checked;
  GraphPool(PoolDescriptor::random(8, 62, 0.3, 7, 10000)).for_each([&](const Graph& g) {
    round_trip(g);
    return true;
  });

  const std::size_t four = isomorphism_classes(4).size();
  const std::size_t five = isomorphism_classes(5).size();
  // Independent count: greedy dedup with the permutation oracle.
  auto brute_count = [](int n) {
    std::vector<Graph> reps;
    for_labeled(n, n, [&](const Graph& g) {
      for (const Graph& r : reps) {
        if (oracles::brute_isomorphic(g, r)) return;
      }
      reps.push_back(g);
    });
    return reps.size();
  };
  const std::size_t four_brute = brute_count(4);
  const std::size_t five_brute = brute_count(5);
  const bool ok = broken == 0 && checked - exhaustive == 10000 && four == 11 && five == 34 && four_brute == 11 && five_brute == 34;
  std::string detail = "exhaustive=" + std::to_string(exhaustive) + " random=" + std::to_string(checked - exhaustive) + " broken=" +
                       std::to_string(broken) + "; classes n=4: " + std::to_string(four) + " (brute " + std::to_string(four_brute) +
                       "), n=5: " + std::to_string(five) + " (brute " + std::to_string(five_brute) + ")";
  return {ok, detail};
}

struct Criterion {
  int id;
  const char* title;
  std::pair<bool, std::string> (*body)();
};

constexpr Criterion kCriteria[] = {
    {1, "4-wheel-free graphs on 7 vertices have twins or a vertex of degree <= 3", twins_or_degree3},
    {2, "color4 properly 4-colors every 4-wheel-free graph on 7 vertices", four_coloring},
    {3, "3-wheel-free graphs on <= 7 vertices have twins or a vertex of degree <= 2", twins_or_degree2},
    {4, "4-connected almost 4-wheel-free graphs are K_{4,4}", four_connected_k44},
    {5, "connectivity 3: center-free ends are trivial, two vertices of degree 3", connectivity3},
    {6, "connectivity 2: ends have a degree <= 3 vertex or a K_{4,4} end block", connectivity2},
    {7, "center, Dirac, fan, extension, end-block, two-ends, Watkins-Mesner suites", property_suites},
    {8, "tight constructions are k-wheel-free with chromatic number k", tight_constructions},
    {9, "connectivity and wheel detection agree with brute-force oracles", oracle_agreement},
    {10, "graph6 and DIMACS round trips, class counts 11 and 34", parser_round_trip},
};

}  // namespace

// With arguments, runs only the listed criterion numbers.
int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]...\n", argv[0]);
      return 2;
    }
    selected.push_back(id);
  }
  int ran = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    run(c.id, c.title, c.body);
    ++ran;
  }
  std::printf("%s: %d of %d criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures, ran);
  return failures == 0 ? 0 : 1;
}

#include "wheelfree/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "wheelfree/certificate.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/oracles.hpp"
#include "wheelfree/reduction.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree {

namespace {

using Status = VerifyOutcome::Status;
using Mask = std::uint64_t;

constexpr std::array<std::pair<Statement, std::string_view>, 16> kIds{{
    {Statement::TwinsOrDegree3, "twins-or-degree3"},
    {Statement::TwinsOrDegree2, "twins-or-degree2"},
    {Statement::MinDegreeBound, "min-degree-bound"},
    {Statement::FourColoring, "four-coloring"},
    {Statement::FiveConnectedCenters, "five-connected-centers"},
    {Statement::TriangleCenters, "triangle-centers"},
    {Statement::FourConnectedIsK44, "four-connected-k44"},
    {Statement::CenterFreeEndTrivial, "center-free-end-trivial"},
    {Statement::TwoDegree3Vertices, "two-degree3-vertices"},
    {Statement::Connectivity2Ends, "connectivity2-ends"},
    {Statement::DiracCycles, "dirac-cycles"},
    {Statement::FanLemma, "fan-lemma"},
    {Statement::FanExtension, "fan-extension"},
    {Statement::EndBlockConnectivity, "end-block-connectivity"},
    {Statement::WatkinsMesner, "watkins-mesner"},
    {Statement::TwoDisjointEnds, "two-disjoint-ends"},
}};

VerifyOutcome pass() { return {}; }

VerifyOutcome not_applicable(std::string why, std::vector<std::string> certs = {}) {
  return {Status::NotApplicable, std::move(why), std::move(certs), {}};
}

VerifyOutcome violation(std::string clause, std::vector<std::string> certs = {}) {
  return {Status::Counterexample, std::move(clause), std::move(certs), {}};
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

VertexSet set_of(int n, Mask m) { return VertexSet::from_mask(static_cast<std::size_t>(n), m); }

template <typename Fn>
void for_each_subset_of_size(Mask universe, int k, Fn&& fn) {
  const auto items = mask_members(universe);
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << items[static_cast<std::size_t>(i)];
    if (!fn(m)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Submasks of `universe` with at least `min_size` members, increasing order.
template <typename Fn>
void for_each_submask_at_least(Mask universe, int min_size, Fn&& fn) {
  for (Mask sub = universe;; sub = (sub - 1) & universe) {
    if (std::popcount(sub) >= min_size && !fn(sub)) return;
    if (sub == 0) return;
  }
}

std::optional<Wheel> wheel_witness(const Graph& g, int k) { return find_k_wheel(g, k); }

VerifyOutcome twins_or_low_degree(const Graph& g, int k) {
  if (auto w = wheel_witness(g, k)) return not_applicable("contains a " + std::to_string(k) + "-wheel", {render_certificate(*w)});
  VerifyOutcome out;
  if (g.order() == 0 || g.min_degree() <= k - 1) {
    out.tallies["low-degree"] = 1;
    return out;
  }
  if (find_twins(g)) {
    out.tallies["twins"] = 1;
    return out;
  }
  return violation("no twins and minimum degree " + std::to_string(g.min_degree()) + " > " + std::to_string(k - 1));
}

VerifyOutcome min_degree_bound(const Graph& g) {
  if (auto w = wheel_witness(g, 4)) return not_applicable("contains a 4-wheel", {render_certificate(*w)});
  if (g.order() > 0 && g.min_degree() > 4) return violation("minimum degree " + std::to_string(g.min_degree()) + " > 4");
  return pass();
}

VerifyOutcome four_coloring(const Graph& g) {
  if (g.order() > oracles::kOracleMaxOrder) return {Status::BudgetExceeded, "chromatic oracle budget", {}, {}};
  if (auto w = wheel_witness(g, 4)) return not_applicable("contains a 4-wheel", {render_certificate(*w)});
  auto result = color4(g);
  if (result.status != ColoringResult::Status::Colored) {
    return violation("reduction got stuck on a 4-wheel-free graph", {render_certificate(*result.wheel), render_certificate(result.trace)});
  }
  const Coloring& c = *result.coloring;
  if (auto bad = check_coloring(g, c)) return violation("coloring is not proper: " + *bad, {render_certificate(c)});
  if (auto bad = check_trace(g, result.trace, 4)) return violation("trace does not replay: " + *bad, {render_certificate(result.trace)});
  const int used = c.colors_used();
  const int chi = oracles::brute_chromatic_number(g);
  if (used > 4) return violation("coloring uses " + std::to_string(used) + " colors", {render_certificate(c)});
  if (chi > 4 || chi > used) {
    return violation("chromatic number " + std::to_string(chi) + " disagrees with a " + std::to_string(used) + "-coloring", {render_certificate(c)});
  }
  VerifyOutcome out;
  out.tallies["colors-" + std::to_string(used)] = 1;
  return out;
}

VerifyOutcome five_connected_centers(const Graph& g, int kappa) {
  if (kappa < 5) return not_applicable("connectivity below 5");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_wheel_center(g, v, 4)) return violation("vertex " + std::to_string(v) + " is not a 4-wheel center");
  }
  return pass();
}

VerifyOutcome triangle_centers(const Graph& g, int kappa) {
  if (kappa < 4) return not_applicable("connectivity below 4");
  VerifyOutcome out;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool in_triangle = false;
    for (Vertex w : g.neighbors(v)) {
      if ((g.neighbors(v) & g.neighbors(w)).first() != VertexSet::npos) in_triangle = true;
    }
    if (!in_triangle) continue;
    if (!is_wheel_center(g, v, 4)) return violation("triangle vertex " + std::to_string(v) + " is not a 4-wheel center");
    ++out.tallies["triangle-vertices"];
  }
  return out;
}

VerifyOutcome four_connected_k44(const Graph& g, int kappa) {
  if (kappa < 4) return not_applicable("connectivity below 4");
  if (!is_almost_4_wheel_free(g)) return not_applicable("more than three 4-wheel centers or centers not a clique");
  if (!are_isomorphic(g, complete_bipartite(4))) return violation("4-connected almost 4-wheel-free graph is not K_{4,4}");
  return pass();
}

VerifyOutcome center_free_end_trivial(const Graph& g, int kappa) {
  if (kappa != 3) return not_applicable("connectivity is not 3");
  const VertexSet centers = wheel_centers(g, 4);
  auto list = ends(g, kVerifyMaxOrder);
  if (list.status == FragmentStatus::BudgetExceeded) return {Status::BudgetExceeded, "fragment enumeration budget", {}, {}};
  VerifyOutcome out;
  for (const VertexSet& end : list.sets) {
    if (end.intersects(centers)) {
      ++out.tallies["end-meets-centers"];
      continue;
    }
    if (end.size() != 1) {
      return violation("end " + end.to_string() + " avoids every 4-wheel center but is not trivial", {render_certificate(end_block(g, end))});
    }
    ++out.tallies["trivial-end"];
  }
  return out;
}

VerifyOutcome two_degree3_vertices(const Graph& g, int kappa) {
  if (kappa != 3) return not_applicable("connectivity is not 3");
  if (auto w = wheel_witness(g, 4)) return not_applicable("contains a 4-wheel", {render_certificate(*w)});
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 3 ? 1 : 0;
  if (count < 2) return violation("only " + std::to_string(count) + " vertices of degree 3");
  return pass();
}

VerifyOutcome connectivity2_ends(const Graph& g, int kappa) {
  if (kappa != 2) return not_applicable("connectivity is not 2");
  if (auto w = wheel_witness(g, 4)) return not_applicable("contains a 4-wheel", {render_certificate(*w)});
  auto list = ends(g, kVerifyMaxOrder);
  if (list.status == FragmentStatus::BudgetExceeded) return {Status::BudgetExceeded, "fragment enumeration budget", {}, {}};
  const Graph k44 = complete_bipartite(4);
  VerifyOutcome out;
  for (const VertexSet& end : list.sets) {
    bool low = std::any_of(end.begin(), end.end(), [&](Vertex v) { return g.degree(v) <= 3; });
    if (low) {
      ++out.tallies["low-degree"];
      continue;
    }
    EndBlock block = end_block(g, end);
    if (block.block.order() == 8 && are_isomorphic(block.block, k44)) {
      ++out.tallies["k44-block"];
      continue;
    }
    return violation("end " + end.to_string() + " has no vertex of degree <= 3 and its end block is not K_{4,4}", {render_certificate(block)});
  }
  return out;
}

VerifyOutcome dirac_cycles(const Graph& g, int kappa) {
  if (kappa < 2) return not_applicable("connectivity below 2");
  const int n = g.order();
  const Mask all = full_mask(n);
  std::optional<VerifyOutcome> failure;
  VerifyOutcome out;
  for_each_subset_of_size(all, kappa, [&](Mask x) {
    if (!detail::cycle_through(g, all, x, nullptr)) {
      failure = violation("no cycle through " + set_of(n, x).to_string());
      return false;
    }
    ++out.tallies["vertex-sets"];
    return true;
  });
  if (failure) return *failure;
  for (const Edge& e : g.edges()) {
    for_each_subset_of_size(all, kappa - 1, [&](Mask x) {
      if (!detail::cycle_through(g, all, x, &e)) {
        failure = violation("no cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " and " + set_of(n, x).to_string());
        return false;
      }
      ++out.tallies["edge-sets"];
      return true;
    });
    if (failure) return *failure;
  }
  return out;
}

VerifyOutcome fan_lemma(const Graph& g, int kappa) {
  if (kappa < 1) return not_applicable("graph is not connected");
  const int n = g.order();
  VerifyOutcome out;
  std::optional<VerifyOutcome> failure;
  for (Vertex x = 0; x < n && !failure; ++x) {
    for_each_submask_at_least(full_mask(n) & ~(Mask{1} << x), kappa, [&](Mask y) {
      const VertexSet targets = set_of(n, y);
      auto fan = find_k_fan(g, x, targets, kappa);
      if (!fan) {
        failure = violation("no " + std::to_string(kappa) + "-fan from " + std::to_string(x) + " to " + targets.to_string());
        return false;
      }
      if (auto bad = check_fan(g, *fan); bad || static_cast<int>(fan->size()) != kappa) {
        failure = violation("invalid fan: " + bad.value_or("wrong size"), {render_certificate(*fan)});
        return false;
      }
      ++out.tallies["fans"];
      return true;
    });
  }
  return failure ? *failure : out;
}

// Cuts every path at its first target so a fan to a subset becomes a fan to the set.
Fan truncate_to(const Fan& f, const VertexSet& targets) {
  Fan out{f.origin, targets, {}};
  for (const auto& p : f.paths) {
    std::vector<Vertex> q{p.front()};
    for (std::size_t i = 1; i < p.size(); ++i) {
      q.push_back(p[i]);
      if (targets.contains(p[i])) break;
    }
    out.paths.push_back(std::move(q));
  }
  return out;
}

VerifyOutcome fan_extension(const Graph& g, int kappa) {
  if (kappa < 2) return not_applicable("connectivity below 2");
  const int n = g.order();
  VerifyOutcome out;
  std::optional<VerifyOutcome> failure;
  auto try_extend = [&](const Fan& small) {
    if (auto bad = check_fan(g, small)) {
      failure = violation("seed fan invalid: " + *bad, {render_certificate(small)});
      return false;
    }
    Fan grown;
    try {
      grown = extend_fan(g, small, kappa);
    } catch (const InternalError& e) {
      failure = violation(e.what(), {render_certificate(small)});
      return false;
    }
    if (auto bad = check_fan(g, grown); bad || static_cast<int>(grown.size()) != kappa || !small.ends().is_subset_of(grown.ends())) {
      failure = violation("extension invalid or lost an end", {render_certificate(small), render_certificate(grown)});
      return false;
    }
    ++out.tallies["extensions"];
    return true;
  };
  for (Vertex x = 0; x < n && !failure; ++x) {
    const Mask others = full_mask(n) & ~(Mask{1} << x);
    for_each_submask_at_least(others, kappa, [&](Mask y) {
      const VertexSet targets = set_of(n, y);
      for (int k1 = 1; k1 < kappa; ++k1) {
        auto seed = find_k_fan(g, x, targets, k1);
        if (!seed || !try_extend(*seed)) {
          if (!seed) failure = violation("no " + std::to_string(k1) + "-fan seed");
          return false;
        }
      }
      // Seeds with prescribed ends: every k1-subset of a tight target set.
      if (std::popcount(y) == kappa || y == others) {
        for (int k1 = 1; k1 < kappa && !failure; ++k1) {
          for_each_subset_of_size(y, k1, [&](Mask chosen) {
            auto seed = find_k_fan(g, x, set_of(n, chosen), k1);
            if (!seed) {
              failure = violation("no " + std::to_string(k1) + "-fan to " + set_of(n, chosen).to_string());
              return false;
            }
            return try_extend(truncate_to(*seed, targets));
          });
        }
      }
      return !failure;
    });
  }
  return failure ? *failure : out;
}

VerifyOutcome end_block_connectivity(const Graph& g, int kappa) {
  auto list = ends(g, kVerifyMaxOrder);
  if (list.status == FragmentStatus::NoFragments) return not_applicable("graph has no fragments");
  if (list.status == FragmentStatus::BudgetExceeded) return {Status::BudgetExceeded, "fragment enumeration budget", {}, {}};
  VerifyOutcome out;
  for (const VertexSet& end : list.sets) {
    if (end.size() < 2) continue;
    EndBlock block = end_block(g, end);
    if (vertex_connectivity(block.block) < kappa + 1) {
      return violation("end block of " + end.to_string() + " is not " + std::to_string(kappa + 1) + "-connected", {render_certificate(block)});
    }
    ++out.tallies["non-trivial-ends"];
  }
  return out;
}

VerifyOutcome watkins_mesner(const Graph& g, int kappa) {
  if (kappa < 4) return not_applicable("connectivity below 4");
  const int n = g.order();
  VerifyOutcome out;
  std::optional<VerifyOutcome> failure;
  for (Vertex x = 0; x < n && !failure; ++x) {
    const Mask allowed = full_mask(n) & ~(Mask{1} << x);
    for_each_subset_of_size(g.neighbor_mask(x), 4, [&](Mask chosen) {
      if (detail::cycle_through(g, allowed, chosen, nullptr)) {
        ++out.tallies["cycle"];
        return true;
      }
      std::optional<WMCertificate> cert;
      try {
        cert = wm_certificate(g, x, set_of(n, chosen));
      } catch (const InternalError& e) {
        failure = violation(e.what());
        return false;
      }
      if (!cert) {
        failure = violation("no certificate for x=" + std::to_string(x) + " targets " + set_of(n, chosen).to_string());
        return false;
      }
      if (auto bad = check_wm_certificate(g, *cert)) {
        failure = violation("certificate invalid: " + *bad, {render_certificate(*cert)});
        return false;
      }
      ++out.tallies["certificate"];
      return true;
    });
  }
  return failure ? *failure : out;
}

VerifyOutcome two_disjoint_ends(const Graph& g) {
  if (g.order() < 2 || !is_connected(g) || g.is_complete()) return not_applicable("graph is disconnected, complete, or trivial");
  auto list = ends(g, kVerifyMaxOrder);
  if (list.status == FragmentStatus::BudgetExceeded) return {Status::BudgetExceeded, "fragment enumeration budget", {}, {}};
  for (std::size_t i = 0; i < list.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < list.sets.size(); ++j) {
      if (!list.sets[i].intersects(list.sets[j])) return pass();
    }
  }
  return violation("fewer than two disjoint ends");
}

}  // namespace

std::string_view statement_id(Statement s) {
  for (const auto& [st, id] : kIds) {
    if (st == s) return id;
  }
  return "unknown";
}

std::optional<Statement> statement_from_id(std::string_view id) {
  for (const auto& [st, name] : kIds) {
    if (name == id) return st;
  }
  return std::nullopt;
}

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> out;
    for (const auto& [st, id] : kIds) out.push_back(st);
    return out;
  }();
  return all;
}

std::string_view status_name(VerifyOutcome::Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::NotApplicable: return "not-applicable";
    case Status::Counterexample: return "counterexample";
    case Status::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

VerifyOutcome verify_statement(const Graph& g, Statement s) {
  if (g.order() > kVerifyMaxOrder) return {Status::BudgetExceeded, "order above " + std::to_string(kVerifyMaxOrder), {}, {}};
  switch (s) {
    case Statement::TwinsOrDegree3: return twins_or_low_degree(g, 4);
    case Statement::TwinsOrDegree2: return twins_or_low_degree(g, 3);
    case Statement::MinDegreeBound: return min_degree_bound(g);
    case Statement::FourColoring: return four_coloring(g);
    case Statement::TwoDisjointEnds: return two_disjoint_ends(g);
    default: break;
  }
  const int kappa = vertex_connectivity(g);
  switch (s) {
    case Statement::FiveConnectedCenters: return five_connected_centers(g, kappa);
    case Statement::TriangleCenters: return triangle_centers(g, kappa);
    case Statement::FourConnectedIsK44: return four_connected_k44(g, kappa);
    case Statement::CenterFreeEndTrivial: return center_free_end_trivial(g, kappa);
    case Statement::TwoDegree3Vertices: return two_degree3_vertices(g, kappa);
    case Statement::Connectivity2Ends: return connectivity2_ends(g, kappa);
    case Statement::DiracCycles: return dirac_cycles(g, kappa);
    case Statement::FanLemma: return fan_lemma(g, kappa);
    case Statement::FanExtension: return fan_extension(g, kappa);
    case Statement::EndBlockConnectivity: return end_block_connectivity(g, kappa);
    case Statement::WatkinsMesner: return watkins_mesner(g, kappa);
    default: break;
  }
  throw std::invalid_argument("verify_statement: unhandled statement");
}

std::string render_counterexample(const Graph& g, Statement s, const VerifyOutcome& outcome) {
  std::string out = CertificateWriter("counterexample")
                        .field("statement", statement_id(s))
                        .field("status", status_name(outcome.status))
                        .field("order", g.order())
                        .field("graph6", g.order() <= kGraph6MaxOrder ? to_graph6(g) : std::string("-"))
                        .field("edges", g.edges())
                        .field("clause", outcome.clause)
                        .str();
  for (const auto& cert : outcome.certificates) {
    out.push_back('\n');
    out += cert;
  }
  return out;
}

}  // namespace wheelfree

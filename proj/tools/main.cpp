#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "run_report.hpp"
#include "wheelfree/certificate.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/oracles.hpp"
#include "wheelfree/pool.hpp"
#include "wheelfree/reduction.hpp"
#include "wheelfree/verify.hpp"
#include "wheelfree/wheels.hpp"

namespace wf = wheelfree;
using wf::cli::RunReport;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string inline_graph;
  std::string format;
};

struct LoadedInput {
  std::string descriptor;
  std::vector<wf::Graph> graphs;
  std::vector<std::string> warnings;
};

std::optional<wf::GraphFormat> format_from_extension(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string ext = path.substr(dot + 1);
  if (ext == "g6" || ext == "graph6") return wf::GraphFormat::Graph6;
  if (ext == "col" || ext == "dimacs") return wf::GraphFormat::Dimacs;
  if (ext == "edges" || ext == "el") return wf::GraphFormat::EdgeList;
  return std::nullopt;
}

LoadedInput load_input(const InputOptions& in) {
  LoadedInput out;
  std::string text;
  std::optional<wf::GraphFormat> fmt;
  if (!in.format.empty()) {
    fmt = wf::format_from_name(in.format);
    if (!fmt) throw UsageError("unknown format '" + in.format + "' (graph6, dimacs, edgelist)");
  }
  if (!in.inline_graph.empty()) {
    text = in.inline_graph;
    out.descriptor = "inline";
  } else if (in.path.empty() || in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    out.descriptor = "stdin";
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + in.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    out.descriptor = "file:" + in.path;
    if (!fmt) fmt = format_from_extension(in.path);
  }
  if (!fmt) fmt = wf::detect_format(text);
  auto parsed = wf::parse_graphs(text, *fmt);
  if (parsed.graphs.empty()) throw UsageError("no graphs in input");
  out.descriptor += " format=" + std::string(wf::format_name(*fmt));
  out.graphs = std::move(parsed.graphs);
  out.warnings = std::move(parsed.warnings);
  return out;
}

std::string join(const wf::VertexSet& set) {
  std::string s;
  for (wf::Vertex v : set) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string graph6_or_dash(const wf::Graph& g) { return g.order() <= wf::kGraph6MaxOrder ? wf::to_graph6(g) : "-"; }

void begin(RunReport& r, long long index, const wf::Graph& g) {
  r.begin_graph(index);
  r.line("graph6", graph6_or_dash(g));
  r.line("order", g.order());
  r.line("size", static_cast<long long>(g.size()));
}

std::vector<wf::Vertex> parse_vertex_list(const std::string& text) {
  std::vector<wf::Vertex> out;
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '{' || c == '}') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + token + "' in '" + text + "'");
    }
  }
  return out;
}

struct FilterOptions {
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  bool connected = false;
  std::optional<int> kappa_at_least;
  std::optional<int> kappa;
  std::optional<int> wheel_free;

  void attach(CLI::App* app) {
    app->add_option("--min-degree", min_degree, "keep graphs with minimum degree at least this");
    app->add_option("--max-degree", max_degree, "keep graphs with maximum degree at most this");
    app->add_flag("--connected", connected, "keep connected graphs");
    app->add_option("--kappa-at-least", kappa_at_least, "keep graphs with connectivity at least this");
    app->add_option("--kappa", kappa, "keep graphs with exactly this connectivity");
    app->add_option("--wheel-free", wheel_free, "keep k-wheel-free graphs (brute-force oracle)");
  }
  wf::PoolFilters build() const {
    wf::PoolFilters f;
    f.min_degree_at_least = min_degree;
    f.max_degree_at_most = max_degree;
    f.connected = connected;
    f.connectivity_at_least = kappa_at_least;
    f.connectivity_exactly = kappa;
    f.wheel_free_k = wheel_free;
    return f;
  }
};

void write_warnings(RunReport& r, const LoadedInput& in) {
  for (const auto& w : in.warnings) r.line("warning", w);
}

int cmd_color4(const LoadedInput& in, bool emit_trace, RunReport& r) {
  write_warnings(r, in);
  for (std::size_t i = 0; i < in.graphs.size(); ++i) {
    const wf::Graph& g = in.graphs[i];
    begin(r, static_cast<long long>(i), g);
    auto res = wf::color4(g);
    if (res.status == wf::ColoringResult::Status::Colored) {
      r.line("status", "colored");
      r.line("colors-used", res.coloring->colors_used());
      r.raw(wf::render_certificate(*res.coloring));
      r.count("colored");
    } else {
      r.line("status", "contains-4-wheel");
      r.raw(wf::render_certificate(*res.wheel));
      r.count("contains-4-wheel");
    }
    if (emit_trace) r.raw(wf::render_certificate(res.trace));
  }
  return wf::cli::kExitOk;
}

int cmd_wheel(const LoadedInput& in, int k, RunReport& r) {
  write_warnings(r, in);
  for (std::size_t i = 0; i < in.graphs.size(); ++i) {
    const wf::Graph& g = in.graphs[i];
    begin(r, static_cast<long long>(i), g);
    r.line("k", k);
    if (auto w = wf::find_k_wheel(g, k)) {
      r.line("status", "contains-" + std::to_string(k) + "-wheel");
      r.raw(wf::render_certificate(*w));
      r.count("contains-wheel");
    } else {
      r.line("status", "free");
      r.count("free");
    }
    if (k == 4) r.line("centers", join(wf::wheel_centers(g, 4)));
  }
  return wf::cli::kExitOk;
}

int cmd_kappa(const LoadedInput& in, RunReport& r) {
  write_warnings(r, in);
  for (std::size_t i = 0; i < in.graphs.size(); ++i) {
    const wf::Graph& g = in.graphs[i];
    begin(r, static_cast<long long>(i), g);
    const int kappa = wf::vertex_connectivity(g);
    r.line("kappa", kappa);
    r.count("kappa-" + std::to_string(kappa));
  }
  return wf::cli::kExitOk;
}

int cmd_ends(const LoadedInput& in, bool blocks, int budget, RunReport& r) {
  write_warnings(r, in);
  for (std::size_t i = 0; i < in.graphs.size(); ++i) {
    const wf::Graph& g = in.graphs[i];
    begin(r, static_cast<long long>(i), g);
    r.line("kappa", wf::vertex_connectivity(g));
    auto list = wf::ends(g, budget);
    switch (list.status) {
      case wf::FragmentStatus::Ok: r.line("status", "ok"); break;
      case wf::FragmentStatus::NoFragments: r.line("status", "no-fragments"); break;
      case wf::FragmentStatus::BudgetExceeded: r.line("status", "budget-exceeded"); break;
    }
    r.line("ends", static_cast<long long>(list.sets.size()));
    for (const auto& e : list.sets) {
      r.line("end", join(e));
      if (blocks) r.raw(wf::render_certificate(wf::end_block(g, e)));
    }
    r.count("ends", static_cast<long long>(list.sets.size()));
  }
  return wf::cli::kExitOk;
}

int cmd_wm_cert(const LoadedInput& in, int x, const std::string& targets_text, RunReport& r) {
  write_warnings(r, in);
  const auto targets = parse_vertex_list(targets_text);
  for (std::size_t i = 0; i < in.graphs.size(); ++i) {
    const wf::Graph& g = in.graphs[i];
    begin(r, static_cast<long long>(i), g);
    if (x < 0 || x >= g.order()) throw UsageError("--x out of range");
    wf::VertexSet xs(static_cast<std::size_t>(g.order()));
    for (wf::Vertex v : targets) {
      if (v < 0 || v >= g.order()) throw UsageError("--X member " + std::to_string(v) + " out of range");
      xs.insert(v);
    }
    const std::uint64_t allowed = ((std::uint64_t{1} << g.order()) - 1) & ~(std::uint64_t{1} << x);
    if (auto c = wf::detail::cycle_through(g, allowed, xs.mask(), nullptr)) {
      r.line("status", "cycle-exists");
      r.raw(wf::render_certificate(*c));
      r.count("cycle-exists");
      continue;
    }
    auto cert = wf::wm_certificate(g, x, xs);
    if (cert) {
      r.line("status", "certificate");
      r.raw(wf::render_certificate(*cert));
      r.count("certificate");
    } else {
      r.line("status", "no-certificate");
      r.count("no-certificate");
    }
  }
  return wf::cli::kExitOk;
}

struct Found {
  std::size_t index;
  wf::Graph graph;
  std::string bundle;
};

int write_bundles(std::vector<Found>& found, const std::string& out_path, RunReport& r) {
  if (found.empty()) return wf::cli::kExitOk;
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.index < b.index; });
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  for (std::size_t i = 0; i < found.size(); ++i) out << (i ? "\n" : "") << found[i].bundle;
  r.line("counterexamples-file", out_path);
  return wf::cli::kExitCounterexample;
}

int cmd_verify(const std::string& statement_text, const std::optional<LoadedInput>& in, const std::string& pool_text,
               const FilterOptions& filters, unsigned threads, const std::string& out_path, RunReport& r) {
  auto statement = wf::statement_from_id(statement_text);
  if (!statement) {
    std::string ids;
    for (auto s : wf::all_statements()) ids += " " + std::string(wf::statement_id(s));
    throw UsageError("unknown statement '" + statement_text + "'; known:" + ids);
  }
  r.line("statement", wf::statement_id(*statement));
  std::vector<Found> found;
  if (in) {
    write_warnings(r, *in);
    for (std::size_t i = 0; i < in->graphs.size(); ++i) {
      const wf::Graph& g = in->graphs[i];
      begin(r, static_cast<long long>(i), g);
      auto out = wf::verify_statement(g, *statement);
      r.line("status", wf::status_name(out.status));
      if (!out.clause.empty()) r.line("clause", out.clause);
      for (const auto& [k, v] : out.tallies) r.line("tally", k + "=" + std::to_string(v));
      r.count(std::string(wf::status_name(out.status)));
      if (out.status == wf::VerifyOutcome::Status::Counterexample) {
        for (const auto& c : out.certificates) r.raw(c);
        found.push_back({i, g, wf::render_counterexample(g, *statement, out)});
      }
    }
    return write_bundles(found, out_path, r);
  }

  wf::GraphPool pool(wf::PoolDescriptor::parse(pool_text), filters.build());
  r.line("pool", pool.descriptor().to_string());
  std::mutex mu;
  std::map<std::string, long long> tallies;
  pool.parallel_for_each(threads, [&](std::size_t index, const wf::Graph& g) {
    auto out = wf::verify_statement(g, *statement);
    std::lock_guard lock(mu);
    r.count(std::string(wf::status_name(out.status)));
    for (const auto& [k, v] : out.tallies) tallies[k] += v;
    if (out.status == wf::VerifyOutcome::Status::Counterexample) {
      found.push_back({index, g, wf::render_counterexample(g, *statement, out)});
    }
  });
  for (const auto& [k, v] : tallies) r.line("tally", k + "=" + std::to_string(v));
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.index < b.index; });
  for (const auto& f : found) {
    begin(r, static_cast<long long>(f.index), f.graph);
    r.line("status", "counterexample");
  }
  return write_bundles(found, out_path, r);
}

int cmd_gen(const std::string& name, int k, const std::string& format) {
  auto g = wf::named_graph(name, k);
  if (!g) throw UsageError("unknown generator '" + name + "' (complete, kkk, tight, cycle, path, star, petersen, icosahedron, octahedron)");
  auto fmt = wf::format_from_name(format.empty() ? "graph6" : format);
  if (!fmt) throw UsageError("unknown format '" + format + "'");
  switch (*fmt) {
    case wf::GraphFormat::Graph6: std::cout << wf::to_graph6(*g) << '\n'; break;
    case wf::GraphFormat::Dimacs: std::cout << wf::to_dimacs_col(*g); break;
    case wf::GraphFormat::EdgeList: std::cout << wf::to_edge_list(*g); break;
  }
  return wf::cli::kExitOk;
}

int cmd_conjecture_search(int k, const std::string& pool_text, const FilterOptions& filters, unsigned threads, const std::string& out_path,
                          RunReport& r) {
  if (k < 3) throw UsageError("--k must be at least 3");
  wf::GraphPool pool(wf::PoolDescriptor::parse(pool_text), filters.build());
  r.line("pool", pool.descriptor().to_string());
  r.line("k", k);
  std::mutex mu;
  std::vector<Found> found;
  pool.parallel_for_each(threads, [&](std::size_t index, const wf::Graph& g) {
    if (g.order() > wf::oracles::kOracleMaxOrder) {
      std::lock_guard lock(mu);
      r.count("skipped-budget");
      return;
    }
    const bool free = wf::is_k_wheel_free(g, k);
    const int chi = free ? wf::oracles::brute_chromatic_number(g) : 0;
    std::lock_guard lock(mu);
    r.count("searched");
    if (!free) return;
    r.count("wheel-free");
    r.count("chi-" + std::to_string(chi));
    if (chi > k) {
      auto bundle = wf::CertificateWriter("counterexample")
                               .field("search", "k-wheel-free graph with chromatic number above k")
                               .field("k", k)
                               .field("chromatic-number", chi)
                               .field("graph6", graph6_or_dash(g))
                               .field("edges", g.edges())
                               .str();
      found.push_back({index, g, bundle});
    }
  });
  r.count("counterexamples", static_cast<long long>(found.size()));
  return write_bundles(found, out_path, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for 4-wheel-free graphs: coloring, wheels, connectivity, and statement checks"};
  app.set_version_flag("--version", std::string(wf::cli::kVersion));
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "append elapsed time to the report");

  InputOptions input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input.path, "graph file, or - for stdin (default)");
    sub->add_option("--graph", input.inline_graph, "graph given inline instead of a file");
    sub->add_option("--format", input.format, "graph6, dimacs or edgelist (default: detect)");
  };

  auto* color4 = app.add_subcommand("color4", "4-color by twin and low-degree reductions, or report a 4-wheel");
  bool emit_trace = false;
  add_input(color4);
  color4->add_flag("--emit-trace", emit_trace, "print the reduction trace");

  auto* wheel = app.add_subcommand("wheel", "find a k-wheel");
  int wheel_k = 4;
  add_input(wheel);
  wheel->add_option("--k", wheel_k, "minimum spoke count")->check(CLI::Range(3, 64));

  auto* kappa = app.add_subcommand("kappa", "vertex connectivity");
  add_input(kappa);

  auto* ends = app.add_subcommand("ends", "list the ends");
  bool blocks = false;
  int budget = wf::kDefaultFragmentBudget;
  add_input(ends);
  ends->add_flag("--blocks", blocks, "print each end block");
  ends->add_option("--budget", budget, "largest order for subset enumeration");

  auto* wm = app.add_subcommand("wm-cert", "separation certificate for four neighbors of x");
  int wm_x = 0;
  std::string wm_targets;
  add_input(wm);
  wm->add_option("--x", wm_x, "vertex whose neighbors are tested")->required();
  wm->add_option("--X", wm_targets, "comma-separated neighbors of x")->required();

  auto* verify = app.add_subcommand("verify", "check a statement on input graphs or a pool");
  std::string statement;
  std::string pool_text;
  std::string out_path = "counterexamples.txt";
  unsigned threads = 1;
  FilterOptions filters;
  verify->add_option("statement", statement, "statement id")->required();
  add_input(verify);
  verify->add_option("--pool", pool_text, "exhaustive:N[-M], iso:N[-M], random:N[-M]:P:SEED:COUNT, curated:NAME, file:PATH");
  verify->add_option("--out", out_path, "counterexample bundle file");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));
  filters.attach(verify);

  auto* gen = app.add_subcommand("gen", "print a named graph");
  std::string gen_name;
  int gen_k = 4;
  std::string gen_format;
  gen->add_option("name", gen_name, "complete, kkk, tight, cycle, path, star, petersen, icosahedron, octahedron")->required();
  gen->add_option("k", gen_k, "size parameter");
  gen->add_option("--format", gen_format, "graph6 (default), dimacs or edgelist");

  auto* search = app.add_subcommand("conjecture-search", "look for k-wheel-free graphs that are not k-colorable");
  int search_k = 5;
  std::string search_pool;
  std::string search_out = "conjecture-counterexamples.txt";
  unsigned search_threads = 1;
  FilterOptions search_filters;
  search->add_option("--k", search_k, "wheel size and color bound");
  search->add_option("--pool", search_pool, "pool descriptor")->required();
  search->add_option("--out", search_out, "counterexample bundle file");
  search->add_option("--threads", search_threads, "worker threads")->check(CLI::Range(1U, 256U));
  search_filters.attach(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? wf::cli::kExitOk : wf::cli::kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() : -1.0;
  };

  try {
    if (gen->parsed()) return cmd_gen(gen_name, gen_k, gen_format);

    auto* sub = app.get_subcommands().front();
    if (sub == search) {
      RunReport r("conjecture-search", "pool:" + search_pool);
      int code = cmd_conjecture_search(search_k, search_pool, search_filters, search_threads, search_out, r);
      std::cout << r.finish(code, elapsed());
      return code;
    }
    if (sub == verify && !pool_text.empty()) {
      RunReport r("verify", "pool:" + pool_text);
      int code = cmd_verify(statement, std::nullopt, pool_text, filters, threads, out_path, r);
      std::cout << r.finish(code, elapsed());
      return code;
    }

    LoadedInput in = load_input(input);
    RunReport r(sub->get_name(), in.descriptor);
    int code = wf::cli::kExitOk;
    if (sub == color4) code = cmd_color4(in, emit_trace, r);
    else if (sub == wheel) code = cmd_wheel(in, wheel_k, r);
    else if (sub == kappa) code = cmd_kappa(in, r);
    else if (sub == ends) code = cmd_ends(in, blocks, budget, r);
    else if (sub == wm) code = cmd_wm_cert(in, wm_x, wm_targets, r);
    else if (sub == verify) code = cmd_verify(statement, in, "", filters, threads, out_path, r);
    std::cout << r.finish(code, elapsed());
    return code;
  } catch (const wf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return wf::cli::kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wf::cli::kExitUsage;
  } catch (const wf::InternalError& e) {
    std::cerr << "internal error (please report with the input): " << e.what() << '\n';
    return wf::cli::kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wf::cli::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wf::cli::kExitUsage;
  } catch (const wf::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return wf::cli::kExitUsage;
  }
}

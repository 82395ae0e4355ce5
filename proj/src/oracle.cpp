#include "forest_turan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "forest_turan/constructions.hpp"
#include "forest_turan/errors.hpp"
#include "forest_turan/graph6.hpp"
#include "forest_turan/spectral.hpp"

namespace forest_turan {

OracleOptions default_oracle_options() {
  OracleOptions opts;
  if (const char* env = std::getenv("FOREST_TURAN_BUDGET")) {
    const std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      throw ParseError("FOREST_TURAN_BUDGET must be a non-negative integer, got '" + std::string(text) + "'",
                       static_cast<std::size_t>(ptr - text.data()));
    }
    opts.node_budget = value;
  }
  return opts;
}

bool OracleReport::has_key(const CanonicalKey& key) const {
  return std::binary_search(extremal.begin(), extremal.end(), ExtremalGraph{key, {}},
                            [](const ExtremalGraph& a, const ExtremalGraph& b) { return a.key < b.key; });
}

namespace {

constexpr std::size_t kSplitDepth = 6;
constexpr std::uint64_t kFlushEvery = 1024;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Cells of the search, in branching order, as host vertex ids.
struct Space {
  bool bipartite = true;
  int m = 0;
  int n = 0;  // general graphs: order in m, n unused
  std::vector<Edge> cells;

  static Space bip(int m, int n) {
    Space s{true, m, n, {}};
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < n; ++y) s.cells.emplace_back(x, m + y);
    return s;
  }
  static Space gen(int order) {
    Space s{false, order, 0, {}};
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) s.cells.emplace_back(u, v);
    return s;
  }

  HostGraph host() const { return bipartite ? HostGraph(m, n) : HostGraph(m); }

  std::vector<Edge> external(const std::vector<int>& included) const {
    std::vector<Edge> out;
    out.reserve(included.size());
    for (int c : included) {
      auto [u, v] = cells[static_cast<std::size_t>(c)];
      out.emplace_back(u, bipartite ? v - m : v);
    }
    return out;
  }
};

struct Aborted {};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex visitor_mutex;
};

class Walker {
 public:
  Walker(const Space& space, const LinearForestSpec& spec, const OracleOptions& opts, Shared& shared)
      : space_(space),
        spec_(spec),
        opts_(opts),
        shared_(shared),
        host_(space.host()),
        forest_edges_(spec.total_order() - spec.size()) {}

  // Adds a cell already known to keep the graph F-free.
  void replay(int cell) {
    auto [u, v] = space_.cells[static_cast<std::size_t>(cell)];
    host_.push_edge(u, v);
    included_.push_back(cell);
  }

  bool include(int cell) {
    auto [u, v] = space_.cells[static_cast<std::size_t>(cell)];
    host_.push_edge(u, v);
    included_.push_back(cell);
    if (static_cast<int>(included_.size()) < forest_edges_) return true;
    const EmbedResult r = contains_forest_through_edge(host_, spec_, u, v, opts_.embed_budget);
    if (r.status == EmbedStatus::budget_exceeded) {
      throw BudgetExceeded("containment check exceeded the step budget of " + std::to_string(opts_.embed_budget));
    }
    if (r.found()) {
      drop();
      return false;
    }
    return true;
  }

  void drop() {
    const int cell = included_.back();
    auto [u, v] = space_.cells[static_cast<std::size_t>(cell)];
    host_.pop_edge(u, v);
    included_.pop_back();
  }

  template <class Sink>
  void dfs(std::size_t i, Sink& sink) {
    count_node();
    const std::size_t total = space_.cells.size();
    if (i == total) {
      ++leaves_;
      if (opts_.visitor) {
        const auto edges = space_.external(included_);
        std::lock_guard lock(shared_.visitor_mutex);
        opts_.visitor(edges);
      }
      sink.leaf(*this);
      return;
    }
    if (sink.prune(static_cast<std::int64_t>(included_.size()), static_cast<std::int64_t>(total - i))) return;
    if (include(static_cast<int>(i))) {
      dfs(i + 1, sink);
      drop();
    }
    dfs(i + 1, sink);
  }

  void finish() {
    const std::uint64_t total = shared_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total > opts_.node_budget) over_budget();
  }

  const std::vector<int>& included() const { return included_; }
  const Space& space() const { return space_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void count_node() {
    ++nodes_;
    if (++pending_ < kFlushEvery) return;
    if (shared_.stop.load(std::memory_order_relaxed)) throw Aborted{};
    finish();
  }

  [[noreturn]] void over_budget() {
    shared_.stop = true;
    throw BudgetExceeded("oracle search exceeded the node budget of " + std::to_string(opts_.node_budget) +
                         " (set FOREST_TURAN_BUDGET or --budget to raise it)");
  }

  const Space& space_;
  const LinearForestSpec& spec_;
  const OracleOptions& opts_;
  Shared& shared_;
  HostGraph host_;
  int forest_edges_;
  std::vector<int> included_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  std::uint64_t pending_ = 0;
};

struct Task {
  std::vector<int> included;
  std::size_t next = 0;
};

// Decides the first kSplitDepth cells serially; every surviving prefix
// becomes an independent task.
std::vector<Task> split(const Space& space, const LinearForestSpec& spec, const OracleOptions& opts, Shared& shared) {
  std::vector<Task> tasks;
  Walker w(space, spec, opts, shared);
  const std::size_t depth = std::min(kSplitDepth, space.cells.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == depth) {
      tasks.push_back(Task{w.included(), i});
      return;
    }
    if (w.include(static_cast<int>(i))) {
      rec(i + 1);
      w.drop();
    }
    rec(i + 1);
  };
  rec(0);
  return tasks;
}

struct TaskStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

// Runs every task with a fresh sink from make_sink and returns the sinks in
// task order, so merging does not depend on the number of workers.
template <class Sink, class MakeSink>
std::vector<Sink> run_tasks(const Space& space, const LinearForestSpec& spec, const OracleOptions& opts,
                            MakeSink make_sink, TaskStats& stats) {
  Shared shared;
  const std::vector<Task> tasks = split(space, spec, opts, shared);
  std::vector<Sink> sinks;
  sinks.reserve(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) sinks.push_back(make_sink());
  std::vector<TaskStats> per_task(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        Walker w(space, spec, opts, shared);
        for (int c : tasks[t].included) w.replay(c);
        w.dfs(tasks[t].next, sinks[t]);
        w.finish();
        per_task[t] = TaskStats{w.nodes(), w.leaves()};
      } catch (const Aborted&) {
        return;
      } catch (...) {
        errors[t] = std::current_exception();
        shared.stop = true;
        return;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (shared.stop) {
    throw BudgetExceeded("oracle search exceeded the node budget of " + std::to_string(opts.node_budget));
  }
  for (const auto& s : per_task) {
    stats.nodes += s.nodes;
    stats.leaves += s.leaves;
  }
  return sinks;
}

BipartiteGraph bipartite_from(const Space& space, const std::vector<int>& included) {
  const auto edges = space.external(included);
  return BipartiteGraph::from_edges(space.m, space.n, edges);
}

GeneralGraph general_from(const Space& space, const std::vector<int>& included) {
  const auto edges = space.external(included);
  return GeneralGraph::from_edges(space.m, edges);
}

// ------------------------------------------------------------ edge maximum

struct EdgeSink {
  bool bound = true;
  std::int64_t best = 0;
  std::map<CanonicalKey, std::string> found;

  bool prune(std::int64_t edges, std::int64_t remaining) const { return bound && edges + remaining < best; }

  void leaf(const Walker& w) {
    const auto e = static_cast<std::int64_t>(w.included().size());
    if (e < best) return;
    if (e > best) {
      best = e;
      found.clear();
    }
    if (w.space().bipartite) {
      const BipartiteGraph g = bipartite_from(w.space(), w.included());
      found.emplace(canonical_key(g), to_graph6(g));
    } else {
      const GeneralGraph g = general_from(w.space(), w.included());
      found.emplace(canonical_key(g), to_graph6(g));
    }
  }
};

OracleReport run_edge_search(const Space& space, const LinearForestSpec& spec, const OracleOptions& opts,
                             std::int64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TaskStats stats;
  auto sinks = run_tasks<EdgeSink>(
      space, spec, opts, [&] { return EdgeSink{opts.bound_pruning, seed, {}}; }, stats);

  OracleReport report;
  report.bipartite = space.bipartite;
  report.m = space.m;
  report.n = space.n;
  report.spec = spec;
  report.seed_edges = seed;
  report.max_edges = seed;
  for (const auto& s : sinks) report.max_edges = std::max(report.max_edges, s.best);
  std::map<CanonicalKey, std::string> merged;
  for (const auto& s : sinks) {
    if (s.best != report.max_edges) continue;
    for (const auto& [key, g6] : s.found) merged.emplace(key, g6);
  }
  for (auto& [key, g6] : merged) report.extremal.push_back(ExtremalGraph{key, g6});
  report.nodes = stats.nodes;
  report.leaves = stats.leaves;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

BipartiteGraph transpose(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (auto [x, y] : g.edges()) edges.emplace_back(y, x);
  return BipartiteGraph::from_edges(g.n(), g.m(), edges);
}

bool forest_free(const BipartiteGraph& g, const LinearForestSpec& spec, const OracleOptions& opts) {
  return contains_forest(g, spec, opts.embed_budget).status == EmbedStatus::free;
}

bool forest_free(const GeneralGraph& g, const LinearForestSpec& spec, const OracleOptions& opts) {
  return contains_forest(g, spec, opts.embed_budget).status == EmbedStatus::free;
}

// Largest F-free graph among the two-block family, the Z graphs and whatever
// the formulas name for these sides.
std::int64_t bipartite_seed(int m, int n, const LinearForestSpec& spec, const OracleOptions& opts) {
  std::vector<BipartiteGraph> candidates;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n; ++b) candidates.push_back(two_block(a, n, m, b));
  for (int k = 1; k <= m; ++k) candidates.push_back(z_graph(m, n, k));
  for (int k = 1; k <= n; ++k) candidates.push_back(transpose(z_graph(n, m, k)));

  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  try {
    for (const auto& desc : ex_forest_bipartite(lo, hi, spec).extremal) {
      const AnyGraph built = build_family(desc);
      if (const auto* g = std::get_if<BipartiteGraph>(&built)) {
        if (g->m() == m && g->n() == n) candidates.push_back(*g);
        if (g->m() == n && g->n() == m) candidates.push_back(transpose(*g));
      }
    }
  } catch (const Error&) {
    // outside the formula's range; the generic candidates remain
  }

  std::int64_t best = 0;
  for (const auto& g : candidates) {
    const auto e = static_cast<std::int64_t>(g.edge_count());
    if (e > best && forest_free(g, spec, opts)) best = e;
  }
  return best;
}

std::int64_t general_seed(int order, const LinearForestSpec& spec, const OracleOptions& opts) {
  std::vector<GeneralGraph> candidates;
  for (int a = 0; a <= order; ++a) candidates.push_back(disjoint_union(complete_graph(a), empty_graph(order - a)));
  for (int pp = 0; pp + 2 <= order; ++pp) {
    candidates.push_back(nikiforov_graph(pp, order, false));
    candidates.push_back(nikiforov_graph(pp, order, true));
  }
  candidates.push_back(matching_graph(order));
  std::int64_t best = 0;
  for (const auto& g : candidates) {
    const auto e = static_cast<std::int64_t>(g.edge_count());
    if (e > best && forest_free(g, spec, opts)) best = e;
  }
  return best;
}

// ------------------------------------------------------------ spectral

struct SpectralEntry {
  double score;
  CanonicalKey key;
  std::string graph6;
};

struct SpectralSink {
  bool bipartite_only = true;
  double tol = 1e-9;
  double best = -1e300;
  std::vector<SpectralEntry> entries;
  std::uint64_t bracket_violations = 0;
  std::uint64_t symmetry_checks = 0;
  std::uint64_t symmetry_mismatches = 0;

  bool prune(std::int64_t, std::int64_t) const { return false; }

  void leaf(const Walker& w) {
    GeneralGraph g;
    SpectralResult r;
    if (w.space().bipartite) {
      const BipartiteGraph b = bipartite_from(w.space(), w.included());
      r = spectral_radius(b, tol);
      g = to_general(b);
    } else {
      g = general_from(w.space(), w.included());
      r = spectral_radius(g, tol);
      if (is_bipartite(g)) {
        ++symmetry_checks;
        if (std::abs(r.lambda_min + r.lambda_max) > 2 * tol) ++symmetry_mismatches;
      }
    }
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.order();
    if (avg > r.lambda_max + tol || r.lambda_max > g.max_degree() + tol) ++bracket_violations;

    const double score = bipartite_only ? r.lambda_max : -r.lambda_min;
    if (score < best - kSpectralTieTol) return;
    if (score > best) {
      best = score;
      std::erase_if(entries, [&](const SpectralEntry& e) { return e.score < best - kSpectralTieTol; });
    }
    entries.push_back(SpectralEntry{score, canonical_key(g), to_graph6(g)});
  }
};

void check_order(int value, int limit, const char* what) {
  if (value > limit) {
    throw BudgetExceeded(std::string(what) + " " + std::to_string(value) + " exceeds the oracle limit of " +
                         std::to_string(limit));
  }
}

}  // namespace

OracleReport brute_ex_bipartite(int m, int n, const LinearForestSpec& spec, const OracleOptions& opts) {
  if (m < 0 || n < 0) throw DomainError("brute_ex_bipartite: side sizes must be non-negative");
  check_order(m * n, opts.max_cells, "m*n =");
  return run_edge_search(Space::bip(m, n), spec, opts, bipartite_seed(m, n, spec, opts));
}

OracleReport brute_ex_general(int n, const LinearForestSpec& spec, const OracleOptions& opts) {
  if (n < 0) throw DomainError("brute_ex_general: order must be non-negative");
  check_order(n, opts.max_general_order, "order");
  return run_edge_search(Space::gen(n), spec, opts, general_seed(n, spec, opts));
}

ScanReport threshold_scan(int m, const LinearForestSpec& spec, int n_max, const OracleOptions& opts) {
  if (m < 1) throw DomainError("threshold_scan: m must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.m = m;
  report.n_max = n_max;
  report.spec = spec;
  for (int n = m; n <= n_max; ++n) {
    ScanRow row;
    row.n = n;
    std::optional<FormulaResult> formula;
    try {
      formula = ex_forest_bipartite(m, n, spec);
      row.formula = formula->value;
      row.case_label = formula->case_label;
    } catch (const DomainError&) {
      row.status = RowStatus::formula_undefined;
    }
    std::optional<OracleReport> brute;
    try {
      brute = brute_ex_bipartite(m, n, spec, opts);
      row.brute = brute->max_edges;
    } catch (const BudgetExceeded&) {
      row.status = RowStatus::budget_exceeded;
    }
    if (formula && brute) {
      row.agree = row.brute == row.formula;
      row.constructions_extremal = true;
      for (const auto& desc : formula->extremal) {
        bool in_set = false;
        const AnyGraph built = build_family(desc);
        if (const auto* g = std::get_if<BipartiteGraph>(&built)) {
          in_set = g->m() == m && g->n() == n && brute->has_key(canonical_key(*g));
        }
        if (!in_set) {
          row.constructions_extremal = false;
          row.missing_constructions.push_back(desc.to_string());
        }
      }
    }
    report.rows.push_back(std::move(row));
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (it->status != RowStatus::ok || !it->agree) break;
    report.n0 = it->n;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SpectralSearchReport brute_spectral_max(int n, const LinearForestSpec& spec, bool bipartite_only,
                                        const OracleOptions& opts) {
  if (n < 1) throw DomainError("brute_spectral_max: order must be at least 1");
  check_order(n, bipartite_only ? opts.max_spectral_bipartite : opts.max_spectral_general, "order");
  const auto start = std::chrono::steady_clock::now();

  std::vector<Space> spaces;
  if (bipartite_only) {
    for (int m = n >= 2 ? 1 : 0; 2 * m <= n; ++m) spaces.push_back(Space::bip(m, n - m));
  } else {
    spaces.push_back(Space::gen(n));
  }

  SpectralSearchReport report;
  report.bipartite_only = bipartite_only;
  report.n = n;
  report.spec = spec;
  std::vector<SpectralSink> all;
  TaskStats stats;
  for (const auto& space : spaces) {
    auto sinks = run_tasks<SpectralSink>(
        space, spec, opts, [&] { SpectralSink s;
          s.bipartite_only = bipartite_only;
          s.tol = opts.spectral_tol;
          return s; }, stats);
    for (auto& s : sinks) all.push_back(std::move(s));
  }

  double best = -1e300;
  for (const auto& s : all) best = std::max(best, s.best);
  std::map<CanonicalKey, std::string> merged;
  for (const auto& s : all) {
    report.bracket_violations += s.bracket_violations;
    report.symmetry_checks += s.symmetry_checks;
    report.symmetry_mismatches += s.symmetry_mismatches;
    for (const auto& e : s.entries)
      if (e.score >= best - kSpectralTieTol) merged.emplace(e.key, e.graph6);
  }
  report.value = bipartite_only ? best : -best;
  for (auto& [key, g6] : merged) report.extremal.push_back(ExtremalGraph{key, g6});
  report.graphs = stats.leaves;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace forest_turan

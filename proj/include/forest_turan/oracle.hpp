#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forest_turan/canonical.hpp"
#include "forest_turan/embed.hpp"
#include "forest_turan/formulas.hpp"
#include "forest_turan/graph.hpp"
#include "forest_turan/spec.hpp"

namespace forest_turan {

/// Called once per leaf of the search, i.e. per F-free labeled graph reached
/// with every cell decided. Bipartite edges are (x, y); general edges (u, v)
/// with u < v. Calls are serialised by the oracle.
using LeafVisitor = std::function<void(std::span<const Edge> edges)>;

struct OracleOptions {
  int max_cells = 30;               // m*n limit for brute_ex_bipartite
  int max_general_order = 8;        // n limit for brute_ex_general
  int max_spectral_bipartite = 8;   // order limit, bipartite spectral search
  int max_spectral_general = 7;     // order limit, general spectral search
  std::uint64_t node_budget = 2'000'000'000;  // search nodes over the whole run
  std::uint64_t embed_budget = kDefaultStepBudget;  // per containment check
  int workers = 1;
  bool bound_pruning = true;  // off: visit every F-free labeled graph
  LeafVisitor visitor;
  double spectral_tol = 1e-9;
};

/// Defaults with node_budget replaced by $FOREST_TURAN_BUDGET when it is set.
/// A malformed value throws ParseError.
OracleOptions default_oracle_options();

struct ExtremalGraph {
  CanonicalKey key;
  std::string graph6;  // one labeled representative (bipartite: X first)
};

struct OracleReport {
  bool bipartite = true;
  int m = 0;  // general graphs: the order, with n = 0
  int n = 0;
  LinearForestSpec spec{{2}};
  std::int64_t max_edges = 0;
  std::vector<ExtremalGraph> extremal;  // sorted by key, deduplicated
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::int64_t seed_edges = 0;  // incumbent taken from constructions
  double elapsed_seconds = 0.0;

  bool has_key(const CanonicalKey& key) const;
};

/// Exact ex(m, n; F) with all extremal graphs up to isomorphism. Throws
/// BudgetExceeded when m*n > max_cells or a budget runs out.
OracleReport brute_ex_bipartite(int m, int n, const LinearForestSpec& spec,
                                const OracleOptions& opts = default_oracle_options());

/// Exact ex(n, F) over simple graphs of order n.
OracleReport brute_ex_general(int n, const LinearForestSpec& spec,
                              const OracleOptions& opts = default_oracle_options());

enum class RowStatus { ok, formula_undefined, budget_exceeded };

struct ScanRow {
  int n = 0;
  RowStatus status = RowStatus::ok;
  std::int64_t brute = 0;
  std::int64_t formula = 0;
  std::string case_label;
  bool agree = false;
  // Every descriptor the formula names builds to a graph in the oracle's
  // extremal set.
  bool constructions_extremal = false;
  std::vector<std::string> missing_constructions;
};

struct ScanReport {
  int m = 0;
  int n_max = 0;
  LinearForestSpec spec{{2}};
  std::vector<ScanRow> rows;
  // Least n such that every row from n on agrees; empty when the last row
  // disagrees or was not computed.
  std::optional<int> n0;
  double elapsed_seconds = 0.0;
};

/// Rows for n = m..n_max comparing brute_ex_bipartite with ex_forest_bipartite.
ScanReport threshold_scan(int m, const LinearForestSpec& spec, int n_max,
                          const OracleOptions& opts = default_oracle_options());

struct SpectralSearchReport {
  bool bipartite_only = true;
  int n = 0;
  LinearForestSpec spec{{2}};
  // bipartite_only: maximum spectral radius; otherwise minimum least eigenvalue.
  double value = 0.0;
  std::vector<ExtremalGraph> extremal;  // general-graph keys
  std::uint64_t graphs = 0;             // labeled graphs evaluated
  std::uint64_t bracket_violations = 0;  // avg degree <= lambda_max <= max degree fails
  std::uint64_t symmetry_checks = 0;     // bipartite graphs cross-checked
  std::uint64_t symmetry_mismatches = 0;
  double elapsed_seconds = 0.0;
};

/// Graphs within this distance of the optimum count as extremal.
inline constexpr double kSpectralTieTol = 1e-8;

SpectralSearchReport brute_spectral_max(int n, const LinearForestSpec& spec, bool bipartite_only,
                                        const OracleOptions& opts = default_oracle_options());

}  // namespace forest_turan

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forest_turan/oracle.hpp"
#include "forest_turan/report.hpp"

namespace forest_turan {

struct VerifyRow {
  Json point = Json::object();  // grid coordinates, e.g. {"m":3,"n":5,"k":4}
  Json formula;                 // closed form or bound
  Json oracle;                  // measured value
  std::string status = "ok";    // ok | budget_exceeded | formula_undefined
  bool agree = false;
  std::optional<bool> extremal_match;
  std::string note;
};

struct VerifyReport {
  std::string theorem;
  Json grid = Json::object();
  std::vector<VerifyRow> rows;
  Json extra = Json::object();
  std::string summary;
  bool failed = false;
  double elapsed_seconds = 0.0;
};

/// Every 1 <= m <= n with mn <= max_mn and kmin <= k <= kmax: oracle against
/// the path table, and against the named extremal graphs (exact set where the
/// table declares a unique extremal graph, containment otherwise).
VerifyReport verify_path_table(int max_mn, int kmin, int kmax, const OracleOptions& opts);

/// threshold_scan for one forest and m; fails when no agreeing tail exists.
VerifyReport verify_forest_table(const LinearForestSpec& spec, int m, int n_max, const OracleOptions& opts);

/// The first P_7 inequality; fails on a violation or when the equality set is
/// not {(0,0), (2,2p)} (restricted to the range).
VerifyReport verify_first_p7_lemma(int p, int limit);

/// The second P_7 inequality for one m, or for every m in 3p+1..limit; the
/// equality set must be {(2, m-p)} for each m.
VerifyReport verify_second_p7_lemma(int p, std::optional<int> m, int limit);

/// Spectral search against sqrt(p(n-p)) with K_{p,n-p} as the only extremal
/// graph. least=false: maximum radius over bipartite graphs; least=true:
/// minimum least eigenvalue over all graphs.
VerifyReport verify_spectral_bound(const LinearForestSpec& spec, int n_min, int n_max, bool least,
                                   const OracleOptions& opts);

/// Visits every P_k-free graph of order n (no bound pruning) and checks
/// e <= floor((k-2)n/2) on each, for kmin <= k <= min(kmax, n).
VerifyReport verify_path_bound(int n_min, int n_max, int kmin, int kmax, const OracleOptions& opts);

Json to_json(const VerifyReport& r, bool timing = false);

}  // namespace forest_turan

#include "forest_turan/constructions.hpp"

#include <functional>
#include <map>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

std::string args(std::initializer_list<int> values) {
  std::string out = "(";
  bool first = true;
  for (int v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

// Complete block between X-range [x0, x0+a) and Y-range [y0, y0+b).
void add_block(std::vector<Edge>& edges, int x0, int a, int y0, int b) {
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.emplace_back(x0 + x, y0 + y);
}

}  // namespace

BipartiteGraph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "complete_bipartite" + args({a, b}) + ": sizes must be non-negative");
  std::vector<Edge> edges;
  add_block(edges, 0, a, 0, b);
  return BipartiteGraph::from_edges(a, b, edges);
}

BipartiteGraph kpn_plus_isolated(int p, int n, int q) {
  require(p >= 1 && n >= 1 && q >= 0, "kpn_plus_isolated" + args({p, n, q}) + ": needs p,n >= 1 and q >= 0");
  std::vector<Edge> edges;
  add_block(edges, 0, p, 0, n);
  return BipartiteGraph::from_edges(p + q, n, edges);
}

BipartiteGraph double_block_same_side(int p, int i, int n) {
  require(p >= 0 && i >= 0 && i <= n, "double_block_same_side" + args({p, i, n}) + ": needs p >= 0 and 0 <= i <= n");
  std::vector<Edge> edges;
  add_block(edges, 0, p, 0, i);
  add_block(edges, p, p, i, n - i);
  return BipartiteGraph::from_edges(2 * p, n, edges);
}

BipartiteGraph two_block(int p, int n, int m, int b) {
  require(b >= 0 && p >= 0 && m >= p && n >= b, "two_block" + args({p, n, m, b}) + ": needs b >= 0, m >= p >= 0, n >= b");
  std::vector<Edge> edges;
  add_block(edges, 0, p, 0, n - b);
  add_block(edges, p, m - p, n - b, b);
  return BipartiteGraph::from_edges(m, n, edges);
}

BipartiteGraph z_graph(int m, int n, int k) {
  if (k > m) throw DomainError("z_graph" + args({m, n, k}) + ": k > m");
  require(k >= 1 && n >= 1, "z_graph" + args({m, n, k}) + ": needs 1 <= k <= m and n >= 1");
  std::vector<Edge> edges;
  add_block(edges, 0, k, 0, n);
  for (int x = k; x < m; ++x) edges.emplace_back(x, 0);
  return BipartiteGraph::from_edges(m, n, edges);
}

BipartiteGraph z_plus_isolated(int m, int n, int k, int q) {
  require(q >= 0, "z_plus_isolated" + args({m, n, k, q}) + ": q must be non-negative");
  return disjoint_union(z_graph(m, n, k), BipartiteGraph(q, 0));
}

BipartiteGraph pendant_graph(int p, int n, int q) {
  require(p >= 0 && q >= 0 && q <= n, "pendant_graph" + args({p, n, q}) + ": needs p >= 0 and 0 <= q <= n");
  std::vector<Edge> edges;
  add_block(edges, 0, p, 0, n);
  for (int j = 0; j < q; ++j) edges.emplace_back(p + j, j);
  return BipartiteGraph::from_edges(p + q, n, edges);
}

BipartiteGraph bipartite_matching(int m, int n) {
  require(m >= 0 && m <= n, "bipartite_matching" + args({m, n}) + ": needs 0 <= m <= n");
  return pendant_graph(0, n, m);
}

BipartiteGraph c4_copies(int c) {
  require(c >= 0, "c4_copies" + args({c}) + ": c must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) add_block(edges, 2 * i, 2, 2 * i, 2);
  return BipartiteGraph::from_edges(2 * c, 2 * c, edges);
}

BipartiteGraph c4_double_star(int c, int a, int b) {
  require(c >= 0 && a >= 1 && b >= 1, "c4_double_star" + args({c, a, b}) + ": needs c >= 0, a >= 1, b >= 1");
  return disjoint_union(c4_copies(c), z_graph(a, b, 1));
}

GeneralGraph matching_graph(int t) {
  require(t >= 0, "matching_graph" + args({t}) + ": t must be non-negative");
  std::vector<Edge> edges;
  for (int j = 0; 2 * j + 1 < t; ++j) edges.emplace_back(2 * j, 2 * j + 1);
  return GeneralGraph::from_edges(t, edges);
}

GeneralGraph nikiforov_graph(int p_prime, int n, bool odd) {
  require(p_prime >= 0 && n >= p_prime + 2,
          "nikiforov_graph" + args({p_prime, n, odd ? 1 : 0}) + ": needs p' >= 0 and n >= p' + 2");
  const GeneralGraph clique = complete_graph(p_prime);
  if (!odd) return join(clique, empty_graph(n - p_prime));
  return join(clique, disjoint_union(empty_graph(n - p_prime - 2), complete_graph(2)));
}

namespace {

struct FamilyEntry {
  std::string params;
  std::size_t arity;
  std::function<AnyGraph(const std::vector<int>&)> build;
  std::function<std::int64_t(const std::vector<std::int64_t>&)> edges;
};

const std::map<std::string, FamilyEntry>& registry() {
  static const std::map<std::string, FamilyEntry> table = {
      {"K", {"a b", 2, [](const auto& v) -> AnyGraph { return complete_bipartite(v[0], v[1]); },
             [](const auto& v) { return v[0] * v[1]; }}},
      {"kpn_iso", {"p n q", 3, [](const auto& v) -> AnyGraph { return kpn_plus_isolated(v[0], v[1], v[2]); },
                   [](const auto& v) { return v[0] * v[1]; }}},
      {"double_block", {"p i n", 3, [](const auto& v) -> AnyGraph { return double_block_same_side(v[0], v[1], v[2]); },
                        [](const auto& v) { return v[0] * v[2]; }}},
      {"two_block", {"p n m b", 4, [](const auto& v) -> AnyGraph { return two_block(v[0], v[1], v[2], v[3]); },
                     [](const auto& v) { return f_helper(v[2], v[1], v[0], v[3]); }}},
      {"z", {"m n k", 3, [](const auto& v) -> AnyGraph { return z_graph(v[0], v[1], v[2]); },
             [](const auto& v) { return v[2] * v[1] + v[0] - v[2]; }}},
      {"z_iso", {"m n k q", 4, [](const auto& v) -> AnyGraph { return z_plus_isolated(v[0], v[1], v[2], v[3]); },
                 [](const auto& v) { return v[2] * v[1] + v[0] - v[2]; }}},
      {"pendant", {"p n q", 3, [](const auto& v) -> AnyGraph { return pendant_graph(v[0], v[1], v[2]); },
                   [](const auto& v) { return v[0] * v[1] + v[2]; }}},
      {"matching_bip", {"m n", 2, [](const auto& v) -> AnyGraph { return bipartite_matching(v[0], v[1]); },
                        [](const auto& v) { return v[0]; }}},
      {"c4_copies", {"c", 1, [](const auto& v) -> AnyGraph { return c4_copies(v[0]); },
                     [](const auto& v) { return 4 * v[0]; }}},
      {"c4_double_star", {"c a b", 3, [](const auto& v) -> AnyGraph { return c4_double_star(v[0], v[1], v[2]); },
                          [](const auto& v) { return 4 * v[0] + v[1] + v[2] - 1; }}},
      {"matching", {"t", 1, [](const auto& v) -> AnyGraph { return matching_graph(v[0]); },
                    [](const auto& v) { return v[0] / 2; }}},
      {"nikiforov", {"p' n odd", 3, [](const auto& v) -> AnyGraph { return nikiforov_graph(v[0], v[1], v[2] != 0); },
                     [](const auto& v) { return v[0] * (v[0] - 1) / 2 + v[0] * (v[1] - v[0]) + (v[2] != 0 ? 1 : 0); }}},
  };
  return table;
}

const FamilyEntry& lookup(const FamilyDescriptor& desc) {
  const auto& table = registry();
  auto it = table.find(desc.family);
  if (it == table.end()) throw ConstructionError("unknown family '" + desc.family + "'");
  if (desc.params.size() != it->second.arity) {
    throw ConstructionError("family '" + desc.family + "' takes " + std::to_string(it->second.arity) +
                            " parameters (" + it->second.params + "), got " + std::to_string(desc.params.size()));
  }
  return it->second;
}

}  // namespace

AnyGraph build_family(const FamilyDescriptor& desc) { return lookup(desc).build(desc.params); }

std::int64_t family_edge_count(const FamilyDescriptor& desc) {
  const auto& entry = lookup(desc);
  std::vector<std::int64_t> wide(desc.params.begin(), desc.params.end());
  return entry.edges(wide);
}

std::vector<std::pair<std::string, std::string>> family_catalogue() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, entry] : registry()) out.emplace_back(name, entry.params);
  return out;
}

}  // namespace forest_turan

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "forest_turan/canonical.hpp"
#include "forest_turan/embed.hpp"
#include "forest_turan/graph.hpp"
#include "forest_turan/spec.hpp"

namespace testing_support {

using namespace forest_turan;

// Labeled bipartite graph on sides (m, n) whose edges are the set bits of
// `mask` over cells in (x, y) lexicographic order.
inline BipartiteGraph bipartite_from_mask(int m, int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int c = 0; c < m * n; ++c)
    if ((mask >> c) & 1U) edges.emplace_back(c / n, c % n);
  return BipartiteGraph::from_edges(m, n, edges);
}

inline GeneralGraph general_from_mask(int order, std::uint64_t mask) {
  std::vector<Edge> edges;
  int c = 0;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v, ++c)
      if ((mask >> c) & 1U) edges.emplace_back(u, v);
  return GeneralGraph::from_edges(order, edges);
}

// Tries every injective map from the forest's vertices into the host,
// checking adjacency only along path edges. Deliberately shares nothing with
// the packing search.
inline bool naive_contains(const GeneralGraph& g, const LinearForestSpec& spec) {
  std::vector<bool> starts;
  for (int k : spec.parts())
    for (int j = 0; j < k; ++j) starts.push_back(j == 0);
  const int total = static_cast<int>(starts.size());
  if (total > g.order()) return false;
  std::vector<int> image(static_cast<std::size_t>(total), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::function<bool(int)> place = [&](int i) {
    if (i == total) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (!starts[static_cast<std::size_t>(i)] && !g.has_edge(image[static_cast<std::size_t>(i - 1)], v)) continue;
      used[static_cast<std::size_t>(v)] = true;
      image[static_cast<std::size_t>(i)] = v;
      if (place(i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return place(0);
}

inline bool naive_contains(const BipartiteGraph& g, const LinearForestSpec& spec) {
  return naive_contains(to_general(g), spec);
}

// Every linear forest with parts >= 2 and total order <= limit.
inline std::vector<LinearForestSpec> all_specs(int limit) {
  std::vector<LinearForestSpec> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (!parts.empty()) out.emplace_back(parts);
    for (int k = std::min(max_part, remaining); k >= 2; --k) {
      parts.push_back(k);
      rec(remaining - k, k);
      parts.pop_back();
    }
  };
  rec(limit, limit);
  return out;
}

struct NaiveExtremum {
  std::int64_t max_edges = -1;
  std::set<CanonicalKey> keys;
};

// Full enumeration over all 2^(mn) labeled bipartite graphs.
inline NaiveExtremum naive_bipartite_extremum(int m, int n, const LinearForestSpec& spec) {
  NaiveExtremum out;
  const std::uint64_t count = std::uint64_t{1} << (m * n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto e = static_cast<std::int64_t>(__builtin_popcountll(mask));
    if (e < out.max_edges) continue;
    const BipartiteGraph g = bipartite_from_mask(m, n, mask);
    if (contains_forest(g, spec).status != EmbedStatus::free) continue;
    if (e > out.max_edges) {
      out.max_edges = e;
      out.keys.clear();
    }
    out.keys.insert(canonical_key(g));
  }
  return out;
}

inline NaiveExtremum naive_general_extremum(int order, const LinearForestSpec& spec) {
  NaiveExtremum out;
  const std::uint64_t count = std::uint64_t{1} << (order * (order - 1) / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto e = static_cast<std::int64_t>(__builtin_popcountll(mask));
    if (e < out.max_edges) continue;
    const GeneralGraph g = general_from_mask(order, mask);
    if (contains_forest(g, spec).status != EmbedStatus::free) continue;
    if (e > out.max_edges) {
      out.max_edges = e;
      out.keys.clear();
    }
    out.keys.insert(canonical_key(g));
  }
  return out;
}

inline BipartiteGraph random_bipartite(std::mt19937& rng, int m, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (coin(rng)) edges.emplace_back(x, y);
  return BipartiteGraph::from_edges(m, n, edges);
}

inline GeneralGraph random_general(std::mt19937& rng, int order, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return GeneralGraph::from_edges(order, edges);
}

// Relabels X by px and Y by py.
inline BipartiteGraph permute(const BipartiteGraph& g, const std::vector<int>& px, const std::vector<int>& py) {
  std::vector<Edge> edges;
  for (auto [x, y] : g.edges())
    edges.emplace_back(px[static_cast<std::size_t>(x)], py[static_cast<std::size_t>(y)]);
  return BipartiteGraph::from_edges(g.m(), g.n(), edges);
}

inline GeneralGraph permute(const GeneralGraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return GeneralGraph::from_edges(g.order(), edges);
}

inline std::vector<int> random_perm(std::mt19937& rng, int size) {
  std::vector<int> p(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_support

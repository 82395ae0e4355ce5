#include "forest_turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

std::size_t words_for(int bits) {
  return (static_cast<std::size_t>(bits) + 63) / 64;
}

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

// ---------------------------------------------------------------- bipartite

BipartiteGraph::BipartiteGraph(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) {
    throw ConstructionError("negative side size " + std::to_string(m) + "," + std::to_string(n));
  }
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(m) * words_, 0);
}

BipartiteGraph BipartiteGraph::from_edges(int m, int n, std::span<const Edge> edges) {
  BipartiteGraph g(m, n);
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= m || e.second < 0 || e.second >= n) {
      throw ConstructionError("edge " + pair_text(e) + " out of range for sides (" +
                              std::to_string(m) + "," + std::to_string(n) + ")");
    }
    g.set(e.first, e.second);
  }
  return g;
}

int BipartiteGraph::degree_x(int x) const noexcept {
  int d = 0;
  for (auto w : row(x)) d += std::popcount(w);
  return d;
}

int BipartiteGraph::degree_y(int y) const noexcept {
  int d = 0;
  for (int x = 0; x < m_; ++x) d += has_edge(x, y) ? 1 : 0;
  return d;
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  std::size_t e = 0;
  for (auto w : bits_) e += static_cast<std::size_t>(std::popcount(w));
  return e;
}

int BipartiteGraph::max_degree() const noexcept {
  int best = 0;
  std::vector<int> ydeg(static_cast<std::size_t>(n_), 0);
  for (int x = 0; x < m_; ++x) {
    best = std::max(best, degree_x(x));
    for (int y = 0; y < n_; ++y) ydeg[static_cast<std::size_t>(y)] += has_edge(x, y) ? 1 : 0;
  }
  for (int d : ydeg) best = std::max(best, d);
  return best;
}

std::vector<int> BipartiteGraph::neighbours_x(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (has_edge(x, y)) out.push_back(y);
  return out;
}

std::vector<int> BipartiteGraph::neighbours_y(int y) const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x)
    if (has_edge(x, y)) out.push_back(x);
  return out;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < n_; ++y)
      if (has_edge(x, y)) out.emplace_back(x, y);
  return out;
}

// ------------------------------------------------------------------ general

GeneralGraph::GeneralGraph(int order) : order_(order) {
  if (order < 0) throw ConstructionError("negative order " + std::to_string(order));
  words_ = words_for(order);
  bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void GeneralGraph::set(int u, int v) noexcept {
  bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |=
      std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (static_cast<std::size_t>(u) >> 6)] |=
      std::uint64_t{1} << (u & 63);
}

GeneralGraph GeneralGraph::from_edges(int order, std::span<const Edge> edges) {
  GeneralGraph g(order);
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= order || e.second < 0 || e.second >= order) {
      throw ConstructionError("edge " + pair_text(e) + " out of range for order " +
                              std::to_string(order));
    }
    if (e.first == e.second) throw ConstructionError("loop " + pair_text(e));
    g.set(e.first, e.second);
  }
  return g;
}

int GeneralGraph::degree(int v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t GeneralGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

int GeneralGraph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> GeneralGraph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < order_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

std::vector<Edge> GeneralGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------- operators

BipartiteGraph build_bipartite(int m, int n, std::span<const Edge> edges) {
  return BipartiteGraph::from_edges(m, n, edges);
}

BipartiteGraph disjoint_union(const BipartiteGraph& g, const BipartiteGraph& h) {
  auto edges = g.edges();
  for (auto [x, y] : h.edges()) edges.emplace_back(x + g.m(), y + g.n());
  return BipartiteGraph::from_edges(g.m() + h.m(), g.n() + h.n(), edges);
}

GeneralGraph disjoint_union(const GeneralGraph& g, const GeneralGraph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return GeneralGraph::from_edges(g.order() + h.order(), edges);
}

GeneralGraph join(const GeneralGraph& g, const GeneralGraph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
  return GeneralGraph::from_edges(g.order() + h.order(), edges);
}

GeneralGraph empty_graph(int order) { return GeneralGraph(order); }

GeneralGraph complete_graph(int order) {
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return GeneralGraph::from_edges(order, edges);
}

GeneralGraph to_general(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (auto [x, y] : g.edges()) edges.emplace_back(x, g.m() + y);
  return GeneralGraph::from_edges(g.order(), edges);
}

bool is_bipartite(const GeneralGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbours(v)) {
        auto& cu = colour[static_cast<std::size_t>(u)];
        if (cu == -1) {
          cu = 1 - colour[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (cu == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace forest_turan

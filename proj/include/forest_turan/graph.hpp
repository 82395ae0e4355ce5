#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace forest_turan {

using Edge = std::pair<int, int>;

// Bipartite graph with labeled sides X = {x_0..x_{m-1}} and Y = {y_0..y_{n-1}}.
// Each X-vertex owns a bit row over Y. When viewed as a simple graph, X-vertices
// come first (ids 0..m-1) followed by Y-vertices (ids m..m+n-1).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int m, int n);

  /// Duplicate pairs collapse. Throws ConstructionError naming the first
  /// out-of-range pair.
  static BipartiteGraph from_edges(int m, int n, std::span<const Edge> edges);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int order() const noexcept { return m_ + n_; }

  bool has_edge(int x, int y) const noexcept {
    return (row(x)[static_cast<std::size_t>(y) >> 6] >> (y & 63)) & 1U;
  }
  int degree_x(int x) const noexcept;
  int degree_y(int y) const noexcept;
  std::size_t edge_count() const noexcept;
  int max_degree() const noexcept;

  std::vector<int> neighbours_x(int x) const;
  std::vector<int> neighbours_y(int y) const;

  /// (x, y) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> row(int x) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(x) * words_, words_};
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  void set(int x, int y) noexcept {
    bits_[static_cast<std::size_t>(x) * words_ + (static_cast<std::size_t>(y) >> 6)] |=
        std::uint64_t{1} << (y & 63);
  }

  int m_ = 0;
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Simple undirected graph on vertices 0..order-1 with one bit row per vertex.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  explicit GeneralGraph(int order);

  /// Duplicates (in either orientation) collapse. Loops and out-of-range
  /// endpoints throw ConstructionError.
  static GeneralGraph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }

  bool has_edge(int u, int v) const noexcept {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  int degree(int v) const noexcept;
  std::size_t edge_count() const noexcept;
  int max_degree() const noexcept;

  std::vector<int> neighbours(int v) const;

  /// (u, v) pairs with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const GeneralGraph&, const GeneralGraph&) = default;

 private:
  void set(int u, int v) noexcept;

  int order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

BipartiteGraph build_bipartite(int m, int n, std::span<const Edge> edges);

/// X-sides concatenated (g first), Y-sides concatenated.
BipartiteGraph disjoint_union(const BipartiteGraph& g, const BipartiteGraph& h);
GeneralGraph disjoint_union(const GeneralGraph& g, const GeneralGraph& h);

/// Disjoint union plus every edge between V(g) and V(h).
GeneralGraph join(const GeneralGraph& g, const GeneralGraph& h);

GeneralGraph empty_graph(int order);
GeneralGraph complete_graph(int order);

/// Underlying simple graph: X-vertices first, then Y-vertices.
GeneralGraph to_general(const BipartiteGraph& g);

bool is_bipartite(const GeneralGraph& g);

}  // namespace forest_turan

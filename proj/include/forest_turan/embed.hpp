#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forest_turan/graph.hpp"
#include "forest_turan/spec.hpp"

namespace forest_turan {

// Vertex-disjoint paths, one per part of the forest spec, in the spec's
// (non-increasing) order. For bipartite hosts vertex ids are X first
// (0..m-1) then Y (m..m+n-1).
struct EmbeddingCertificate {
  std::vector<std::vector<int>> paths;

  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;
};

enum class EmbedStatus { found, free, budget_exceeded };

struct EmbedResult {
  EmbedStatus status = EmbedStatus::free;
  std::optional<EmbeddingCertificate> certificate;
  std::uint64_t extensions = 0;

  bool found() const noexcept { return status == EmbedStatus::found; }
};

inline constexpr std::uint64_t kDefaultStepBudget = 100'000'000;

// Adjacency lists used by the packing search. Bipartite hosts carry a side
// label per vertex so the search can prune on per-side vertex counts.
// Edges may be added and removed in LIFO order, which the oracle uses to keep
// one host in sync with its branch-and-bound state.
class HostGraph {
 public:
  explicit HostGraph(int order);
  HostGraph(int m, int n);

  static HostGraph from(const BipartiteGraph& g);
  static HostGraph from(const GeneralGraph& g);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  bool bipartite() const noexcept { return bipartite_; }
  int side(int v) const noexcept { return side_[static_cast<std::size_t>(v)]; }
  int side_size(int s) const noexcept { return side_size_[s]; }

  std::span<const int> neighbours(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const noexcept;

  void push_edge(int u, int v);
  /// Undoes the most recent push_edge(u, v).
  void pop_edge(int u, int v);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> side_;
  int side_size_[2] = {0, 0};
  bool bipartite_ = false;
};

/// A path on exactly k vertices avoiding `forbidden`, or nullopt.
std::optional<std::vector<int>> find_path(const HostGraph& g, int k, std::span<const int> forbidden = {});
std::optional<std::vector<int>> find_path(const BipartiteGraph& g, int k, std::span<const int> forbidden = {});
std::optional<std::vector<int>> find_path(const GeneralGraph& g, int k, std::span<const int> forbidden = {});

/// Exhaustive search for vertex-disjoint paths of the spec's orders. Longest
/// part first; each extension step counts against `budget`.
EmbedResult contains_forest(const HostGraph& g, const LinearForestSpec& spec,
                            std::uint64_t budget = kDefaultStepBudget);
EmbedResult contains_forest(const BipartiteGraph& g, const LinearForestSpec& spec,
                            std::uint64_t budget = kDefaultStepBudget);
EmbedResult contains_forest(const GeneralGraph& g, const LinearForestSpec& spec,
                            std::uint64_t budget = kDefaultStepBudget);

/// Same question restricted to embeddings whose paths use the edge {u, v}.
/// If g minus {u, v} is F-free this decides whether g contains F.
EmbedResult contains_forest_through_edge(const HostGraph& g, const LinearForestSpec& spec, int u, int v,
                                         std::uint64_t budget = kDefaultStepBudget);

bool verify_certificate(const HostGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert);
bool verify_certificate(const BipartiteGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert);
bool verify_certificate(const GeneralGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert);

/// "x0-y1-x2" for bipartite hosts of side size m, "0-3-1" otherwise.
std::string format_path(std::span<const int> path, std::optional<int> bipartite_m);

}  // namespace forest_turan

#pragma once

#include <compare>
#include <string>

#include "forest_turan/graph.hpp"

namespace forest_turan {

// Opaque isomorphism-class label. Two graphs get equal keys exactly when they
// are isomorphic under the symmetry group the key was computed for.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Bipartite keys permute the smaller side explicitly and bit-pack the
/// larger one, so the two sides have separate limits.
inline constexpr int kMaxBipartiteCanonicalSmallSide = 10;
inline constexpr int kMaxBipartiteCanonicalLargeSide = 64;
/// Largest order accepted by the general-graph canonicaliser.
inline constexpr int kMaxGeneralCanonicalOrder = 10;

enum class SideSwap {
  when_square,  // identify G with its side-swapped copy iff m == n
  never,
};

/// Minimal adjacency encoding over all permutations of X and of Y (and the
/// side swap when allowed). Throws DomainError above the size limit.
CanonicalKey canonical_key(const BipartiteGraph& g, SideSwap swap = SideSwap::when_square);

/// Minimal upper-triangle encoding over the full symmetric group.
CanonicalKey canonical_key(const GeneralGraph& g);

}  // namespace forest_turan

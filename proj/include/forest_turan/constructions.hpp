#pragma once

#include <string>
#include <variant>
#include <vector>

#include "forest_turan/formulas.hpp"
#include "forest_turan/graph.hpp"

namespace forest_turan {

// Every constructor numbers vertices deterministically: blocks are laid out
// left to right in the order they are named, X-vertices and Y-vertices each
// counted from zero.

/// K_{a,b}.
BipartiteGraph complete_bipartite(int a, int b);

/// K_{p,n} ∪ K̄_q with the q isolated vertices on the X side (m = p+q).
BipartiteGraph kpn_plus_isolated(int p, int n, int q);

/// K_{p,i} ∪ K_{p,n-i}: m = 2p, x_0..x_{p-1} see y_0..y_{i-1}, the rest see y_i..y_{n-1}.
BipartiteGraph double_block_same_side(int p, int i, int n);

/// K_{p,n-b} ∪ K_{m-p,b}: x_0..x_{p-1} see y_0..y_{n-b-1}, x_p..x_{m-1} see the last b.
BipartiteGraph two_block(int p, int n, int m, int b);

/// Z^k_{m,n}: K_{k,n} on x_0..x_{k-1}, plus x_k..x_{m-1} each joined to y_0.
BipartiteGraph z_graph(int m, int n, int k);

/// Z^k_{m,n} ∪ K̄_q with the q isolated vertices on the X side.
BipartiteGraph z_plus_isolated(int m, int n, int k, int q);

/// K_{p,n} plus q new X-vertices x_{p+j} matched to y_j.
BipartiteGraph pendant_graph(int p, int n, int q);

/// M_m ∪ K̄_{n-m} on sides (m, n): edges x_j y_j for j < m.
BipartiteGraph bipartite_matching(int m, int n);

/// c disjoint copies of C_4 = K_{2,2}.
BipartiteGraph c4_copies(int c);

/// c copies of C_4 followed by the double star Z^1_{a,b}.
BipartiteGraph c4_double_star(int c, int a, int b);

/// M_t: floor(t/2) disjoint edges (2j, 2j+1), plus vertex t-1 isolated when t is odd.
GeneralGraph matching_graph(int t);

/// odd=false: K_{p'} ∇ K̄_{n-p'};  odd=true: K_{p'} ∇ (K̄_{n-p'-2} ∪ K_2).
/// The clique takes vertices 0..p'-1; in the odd case the K_2 is the last two.
GeneralGraph nikiforov_graph(int p_prime, int n, bool odd);

using AnyGraph = std::variant<BipartiteGraph, GeneralGraph>;

/// Dispatches on desc.family. Known names: K, kpn_iso, double_block,
/// two_block, z, z_iso, pendant, matching_bip, c4_copies, c4_double_star,
/// matching, nikiforov. Unknown names and wrong arity throw ConstructionError.
AnyGraph build_family(const FamilyDescriptor& desc);

/// Closed-form edge count of the family, without building it.
std::int64_t family_edge_count(const FamilyDescriptor& desc);

/// Family names accepted by build_family, with their parameter names.
std::vector<std::pair<std::string, std::string>> family_catalogue();

}  // namespace forest_turan

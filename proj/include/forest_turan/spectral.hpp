#pragma once

#include <cstdint>

#include "forest_turan/graph.hpp"

namespace forest_turan {

inline constexpr double kDefaultSpectralTol = 1e-9;
inline constexpr std::uint64_t kDefaultIterationCap = 1'000'000;

struct SpectralResult {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  std::uint64_t iterations = 0;  // summed over components and start vectors
  double residual = 0.0;         // worst final Rayleigh residual
};

// Power iteration on A + (1 + Δ)I, one connected component at a time. For
// bipartite graphs lambda_min is -lambda_max; general graphs get a second
// iteration on (1 + Δ)I - A. Throws DomainError for order 0 or tol <= 0 and
// ConvergenceError past the iteration cap.
SpectralResult spectral_radius(const BipartiteGraph& g, double tol = kDefaultSpectralTol,
                               std::uint64_t cap = kDefaultIterationCap);
SpectralResult spectral_radius(const GeneralGraph& g, double tol = kDefaultSpectralTol,
                               std::uint64_t cap = kDefaultIterationCap);

/// Largest eigenvalue only; skips the least-eigenvalue pass on general graphs.
double lambda_max(const GeneralGraph& g, double tol = kDefaultSpectralTol, std::uint64_t cap = kDefaultIterationCap);

double least_eigenvalue(const BipartiteGraph& g, double tol = kDefaultSpectralTol,
                        std::uint64_t cap = kDefaultIterationCap);
/// Always iterates on (1 + Δ)I - A, even when g happens to be bipartite.
double least_eigenvalue(const GeneralGraph& g, double tol = kDefaultSpectralTol,
                        std::uint64_t cap = kDefaultIterationCap);

/// sqrt(ab); a, b >= 0.
double lambda_complete_bipartite(int a, int b);

}  // namespace forest_turan

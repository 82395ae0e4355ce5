#include "forest_turan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

using Adjacency = std::vector<std::vector<int>>;

struct Eigen {
  double value = 0.0;
  std::uint64_t iterations = 0;
  double residual = 0.0;
};

Adjacency adjacency(const GeneralGraph& g) {
  Adjacency adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbours(v);
  return adj;
}

std::vector<Adjacency> components(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(adj.size(), -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back(1, s);
    comp[static_cast<std::size_t>(s)] = id;
    for (std::size_t i = 0; i < members.back().size(); ++i) {
      for (int w : adj[static_cast<std::size_t>(members.back()[i])]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          members.back().push_back(w);
        }
      }
    }
  }
  std::vector<Adjacency> out;
  out.reserve(members.size());
  for (auto& vs : members) {
    std::sort(vs.begin(), vs.end());
    std::vector<int> local(adj.size(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    Adjacency sub(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (int w : adj[static_cast<std::size_t>(vs[i])]) sub[i].push_back(local[static_cast<std::size_t>(w)]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

// Fixed-seed vector in [0.5, 1.5); the raw mt19937 stream is specified by the
// standard, so this is the same on every platform.
std::vector<double> perturbed(std::size_t n) {
  std::mt19937 gen(20240611U);
  std::vector<double> x(n);
  for (auto& v : x) v = 0.5 + static_cast<double>(gen()) / 4294967296.0;
  return x;
}

// Dominant eigenpair of sign*A + shift*I on one component, shifted back.
Eigen power_iterate(const Adjacency& adj, double sign, double shift, std::vector<double> x, double tol,
                    std::uint64_t cap) {
  const std::size_t n = adj.size();
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int w : adj[v]) acc += in[static_cast<std::size_t>(w)];
      out[v] = sign * acc + shift * in[v];
    }
  };
  auto normalise = [](std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    s = std::sqrt(s);
    for (double& e : v) e /= s;
  };

  normalise(x);
  std::vector<double> y(n);
  double rho = 0.0;
  double residual = 0.0;
  for (std::uint64_t it = 1; it <= cap; ++it) {
    apply(x, y);
    rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) rho += x[i] * y[i];
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (y[i] - rho * x[i]) * (y[i] - rho * x[i]);
    residual = std::sqrt(residual);
    if (residual <= tol) return Eigen{sign * (rho - shift), it, residual};
    x.swap(y);
    normalise(x);
  }
  throw ConvergenceError("power iteration did not reach residual " + std::to_string(tol) + " within " +
                             std::to_string(cap) + " iterations (residual " + std::to_string(residual) + ")",
                         sign * (rho - shift));
}

double shift_for(const Adjacency& adj) {
  std::size_t delta = 0;
  for (const auto& nb : adj) delta = std::max(delta, nb.size());
  return 1.0 + static_cast<double>(delta);
}

void check_args(int order, double tol) {
  if (order < 1) throw DomainError("spectral: graph has no vertices");
  if (!(tol > 0.0)) throw DomainError("spectral: tolerance must be positive");
}

Eigen top(const std::vector<Adjacency>& comps, double tol, std::uint64_t cap) {
  Eigen best{-1.0, 0, 0.0};
  for (const auto& c : comps) {
    Eigen e = c.size() == 1 ? Eigen{0.0, 0, 0.0} : power_iterate(c, 1.0, shift_for(c), ones(c.size()), tol, cap);
    best.iterations += e.iterations;
    best.residual = std::max(best.residual, e.residual);
    best.value = std::max(best.value, e.value);
  }
  return best;
}

// The all-ones start is orthogonal to the bottom eigenspace of every regular
// component, so a perturbed start always runs as well.
Eigen bottom(const std::vector<Adjacency>& comps, double tol, std::uint64_t cap) {
  Eigen best{1.0, 0, 0.0};
  for (const auto& c : comps) {
    if (c.size() == 1) {
      best.value = std::min(best.value, 0.0);
      continue;
    }
    const double s = shift_for(c);
    for (auto start : {ones(c.size()), perturbed(c.size())}) {
      Eigen e = power_iterate(c, -1.0, s, std::move(start), tol, cap);
      best.iterations += e.iterations;
      best.residual = std::max(best.residual, e.residual);
      best.value = std::min(best.value, e.value);
    }
  }
  return best;
}

}  // namespace

SpectralResult spectral_radius(const BipartiteGraph& g, double tol, std::uint64_t cap) {
  check_args(g.order(), tol);
  const Eigen e = top(components(adjacency(to_general(g))), tol, cap);
  return SpectralResult{e.value, -e.value, e.iterations, e.residual};
}

SpectralResult spectral_radius(const GeneralGraph& g, double tol, std::uint64_t cap) {
  check_args(g.order(), tol);
  const auto comps = components(adjacency(g));
  const Eigen hi = top(comps, tol, cap);
  const Eigen lo = bottom(comps, tol, cap);
  return SpectralResult{hi.value, lo.value, hi.iterations + lo.iterations, std::max(hi.residual, lo.residual)};
}

double lambda_max(const GeneralGraph& g, double tol, std::uint64_t cap) {
  check_args(g.order(), tol);
  return top(components(adjacency(g)), tol, cap).value;
}

double least_eigenvalue(const BipartiteGraph& g, double tol, std::uint64_t cap) {
  return spectral_radius(g, tol, cap).lambda_min;
}

double least_eigenvalue(const GeneralGraph& g, double tol, std::uint64_t cap) {
  check_args(g.order(), tol);
  return bottom(components(adjacency(g)), tol, cap).value;
}

double lambda_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("lambda_complete_bipartite: sizes must be non-negative");
  return std::sqrt(static_cast<double>(a) * static_cast<double>(b));
}

}  // namespace forest_turan

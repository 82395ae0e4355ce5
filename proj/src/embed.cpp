#include "forest_turan/embed.hpp"

#include <algorithm>
#include <set>

#include "forest_turan/errors.hpp"

namespace forest_turan {

// ---------------------------------------------------------------- HostGraph

HostGraph::HostGraph(int order) : adj_(static_cast<std::size_t>(order)), side_(static_cast<std::size_t>(order), 0) {
  side_size_[0] = order;
}

HostGraph::HostGraph(int m, int n)
    : adj_(static_cast<std::size_t>(m + n)), side_(static_cast<std::size_t>(m + n), 0), bipartite_(true) {
  for (int v = m; v < m + n; ++v) side_[static_cast<std::size_t>(v)] = 1;
  side_size_[0] = m;
  side_size_[1] = n;
}

HostGraph HostGraph::from(const BipartiteGraph& g) {
  HostGraph h(g.m(), g.n());
  for (auto [x, y] : g.edges()) h.push_edge(x, g.m() + y);
  return h;
}

HostGraph HostGraph::from(const GeneralGraph& g) {
  HostGraph h(g.order());
  for (auto [u, v] : g.edges()) h.push_edge(u, v);
  return h;
}

bool HostGraph::adjacent(int u, int v) const noexcept {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  auto nb = neighbours(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

void HostGraph::push_edge(int u, int v) {
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
}

void HostGraph::pop_edge(int u, int v) {
  adj_[static_cast<std::size_t>(u)].pop_back();
  adj_[static_cast<std::size_t>(v)].pop_back();
}

// ------------------------------------------------------------------- search

namespace {

struct SearchState {
  const HostGraph& g;
  std::vector<char> used;
  int free_total;
  int free_side[2];
  std::uint64_t budget;
  std::uint64_t steps = 0;
  bool exceeded = false;

  SearchState(const HostGraph& host, std::uint64_t step_budget)
      : g(host),
        used(static_cast<std::size_t>(host.order()), 0),
        free_total(host.order()),
        free_side{host.side_size(0), host.side_size(1)},
        budget(step_budget) {}

  void take(int v) {
    used[static_cast<std::size_t>(v)] = 1;
    --free_total;
    --free_side[g.side(v)];
  }
  void release(int v) {
    used[static_cast<std::size_t>(v)] = 0;
    ++free_total;
    ++free_side[g.side(v)];
  }
  bool is_used(int v) const { return used[static_cast<std::size_t>(v)] != 0; }

  // Counts one extension; false once the budget is spent.
  bool tick() {
    if (++steps > budget) exceeded = true;
    return !exceeded;
  }

  // Can paths of these orders still fit into the free vertices? A path on k
  // vertices of a bipartite host takes floor(k/2) from each side plus one
  // extra from either side when k is odd.
  bool fits(std::span<const int> orders) const {
    int total = 0;
    int base = 0;
    for (int k : orders) {
      total += k;
      base += k / 2;
    }
    if (total > free_total) return false;
    if (g.bipartite()) {
      if (free_side[0] < base || free_side[1] < base) return false;
    }
    return true;
  }
};

// Packs parts[0..] into free vertices of the host. Paths are recorded with
// their smaller endpoint first; consecutive equal parts are placed with
// strictly increasing first vertices, which loses no packing.
class Packer {
 public:
  Packer(SearchState& state, std::vector<int> parts) : st_(state), parts_(std::move(parts)), paths_(parts_.size()) {}

  bool run() { return pack(0, 0); }

  const std::vector<std::vector<int>>& paths() const { return paths_; }

 private:
  bool pack(std::size_t idx, int min_start) {
    if (idx == parts_.size()) return true;
    if (!st_.fits(std::span<const int>(parts_).subspan(idx))) return false;
    const int k = parts_[idx];
    auto& path = paths_[idx];
    for (int s = min_start; s < st_.g.order(); ++s) {
      if (st_.is_used(s)) continue;
      if (!st_.tick()) return false;
      st_.take(s);
      path.assign(1, s);
      if (grow(idx, k, s)) return true;
      st_.release(s);
      if (st_.exceeded) return false;
    }
    path.clear();
    return false;
  }

  bool grow(std::size_t idx, int k, int start) {
    auto& path = paths_[idx];
    if (static_cast<int>(path.size()) == k) {
      const int next_min = (idx + 1 < parts_.size() && parts_[idx + 1] == k) ? start + 1 : 0;
      return pack(idx + 1, next_min);
    }
    const bool closing = static_cast<int>(path.size()) + 1 == k;
    const int v = path.back();
    for (int w : st_.g.neighbours(v)) {
      if (st_.is_used(w)) continue;
      if (closing && w < start) continue;
      if (!st_.tick()) return false;
      st_.take(w);
      path.push_back(w);
      if (grow(idx, k, start)) return true;
      path.pop_back();
      st_.release(w);
      if (st_.exceeded) return false;
    }
    return false;
  }

  SearchState& st_;
  std::vector<int> parts_;
  std::vector<std::vector<int>> paths_;
};

// Enumerates paths of a fixed order that traverse u -> v consecutively, with
// `left` vertices up to and including u and the rest from v onward, and hands
// each one to the packer for the remaining parts.
class AnchoredSearch {
 public:
  AnchoredSearch(SearchState& state, int u, int v) : st_(state), u_(u), v_(v) {}

  bool run(int k, std::vector<int> rest) {
    rest_ = std::move(rest);
    for (int left = 1; left < k; ++left) {
      left_.assign(1, u_);
      right_.assign(1, v_);
      if (extend_left(left, k - left)) return true;
      if (st_.exceeded) return false;
    }
    return false;
  }

  std::vector<int> anchored_path() const {
    std::vector<int> path(left_.rbegin(), left_.rend());
    path.insert(path.end(), right_.begin(), right_.end());
    return path;
  }

  const std::vector<std::vector<int>>& rest_paths() const { return rest_paths_; }

 private:
  bool extend_left(int left, int right) {
    if (static_cast<int>(left_.size()) == left) return extend_right(right);
    for (int w : st_.g.neighbours(left_.back())) {
      if (st_.is_used(w)) continue;
      if (!st_.tick()) return false;
      st_.take(w);
      left_.push_back(w);
      if (extend_left(left, right)) return true;
      left_.pop_back();
      st_.release(w);
      if (st_.exceeded) return false;
    }
    return false;
  }

  bool extend_right(int right) {
    if (static_cast<int>(right_.size()) == right) {
      Packer packer(st_, rest_);
      if (packer.run()) {
        rest_paths_ = packer.paths();
        return true;
      }
      return false;
    }
    for (int w : st_.g.neighbours(right_.back())) {
      if (st_.is_used(w)) continue;
      if (!st_.tick()) return false;
      st_.take(w);
      right_.push_back(w);
      if (extend_right(right)) return true;
      right_.pop_back();
      st_.release(w);
      if (st_.exceeded) return false;
    }
    return false;
  }

  SearchState& st_;
  int u_;
  int v_;
  std::vector<int> rest_;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<std::vector<int>> rest_paths_;
};

EmbedResult finish(const SearchState& st, bool found, std::vector<std::vector<int>> paths) {
  EmbedResult r;
  r.extensions = st.steps;
  if (st.exceeded) {
    r.status = EmbedStatus::budget_exceeded;
  } else if (found) {
    r.status = EmbedStatus::found;
    r.certificate = EmbeddingCertificate{std::move(paths)};
  } else {
    r.status = EmbedStatus::free;
  }
  return r;
}

}  // namespace

std::optional<std::vector<int>> find_path(const HostGraph& g, int k, std::span<const int> forbidden) {
  if (k < 1) throw DomainError("find_path: k must be at least 1");
  SearchState st(g, ~std::uint64_t{0});
  for (int v : forbidden) {
    if (v >= 0 && v < g.order() && !st.is_used(v)) st.take(v);
  }
  Packer packer(st, {k});
  if (!packer.run()) return std::nullopt;
  return packer.paths().front();
}

std::optional<std::vector<int>> find_path(const BipartiteGraph& g, int k, std::span<const int> forbidden) {
  return find_path(HostGraph::from(g), k, forbidden);
}

std::optional<std::vector<int>> find_path(const GeneralGraph& g, int k, std::span<const int> forbidden) {
  return find_path(HostGraph::from(g), k, forbidden);
}

EmbedResult contains_forest(const HostGraph& g, const LinearForestSpec& spec, std::uint64_t budget) {
  SearchState st(g, budget);
  Packer packer(st, spec.parts());
  const bool found = packer.run();
  return finish(st, found, found ? packer.paths() : std::vector<std::vector<int>>{});
}

EmbedResult contains_forest(const BipartiteGraph& g, const LinearForestSpec& spec, std::uint64_t budget) {
  return contains_forest(HostGraph::from(g), spec, budget);
}

EmbedResult contains_forest(const GeneralGraph& g, const LinearForestSpec& spec, std::uint64_t budget) {
  return contains_forest(HostGraph::from(g), spec, budget);
}

EmbedResult contains_forest_through_edge(const HostGraph& g, const LinearForestSpec& spec, int u, int v,
                                         std::uint64_t budget) {
  SearchState st(g, budget);
  if (!st.fits(spec.parts())) return finish(st, false, {});
  st.take(u);
  st.take(v);
  const auto& parts = spec.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    std::vector<int> rest;
    rest.reserve(parts.size() - 1);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) rest.push_back(parts[j]);
    AnchoredSearch search(st, u, v);
    if (search.run(parts[i], rest)) {
      std::vector<std::vector<int>> paths = search.rest_paths();
      paths.insert(paths.begin() + static_cast<std::ptrdiff_t>(i), search.anchored_path());
      return finish(st, true, std::move(paths));
    }
    if (st.exceeded) break;
  }
  return finish(st, false, {});
}

bool verify_certificate(const HostGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert) {
  const auto& parts = spec.parts();
  if (cert.paths.size() != parts.size()) return false;
  std::set<int> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& path = cert.paths[i];
    if (static_cast<int>(path.size()) != parts[i]) return false;
    for (std::size_t j = 0; j < path.size(); ++j) {
      const int v = path[j];
      if (v < 0 || v >= g.order()) return false;
      if (!seen.insert(v).second) return false;
      if (j > 0 && !g.adjacent(path[j - 1], v)) return false;
    }
  }
  return true;
}

bool verify_certificate(const BipartiteGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert) {
  return verify_certificate(HostGraph::from(g), spec, cert);
}

bool verify_certificate(const GeneralGraph& g, const LinearForestSpec& spec, const EmbeddingCertificate& cert) {
  return verify_certificate(HostGraph::from(g), spec, cert);
}

std::string format_path(std::span<const int> path, std::optional<int> bipartite_m) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '-';
    const int v = path[i];
    if (bipartite_m) {
      out += v < *bipartite_m ? "x" + std::to_string(v) : "y" + std::to_string(v - *bipartite_m);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

}  // namespace forest_turan

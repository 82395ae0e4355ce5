#include <doctest.h>

#include <random>
#include <set>

#include "forest_turan/canonical.hpp"
#include "forest_turan/constructions.hpp"
#include "forest_turan/embed.hpp"
#include "support.hpp"

using namespace forest_turan;
using testing_support::naive_contains;

namespace {

LinearForestSpec S(const char* text) { return LinearForestSpec::parse(text); }

bool is_path(const BipartiteGraph& g, const std::vector<int>& path) {
  const auto h = to_general(g);
  std::set<int> seen(path.begin(), path.end());
  if (seen.size() != path.size()) return false;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!h.has_edge(path[i - 1], path[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("find_path examples") {
  const auto c4 = complete_bipartite(2, 2);
  const auto path = find_path(c4, 4);
  REQUIRE(path.has_value());
  CHECK(path->size() == 4);
  CHECK(is_path(c4, *path));
  CHECK_FALSE(find_path(complete_bipartite(2, 3), 7).has_value());
  CHECK_FALSE(find_path(complete_bipartite(1, 3), 4).has_value());
  CHECK(find_path(complete_bipartite(1, 3), 3).has_value());
}

TEST_CASE("find_path avoids forbidden vertices") {
  const auto c4 = complete_bipartite(2, 2);
  const std::vector<int> forbid{0};
  CHECK(find_path(c4, 3, forbid).has_value());
  CHECK_FALSE(find_path(c4, 4, forbid).has_value());
}

TEST_CASE("contains_forest examples") {
  const auto c4 = complete_bipartite(2, 2);
  const auto r = contains_forest(c4, S("2,2"));
  REQUIRE(r.found());
  CHECK(verify_certificate(c4, S("2,2"), *r.certificate));
  CHECK(r.certificate->paths.size() == 2);

  CHECK(contains_forest(complete_bipartite(1, 3), S("2,2")).status == EmbedStatus::free);
  CHECK(contains_forest(z_graph(5, 8, 2), S("5,5")).status == EmbedStatus::free);
  CHECK(contains_forest(z_graph(5, 8, 3), S("5,5")).status == EmbedStatus::free);
  CHECK(contains_forest(complete_bipartite(5, 8), S("5,5")).found());
}

TEST_CASE("certificate checks") {
  const auto c4 = complete_bipartite(2, 2);
  const auto spec = S("2,2");
  CHECK(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 2}, {1, 3}}}));
  CHECK_FALSE(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 2}, {0, 3}}}));  // repeated vertex
  CHECK_FALSE(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 1}, {2, 3}}}));  // x0, x1 not adjacent
  CHECK_FALSE(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 2}}}));          // missing a part
  CHECK_FALSE(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 2, 1}, {3, 1}}}));
  CHECK_FALSE(verify_certificate(c4, spec, EmbeddingCertificate{{{0, 9}, {1, 3}}}));  // out of range
}

TEST_CASE("format_path") {
  const std::vector<int> p{0, 2, 1};
  CHECK(format_path(p, 2) == "x0-y0-x1");
  CHECK(format_path(p, std::nullopt) == "0-2-1");
}

TEST_CASE("agrees with injective-assignment checker, bipartite m+n <= 8") {
  const auto specs = testing_support::all_specs(8);
  REQUIRE(specs.size() == 21);
  std::size_t classes = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; m + n <= 8; ++n) {
      std::set<CanonicalKey> seen;
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto g = testing_support::bipartite_from_mask(m, n, mask);
        if (!seen.insert(canonical_key(g)).second) continue;
        ++classes;
        for (const auto& spec : specs) {
          const auto r = contains_forest(g, spec);
          REQUIRE(r.status != EmbedStatus::budget_exceeded);
          const bool naive = naive_contains(g, spec);
          if (r.found() != naive) {
            FAIL_CHECK("mismatch m=" << m << " n=" << n << " mask=" << mask << " spec=" << spec.to_string());
          }
          if (r.found()) CHECK(verify_certificate(g, spec, *r.certificate));
        }
      }
    }
  }
  CHECK(classes > 100);
}

TEST_CASE("agrees with injective-assignment checker, general order <= 6") {
  const auto specs = testing_support::all_specs(6);
  for (int order = 1; order <= 6; ++order) {
    std::set<CanonicalKey> seen;
    const std::uint64_t total = std::uint64_t{1} << (order * (order - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto g = testing_support::general_from_mask(order, mask);
      if (!seen.insert(canonical_key(g)).second) continue;
      for (const auto& spec : specs) {
        const auto r = contains_forest(g, spec);
        if (r.found() != naive_contains(g, spec)) {
          FAIL_CHECK("mismatch order=" << order << " mask=" << mask << " spec=" << spec.to_string());
        }
        if (r.found()) CHECK(verify_certificate(g, spec, *r.certificate));
      }
    }
  }
}

TEST_CASE("adding an edge never destroys a copy") {
  std::mt19937 rng(21);
  const auto specs = testing_support::all_specs(9);
  std::uniform_int_distribution<int> side(2, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = side(rng), n = side(rng);
    auto g = testing_support::random_bipartite(rng, m, n, 0.3);
    const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
    bool before = contains_forest(g, spec).found();
    for (int step = 0; step < 6; ++step) {
      auto edges = g.edges();
      edges.emplace_back(std::uniform_int_distribution<int>(0, m - 1)(rng), std::uniform_int_distribution<int>(0, n - 1)(rng));
      g = BipartiteGraph::from_edges(m, n, edges);
      const bool after = contains_forest(g, spec).found();
      CHECK((!before || after));
      before = after;
    }
  }
}

TEST_CASE("through-edge search decides containment when g - e is free") {
  std::mt19937 rng(8);
  const auto specs = testing_support::all_specs(8);
  std::uniform_int_distribution<int> side(2, 5);
  int decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = side(rng), n = side(rng);
    const auto g = testing_support::random_bipartite(rng, m, n, 0.5);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
    const auto [x, y] = edges[static_cast<std::size_t>(trial) % edges.size()];
    std::vector<Edge> rest;
    for (const auto& e : edges)
      if (e != Edge{x, y}) rest.push_back(e);
    if (contains_forest(BipartiteGraph::from_edges(m, n, rest), spec).found()) continue;
    const auto host = HostGraph::from(g);
    const auto through = contains_forest_through_edge(host, spec, x, m + y);
    CHECK(through.found() == contains_forest(g, spec).found());
    if (through.found()) CHECK(verify_certificate(g, spec, *through.certificate));
    ++decided;
  }
  CHECK(decided > 50);
}

TEST_CASE("host graph edge stack") {
  HostGraph h(2, 2);
  h.push_edge(0, 2);
  h.push_edge(1, 3);
  CHECK(h.adjacent(2, 0));
  h.pop_edge(1, 3);
  CHECK_FALSE(h.adjacent(1, 3));
  CHECK(h.adjacent(0, 2));
  CHECK(h.bipartite());
  CHECK(h.side_size(0) == 2);
}

TEST_CASE("step budget is reported, not hung") {
  const auto g = disjoint_union(complete_graph(6), complete_graph(6));
  const auto r = contains_forest(g, S("7"), 10);
  CHECK(r.status == EmbedStatus::budget_exceeded);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(contains_forest(g, S("7")).status == EmbedStatus::free);
}

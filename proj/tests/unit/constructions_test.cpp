#include <doctest.h>

#include <random>

#include "forest_turan/canonical.hpp"
#include "forest_turan/constructions.hpp"
#include "forest_turan/embed.hpp"
#include "forest_turan/errors.hpp"
#include "forest_turan/graph6.hpp"
#include "support.hpp"

using namespace forest_turan;

namespace {

LinearForestSpec S(const char* text) { return LinearForestSpec::parse(text); }

std::size_t edges_of(const AnyGraph& g) {
  return std::visit([](const auto& h) { return h.edge_count(); }, g);
}

}  // namespace

TEST_CASE("complete bipartite") {
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(complete_bipartite(0, 5).edge_count() == 0);
  CHECK(complete_bipartite(1, 1).edges() == std::vector<Edge>{{0, 0}});
}

TEST_CASE("K_{p,n} plus isolated") {
  const auto g = kpn_plus_isolated(2, 20, 1);
  CHECK(g.m() == 3);
  CHECK(g.n() == 20);
  CHECK(g.edge_count() == 40);
  CHECK(kpn_plus_isolated(1, 1, 0) == complete_bipartite(1, 1));
  const auto h = kpn_plus_isolated(2, 5, 3);
  CHECK(h.edge_count() == 10);
  for (int x = 2; x < 5; ++x) CHECK(h.degree_x(x) == 0);
}

TEST_CASE("double block on one side") {
  CHECK(double_block_same_side(2, 1, 20).edge_count() == 40);
  const auto g = double_block_same_side(2, 0, 20);
  CHECK(g.edge_count() == 40);
  CHECK(canonical_key(g) == canonical_key(kpn_plus_isolated(2, 20, 2)));
  const std::vector<Edge> two_cherries{{0, 0}, {0, 1}, {1, 2}, {1, 3}};
  CHECK(double_block_same_side(1, 2, 4) == build_bipartite(2, 4, two_cherries));
}

TEST_CASE("two block") {
  CHECK(two_block(2, 20, 6, 1).edge_count() == 42);
  CHECK(two_block(3, 20, 10, 2).edge_count() == 68);
  for (int p = 1; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(two_block(p, 9, p + q, 0) == kpn_plus_isolated(p, 9, q));
}

TEST_CASE("Z graphs") {
  CHECK(z_graph(4, 6, 2).edge_count() == 14);
  for (int p = 1; p <= 4; ++p)
    for (int m = p; m <= 9; ++m) CHECK(z_graph(m, 12, p).edge_count() == static_cast<std::size_t>(p * 12 + m - p));
  // Z^1 is the double star: a spanning tree with two centres
  const auto ds = z_graph(4, 5, 1);
  CHECK(ds.edge_count() == 8);
  CHECK(ds.degree_x(0) == 5);
  CHECK(ds.degree_y(0) == 4);
  CHECK_THROWS_AS(z_graph(2, 5, 3), DomainError);
  CHECK(z_plus_isolated(3, 5, 2, 2).m() == 5);
}

TEST_CASE("pendant graph") {
  const auto g = pendant_graph(1, 10, 2);
  CHECK(g.m() == 3);
  CHECK(g.edge_count() == 12);
  CHECK(pendant_graph(2, 5, 0) == complete_bipartite(2, 5));
  CHECK_THROWS_AS(pendant_graph(1, 3, 4), ConstructionError);
}

TEST_CASE("matchings and C4 families") {
  CHECK(matching_graph(4).edge_count() == 2);
  const auto m5 = matching_graph(5);
  CHECK(m5.edge_count() == 2);
  CHECK(m5.degree(4) == 0);
  CHECK(matching_graph(0).order() == 0);
  CHECK(bipartite_matching(3, 5).edge_count() == 3);
  CHECK(c4_copies(3).edge_count() == 12);
  CHECK(c4_double_star(1, 2, 3).edge_count() == 8);
}

TEST_CASE("nikiforov graphs") {
  CHECK(canonical_key(nikiforov_graph(1, 5, false)) == canonical_key(to_general(complete_bipartite(1, 4))));
  CHECK(nikiforov_graph(1, 5, true).edge_count() == 5);
  CHECK(nikiforov_graph(2, 6, false).edge_count() == 9);
  CHECK_THROWS_AS(nikiforov_graph(3, 4, false), ConstructionError);
}

TEST_CASE("construction output is deterministic") {
  CHECK(to_graph6(z_graph(5, 8, 3)) == to_graph6(z_graph(5, 8, 3)));
  CHECK(to_bipartite_text(two_block(2, 7, 5, 1)) == to_bipartite_text(two_block(2, 7, 5, 1)));
}

TEST_CASE("family dispatch") {
  CHECK(std::get<BipartiteGraph>(build_family({"K", {2, 3}})) == complete_bipartite(2, 3));
  CHECK(std::get<BipartiteGraph>(build_family({"z", {5, 8, 3}})) == z_graph(5, 8, 3));
  CHECK(std::get<GeneralGraph>(build_family({"nikiforov", {2, 6, 1}})) == nikiforov_graph(2, 6, true));
  CHECK_THROWS_AS(build_family({"petersen", {}}), ConstructionError);
  CHECK_THROWS_AS(build_family({"K", {2}}), ConstructionError);
  CHECK(family_catalogue().size() == 12);
}

TEST_CASE("closed-form edge counts match built graphs (random, order <= 500)") {
  std::mt19937 rng(17);
  auto r = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<FamilyDescriptor> ds;
    const int a = r(0, 200), b = r(0, 250);
    ds.push_back({"K", {a, b}});
    const int p = r(1, 120), n = r(1, 250);
    ds.push_back({"kpn_iso", {p, n, r(0, 120)}});
    ds.push_back({"double_block", {r(0, 120), r(0, n), n}});
    const int m = r(p, 240), bb = r(0, n);
    ds.push_back({"two_block", {p, n, m, bb}});
    const int k = r(1, m);
    ds.push_back({"z", {m, n, k}});
    ds.push_back({"z_iso", {m, n, k, r(0, 240 - m + 1)}});
    ds.push_back({"pendant", {p, n, r(0, n)}});
    ds.push_back({"matching_bip", {r(0, n), n}});
    ds.push_back({"c4_copies", {r(0, 125)}});
    ds.push_back({"c4_double_star", {r(0, 60), r(1, 120), r(1, 120)}});
    ds.push_back({"matching", {r(0, 500)}});
    const int pp = r(0, 60);
    ds.push_back({"nikiforov", {pp, r(pp + 2, 500), r(0, 1)}});
    for (const auto& d : ds) CHECK_MESSAGE(static_cast<std::int64_t>(edges_of(build_family(d))) == family_edge_count(d), d.to_string());
  }
}

TEST_CASE("formula descriptors are F-free (m+n <= 20)") {
  auto specs = testing_support::all_specs(10);
  std::size_t checked = 0;
  for (const auto& spec : specs) {
    const int first_m = spec.size() == 1 ? 1 : spec.p() + 1;
    for (int m = first_m; 2 * m <= 20; ++m)
      for (int n = m; m + n <= 20; ++n)
        for (const auto& d : ex_forest_bipartite(m, n, spec).extremal) {
          const auto g = std::get<BipartiteGraph>(build_family(d));
          const auto res = contains_forest(g, spec);
          CHECK_MESSAGE(res.status == EmbedStatus::free, spec.to_string() << " " << d.to_string());
          ++checked;
        }
  }
  CHECK(checked > 1000);
}

TEST_CASE("general extremal graphs are F-free") {
  for (const char* s : {"2,2", "4", "5,5", "4,2", "5,3", "6", "7,2"}) {
    const auto spec = S(s);
    for (int n = spec.p() + 2; n <= 12; ++n) {
      const auto d = ex_forest_general(n, spec).extremal.front();
      const auto g = std::get<GeneralGraph>(build_family(d));
      CHECK(static_cast<std::int64_t>(g.edge_count()) == ex_forest_general(n, spec).value);
      CHECK_MESSAGE(contains_forest(g, spec).status == EmbedStatus::free, s << " n=" << n);
    }
  }
}

TEST_CASE("K33 plus an isolated vertex ties Z^2_{3,4} without being isomorphic") {
  const auto g = disjoint_union(complete_bipartite(3, 3), BipartiteGraph(0, 1));
  CHECK(g.m() == 3);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 9);
  CHECK(contains_forest(g, S("7")).status == EmbedStatus::free);
  CHECK(canonical_key(g) != canonical_key(z_graph(3, 4, 2)));
  CHECK(ex_path_bipartite(3, 4, 7).value == 9);
}

TEST_CASE("K_{3,4} plus an edge beats the P5uP3 formula at m = 4, n = 5") {
  const auto g = disjoint_union(complete_bipartite(3, 4), complete_bipartite(1, 1));
  CHECK(g.m() == 4);
  CHECK(g.n() == 5);
  CHECK(g.edge_count() == 13);
  CHECK(contains_forest(g, S("5,3")).status == EmbedStatus::free);
  CHECK(ex_forest_bipartite(4, 5, S("5,3")).value == 11);
}

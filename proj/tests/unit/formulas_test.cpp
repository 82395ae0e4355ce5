#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "forest_turan/constructions.hpp"
#include "forest_turan/embed.hpp"
#include "forest_turan/errors.hpp"
#include "forest_turan/formulas.hpp"
#include "support.hpp"

using namespace forest_turan;

namespace {

LinearForestSpec S(const char* text) { return LinearForestSpec::parse(text); }

std::size_t built_edges(const FamilyDescriptor& d) {
  return std::visit([](const auto& g) { return g.edge_count(); }, build_family(d));
}

// Forests used by the property sweeps: every spec with total order <= 10
// plus a few longer ones.
std::vector<LinearForestSpec> sweep_specs() {
  auto out = testing_support::all_specs(10);
  for (const char* s : {"12", "11", "7,7", "9,7,5", "6,6,2", "13,3"}) out.push_back(S(s));
  return out;
}

}  // namespace

TEST_CASE("general path bound") {
  CHECK(ex_path_general(6, 3).value == 3);
  CHECK(ex_path_general(10, 4).value == 10);
  for (int k = 2; k <= 12; ++k) CHECK(ex_path_general(k, k).value == k * (k - 2) / 2);
  CHECK(ex_path_general(6, 3).validity == Validity::upper_bound);
  CHECK_THROWS_AS(ex_path_general(3, 4), DomainError);
}

TEST_CASE("bipartite path table examples") {
  auto r = ex_path_bipartite(3, 5, 3);
  CHECK(r.value == 3);
  CHECK(r.case_label == "Thm1.2(2)");
  r = ex_path_bipartite(4, 4, 5);
  CHECK(r.value == 8);
  CHECK(r.case_label == "Thm1.2(3)/m=n even");
  r = ex_path_bipartite(3, 3, 7);
  CHECK(r.value == 9);
  CHECK(r.case_label == "Thm1.2(4)/m=n=p′+1");
  r = ex_path_bipartite(1, 5, 4);
  CHECK(r.value == 5);
  CHECK(r.case_label == "mn");
  r = ex_path_bipartite(3, 10, 6);
  CHECK(r.value == 20);
  CHECK(r.case_label == "Thm1.2(1)/p′+1≤m≤2p′");
  CHECK(r.validity == Validity::exact);
  for (int m = 1; m <= 6; ++m) CHECK(ex_path_bipartite(m, 9, 2).value == 0);
  CHECK_THROWS_AS(ex_path_bipartite(5, 4, 4), DomainError);
}

TEST_CASE("path upper bound examples and dominance") {
  CHECK(ex_path_upper(3, 100, 3) == 3);
  CHECK(ex_path_upper(3, 10, 6) == 24);
  CHECK(ex_path_upper(5, 5, 4) == 9);
  // The bound is only claimed for n well above m. On the full square range it
  // fails exactly at k = 5, m = n even, where n/2 disjoint C_4 give 2n edges.
  std::set<std::tuple<int, int, int>> exceptions, expected;
  for (int k = 2; k <= 12; ++k)
    for (int m = 1; m <= 200; ++m)
      for (int n = m; n <= 200; ++n) {
        const auto v = ex_path_bipartite(m, n, k).value;
        if (v > ex_path_upper(m, n, k)) exceptions.emplace(m, n, k);
        if (v > static_cast<std::int64_t>(m) * n) FAIL_CHECK("exceeds mn at " << m << "," << n << "," << k);
      }
  for (int n = 2; n <= 200; n += 2) expected.emplace(n, n, 5);
  CHECK(exceptions == expected);
  for (int c = 1; c <= 5; ++c) {
    const auto g = c4_copies(c);
    CHECK(contains_forest(g, S("5")).status == EmbedStatus::free);
    CHECK(static_cast<std::int64_t>(g.edge_count()) == ex_path_upper(2 * c, 2 * c, 5) + 1);
  }
}

TEST_CASE("general forest formula") {
  CHECK(ex_forest_general(10, S("2,2")).value == 9);
  CHECK(ex_forest_general(20, S("5,5")).value == 55);
  for (int n = 3; n <= 30; ++n) CHECK(ex_forest_general(n, S("4")).value == n - 1);
  CHECK_THROWS_AS(ex_forest_general(10, S("3,3")), HypothesisError);
  CHECK_THROWS_AS(ex_forest_general(4, S("5,5")), DomainError);
  CHECK(ex_forest_general(20, S("5,5")).extremal.front() == FamilyDescriptor{"nikiforov", {3, 20, 1}});
}

TEST_CASE("bipartite forest table examples") {
  auto r = ex_forest_bipartite(3, 20, S("4,2"));
  CHECK(r.value == 40);
  CHECK(r.case_label == "Thm1.5(1)/p+1≤m≤2p");
  r = ex_forest_bipartite(4, 20, S("5,3"));
  CHECK(r.value == 41);
  CHECK(r.case_label == "Thm1.5(3)/otherwise");
  r = ex_forest_bipartite(3, 10, S("3,3"));
  CHECK(r.value == 12);
  CHECK(r.case_label == "Thm1.5(3)/all-3");
  r = ex_forest_bipartite(5, 20, S("5,5"));
  CHECK(r.value == 62);
  CHECK(r.case_label == "Thm1.5(4)");
  CHECK(r.extremal == std::vector<FamilyDescriptor>{{"z", {5, 20, 3}}});
  r = ex_forest_bipartite(2, 4, S("2,2"));
  CHECK(r.value == 4);
  CHECK(r.validity == Validity::asymptotic);
  CHECK_THROWS_AS(ex_forest_bipartite(2, 20, S("5,3")), DomainError);
  CHECK_THROWS_AS(ex_forest_bipartite(6, 5, S("2,2")), DomainError);
}

TEST_CASE("single path forests follow the path table") {
  for (int k = 2; k <= 12; ++k)
    for (int m = 1; m <= 25; ++m)
      for (int n = m; n <= 40; ++n) {
        const auto a = ex_forest_bipartite(m, n, LinearForestSpec({k}));
        const auto b = ex_path_bipartite(m, n, k);
        CHECK(a.value == b.value);
        CHECK(a.case_label == b.case_label);
      }
}

TEST_CASE("forest value is non-decreasing in n") {
  for (const auto& spec : sweep_specs()) {
    const int first_m = spec.size() == 1 ? 1 : spec.p() + 1;
    for (int m = first_m; m <= 30; ++m) {
      std::int64_t prev = -1;
      for (int n = m; n <= 200; ++n) {
        const auto v = ex_forest_bipartite(m, n, spec).value;
        if (v < prev) FAIL_CHECK(spec.to_string() << " m=" << m << " drops at n=" << n);
        prev = v;
      }
    }
  }
}

TEST_CASE("large-m two-block values equal f(m,n;p,b)") {
  int hits = 0;
  for (const auto& spec : sweep_specs()) {
    if (spec.size() == 1) continue;
    const int p = spec.p();
    const int b = spec.k_min() / 2 - 1;
    for (int m = p + 1; m <= 40; ++m)
      for (int n = m; n <= 80; n += 3) {
        const auto r = ex_forest_bipartite(m, n, spec);
        const bool large = r.case_label == "Thm1.5(1)/m≥2p+1" || r.case_label == "Thm1.5(2)/m≥2p+1" ||
                           r.case_label == "Thm1.5(5)/m≥3p+1";
        if (!large) continue;
        ++hits;
        CHECK(r.value == p * (n - b) + (m - p) * b);
        CHECK(r.value == f_helper(m, n, p, b));
      }
  }
  CHECK(hits > 1000);
}

TEST_CASE("k_min = 2 makes both case (1) regimes pn") {
  for (const char* s : {"2,2", "4,2", "6,3,2"}) {
    const auto spec = S(s);
    for (int m = spec.p() + 1; m <= 20; ++m) CHECK(ex_forest_bipartite(m, 30, spec).value == spec.p() * 30);
  }
}

TEST_CASE("f helper") {
  CHECK(f_helper(6, 20, 2, 0) == 40);
  CHECK(f_helper(5, 5, 0, 0) == 0);
  CHECK(f_helper(6, 20, 2, 1) == 42);
}

TEST_CASE("spectral bound") {
  CHECK(spectral_bound(5, S("2,2")) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(spectral_bound(11, S("5,3")) == doctest::Approx(std::sqrt(18.0)).epsilon(1e-15));
  for (const char* s : {"2,2", "5,3", "5,5", "8"}) {
    const auto spec = S(s);
    CHECK(spectral_bound(spec.p() + 1, spec) == doctest::Approx(std::sqrt(spec.p())).epsilon(1e-15));
    CHECK_THROWS_AS(spectral_bound(spec.p(), spec), DomainError);
  }
  CHECK_THROWS_AS(spectral_bound(5, S("3")), DomainError);
}

TEST_CASE("every descriptor builds with the formula's edge count (order <= 300)") {
  std::size_t checked = 0;
  for (const auto& spec : sweep_specs()) {
    const int first_m = spec.size() == 1 ? 1 : spec.p() + 1;
    for (int m = first_m; m <= 60; m += (m < 16 ? 1 : 11)) {
      for (int n = m; m + n <= 300; n += (n < 24 ? 1 : 37)) {
        const auto r = ex_forest_bipartite(m, n, spec);
        REQUIRE_FALSE(r.extremal.empty());
        for (const auto& d : r.extremal) {
          const auto g = build_family(d);
          const auto* bg = std::get_if<BipartiteGraph>(&g);
          REQUIRE(bg != nullptr);
          CHECK(bg->m() == m);
          CHECK(bg->n() == n);
          CHECK(static_cast<std::int64_t>(bg->edge_count()) == r.value);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("P7 inequalities") {
  auto r = check_p7_lemmas(3, std::nullopt, 12);
  CHECK(r.first_violations.empty());
  std::set<std::pair<int, int>> eq;
  for (const auto& pt : r.first_equalities) eq.emplace(pt.n1, pt.m1);
  CHECK(eq == std::set<std::pair<int, int>>{{0, 0}, {2, 6}});

  r = check_p7_lemmas(3, 10, 12);
  CHECK(r.second_violations.empty());
  REQUIRE(r.second_equalities.size() == 1);
  CHECK(r.second_equalities.front().n1 == 2);
  CHECK(r.second_equalities.front().m1 == 7);

  CHECK_THROWS_AS(check_p7_lemmas(3, 9, 12), DomainError);
  CHECK_THROWS_AS(check_p7_lemmas(2, std::nullopt, 12), DomainError);
}

TEST_CASE("ex_p7 is symmetric and vanishes on empty sides") {
  for (int a = 0; a <= 15; ++a)
    for (int b = 0; b <= 15; ++b) {
      CHECK(ex_p7(a, b) == ex_p7(b, a));
      if (a == 0 || b == 0) CHECK(ex_p7(a, b) == 0);
    }
  CHECK(ex_p7(3, 4) == 9);
}

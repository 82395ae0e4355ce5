#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forest_turan/spec.hpp"

namespace forest_turan {

// Names a constructor in constructions.hpp plus its integer parameters,
// e.g. {"two_block", {2, 20, 6, 1}}.
struct FamilyDescriptor {
  std::string family;
  std::vector<int> params;

  /// "two_block(2,20,6,1)"
  std::string to_string() const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

enum class Validity { exact, asymptotic, upper_bound };

std::string to_string(Validity v);

struct FormulaResult {
  std::int64_t value = 0;
  std::string case_label;
  Validity validity = Validity::exact;
  std::vector<FamilyDescriptor> extremal;
};

/// Sum of floor(k_i/2) minus one.
int p_value(const LinearForestSpec& spec);

/// Upper bound floor((k-2)n/2) on ex(n, P_k). Requires n >= k >= 1.
FormulaResult ex_path_general(int n, int k);

/// Exact ex(m, n; P_k) for 1 <= m <= n, k >= 2, including the m <= floor(k/2)-1
/// regime where the answer is mn.
FormulaResult ex_path_bipartite(int m, int n, int k);

/// max(m, p'(m+n-1)) with p' = floor(k/2) - 1.
std::int64_t ex_path_upper(int m, int n, int k);

/// C(p,2) + p(n-p) + c for large n. Throws HypothesisError when every part is 3.
FormulaResult ex_forest_general(int n, const LinearForestSpec& spec);

/// ex(m, n; F) for p+1 <= m <= n and large n. Single-path specs are
/// delegated to ex_path_bipartite. m <= p is refused with DomainError.
FormulaResult ex_forest_bipartite(int m, int n, const LinearForestSpec& spec);

/// a(n-b) + (m-a)b, the edge count of K_{a,n-b} ∪ K_{m-a,b}.
std::int64_t f_helper(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);

/// sqrt(p(n-p)); requires n > p >= 1.
double spectral_bound(int n, const LinearForestSpec& spec);

// Two inequalities on ex(n1, m1; P_7) used for the k_min = 7 case:
//   (A) m1 <= 2p:       ex <= p*n1 + m1
//   (B) m >= 3p+1, m1 <= m-p: ex <= p(n1-2) + m - p + m1
struct P7Point {
  int n1 = 0;
  int m1 = 0;
  std::int64_t ex = 0;
  std::int64_t bound = 0;

  friend bool operator==(const P7Point&, const P7Point&) = default;
};

struct P7LemmaReport {
  int p = 0;
  std::optional<int> m;
  int limit = 0;
  std::vector<P7Point> first_violations;
  std::vector<P7Point> first_equalities;
  std::vector<P7Point> second_violations;
  std::vector<P7Point> second_equalities;
};

/// ex(a, b; P_7) with sides in either order; zero when a side is empty.
std::int64_t ex_p7(int a, int b);

/// Scans 0 <= n1 <= limit and 0 <= m1 <= min(cap, limit). The second
/// inequality is only checked when `m` is given. Requires p >= 3 and, for the
/// second inequality, m >= 3p+1.
P7LemmaReport check_p7_lemmas(int p, std::optional<int> m, int limit);

}  // namespace forest_turan

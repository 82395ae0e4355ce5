#include "forest_turan/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

FamilyDescriptor family(std::string name, std::vector<int> params) {
  return FamilyDescriptor{std::move(name), std::move(params)};
}

std::int64_t i64(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::string FamilyDescriptor::to_string() const {
  std::string out = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out + ")";
}

std::string to_string(Validity v) {
  switch (v) {
    case Validity::exact:
      return "exact";
    case Validity::asymptotic:
      return "asymptotic";
    case Validity::upper_bound:
      return "upper_bound";
  }
  return "unknown";
}

int p_value(const LinearForestSpec& spec) { return spec.p(); }

FormulaResult ex_path_general(int n, int k) {
  if (k < 2) throw DomainError("ex_path_general: k must be at least 2");
  if (n < k) throw DomainError("ex_path_general: requires n >= k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  FormulaResult r;
  r.value = (i64(k) - 2) * i64(n) / 2;
  r.case_label = "Thm1.1";
  r.validity = Validity::upper_bound;
  return r;
}

FormulaResult ex_path_bipartite(int m, int n, int k) {
  if (k < 2) throw DomainError("ex_path_bipartite: k must be at least 2");
  if (m < 1) throw DomainError("ex_path_bipartite: m must be at least 1");
  if (m > n) {
    throw DomainError("ex_path_bipartite: requires m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                      "); orient the sides first");
  }
  const int pp = k / 2 - 1;
  FormulaResult r;
  r.validity = Validity::exact;

  if (m <= pp) {
    r.value = i64(m) * n;
    r.case_label = "mn";
    r.extremal = {family("K", {m, n})};
    return r;
  }

  if (k % 2 == 0) {
    if (m <= 2 * pp) {
      r.value = i64(pp) * n;
      r.case_label = "Thm1.2(1)/p′+1≤m≤2p′";
      r.extremal = {family("kpn_iso", {pp, n, m - pp})};
      if (m == 2 * pp) r.extremal.push_back(family("two_block", {pp, n, m, pp}));
    } else {
      r.value = i64(pp) * (i64(m) + n - 2 * i64(pp));
      r.case_label = "Thm1.2(1)/m≥2p′+1";
      r.extremal = {family("two_block", {pp, n, m, pp})};
    }
    return r;
  }

  if (k == 3) {
    r.value = m;
    r.case_label = "Thm1.2(2)";
    r.extremal = {family("matching_bip", {m, n})};
    return r;
  }

  if (k == 5) {
    if (m == n && n % 2 == 0) {
      r.value = i64(n) + m;
      r.case_label = "Thm1.2(3)/m=n even";
      r.extremal = {family("c4_copies", {n / 2})};
    } else {
      r.value = i64(n) + m - 1;
      r.case_label = "Thm1.2(3)/otherwise";
      for (int c = 0; 2 * c <= m - 1; ++c) r.extremal.push_back(family("c4_double_star", {c, m - 2 * c, n - 2 * c}));
    }
    return r;
  }

  // k odd, k >= 7
  if (m == n && m == pp + 1) {
    r.value = (i64(pp) + 1) * (i64(pp) + 1);
    r.case_label = "Thm1.2(4)/m=n=p′+1";
    r.extremal = {family("K", {pp + 1, pp + 1})};
  } else if (m == n && m == 2 * pp + 2) {
    r.value = 2 * (i64(pp) + 1) * (i64(pp) + 1);
    r.case_label = "Thm1.2(4)/m=n=2p′+2";
    r.extremal = {family("two_block", {pp + 1, n, m, pp + 1})};
  } else if (m >= 2 * pp + 3 || (n > m && m == 2 * pp + 2)) {
    r.value = i64(pp) * (i64(m) + n - 2 * i64(pp));
    r.case_label = "Thm1.2(4)/m≥2p′+3 or n>m=2p′+2";
    r.extremal = {family("two_block", {pp, n, m, pp})};
  } else {
    r.value = i64(pp) * n + m - pp;
    r.case_label = "Thm1.2(4)/otherwise";
    r.extremal = {family("z", {m, n, pp})};
  }
  return r;
}

std::int64_t ex_path_upper(int m, int n, int k) {
  if (k < 2) throw DomainError("ex_path_upper: k must be at least 2");
  const std::int64_t pp = k / 2 - 1;
  return std::max<std::int64_t>(m, pp * (i64(m) + n - 1));
}

FormulaResult ex_forest_general(int n, const LinearForestSpec& spec) {
  if (spec.all_equal(3)) {
    throw HypothesisError("ex_forest_general: every path has order 3; the formula needs some k_i != 3");
  }
  const int p = spec.p();
  const int c = spec.all_odd() ? 1 : 0;
  if (n < p + 2) {
    throw DomainError("ex_forest_general: requires n >= p + 2 (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
  FormulaResult r;
  r.value = i64(p) * (p - 1) / 2 + i64(p) * (n - p) + c;
  r.case_label = c ? "Thm1.4/c=1" : "Thm1.4/c=0";
  r.validity = Validity::asymptotic;
  r.extremal = {family("nikiforov", {p, n, c})};
  return r;
}

FormulaResult ex_forest_bipartite(int m, int n, const LinearForestSpec& spec) {
  if (spec.size() == 1) return ex_path_bipartite(m, n, spec.parts().front());

  if (m > n) {
    throw DomainError("ex_forest_bipartite: requires m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                      "); orient the sides first");
  }
  const int p = spec.p();
  if (m <= p) {
    throw DomainError("ex_forest_bipartite: m=" + std::to_string(m) + " <= p=" + std::to_string(p) +
                      " is outside the formula's regime; use the oracle (brute) for this range");
  }
  const int kl = spec.k_min();
  const int b = kl / 2 - 1;
  const std::int64_t two_block_value = f_helper(m, n, p, b);
  const std::int64_t z_value = i64(p) * n + m - p;

  FormulaResult r;
  r.validity = Validity::asymptotic;

  if (!spec.all_odd()) {
    if (m <= 2 * p) {
      r.value = i64(p) * n;
      r.case_label = "Thm1.5(1)/p+1≤m≤2p";
      if (m < 2 * p) {
        r.extremal = {family("kpn_iso", {p, n, m - p})};
      } else {
        for (int i = 0; i <= std::min(b, n); ++i) r.extremal.push_back(family("double_block", {p, i, n}));
      }
    } else {
      r.value = two_block_value;
      r.case_label = "Thm1.5(1)/m≥2p+1";
      r.extremal = {family("two_block", {p, n, m, b})};
    }
    return r;
  }

  if (kl == 3) {
    if (spec.all_equal(3)) {
      r.value = z_value;
      r.case_label = "Thm1.5(3)/all-3";
      r.extremal = {family("pendant", {p, n, m - p})};
    } else {
      r.value = i64(p) * n + 1;
      r.case_label = "Thm1.5(3)/otherwise";
      r.extremal = {family("z_iso", {p + 1, n, p, m - p - 1})};
    }
    return r;
  }

  if (kl == 5) {
    r.value = z_value;
    r.case_label = "Thm1.5(4)";
    r.extremal = {family("z", {m, n, p})};
    return r;
  }

  if (kl == 7) {
    if (m <= 3 * p) {
      r.value = z_value;
      r.case_label = "Thm1.5(5)/p+1≤m≤3p";
      r.extremal = {family("z", {m, n, p})};
    } else {
      r.value = two_block_value;
      r.case_label = "Thm1.5(5)/m≥3p+1";
      r.extremal = {family("two_block", {p, n, m, b})};
    }
    return r;
  }

  if (m <= 2 * p) {
    r.value = z_value;
    r.case_label = "Thm1.5(2)/p+1≤m≤2p";
    r.extremal = {family("z", {m, n, p})};
  } else {
    r.value = two_block_value;
    r.case_label = "Thm1.5(2)/m≥2p+1";
    r.extremal = {family("two_block", {p, n, m, b})};
  }
  return r;
}

std::int64_t f_helper(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b) {
  return a * (n - b) + (m - a) * b;
}

double spectral_bound(int n, const LinearForestSpec& spec) {
  const int p = spec.p();
  if (p < 1) throw DomainError("spectral_bound: requires p >= 1 (spec " + spec.to_string() + " has p=" + std::to_string(p) + ")");
  if (n <= p) throw DomainError("spectral_bound: requires n > p (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
  return std::sqrt(static_cast<double>(p) * static_cast<double>(n - p));
}

std::int64_t ex_p7(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("ex_p7: negative side size");
  if (a == 0 || b == 0) return 0;
  return ex_path_bipartite(std::min(a, b), std::max(a, b), 7).value;
}

P7LemmaReport check_p7_lemmas(int p, std::optional<int> m, int limit) {
  if (p < 3) throw DomainError("check_p7_lemmas: requires p >= 3");
  if (limit < 0) throw DomainError("check_p7_lemmas: negative range limit");
  if (m && *m < 3 * p + 1) {
    throw DomainError("check_p7_lemmas: second inequality requires m >= 3p+1 (m=" + std::to_string(*m) +
                      ", p=" + std::to_string(p) + ")");
  }
  P7LemmaReport report;
  report.p = p;
  report.m = m;
  report.limit = limit;

  for (int n1 = 0; n1 <= limit; ++n1) {
    for (int m1 = 0; m1 <= std::min(2 * p, limit); ++m1) {
      const P7Point pt{n1, m1, ex_p7(n1, m1), i64(p) * n1 + m1};
      if (pt.ex > pt.bound) report.first_violations.push_back(pt);
      if (pt.ex == pt.bound) report.first_equalities.push_back(pt);
    }
  }
  if (m) {
    for (int n1 = 0; n1 <= limit; ++n1) {
      for (int m1 = 0; m1 <= std::min(*m - p, limit); ++m1) {
        const P7Point pt{n1, m1, ex_p7(n1, m1), i64(p) * (n1 - 2) + *m - p + m1};
        if (pt.ex > pt.bound) report.second_violations.push_back(pt);
        if (pt.ex == pt.bound) report.second_equalities.push_back(pt);
      }
    }
  }
  return report;
}

}  // namespace forest_turan

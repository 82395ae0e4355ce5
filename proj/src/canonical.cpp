#include "forest_turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

// Visits every ordering of `items` that keeps `weight` non-increasing, i.e.
// all permutations within each block of equal weight. The visitor sees the
// ordering by const reference.
template <class Visit>
void for_each_weight_ordering(std::vector<int> items, const std::vector<int>& weight, Visit&& visit) {
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
    return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() &&
           weight[static_cast<std::size_t>(items[j])] == weight[static_cast<std::size_t>(items[i])]) {
      ++j;
    }
    if (j - i > 1) blocks.emplace_back(i, j);
    i = j;
  }
  while (true) {
    visit(static_cast<const std::vector<int>&>(items));
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(items.begin() + static_cast<std::ptrdiff_t>(lo),
                                items.begin() + static_cast<std::ptrdiff_t>(hi))) {
        break;
      }
      if (b == 0) return;
    }
    if (blocks.empty()) return;
  }
}

void append_be(std::string& out, std::uint64_t value, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
}

// rows[r] is a bitmask over `cols` columns. Returns the lexicographically
// smallest sorted column-code list over row orderings that keep row degree
// non-increasing.
std::vector<std::uint64_t> min_column_codes(const std::vector<std::uint64_t>& rows, int cols) {
  const int r = static_cast<int>(rows.size());
  std::vector<int> degree(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) degree[i] = std::popcount(rows[i]);
  std::vector<int> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);

  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> codes(static_cast<std::size_t>(cols));
  for_each_weight_ordering(idx, degree, [&](const std::vector<int>& order) {
    std::fill(codes.begin(), codes.end(), 0);
    for (int pos = 0; pos < r; ++pos) {
      const std::uint64_t row = rows[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
      const std::uint64_t bit = std::uint64_t{1} << (r - 1 - pos);
      for (int c = 0; c < cols; ++c)
        if ((row >> c) & 1U) codes[static_cast<std::size_t>(c)] |= bit;
    }
    std::sort(codes.begin(), codes.end());
    if (best.empty() || codes < best) best = codes;
  });
  if (best.empty()) best.assign(static_cast<std::size_t>(cols), 0);
  return best;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey canonical_key(const BipartiteGraph& g, SideSwap swap) {
  const int m = g.m();
  const int n = g.n();
  if (std::min(m, n) > kMaxBipartiteCanonicalSmallSide || std::max(m, n) > kMaxBipartiteCanonicalLargeSide) {
    throw DomainError("canonical_key: sides " + std::to_string(m) + "," + std::to_string(n) + " exceed the limits " +
                      std::to_string(kMaxBipartiteCanonicalSmallSide) + " (smaller) and " +
                      std::to_string(kMaxBipartiteCanonicalLargeSide) + " (larger)");
  }
  std::vector<std::uint64_t> x_rows(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> y_rows(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : g.edges()) {
    x_rows[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
    y_rows[static_cast<std::size_t>(y)] |= std::uint64_t{1} << x;
  }

  // The smaller side is permuted explicitly; the larger side is sorted.
  std::vector<std::uint64_t> codes;
  int code_bits = 0;
  if (m <= n) {
    codes = min_column_codes(x_rows, n);
    code_bits = m;
    if (m == n && swap == SideSwap::when_square) {
      auto other = min_column_codes(y_rows, m);
      if (other < codes) codes = std::move(other);
    }
  } else {
    codes = min_column_codes(y_rows, m);
    code_bits = n;
  }

  CanonicalKey key;
  key.bytes.push_back('B');
  key.bytes.push_back(static_cast<char>(m));
  key.bytes.push_back(static_cast<char>(n));
  const int code_bytes = std::max(1, (code_bits + 7) / 8);
  for (auto c : codes) append_be(key.bytes, c, code_bytes);
  return key;
}

CanonicalKey canonical_key(const GeneralGraph& g) {
  const int order = g.order();
  if (order > kMaxGeneralCanonicalOrder) {
    throw DomainError("canonical_key: order " + std::to_string(order) + " exceeds limit " +
                      std::to_string(kMaxGeneralCanonicalOrder));
  }
  std::vector<int> degree(static_cast<std::size_t>(order));
  for (int v = 0; v < order; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<int> idx(static_cast<std::size_t>(order));
  std::iota(idx.begin(), idx.end(), 0);

  const int pairs = order * (order - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  for_each_weight_ordering(idx, degree, [&](const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int bit = pairs - 1;
    for (int i = 0; i < order; ++i) {
      for (int j = i + 1; j < order; ++j, --bit) {
        if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
          code |= std::uint64_t{1} << bit;
        }
      }
    }
    best = std::min(best, code);
  });
  if (order == 0) best = 0;

  CanonicalKey key;
  key.bytes.push_back('G');
  key.bytes.push_back(static_cast<char>(order));
  append_be(key.bytes, best, std::max(1, (pairs + 7) / 8));
  return key;
}

}  // namespace forest_turan

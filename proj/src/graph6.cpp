#include "forest_turan/graph6.hpp"

#include <cctype>
#include <vector>

#include "forest_turan/errors.hpp"

namespace forest_turan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void encode_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string to_graph6(const GeneralGraph& g) {
  std::string out;
  encode_order(out, g.order());
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_graph6(const BipartiteGraph& g) { return to_graph6(to_general(g)); }

GeneralGraph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
  if (pos == end) throw ParseError("graph6: empty input", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("graph6: truncated input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
    return c - 63;
  };

  long order = 0;
  if (byte_at(pos) != 63) {
    order = byte_at(pos);
    pos += 1;
  } else if (byte_at(pos + 1) != 63) {
    for (int i = 1; i <= 3; ++i) order = (order << 6) | byte_at(pos + static_cast<std::size_t>(i));
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) order = (order << 6) | byte_at(pos + static_cast<std::size_t>(i));
    pos += 8;
  }
  if (order > 100000) throw ParseError("graph6: order too large", pos);

  const int n = static_cast<int>(order);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                         std::to_string(end - pos),
                     end - pos < need ? end : pos + need);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = byte_at(pos + k / 6);
      if ((word >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits in the last byte must be zero.
  if (bits % 6 != 0) {
    const int last = byte_at(pos + need - 1);
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", pos + need - 1);
  }
  return GeneralGraph::from_edges(n, edges);
}

std::string to_bipartite_text(const BipartiteGraph& g) {
  return std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n" + to_graph6(g) + "\n";
}

BipartiteGraph from_bipartite_text(std::string_view text) {
  std::size_t pos = 0;
  auto read_int = [&](const char* what) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 100000) throw ParseError(std::string("side size too large: ") + what, start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected side size ") + what, start);
    return static_cast<int>(v);
  };
  const int m = read_int("m");
  const int n = read_int("n");
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\r')) ++pos;
  if (pos >= text.size() || text[pos] != '\n') throw ParseError("expected newline after \"m n\" header", pos);
  ++pos;
  const std::size_t body = pos;
  GeneralGraph g;
  try {
    g = from_graph6(text.substr(body));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bipartite graph6 body: ") + e.what(), body + e.offset());
  }
  if (g.order() != m + n) {
    throw ParseError("graph6 order " + std::to_string(g.order()) + " does not match m + n = " +
                         std::to_string(m + n),
                     body);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (u >= m || v < m) {
      throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the sides",
                       body);
    }
    edges.emplace_back(u, v - m);
  }
  return BipartiteGraph::from_edges(m, n, edges);
}

}  // namespace forest_turan

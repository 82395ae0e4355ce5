#include "forest_turan/spec.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "forest_turan/errors.hpp"

namespace forest_turan {

LinearForestSpec::LinearForestSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("linear forest needs at least one path");
  for (int k : parts_) {
    if (k < 2) throw DomainError("path order " + std::to_string(k) + " is below 2");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  p_ = std::accumulate(parts_.begin(), parts_.end(), 0, [](int acc, int k) { return acc + k / 2; }) - 1;
}

LinearForestSpec LinearForestSpec::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty forest spec", i);
  const bool path_syntax = text[i] == 'P' || text[i] == 'p';
  const char separator = path_syntax ? '+' : ',';
  while (true) {
    skip_ws();
    if (path_syntax) {
      if (i >= text.size() || (text[i] != 'P' && text[i] != 'p')) {
        throw ParseError("expected 'P' in forest spec", i);
      }
      ++i;
    }
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("path order too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected path order", i);
    if (value < 2) throw ParseError("path order must be at least 2", start);
    parts.push_back(static_cast<int>(value));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != separator) {
      throw ParseError(std::string("expected '") + separator + "' in forest spec", i);
    }
    ++i;
  }
  return LinearForestSpec(std::move(parts));
}

bool LinearForestSpec::all_odd() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k % 2 == 1; });
}

bool LinearForestSpec::all_equal(int k) const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [k](int v) { return v == k; });
}

int LinearForestSpec::total_order() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string LinearForestSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += 'P' + std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace forest_turan

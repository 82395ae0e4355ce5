#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace forest_turan {

// Linear forest P_{k_1} ∪ ... ∪ P_{k_l}, path orders stored non-increasing.
class LinearForestSpec {
 public:
  /// Sorts the orders; throws DomainError if empty or any order is below 2.
  explicit LinearForestSpec(std::vector<int> parts);

  /// Accepts "5,3,2" or "P5+P3+P2" (whitespace ignored, order irrelevant).
  static LinearForestSpec parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }

  /// Sum of floor(k_i/2), minus one.
  int p() const noexcept { return p_; }
  bool all_odd() const noexcept;
  bool all_equal(int k) const noexcept;
  int k_min() const noexcept { return parts_.back(); }
  int total_order() const noexcept;

  /// "P5+P3"
  std::string to_string() const;

  friend bool operator==(const LinearForestSpec&, const LinearForestSpec&) = default;

 private:
  std::vector<int> parts_;
  int p_ = 0;
};

}  // namespace forest_turan

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ospchar {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// trimmed on construction, so (2,1,0) == (2,1); reading past the last part
/// yields 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Comma-separated decimal parts; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  /// 1-based part access: part(i) = lambda_i, zero beyond the length.
  int part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  /// mu is contained in *this (as Young diagrams).
  bool contains(const Partition& mu) const;
  /// (lambda_{from}, lambda_{from+1}, ...), 1-based.
  Partition tail(std::size_t from) const;
  /// (r, ..., r [count times], lambda_1, lambda_2, ...). Requires r >= lambda_1.
  Partition prepend_rows(int r, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of `weight` with at most `max_length` parts and largest part
/// at most `max_part`, in reverse-lexicographic order.
std::vector<Partition> partitions_of(int weight, std::size_t max_length, int max_part);

/// All partitions with weight <= max_weight, length <= max_length and largest
/// part <= max_part, ordered by weight and then reverse-lexicographically.
std::vector<Partition> partitions_up_to(int max_weight, std::size_t max_length, int max_part);

/// All partitions contained in lambda (including the empty one and lambda).
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace ospchar

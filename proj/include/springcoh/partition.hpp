#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace springcoh {

/// A box (i, j) of a partition diagram: column index i, row index j.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

struct DegreePair {
  int d1 = 0;
  int d2 = 0;
  auto operator<=>(const DegreePair&) const = default;
};

/// Weakly decreasing sequence of positive integers. Immutable after
/// construction; the empty partition is rejected.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Parses "2,2,1". Throws UsageError on malformed or non-decreasing input.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int k) const { return parts_[static_cast<std::size_t>(k)]; }

  /// Conjugate partition: dual[s] = #{ j : parts[j] > s }.
  Partition dual() const;

  /// Cells (i, j) with i < parts[j], sorted by (j, i).
  std::vector<Cell> diagram() const;

  /// (sum of i, sum of j) over the diagram.
  DegreePair degrees() const;

  /// d2 via the binomial sum over the dual partition.
  int d2_from_dual() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  /// Orders partitions reverse-lexicographically, so (n) comes first.
  bool operator<(const Partition& other) const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n (1 <= n <= 12) in reverse-lexicographic order.
std::vector<Partition> all_partitions(int n);

std::uint64_t factorial(int n);

}  // namespace springcoh

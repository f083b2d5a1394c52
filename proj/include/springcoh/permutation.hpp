#pragma once

#include <string>
#include <vector>

#include "springcoh/partition.hpp"

namespace springcoh {

/// A bijection of {0, ..., n-1}, stored as its image list. Letters are
/// 0-based internally and printed 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition of letters a and b (0-based).
  static Permutation transposition(int n, int a, int b);
  /// Cycles on consecutive blocks {0..k1-1}{k1..k1+k2-1}... of the cycle type.
  static Permutation class_representative(const Partition& cycle_type);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int letter) const { return images_[static_cast<std::size_t>(letter)]; }
  const std::vector<int>& images() const { return images_; }

  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  Partition cycle_type() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace springcoh

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "springcoh/errors.hpp"

namespace springcoh {

/// Resource limits shared by the rank and Groebner engines. Exceeding any
/// of them throws ResourceLimitError.
struct Budget {
  /// Largest catalecticant block (rows or columns) that will be eliminated.
  std::size_t max_block_dim = 20000;
  /// Cap on S-pairs processed by a single Buchberger run.
  std::size_t max_pairs = 2'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() { return Budget{}; }

  Budget with_timeout(std::chrono::seconds secs) const {
    Budget b = *this;
    b.deadline = std::chrono::steady_clock::now() + secs;
    return b;
  }

  void check_deadline(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimitError(std::string("wall-clock limit reached in ") + where);
  }
};

}  // namespace springcoh

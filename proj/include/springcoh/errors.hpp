#pragma once

#include <stdexcept>
#include <string>

namespace springcoh {

/// Bad user input: malformed partitions, unknown names, out-of-range sizes.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured limit (pair cap, block size, deadline) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different polynomial rings.
class ContextMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient that was required to be finite-dimensional is not.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ideal or character failed an S_n-equivariance requirement.
class EquivarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace springcoh

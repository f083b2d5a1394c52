#pragma once

#include <cstddef>
#include <vector>

#include "springcoh/polynomial.hpp"

namespace springcoh::linalg {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact, so entries stay integral throughout.
std::size_t bareiss_rank(IntegerMatrix matrix);

/// Rank of a rational matrix: rows are scaled to integers, then Bareiss.
std::size_t rank(const RationalMatrix& matrix);

struct Echelon {
  RationalMatrix rows;           ///< nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form over Q; pivots are 1 and are the only
/// nonzero entries in their columns.
Echelon rref(RationalMatrix matrix);

/// Basis of { v : matrix * v = 0 }, returned in reduced echelon form.
Echelon nullspace(const RationalMatrix& matrix, std::size_t columns);

RationalMatrix transpose(const RationalMatrix& matrix, std::size_t columns);

}  // namespace springcoh::linalg

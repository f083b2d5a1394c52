#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "springcoh/budget.hpp"
#include "springcoh/characters.hpp"
#include "springcoh/linalg.hpp"
#include "springcoh/partition.hpp"
#include "springcoh/polynomial.hpp"

namespace springcoh {

/// Bigraded Hilbert function of R_n / Ann(Delta): entry(a, b) is the
/// dimension in X-degree a and Y-degree b.
struct BigradedTable {
  int d1 = 0;
  int d2 = 0;
  std::vector<std::vector<std::size_t>> entries;  ///< (d1 + 1) x (d2 + 1)

  std::size_t at(int a, int b) const;
  std::size_t total() const;
};

enum class Side { kX, kY };

/// One graded piece of the X- or Y-generated subalgebra: the pure-side
/// monomials of a degree modulo the annihilator of Delta.
///
/// `reduced` is the reduced echelon form of the map m -> d_m(Delta), with
/// columns indexed by `basis`. Its pivot monomials span a complement of
/// the kernel, and column k of `reduced` gives the coordinates of basis[k]
/// in that complement.
struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> basis;
  linalg::Echelon reduced;

  std::size_t dimension() const { return reduced.pivots.size(); }
  std::size_t kernel_dimension() const { return basis.size() - dimension(); }
};

/// The Garsia-Haiman module of a partition, computed through the derivative
/// span of Delta. All dimensions are exact catalecticant ranks.
class InverseSystem {
 public:
  explicit InverseSystem(const Partition& sigma, Budget budget = {}, int jobs = 1);

  const Partition& sigma() const { return sigma_; }
  const Polynomial& delta() const { return delta_; }
  const DegreePair& degrees() const { return degrees_; }

  BigradedTable bigraded_hilbert() const;
  std::size_t total_dimension() const { return bigraded_hilbert().total(); }

  /// Rank of the (a, b) catalecticant block.
  std::size_t block_rank(int a, int b) const;

  /// Graded dimensions of the subalgebra generated by one side's
  /// variables, trimmed after the last nonzero degree.
  std::vector<std::size_t> subalgebra_hilbert(Side side) const;

  GradedPiece graded_piece(Side side, int degree) const;

  /// Per degree, the character of S_n on the graded piece.
  std::vector<ClassFunction> subalgebra_graded_character(Side side) const;

  /// Per degree, dim { v : v * (each side variable) lies in the annihilator }.
  std::vector<std::size_t> socle_dimensions(Side side) const;
  std::set<int> socle_degrees(Side side) const;

 private:
  int side_offset(Side side) const { return side == Side::kX ? 0 : sigma_.n(); }
  int side_top(Side side) const { return side == Side::kX ? degrees_.d1 : degrees_.d2; }
  std::size_t rank_of_operators(const std::vector<Monomial>& ops) const;

  Partition sigma_;
  Polynomial delta_;
  DegreePair degrees_;
  Budget budget_;
  int jobs_;
};

}  // namespace springcoh

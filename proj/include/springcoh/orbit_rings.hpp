#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "springcoh/budget.hpp"
#include "springcoh/characters.hpp"
#include "springcoh/groebner.hpp"
#include "springcoh/partition.hpp"

namespace springcoh {

/// Consecutive intervals of {0..n-1} with the sizes of a partition: the
/// diagonal blocks of the Levi subalgebra.
struct BlockStructure {
  std::vector<std::vector<int>> blocks;
};

BlockStructure block_structure(const Partition& block_sizes);

/// Per-block elementary symmetric polynomials e_1..e_k in C[z_1..z_n].
/// The argument is the Levi block partition; the orbit ring of sigma uses its dual.
std::vector<Polynomial> levi_ideal(const Partition& block_sizes);

/// e_1..e_n of z_1..z_n.
std::vector<Polynomial> coinvariant_ideal(int n);

/// Coefficients of prod_j [k_j]_q!, the Hilbert series of the Levi quotient.
std::vector<std::size_t> q_factorial_product(const Partition& block_sizes);

struct TranslateFamily {
  std::vector<Polynomial> base;
  /// Distinct S_n-translates of the base generator set, each sorted by
  /// canonical text; the list itself is in canonical order.
  std::vector<std::vector<Polynomial>> translates;
};

TranslateFamily translate_family(const Partition& block_sizes);

/// Order of the stabilizer of the block set-partition: permutations within
/// blocks times permutations of equal-size blocks.
std::size_t stabilizer_order(const Partition& block_sizes);

/// Quotient of C[z] by the intersection of all translated Levi ideals.
/// Translate bases are computed on `jobs` threads; the fold is sequential.
QuotientRing orbit_ring(const Partition& block_sizes, const Budget& budget = {}, int jobs = 1);

/// Groebner basis of the intersection (the ideal behind orbit_ring).
GroebnerBasis orbit_ideal(const Partition& block_sizes, const Budget& budget = {}, int jobs = 1);

/// Throws EquivarianceError unless every generator of the ideal maps into
/// the ideal under a transposition and an n-cycle (which generate S_n).
void require_sn_stable(const GroebnerBasis& gb);

/// Per degree, the trace of v -> normal_form(w v) on the staircase, one
/// class representative per cycle type.
std::vector<ClassFunction> graded_character(const QuotientRing& q);

/// True iff e_1..e_n all vanish in the quotient.
bool spaltenstein_check(const QuotientRing& q);

}  // namespace springcoh

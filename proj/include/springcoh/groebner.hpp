#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "springcoh/budget.hpp"
#include "springcoh/monomial.hpp"
#include "springcoh/polynomial.hpp"

namespace springcoh {

/// A reduced, monic Groebner basis. Immutable once built; normal_form and
/// friends are const and safe to call concurrently.
class GroebnerBasis {
 public:
  /// Wraps generators that already form a reduced Groebner basis (used by
  /// buchberger and by deserialization). Generators are made monic.
  GroebnerBasis(RingContext ring, MonomialOrder order, std::vector<Polynomial> generators);

  const RingContext& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }

  /// Remainder with no term divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Cheap structural re-verification: monic, no leading-monomial
  /// divisibility among generators, and the first `sample_pairs`
  /// S-polynomials reduce to zero.
  bool self_check(std::size_t sample_pairs) const;

  /// "ring <descriptor>\norder <descriptor>\n" then one polynomial per line.
  std::string serialize() const;
  static GroebnerBasis deserialize(const std::string& text);

  bool operator==(const GroebnerBasis& other) const;

 private:
  RingContext ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::vector<std::vector<Term>> sorted_;  ///< generators sorted by order_
};

/// Leading monomial of a nonzero polynomial under an order.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `generators`, using
/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
/// selection. Throws ResourceLimitError past budget.max_pairs.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const Budget& budget = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// I ∩ J via t*I + (1-t)*J, eliminating t under a block order; the result
/// is returned as a grevlex basis in the original ring.
GroebnerBasis intersect(const GroebnerBasis& I, const GroebnerBasis& J, const Budget& budget = {});

/// Re-expresses a basis under another order.
GroebnerBasis change_order(const GroebnerBasis& gb, const MonomialOrder& order, const Budget& budget = {});

struct QuotientRing {
  GroebnerBasis basis;
  std::vector<std::vector<Monomial>> staircase;  ///< standard monomials by degree
  std::vector<std::size_t> hilbert;

  std::size_t dimension() const;
  int top_degree() const { return static_cast<int>(hilbert.size()) - 1; }
};

/// Standard-monomial staircase and graded dimensions. Without a cap the
/// quotient must be finite-dimensional (DimensionError otherwise); with a
/// cap, degrees above it are not enumerated.
QuotientRing quotient(const GroebnerBasis& gb, std::optional<int> degree_cap = std::nullopt);

/// Per degree, the dimension of { v : x_i v = 0 in the quotient for all i }.
std::vector<std::size_t> socle(const QuotientRing& q);

/// Coordinates of the normal form of p against the degree-d staircase of q;
/// p must be homogeneous of degree d modulo the ideal.
std::vector<Rational> staircase_coordinates(const QuotientRing& q, const Polynomial& p, int degree);

}  // namespace springcoh

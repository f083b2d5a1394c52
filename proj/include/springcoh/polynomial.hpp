#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "springcoh/monomial.hpp"
#include "springcoh/partition.hpp"
#include "springcoh/permutation.hpp"

namespace springcoh {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Exact multivariate polynomial over Q. Terms are kept sorted by
/// descending grevlex with no zero coefficients, so equality is
/// structural and iteration order is reproducible.
class Polynomial {
 public:
  explicit Polynomial(RingContext ring) : ring_(ring) {}

  /// Normalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(RingContext ring, std::vector<Term> terms);
  static Polynomial constant(RingContext ring, const Rational& c);
  static Polynomial variable(RingContext ring, int index);
  static Polynomial monomial(RingContext ring, const Monomial& m, const Rational& c = 1);

  const RingContext& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(const Rational& c) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;

  bool operator==(const Polynomial& other) const;

  /// Canonical text: "num/den * X1^a Y2^b + ..." in descending grevlex;
  /// the zero polynomial prints as "0".
  std::string to_string() const;
  static Polynomial parse(RingContext ring, std::string_view text);

 private:
  void require_same_ring(const Polynomial& other) const;
  RingContext ring_;
  std::vector<Term> terms_;
};

/// f(d/dX1, ..., d/dYn) applied to target, with the usual factorial
/// factors: d^k/dx^k x^m = m!/(m-k)! x^(m-k).
Polynomial apply_operator(const Polynomial& f, const Polynomial& target);

/// Same as apply_operator for a single monomial operator.
Polynomial differentiate(const Monomial& op, const Polynomial& target);

/// Variable substitution x_i -> x_{w(i)}, diagonally on X and Y.
Polynomial act(const Permutation& w, const Polynomial& p);
Monomial act(const Permutation& w, const Monomial& m, const RingContext& ring);

/// The bideterminant det[X_s^{i_t} Y_s^{j_t}] over the diagram cells in
/// canonical order. Requires n <= 7.
Polynomial delta(const Partition& sigma);

/// e_r of the variables with the given (0-based) indices.
Polynomial elementary_symmetric(int r, std::span<const int> vars, RingContext ring);

}  // namespace springcoh

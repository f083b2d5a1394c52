#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "springcoh/partition.hpp"
#include "springcoh/polynomial.hpp"

namespace springcoh {

/// Lexicographic order on cycle types, so the identity class (1^n) comes
/// first and the n-cycle last.
struct ClassOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end());
  }
};

/// A rational-valued function on the conjugacy classes of S_n, keyed by
/// cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int n);

  int n() const { return n_; }
  const Rational& at(const Partition& cls) const;
  void set(const Partition& cls, const Rational& value);
  const std::map<Partition, Rational, ClassOrder>& values() const { return values_; }

  ClassFunction operator+(const ClassFunction& other) const;
  ClassFunction scale(const Rational& c) const;
  bool operator==(const ClassFunction& other) const { return n_ == other.n_ && values_ == other.values_; }

  /// Values in class order, e.g. "(2,0,-1)".
  std::string to_string() const;

 private:
  int n_;
  std::map<Partition, Rational, ClassOrder> values_;
};

/// n! / z_mu, the number of permutations of cycle type mu.
Integer class_size(const Partition& cycle_type);

/// chi^shape(cycle_type) by the Murnaghan-Nakayama border-strip rule.
Integer murnaghan_nakayama(const Partition& shape, const Partition& cycle_type);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;  ///< irreducibles and classes, reverse-lex
  std::map<Partition, ClassFunction> rows;
  std::map<Partition, Integer> class_sizes;
};

/// Irreducible characters of S_n for n <= 8. Orthonormality is verified
/// before returning; a failure throws std::logic_error.
const CharacterTable& character_table(int n);

/// (1/n!) sum_c |c| phi(c) psi(c).
Rational inner_product(const ClassFunction& phi, const ClassFunction& psi);

struct Decomposition {
  std::map<Partition, Rational> multiplicities;  ///< nonzero entries only
  /// False when some multiplicity is negative or non-integral.
  bool genuine = true;
};

Decomposition decompose(const ClassFunction& phi);

/// Trivial, sign and regular characters; used as fixtures and in reports.
ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction regular_character(int n);

}  // namespace springcoh

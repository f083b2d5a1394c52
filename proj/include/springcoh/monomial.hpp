#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace springcoh {

inline constexpr int kMaxVariables = 16;

/// Which polynomial ring a value lives in.
///   doubled(n): X1..Xn, Y1..Yn (indices 0..n-1, n..2n-1)
///   single(n):  z1..zn
///   auxiliary(n): t, z1..zn -- the single ring plus one elimination variable
class RingContext {
 public:
  enum class Kind : std::uint8_t { kDoubled, kSingle, kAuxiliary };

  static RingContext doubled(int n);
  static RingContext single(int n);
  static RingContext auxiliary(int n);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int num_vars() const;
  std::string var_name(int index) const;
  /// Inverse of var_name; -1 if the name is not a variable of this ring.
  int var_index(const std::string& name) const;
  std::string descriptor() const;

  bool operator==(const RingContext&) const = default;

 private:
  RingContext(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

/// Exponent vector. Slots beyond the ring's variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int index, int power = 1);

  int operator[](int index) const { return exps_[static_cast<std::size_t>(index)]; }
  void set(int index, int value);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Sum of exponents over the half-open index range [begin, end).
  int partial_degree(int begin, int end) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  std::size_t hash() const;

  const std::array<std::uint8_t, kMaxVariables>& exponents() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders. Block elimination compares the first `block_size`
/// variables by grevlex and breaks ties by grevlex on the remainder.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { kGrevlex, kLex, kBlock };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder block(int front_size) { return MonomialOrder(Kind::kBlock, front_size); }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  /// Negative, zero, positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string descriptor() const;
  static MonomialOrder parse(const std::string& text);

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

int grevlex_compare(const Monomial& a, const Monomial& b);

/// Monomials of total degree `degree` in the variables [offset, offset+count).
std::vector<Monomial> monomials_of_degree(int offset, int count, int degree);

}  // namespace springcoh

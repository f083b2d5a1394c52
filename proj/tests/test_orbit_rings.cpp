#include "doctest.h"
#include "oracles.hpp"
#include "springcoh/errors.hpp"
#include "springcoh/inverse_system.hpp"
#include "springcoh/orbit_rings.hpp"

using namespace springcoh;

namespace {

using Dims = std::vector<std::size_t>;
const RingContext Z3 = RingContext::single(3);

Polynomial P(RingContext ring, const char* text) { return Polynomial::parse(ring, text); }

std::size_t multinomial_orbit(const Partition& blocks) {
  return factorial(blocks.n()) / stabilizer_order(blocks);
}

}  // namespace

TEST_CASE("Levi ideals") {
  const auto l21 = levi_ideal(Partition({2, 1}));
  CHECK(l21 == std::vector<Polynomial>{P(Z3, "1 * z1 + 1 * z2"), P(Z3, "1 * z1 z2"), P(Z3, "1 * z3")});
  CHECK(levi_ideal(Partition({1, 1, 1})) ==
        std::vector<Polynomial>{P(Z3, "1 * z1"), P(Z3, "1 * z2"), P(Z3, "1 * z3")});
  CHECK(levi_ideal(Partition({3})) == coinvariant_ideal(3));
  CHECK(block_structure(Partition({2, 1})).blocks == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("Levi quotients have q-factorial Hilbert series") {
  CHECK(q_factorial_product(Partition({2, 1})) == Dims{1, 1});
  CHECK(q_factorial_product(Partition({3})) == Dims{1, 2, 2, 1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& blocks : all_partitions(n)) {
      const auto q = quotient(buchberger(levi_ideal(blocks), MonomialOrder::grevlex()));
      CHECK(q.hilbert == q_factorial_product(blocks));
      CHECK(q.top_degree() == blocks.dual().degrees().d2);
    }
}

TEST_CASE("translate counts") {
  CHECK(translate_family(Partition({2, 1})).translates.size() == 3);
  CHECK(translate_family(Partition({1, 1, 1})).translates.size() == 1);
  CHECK(translate_family(Partition({2, 2})).translates.size() == 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& blocks : all_partitions(n))
      CHECK(translate_family(blocks).translates.size() == multinomial_orbit(blocks));
}

TEST_CASE("orbit ring examples") {
  const auto q21 = orbit_ring(Partition({2, 1}));
  CHECK(q21.hilbert == Dims{1, 2});
  CHECK(socle(q21) == Dims{0, 2});
  const auto chars = graded_character(q21);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].to_string() == "(1,1,1)");
  CHECK(chars[1].to_string() == "(2,0,-1)");
  const auto dec = decompose(chars[1]);
  CHECK(dec.multiplicities == std::map<Partition, Rational>{{Partition({2, 1}), 1}});
  CHECK(spaltenstein_check(q21));

  CHECK(orbit_ring(Partition({1, 1, 1})).hilbert == Dims{1});
  const auto q3 = orbit_ring(Partition({3}));
  CHECK(q3.hilbert == Dims{1, 2, 2, 1});
  CHECK(graded_character(q3).back() == sign_character(3));

  ClassFunction sum(3);
  for (const auto& c : graded_character(q3)) sum = sum + c;
  CHECK(sum == regular_character(3));
}

TEST_CASE("equivariance gate") {
  const auto bad = buchberger({P(Z3, "1 * z1"), P(Z3, "1 * z2^2"), P(Z3, "1 * z3^2")}, MonomialOrder::grevlex());
  CHECK_THROWS_AS(require_sn_stable(bad), EquivarianceError);
  CHECK_NOTHROW(require_sn_stable(buchberger(coinvariant_ideal(3), MonomialOrder::grevlex())));
}

TEST_CASE("orbit rings agree with the subspace-intersection oracle for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& blocks : all_partitions(n)) {
      CAPTURE(blocks.to_string());
      const auto q = orbit_ring(blocks);
      const auto family = translate_family(blocks);
      const int bound = blocks.dual().degrees().d2;
      CHECK(q.hilbert == oracle::intersection_hilbert(family.translates, n, bound));
    }
}

TEST_CASE("orbit rings match the Y-subalgebra model for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& sigma : all_partitions(n)) {
      CAPTURE(sigma.to_string());
      const auto gb = orbit_ideal(sigma.dual(), {}, 2);
      require_sn_stable(gb);
      const auto q = quotient(gb);
      const InverseSystem s(sigma);
      CHECK(q.hilbert == s.subalgebra_hilbert(Side::kY));
      CHECK(graded_character(q) == s.subalgebra_graded_character(Side::kY));
      CHECK(spaltenstein_check(q));
      const auto soc = socle(q);
      for (std::size_t d = 0; d < soc.size(); ++d)
        CHECK((soc[d] == 0) == (static_cast<int>(d) != sigma.degrees().d2));
      for (const auto& chi : graded_character(q)) CHECK(decompose(chi).genuine);
      CHECK(inner_product(graded_character(q).back(), graded_character(q).back()) == 1);
    }
}

TEST_CASE("ideal is the same under both monomial orders") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& blocks : all_partitions(n)) {
      const auto gb = orbit_ideal(blocks);
      CHECK(quotient(change_order(gb, MonomialOrder::lex())).hilbert == quotient(gb).hilbert);
    }
}

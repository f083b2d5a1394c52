#include "doctest.h"
#include "oracles.hpp"
#include "springcoh/characters.hpp"
#include "springcoh/permutation.hpp"

using namespace springcoh;

namespace {

// Brute force trace of the permutation representation on {1..n}.
ClassFunction fixed_points(int n) {
  ClassFunction chi(n);
  for (const auto& mu : all_partitions(n)) {
    int ones = 0;
    for (int part : mu.parts()) ones += part == 1;
    chi.set(mu, ones);
  }
  return chi;
}

}  // namespace

TEST_CASE("S_3 character table") {
  const auto& t = character_table(3);
  CHECK(t.rows.at(Partition({3})).to_string() == "(1,1,1)");
  CHECK(t.rows.at(Partition({2, 1})).to_string() == "(2,0,-1)");
  CHECK(t.rows.at(Partition({1, 1, 1})).to_string() == "(1,-1,1)");
  CHECK(class_size(Partition({2, 1})) == 3);
  CHECK(class_size(Partition({3})) == 2);
}

TEST_CASE("Murnaghan-Nakayama spot values") {
  CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(murnaghan_nakayama(Partition({3, 1}), Partition({4})) == -1);
  CHECK(murnaghan_nakayama(Partition({3, 2}), Partition({5})) == 0);
  CHECK(murnaghan_nakayama(Partition({4, 2, 1}), Partition({1, 1, 1, 1, 1, 1, 1})) == 35);
}

TEST_CASE("tables through n = 8 match hook lengths and class counts") {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    Integer total_class = 0;
    for (const auto& mu : t.labels) {
      CHECK(t.rows.at(mu).at(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            static_cast<long>(oracle::hook_length_dimension(mu)));
      total_class += class_size(mu);
    }
    CHECK(total_class == static_cast<long>(factorial(n)));
  }
  CHECK_THROWS(character_table(9));
}

TEST_CASE("class sizes agree with counting permutations") {
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, long> counts;
    for (const auto& w : all_permutations(n)) ++counts[w.cycle_type()];
    for (const auto& [mu, c] : counts) CHECK(class_size(mu) == c);
  }
}

TEST_CASE("decompositions of standard fixtures") {
  for (int n = 2; n <= 6; ++n) {
    const auto triv = decompose(trivial_character(n));
    REQUIRE(triv.multiplicities.size() == 1);
    CHECK(triv.multiplicities.begin()->first == Partition({n}));

    const auto perm = decompose(fixed_points(n));
    CHECK(perm.genuine);
    CHECK(perm.multiplicities.size() == 2);
    CHECK(perm.multiplicities.at(Partition({n - 1, 1})) == 1);

    const auto reg = decompose(regular_character(n));
    CHECK(reg.genuine);
    for (const auto& [mu, m] : reg.multiplicities)
      CHECK(m == static_cast<long>(oracle::hook_length_dimension(mu)));

    CHECK(inner_product(sign_character(n), sign_character(n)) == 1);
    CHECK(inner_product(sign_character(n), trivial_character(n)) == 0);

    const auto virt = decompose(trivial_character(n) + sign_character(n).scale(-1));
    CHECK_FALSE(virt.genuine);
    const auto half = decompose(trivial_character(n).scale(Rational(1, 2)));
    CHECK_FALSE(half.genuine);
  }
}

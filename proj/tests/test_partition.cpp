#include "doctest.h"
#include "springcoh/errors.hpp"
#include "springcoh/partition.hpp"

using namespace springcoh;

namespace {

// Partition counts p(n) from the pentagonal-number recurrence, independent
// of the enumerator.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("all_partitions enumerates in reverse-lexicographic order") {
  auto one = all_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<int>{1});

  auto three = all_partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].parts() == std::vector<int>{3});
  CHECK(three[1].parts() == std::vector<int>{2, 1});
  CHECK(three[2].parts() == std::vector<int>{1, 1, 1});

  CHECK(all_partitions(5).size() == 7);
  for (int n = 1; n <= 12; ++n) {
    const auto ps = all_partitions(n);
    CHECK(static_cast<long>(ps.size()) == partition_count(n));
    for (std::size_t k = 1; k < ps.size(); ++k) CHECK(ps[k - 1] < ps[k]);
  }
}

TEST_CASE("all_partitions rejects out-of-range n") {
  CHECK_THROWS_AS(all_partitions(0), UsageError);
  CHECK_THROWS_AS(all_partitions(13), UsageError);
}

TEST_CASE("construction and parsing validate input") {
  CHECK_THROWS_AS(Partition(std::vector<int>{}), UsageError);
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({2, 0}), UsageError);
  CHECK(Partition::parse("2,2,1").parts() == std::vector<int>{2, 2, 1});
  CHECK(Partition::parse(" 3 , 1 ").parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition::parse(""), UsageError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), UsageError);
  CHECK_THROWS_AS(Partition::parse("2,x"), UsageError);
  CHECK_THROWS_AS(Partition::parse("1,2"), UsageError);
  CHECK(Partition({4, 2, 2, 1}).to_string() == "4,2,2,1");
}

TEST_CASE("dual partition") {
  CHECK(Partition({3}).dual() == Partition({1, 1, 1}));
  CHECK(Partition({2, 1}).dual() == Partition({2, 1}));
  CHECK(Partition({2, 2}).dual() == Partition({2, 2}));
  CHECK(Partition({4, 2, 1}).dual() == Partition({3, 2, 1, 1}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) CHECK(p.dual().dual() == p);
}

TEST_CASE("diagram cells in (j, i) order") {
  using C = std::vector<Cell>;
  CHECK(Partition({1, 1, 1}).diagram() == C{{0, 0}, {0, 1}, {0, 2}});
  CHECK(Partition({2, 1}).diagram() == C{{0, 0}, {1, 0}, {0, 1}});
  CHECK(Partition({2, 2}).diagram() == C{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) {
      const auto cells = p.diagram();
      CHECK(static_cast<int>(cells.size()) == n);
      for (const auto& c : cells) CHECK(c.i < p[c.j]);
    }
}

TEST_CASE("degree pair from both expressions") {
  CHECK(Partition({1, 1, 1}).degrees() == DegreePair{0, 3});
  CHECK(Partition({3}).degrees() == DegreePair{3, 0});
  CHECK(Partition({2, 1}).degrees() == DegreePair{1, 1});
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) {
      CHECK(p.degrees().d2 == p.d2_from_dual());
      CHECK(p.degrees().d1 == p.dual().degrees().d2);
    }
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "springcoh/errors.hpp"
#include "springcoh/polynomial.hpp"

using namespace springcoh;

namespace {

const RingContext R2 = RingContext::doubled(2);
const RingContext Z3 = RingContext::single(3);

Polynomial P(RingContext ring, const char* text) { return Polynomial::parse(ring, text); }

Polynomial random_poly(std::mt19937& rng, RingContext ring, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int v = 0; v < ring.num_vars(); ++v) m.set(v, e(rng));
    ts.push_back({m, Rational(c(rng), 1 + std::abs(c(rng)))});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("ring contexts name their variables") {
  CHECK(R2.num_vars() == 4);
  CHECK(R2.var_name(0) == "X1");
  CHECK(R2.var_name(3) == "Y2");
  CHECK(Z3.var_name(2) == "z3");
  CHECK(RingContext::auxiliary(2).var_name(0) == "t");
  CHECK(RingContext::auxiliary(2).var_name(2) == "z2");
}

TEST_CASE("arithmetic") {
  CHECK(P(R2, "1 * X1 + 1 * Y1") + P(R2, "-1 * X1") == P(R2, "1 * Y1"));
  CHECK(P(Z3, "1 * z1 + -1 * z2") * P(Z3, "1 * z1 + 1 * z2") == P(Z3, "1 * z1^2 + -1 * z2^2"));
  CHECK(P(Z3, "3 * z1").scale(Rational(2, 3)) == P(Z3, "2 * z1"));
  CHECK((P(Z3, "1 * z1") - P(Z3, "1 * z1")).is_zero());
  CHECK_THROWS_AS(P(Z3, "1 * z1") + P(R2, "1 * X1"), ContextMismatchError);
}

TEST_CASE("canonical text round trip") {
  const Polynomial p = P(R2, "1/2 * X1^2 Y2 + -3 * X2 + 7/3");
  CHECK(p.to_string() == "1/2 * X1^2 Y2^1 + -3/1 * X2^1 + 7/3");
  CHECK(Polynomial::parse(R2, p.to_string()) == p);
  CHECK(Polynomial(R2).to_string() == "0");
  CHECK_THROWS_AS(P(R2, "1 * Q1"), UsageError);
  CHECK_THROWS_AS(P(R2, "a/b * X1"), UsageError);
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Polynomial q = random_poly(rng, R2, 6, 3);
    CHECK(Polynomial::parse(R2, q.to_string()) == q);
  }
}

TEST_CASE("apply_operator") {
  CHECK(apply_operator(P(R2, "1 * X1"), P(R2, "1 * X1^2")) == P(R2, "2 * X1"));
  CHECK(apply_operator(P(R2, "1 * X1 Y1"), P(R2, "1 * X1 Y1")) == P(R2, "1"));
  CHECK(apply_operator(P(R2, "1 * X1^2"), P(R2, "1 * X1 Y1")).is_zero());
  CHECK(apply_operator(P(R2, "1 * X1^2"), P(R2, "1 * X1^3")) == P(R2, "6 * X1"));
  CHECK_THROWS_AS(apply_operator(P(Z3, "1 * z1"), P(R2, "1 * X1")), ContextMismatchError);

  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    const auto f = random_poly(rng, R2, 2, 1);
    const auto g = random_poly(rng, R2, 2, 1);
    const auto t = random_poly(rng, R2, 5, 3);
    CHECK(apply_operator(f * g, t) == apply_operator(f, apply_operator(g, t)));
    CHECK(apply_operator(f + g, t) == apply_operator(f, t) + apply_operator(g, t));
  }
}

TEST_CASE("permutation action") {
  const Permutation swap12 = Permutation::transposition(2, 0, 1);
  CHECK(act(swap12, P(R2, "1 * X1")) == P(R2, "1 * X2"));
  CHECK(act(swap12, P(R2, "1 * X1 Y1^2")) == P(R2, "1 * X2 Y2^2"));
  const Polynomial d21 = delta(Partition({2, 1}));
  CHECK(act(Permutation::transposition(3, 0, 1), d21) == -d21);
  CHECK(act(Permutation::identity(3), d21) == d21);
  CHECK_THROWS_AS(act(Permutation::identity(3), P(R2, "1 * X1")), UsageError);

  std::mt19937 rng(3);
  const RingContext R4 = RingContext::doubled(4);
  for (int k = 0; k < 40; ++k) {
    const auto w = random_perm(rng, 4);
    const auto v = random_perm(rng, 4);
    const auto p = random_poly(rng, R4, 5, 2);
    const auto q = random_poly(rng, R4, 5, 2);
    CHECK(act(w, act(v, p)) == act(w.compose(v), p));
    CHECK(act(w, p * q) == act(w, p) * act(w, q));
  }
}

TEST_CASE("delta matches hand expansions") {
  CHECK(delta(Partition({2})) == P(RingContext::doubled(2), "1 * X2 + -1 * X1"));
  CHECK(delta(Partition({1, 1})) == P(RingContext::doubled(2), "1 * Y2 + -1 * Y1"));
  // Cofactor expansion of det[[1, X_s, Y_s]] along the first column.
  const Polynomial expected = P(RingContext::doubled(3),
                                "1 * X2 Y3 + -1 * X3 Y2 + -1 * X1 Y3 + 1 * X3 Y1 + 1 * X1 Y2 + -1 * X2 Y1");
  CHECK(delta(Partition({2, 1})) == expected);
  CHECK_THROWS_AS(delta(Partition({8})), ResourceLimitError);
}

TEST_CASE("delta structure for all partitions of n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& sigma : all_partitions(n)) {
      const Polynomial d = delta(sigma);
      CHECK(d == oracle::leibniz_delta(sigma));
      CHECK(d.size() == factorial(n));
      const auto deg = sigma.degrees();
      for (const auto& t : d.terms()) {
        CHECK(abs(t.coeff) == 1);
        CHECK(t.mono.partial_degree(0, n) == deg.d1);
        CHECK(t.mono.partial_degree(n, 2 * n) == deg.d2);
      }
      for (const auto& w : perms) CHECK(act(w, d) == d.scale(w.sign()));

      // Transposing the diagram swaps the X and Y blocks, up to sign.
      const Polynomial dual_delta = delta(sigma.dual());
      std::vector<Term> swapped;
      for (const auto& t : dual_delta.terms()) {
        Monomial m;
        for (int v = 0; v < n; ++v) {
          m.set(v, t.mono[n + v]);
          m.set(n + v, t.mono[v]);
        }
        swapped.push_back({m, t.coeff});
      }
      const Polynomial s = Polynomial::from_terms(d.ring(), std::move(swapped));
      CHECK((s == d || s == -d));
    }
  }
}

TEST_CASE("delta at n = 7 has 7! terms") {
  const Polynomial d = delta(Partition({3, 2, 1, 1}));
  CHECK(d.size() == 5040);
}

TEST_CASE("elementary symmetric polynomials") {
  const int all3[] = {0, 1, 2};
  const int first2[] = {0, 1};
  CHECK(elementary_symmetric(1, all3, Z3) == P(Z3, "1 * z1 + 1 * z2 + 1 * z3"));
  CHECK(elementary_symmetric(2, first2, Z3) == P(Z3, "1 * z1 z2"));
  CHECK(elementary_symmetric(2, all3, Z3) == P(Z3, "1 * z1 z2 + 1 * z1 z3 + 1 * z2 z3"));
  CHECK_THROWS_AS(elementary_symmetric(0, all3, Z3), UsageError);
  CHECK_THROWS_AS(elementary_symmetric(4, all3, Z3), UsageError);
  const RingContext Z6 = RingContext::single(6);
  const int all6[] = {0, 1, 2, 3, 4, 5};
  const std::size_t binom6[] = {1, 6, 15, 20, 15, 6, 1};
  for (int r = 1; r <= 6; ++r) CHECK(elementary_symmetric(r, all6, Z6).size() == binom6[r]);
}

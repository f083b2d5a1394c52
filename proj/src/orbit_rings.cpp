#include "springcoh/orbit_rings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "springcoh/errors.hpp"
#include "springcoh/parallel.hpp"

namespace springcoh {

BlockStructure block_structure(const Partition& block_sizes) {
  BlockStructure s;
  int start = 0;
  for (int size : block_sizes.parts()) {
    std::vector<int> block(static_cast<std::size_t>(size));
    std::iota(block.begin(), block.end(), start);
    s.blocks.push_back(std::move(block));
    start += size;
  }
  return s;
}

std::vector<Polynomial> levi_ideal(const Partition& block_sizes) {
  const RingContext ring = RingContext::single(block_sizes.n());
  std::vector<Polynomial> gens;
  for (const auto& block : block_structure(block_sizes).blocks)
    for (int r = 1; r <= static_cast<int>(block.size()); ++r)
      gens.push_back(elementary_symmetric(r, block, ring));
  return gens;
}

std::vector<Polynomial> coinvariant_ideal(int n) {
  return levi_ideal(Partition({n}));
}

std::vector<std::size_t> q_factorial_product(const Partition& block_sizes) {
  std::vector<std::size_t> series{1};
  for (int k : block_sizes.parts()) {
    for (int i = 2; i <= k; ++i) {
      // multiply by 1 + q + ... + q^(i-1)
      std::vector<std::size_t> next(series.size() + static_cast<std::size_t>(i - 1), 0);
      for (std::size_t a = 0; a < series.size(); ++a)
        for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += series[a];
      series = std::move(next);
    }
  }
  return series;
}

namespace {

std::vector<std::string> canonical_key(std::vector<Polynomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  std::vector<std::string> key;
  for (const auto& g : gens) key.push_back(g.to_string());
  return key;
}

}  // namespace

TranslateFamily translate_family(const Partition& block_sizes) {
  TranslateFamily family;
  family.base = levi_ideal(block_sizes);
  std::map<std::vector<std::string>, std::vector<Polynomial>> distinct;
  for (const auto& w : all_permutations(block_sizes.n())) {
    std::vector<Polynomial> moved;
    for (const auto& g : family.base) moved.push_back(act(w, g));
    auto key = canonical_key(moved);
    distinct.emplace(std::move(key), std::move(moved));
  }
  for (auto& [key, gens] : distinct) family.translates.push_back(std::move(gens));
  return family;
}

std::size_t stabilizer_order(const Partition& block_sizes) {
  std::size_t order = 1;
  std::map<int, int> equal_sizes;
  for (int k : block_sizes.parts()) {
    order *= factorial(k);
    ++equal_sizes[k];
  }
  for (auto [size, count] : equal_sizes) order *= factorial(count);
  return order;
}

GroebnerBasis orbit_ideal(const Partition& block_sizes, const Budget& budget, int jobs) {
  const TranslateFamily family = translate_family(block_sizes);
  std::vector<std::optional<GroebnerBasis>> bases(family.translates.size());
  parallel_for(bases.size(), jobs, [&](std::size_t k) {
    bases[k] = buchberger(family.translates[k], MonomialOrder::grevlex(), budget);
  });
  GroebnerBasis acc = *bases.front();
  for (std::size_t k = 1; k < bases.size(); ++k) {
    budget.check_deadline("orbit ideal fold");
    acc = intersect(acc, *bases[k], budget);
  }
  return acc;
}

QuotientRing orbit_ring(const Partition& block_sizes, const Budget& budget, int jobs) {
  return quotient(orbit_ideal(block_sizes, budget, jobs));
}

void require_sn_stable(const GroebnerBasis& gb) {
  const int n = gb.ring().n();
  if (n < 2) return;
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  const Permutation generators[] = {Permutation::transposition(n, 0, 1), Permutation(cycle)};
  for (const auto& w : generators)
    for (const auto& g : gb.generators())
      if (!gb.contains(act(w, g)))
        throw EquivarianceError("ideal is not S_n-stable: " + w.to_string() + " moves " + g.to_string() +
                                " outside the ideal");
}

std::vector<ClassFunction> graded_character(const QuotientRing& q) {
  require_sn_stable(q.basis);
  const RingContext& ring = q.basis.ring();
  const int n = ring.n();
  std::vector<ClassFunction> out;
  for (std::size_t d = 0; d < q.staircase.size(); ++d) {
    ClassFunction chi(n);
    for (const auto& cls : all_partitions(n)) {
      const Permutation w = Permutation::class_representative(cls);
      Rational trace = 0;
      const auto& level = q.staircase[d];
      for (std::size_t k = 0; k < level.size(); ++k) {
        const auto coords =
            staircase_coordinates(q, Polynomial::monomial(ring, act(w, level[k], ring)), static_cast<int>(d));
        trace += coords[k];
      }
      chi.set(cls, trace);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

bool spaltenstein_check(const QuotientRing& q) {
  for (const auto& e : coinvariant_ideal(q.basis.ring().n()))
    if (!q.basis.contains(e)) return false;
  return true;
}

}  // namespace springcoh

#include "springcoh/inverse_system.hpp"

#include <map>
#include <unordered_map>
#include <utility>

#include "springcoh/errors.hpp"
#include "springcoh/parallel.hpp"

namespace springcoh {

std::size_t BigradedTable::at(int a, int b) const {
  if (a < 0 || b < 0 || a > d1 || b > d2) return 0;
  return entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::size_t BigradedTable::total() const {
  std::size_t s = 0;
  for (const auto& row : entries)
    for (auto v : row) s += v;
  return s;
}

namespace {

using BidegreeKey = std::pair<int, int>;

// Every monomial dividing some term of delta, grouped by bidegree. Only
// these operators can have a nonzero derivative.
std::map<BidegreeKey, std::vector<Monomial>> divisors_by_bidegree(const Polynomial& delta, int n) {
  std::unordered_map<Monomial, BidegreeKey, MonomialHash> seen;
  const int nv = 2 * n;
  for (const auto& t : delta.terms()) {
    Monomial d;
    auto rec = [&](auto&& self, int var) -> void {
      if (var == nv) {
        seen.emplace(d, BidegreeKey{d.partial_degree(0, n), d.partial_degree(n, nv)});
        return;
      }
      for (int e = 0; e <= t.mono[var]; ++e) {
        d.set(var, e);
        self(self, var + 1);
      }
      d.set(var, 0);
    };
    rec(rec, 0);
  }
  std::map<BidegreeKey, std::vector<Monomial>> out;
  for (const auto& [m, key] : seen) out[key].push_back(m);
  for (auto& [key, ms] : out)
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
      return grevlex_compare(a, b) > 0;
    });
  return out;
}

struct SlotLess {
  bool operator()(const std::pair<int, Monomial>& l, const std::pair<int, Monomial>& r) const {
    if (l.first != r.first) return l.first < r.first;
    return grevlex_compare(l.second, r.second) > 0;
  }
};

Integer as_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("catalecticant entry is not integral");
  return q.get_num();
}

}  // namespace

InverseSystem::InverseSystem(const Partition& sigma, Budget budget, int jobs)
    : sigma_(sigma),
      delta_(springcoh::delta(sigma)),
      degrees_(sigma.degrees()),
      budget_(budget),
      jobs_(jobs) {}

std::size_t InverseSystem::rank_of_operators(const std::vector<Monomial>& ops) const {
  std::unordered_map<Monomial, std::size_t, MonomialHash> columns;
  std::vector<Polynomial> images;
  images.reserve(ops.size());
  for (const auto& op : ops) {
    images.push_back(differentiate(op, delta_));
    for (const auto& t : images.back().terms()) columns.emplace(t.mono, columns.size());
  }
  if (ops.size() > budget_.max_block_dim || columns.size() > budget_.max_block_dim)
    throw ResourceLimitError("catalecticant block " + std::to_string(ops.size()) + "x" +
                             std::to_string(columns.size()) + " exceeds the block limit");
  budget_.check_deadline("catalecticant rank");
  linalg::IntegerMatrix m(images.size(), std::vector<Integer>(columns.size()));
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto& t : images[r].terms()) m[r][columns.at(t.mono)] = as_integer(t.coeff);
  return linalg::bareiss_rank(std::move(m));
}

std::size_t InverseSystem::block_rank(int a, int b) const {
  auto groups = divisors_by_bidegree(delta_, sigma_.n());
  auto it = groups.find({a, b});
  return it == groups.end() ? 0 : rank_of_operators(it->second);
}

BigradedTable InverseSystem::bigraded_hilbert() const {
  BigradedTable table;
  table.d1 = degrees_.d1;
  table.d2 = degrees_.d2;
  table.entries.assign(static_cast<std::size_t>(table.d1 + 1),
                       std::vector<std::size_t>(static_cast<std::size_t>(table.d2 + 1), 0));
  const auto groups = divisors_by_bidegree(delta_, sigma_.n());
  std::vector<std::pair<BidegreeKey, const std::vector<Monomial>*>> blocks;
  for (const auto& [key, ops] : groups) blocks.emplace_back(key, &ops);
  std::vector<std::size_t> ranks(blocks.size());
  parallel_for(blocks.size(), jobs_, [&](std::size_t k) { ranks[k] = rank_of_operators(*blocks[k].second); });
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto [a, b] = blocks[k].first;
    table.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ranks[k];
  }
  return table;
}

std::vector<std::size_t> InverseSystem::subalgebra_hilbert(Side side) const {
  std::vector<std::size_t> dims;
  const int n = sigma_.n();
  for (int b = 0; b <= side_top(side); ++b) {
    std::vector<Monomial> ops = monomials_of_degree(side_offset(side), n, b);
    dims.push_back(rank_of_operators(ops));
  }
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  return dims;
}

GradedPiece InverseSystem::graded_piece(Side side, int degree) const {
  GradedPiece piece;
  piece.degree = degree;
  piece.basis = monomials_of_degree(side_offset(side), sigma_.n(), degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> rows;
  std::vector<Polynomial> images;
  for (const auto& m : piece.basis) {
    images.push_back(differentiate(m, delta_));
    for (const auto& t : images.back().terms()) rows.emplace(t.mono, rows.size());
  }
  if (piece.basis.size() > budget_.max_block_dim || rows.size() > budget_.max_block_dim)
    throw ResourceLimitError("graded piece exceeds the block limit");
  budget_.check_deadline("graded piece");
  linalg::RationalMatrix a(rows.size(), std::vector<Rational>(piece.basis.size()));
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& t : images[c].terms()) a[rows.at(t.mono)][c] = t.coeff;
  piece.reduced = linalg::rref(std::move(a));
  return piece;
}

std::vector<ClassFunction> InverseSystem::subalgebra_graded_character(Side side) const {
  const int n = sigma_.n();
  const RingContext ring = delta_.ring();
  const std::size_t degrees = subalgebra_hilbert(side).size();
  std::vector<ClassFunction> out;
  for (std::size_t b = 0; b < degrees; ++b) {
    GradedPiece piece = graded_piece(side, static_cast<int>(b));
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < piece.basis.size(); ++k) index.emplace(piece.basis[k], k);
    ClassFunction chi(n);
    for (const auto& cls : all_partitions(n)) {
      const Permutation w = Permutation::class_representative(cls);
      Rational trace = 0;
      for (std::size_t r = 0; r < piece.reduced.pivots.size(); ++r) {
        const Monomial image = act(w, piece.basis[piece.reduced.pivots[r]], ring);
        trace += piece.reduced.rows[r][index.at(image)];
      }
      chi.set(cls, trace);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

std::vector<std::size_t> InverseSystem::socle_dimensions(Side side) const {
  const int n = sigma_.n();
  const int offset = side_offset(side);
  std::vector<std::size_t> out;
  for (int b = 0; b <= side_top(side); ++b) {
    const std::vector<Monomial> ops = monomials_of_degree(offset, n, b);
    const std::size_t phi = rank_of_operators(ops);
    // psi(m) = (d_{x_i m} Delta)_i, concatenated over the side variables.
    std::map<std::pair<int, Monomial>, std::size_t, SlotLess> columns;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> rows(ops.size());
    for (std::size_t k = 0; k < ops.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        const Polynomial image = differentiate(ops[k] * Monomial::variable(offset + i), delta_);
        for (const auto& t : image.terms()) {
          auto [it, inserted] = columns.emplace(std::make_pair(i, t.mono), columns.size());
          rows[k].emplace_back(it->second, as_integer(t.coeff));
        }
      }
    }
    budget_.check_deadline("socle");
    linalg::IntegerMatrix m(ops.size(), std::vector<Integer>(columns.size()));
    for (std::size_t k = 0; k < ops.size(); ++k)
      for (auto& [c, v] : rows[k]) m[k][c] = v;
    const std::size_t psi = linalg::bareiss_rank(std::move(m));
    out.push_back(phi - psi);
  }
  return out;
}

std::set<int> InverseSystem::socle_degrees(Side side) const {
  std::set<int> out;
  const auto dims = socle_dimensions(side);
  for (std::size_t b = 0; b < dims.size(); ++b)
    if (dims[b]) out.insert(static_cast<int>(b));
  return out;
}

}  // namespace springcoh

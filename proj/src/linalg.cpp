#include "springcoh/linalg.hpp"

#include <algorithm>

namespace springcoh::linalg {

std::size_t bareiss_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t k = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t r = k;
    while (r < rows && m[r][col] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[k]);
    const Integer& pivot = m[k][col];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Integer lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        tmp = pivot * m[i][j];
        tmp -= lead * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++k;
  }
  return k;
}

std::size_t rank(const RationalMatrix& matrix) {
  IntegerMatrix ints;
  ints.reserve(matrix.size());
  for (const auto& row : matrix) {
    Integer lcm_den = 1;
    for (const auto& q : row) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> irow;
    irow.reserve(row.size());
    for (const auto& q : row) irow.push_back(q.get_num() * (lcm_den / q.get_den()));
    ints.push_back(std::move(irow));
  }
  return bareiss_rank(std::move(ints));
}

Echelon rref(RationalMatrix m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t r = k;
    while (r < rows && m[r][col] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[k]);
    const Rational inv = 1 / m[k][col];
    for (std::size_t j = col; j < cols; ++j) m[k][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (m[k][j] != 0) m[i][j] -= f * m[k][j];
    }
    out.pivots.push_back(col);
    ++k;
  }
  m.resize(k);
  out.rows = std::move(m);
  return out;
}

Echelon nullspace(const RationalMatrix& matrix, std::size_t columns) {
  Echelon reduced = rref(matrix);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(columns, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < reduced.rows.size(); ++r) v[reduced.pivots[r]] = -reduced.rows[r][f];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

RationalMatrix transpose(const RationalMatrix& matrix, std::size_t columns) {
  RationalMatrix t(columns, std::vector<Rational>(matrix.size()));
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < columns; ++j) t[j][i] = matrix[i][j];
  return t;
}

}  // namespace springcoh::linalg

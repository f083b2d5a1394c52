#pragma once

// Test-only reference computations. Nothing here calls the rank,
// Groebner or Murnaghan-Nakayama code paths it is used to check.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "springcoh/linalg.hpp"
#include "springcoh/permutation.hpp"
#include "springcoh/polynomial.hpp"

namespace oracle {

using namespace springcoh;

/// det[X_s^{i_t} Y_s^{j_t}] by the Leibniz sum over all n! permutations.
inline Polynomial leibniz_delta(const Partition& sigma) {
  const int n = sigma.n();
  const RingContext ring = RingContext::doubled(n);
  const auto cells = sigma.diagram();
  std::vector<Term> terms;
  for (const auto& w : all_permutations(n)) {
    Monomial m;
    for (int s = 0; s < n; ++s) {
      const Cell& c = cells[static_cast<std::size_t>(w(s))];
      m.set(s, m[s] + c.i);
      m.set(n + s, m[n + s] + c.j);
    }
    terms.push_back({m, w.sign()});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Dimension of a span of polynomials by plain rational row reduction.
inline std::size_t span_dimension(const std::vector<Polynomial>& polys) {
  std::map<std::vector<std::uint8_t>, std::size_t> cols;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) {
      std::vector<std::uint8_t> key(t.mono.exponents().begin(), t.mono.exponents().end());
      cols.emplace(key, cols.size());
    }
  linalg::RationalMatrix m;
  for (const auto& p : polys) {
    std::vector<Rational> row(cols.size());
    for (const auto& t : p.terms()) {
      std::vector<std::uint8_t> key(t.mono.exponents().begin(), t.mono.exponents().end());
      row[cols.at(key)] = t.coeff;
    }
    m.push_back(std::move(row));
  }
  return linalg::rref(std::move(m)).rows.size();
}

/// Derivative closure of Delta under single first-order partials,
/// bucketed by the bidegree of the derivative operator. dims[(a, b)] is
/// the dimension of the span of all a-fold X and b-fold Y derivatives.
inline std::map<std::pair<int, int>, std::size_t> derivative_closure_dims(const Partition& sigma) {
  const int n = sigma.n();
  const auto deg = sigma.degrees();
  const Polynomial delta = leibniz_delta(sigma);
  std::map<std::pair<int, int>, std::vector<Polynomial>> layers;
  layers[{0, 0}] = {delta};
  // Walk bidegrees in order of a + b; each layer is spanned by first-order
  // derivatives of a basis of the previous layers.
  for (int total = 1; total <= deg.d1 + deg.d2; ++total) {
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      std::vector<Polynomial> gens;
      if (a > 0 && layers.count({a - 1, b}))
        for (const auto& p : layers[{a - 1, b}])
          for (int v = 0; v < n; ++v) gens.push_back(differentiate(Monomial::variable(v), p));
      if (b > 0 && layers.count({a, b - 1}))
        for (const auto& p : layers[{a, b - 1}])
          for (int v = 0; v < n; ++v) gens.push_back(differentiate(Monomial::variable(n + v), p));
      std::vector<Polynomial> nonzero;
      for (auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(std::move(g));
      // Keep a basis only, so the next layer stays small.
      std::vector<Polynomial> basis;
      for (auto& g : nonzero) {
        basis.push_back(g);
        if (span_dimension(basis) < basis.size()) basis.pop_back();
      }
      if (!basis.empty()) layers[{a, b}] = std::move(basis);
    }
  }
  std::map<std::pair<int, int>, std::size_t> dims;
  for (const auto& [key, basis] : layers) dims[key] = basis.size();
  return dims;
}

/// Graded dimensions of C[z]/(I_1 ∩ ... ∩ I_k) for homogeneous ideals
/// whose quotients vanish above degree `max_degree`, by intersecting the
/// degree-d pieces as vector subspaces.
inline std::vector<std::size_t> intersection_hilbert(const std::vector<std::vector<Polynomial>>& ideals, int n,
                                                     int max_degree) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree + 1; ++d) {
    const auto monos = monomials_of_degree(0, n, d);
    std::map<std::vector<std::uint8_t>, std::size_t> index;
    for (const auto& m : monos)
      index.emplace(std::vector<std::uint8_t>(m.exponents().begin(), m.exponents().end()), index.size());
    // Stack the constraints "v lies in I_k,d" as: v = B_k c_k. The
    // intersection is the set of v in every column space; compute it as
    // the nullspace of [B_1 -B_2 0...; B_1 0 -B_3 ...].
    std::vector<linalg::RationalMatrix> spans;
    for (const auto& gens : ideals) {
      linalg::RationalMatrix rows;
      for (const auto& g : gens) {
        const int gd = g.degree();
        if (gd > d) continue;
        for (const auto& mult : monomials_of_degree(0, n, d - gd)) {
          std::vector<Rational> row(monos.size());
          for (const auto& t : g.terms()) {
            Monomial m = t.mono * mult;
            row[index.at(std::vector<std::uint8_t>(m.exponents().begin(), m.exponents().end()))] = t.coeff;
          }
          rows.push_back(std::move(row));
        }
      }
      spans.push_back(linalg::rref(std::move(rows)).rows);
    }
    // Intersect successively: W <- W ∩ V_k via nullspace of [W^T | -V^T].
    linalg::RationalMatrix current = spans.front();
    for (std::size_t k = 1; k < spans.size() && !current.empty(); ++k) {
      const auto& other = spans[k];
      if (other.empty()) {
        current.clear();
        break;
      }
      const std::size_t cols = current.size() + other.size();
      linalg::RationalMatrix system(monos.size(), std::vector<Rational>(cols));
      for (std::size_t r = 0; r < current.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) system[c][r] = current[r][c];
      for (std::size_t r = 0; r < other.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) system[c][current.size() + r] = -other[r][c];
      const auto null = linalg::nullspace(system, cols);
      linalg::RationalMatrix next;
      for (const auto& coeffs : null.rows) {
        std::vector<Rational> v(monos.size());
        for (std::size_t r = 0; r < current.size(); ++r)
          if (coeffs[r] != 0)
            for (std::size_t c = 0; c < monos.size(); ++c) v[c] += coeffs[r] * current[r][c];
        next.push_back(std::move(v));
      }
      current = linalg::rref(std::move(next)).rows;
    }
    out.push_back(monos.size() - current.size());
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// Irreducible dimension by the hook length formula.
inline std::size_t hook_length_dimension(const Partition& shape) {
  std::size_t num = 1;
  for (int k = 2; k <= shape.n(); ++k) num *= static_cast<std::size_t>(k);
  const Partition dual = shape.dual();
  std::size_t den = 1;
  for (int j = 0; j < shape.length(); ++j)
    for (int i = 0; i < shape[j]; ++i)
      den *= static_cast<std::size_t>((shape[j] - i - 1) + (dual[i] - j - 1) + 1);
  return num / den;
}

}  // namespace oracle

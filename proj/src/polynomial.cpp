#include "springcoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "springcoh/errors.hpp"

namespace springcoh {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(trim(text));
  if (s.empty() || q.set_str(s, 10) != 0) throw UsageError("malformed coefficient '" + s + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Falling factorial m (m-1) ... (m-k+1).
Integer falling(int m, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= m - i;
  return r;
}

}  // namespace

Polynomial Polynomial::from_terms(RingContext ring, std::vector<Term> terms) {
  Polynomial p(ring);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) t.coeff.canonicalize();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(RingContext ring, const Rational& c) {
  return monomial(ring, Monomial(), c);
}

Polynomial Polynomial::variable(RingContext ring, int index) {
  if (index < 0 || index >= ring.num_vars()) throw UsageError("variable index out of range");
  return monomial(ring, Monomial::variable(index));
}

Polynomial Polynomial::monomial(RingContext ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_greater);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_))
    throw ContextMismatchError("ring mismatch: " + ring_.descriptor() + " vs " +
                               other.ring_.descriptor());
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c = a == terms_.end()         ? -1
            : b == other.terms_.end() ? 1
                                      : grevlex_compare(a->mono, b->mono);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) r.terms_.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == other.terms_[k].mono) || terms_[k].coeff != other.terms_[k].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k) out << " + ";
    out << t.coeff.get_num() << '/' << t.coeff.get_den();
    if (!t.mono.is_one()) {
      out << " *";
      for (int v = 0; v < ring_.num_vars(); ++v)
        if (t.mono[v]) out << ' ' << ring_.var_name(v) << '^' << t.mono[v];
    }
  }
  return out.str();
}

Polynomial Polynomial::parse(RingContext ring, std::string_view text) {
  text = trim(text);
  if (text == "0") return Polynomial(ring);
  if (text.empty()) throw UsageError("empty polynomial text");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view term = trim(text.substr(pos, next - pos));
    std::size_t star = term.find('*');
    Term t{Monomial(), parse_rational(term.substr(0, star))};
    if (star != std::string_view::npos) {
      std::istringstream factors{std::string(term.substr(star + 1))};
      std::string factor;
      bool any = false;
      while (factors >> factor) {
        any = true;
        auto caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int var = ring.var_index(name);
        if (var < 0) throw UsageError("unknown variable '" + name + "' in " + ring.descriptor());
        int e = 1;
        if (caret != std::string::npos) {
          try {
            e = std::stoi(factor.substr(caret + 1));
          } catch (const std::exception&) {
            throw UsageError("malformed exponent in '" + factor + "'");
          }
        }
        t.mono.set(var, t.mono[var] + e);
      }
      if (!any) throw UsageError("dangling '*' in polynomial text");
    }
    terms.push_back(std::move(t));
    pos = next + 3;
  }
  return from_terms(ring, std::move(terms));
}

Polynomial differentiate(const Monomial& op, const Polynomial& target) {
  std::vector<Term> out;
  const int nv = target.ring().num_vars();
  for (const auto& t : target.terms()) {
    if (!op.divides(t.mono)) continue;
    Integer factor = 1;
    for (int v = 0; v < nv; ++v)
      if (op[v]) factor *= falling(t.mono[v], op[v]);
    out.push_back({t.mono / op, t.coeff * factor});
  }
  // Division by a fixed monomial keeps the relative grevlex order only
  // within a degree; re-normalize to be safe.
  return Polynomial::from_terms(target.ring(), std::move(out));
}

Polynomial apply_operator(const Polynomial& f, const Polynomial& target) {
  if (!(f.ring() == target.ring()))
    throw ContextMismatchError("apply_operator: ring mismatch");
  Polynomial result(target.ring());
  for (const auto& t : f.terms()) result = result + differentiate(t.mono, target).scale(t.coeff);
  return result;
}

Monomial act(const Permutation& w, const Monomial& m, const RingContext& ring) {
  const int n = ring.n();
  if (w.size() != n) throw UsageError("permutation size does not match ring");
  Monomial r;
  switch (ring.kind()) {
    case RingContext::Kind::kDoubled:
      for (int i = 0; i < n; ++i) {
        r.set(w(i), m[i]);
        r.set(n + w(i), m[n + i]);
      }
      break;
    case RingContext::Kind::kSingle:
      for (int i = 0; i < n; ++i) r.set(w(i), m[i]);
      break;
    case RingContext::Kind::kAuxiliary:
      r.set(0, m[0]);
      for (int i = 0; i < n; ++i) r.set(1 + w(i), m[1 + i]);
      break;
  }
  return r;
}

Polynomial act(const Permutation& w, const Polynomial& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({act(w, t.mono, p.ring()), t.coeff});
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial delta(const Partition& sigma) {
  const int n = sigma.n();
  if (n > 7) throw ResourceLimitError("delta: n = " + std::to_string(n) + " exceeds 7");
  const RingContext ring = RingContext::doubled(n);
  const std::vector<Cell> cells = sigma.diagram();

  auto entry = [&](int row, int col) {
    Monomial m;
    m.set(row, cells[static_cast<std::size_t>(col)].i);
    m.set(n + row, cells[static_cast<std::size_t>(col)].j);
    return m;
  };

  // minors[mask] = det of rows 0..popcount(mask)-1 against the columns in
  // mask (ascending), expanded along the last row.
  std::unordered_map<unsigned, Polynomial> previous;
  previous.emplace(0u, Polynomial::constant(ring, 1));
  for (int k = 1; k <= n; ++k) {
    std::unordered_map<unsigned, Polynomial> current;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<Term> acc;
      int position = 0;
      for (int col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        // Sign of the cofactor at (row k-1, position) in a k x k minor.
        const int sign = ((k - 1 + position) % 2 == 0) ? 1 : -1;
        const Polynomial& minor = previous.at(mask & ~(1u << col));
        for (const auto& t : minor.terms())
          acc.push_back({t.mono * entry(k - 1, col), t.coeff * sign});
        ++position;
      }
      current.emplace(mask, Polynomial::from_terms(ring, std::move(acc)));
    }
    previous = std::move(current);
  }
  return previous.at((1u << n) - 1);
}

Polynomial elementary_symmetric(int r, std::span<const int> vars, RingContext ring) {
  const int m = static_cast<int>(vars.size());
  if (r < 1 || r > m) throw UsageError("elementary_symmetric: r out of range");
  std::vector<Term> terms;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == r) {
      Monomial mono;
      for (int v : chosen) mono.set(v, mono[v] + 1);
      terms.push_back({mono, 1});
      return;
    }
    for (int k = start; k < m; ++k) {
      chosen.push_back(vars[static_cast<std::size_t>(k)]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace springcoh

#include "springcoh/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "springcoh/errors.hpp"
#include "springcoh/linalg.hpp"

namespace springcoh {

namespace {

struct IntTerm {
  Monomial mono;
  Integer coeff;
};
using IntPoly = std::vector<IntTerm>;

// Sugar uses a weighted degree in which the elimination variable of an
// auxiliary ring has weight zero, so homogeneous inputs stay
// degree-by-degree through t*I + (1-t)*J.
int weighted_degree(const Monomial& m, const RingContext& ring) {
  return ring.kind() == RingContext::Kind::kAuxiliary ? m.degree() - m[0] : m.degree();
}

class Engine {
 public:
  Engine(const RingContext& ring, const MonomialOrder& order) : ring_(ring), order_(order) {}

  IntPoly to_int(const Polynomial& p) const {
    Integer den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({t.mono, t.coeff.get_num() * (den / t.coeff.get_den())});
    std::sort(out.begin(), out.end(), [&](const IntTerm& a, const IntTerm& b) {
      return order_.compare(a.mono, b.mono) > 0;
    });
    make_primitive(out);
    return out;
  }

  Polynomial to_monic(const IntPoly& p) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    const Rational lc(p.front().coeff);
    for (const auto& t : p) terms.push_back({t.mono, Rational(t.coeff) / lc});
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  static void make_primitive(IntPoly& p) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    if (p.front().coeff < 0) g = -g;
    if (g != 1)
      for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }

  // a_scale * a - b_scale * (mult * b), both inputs sorted by order_.
  IntPoly combine(const IntPoly& a, const Integer& a_scale, const IntPoly& b, const Integer& b_scale,
                  const Monomial& mult) const {
    IntPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    bool have_bm = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have_bm) {
        bm = b[j].mono * mult;
        have_bm = true;
      }
      int c = i == a.size() ? -1 : j == b.size() ? 1 : order_.compare(a[i].mono, bm);
      if (c > 0) {
        out.push_back({a[i].mono, a[i].coeff * a_scale});
        ++i;
      } else if (c < 0) {
        out.push_back({bm, -(b[j].coeff * b_scale)});
        ++j;
        have_bm = false;
      } else {
        Integer v = a[i].coeff * a_scale - b[j].coeff * b_scale;
        if (v != 0) out.push_back({bm, std::move(v)});
        ++i;
        ++j;
        have_bm = false;
      }
    }
    return out;
  }

  // Reduces `p` by `reducer` at its term (mono, coeff); returns the
  // multiplier applied to p.
  Integer reduce_step(IntPoly& p, std::size_t position, const IntPoly& reducer) const {
    const Integer& c = p[position].coeff;
    const Integer& lc = reducer.front().coeff;
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    Integer a_scale = lc / g;
    Integer b_scale = c / g;
    const Monomial mult = p[position].mono / reducer.front().mono;
    p = combine(p, a_scale, reducer, b_scale, mult);
    return a_scale;
  }

  const RingContext& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }

 private:
  RingContext ring_;
  MonomialOrder order_;
};

struct Entry {
  IntPoly poly;
  Monomial lm;
  int sugar = 0;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const RingContext& ring, const MonomialOrder& order, const Budget& budget)
      : engine_(ring, order), budget_(budget) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    std::vector<IntPoly> inputs;
    for (const auto& g : generators) {
      if (!(g.ring() == engine_.ring()))
        throw ContextMismatchError("buchberger: generator ring mismatch");
      if (!g.is_zero()) inputs.push_back(engine_.to_int(g));
    }
    // Ascending leading monomials keep early reductions small.
    std::sort(inputs.begin(), inputs.end(), [&](const IntPoly& a, const IntPoly& b) {
      return engine_.order().compare(a.front().mono, b.front().mono) < 0;
    });
    for (auto& p : inputs) {
      int sugar = 0;
      for (const auto& t : p) sugar = std::max(sugar, weighted_degree(t.mono, engine_.ring()));
      top_reduce(p);
      if (p.empty()) continue;
      engine_.make_primitive(p);
      insert(std::move(p), sugar);
    }

    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > budget_.max_pairs) {
        std::ostringstream msg;
        msg << "buchberger: pair cap " << budget_.max_pairs << " reached (basis size " << active_count()
            << ", pending pairs " << pairs_.size() << ")";
        throw ResourceLimitError(msg.str());
      }
      if (processed % 64 == 0) budget_.check_deadline("buchberger");
      const Pair pair = pop_pair();
      IntPoly s = spoly(pair);
      top_reduce(s);
      if (s.empty()) continue;
      engine_.make_primitive(s);
      insert(std::move(s), pair.sugar);
    }
    return reduced_basis();
  }

 private:
  std::size_t active_count() const {
    return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [](const Entry& e) { return e.active; }));
  }

  const Entry* find_reducer(const Monomial& m) const {
    const Entry* best = nullptr;
    for (const auto& e : basis_) {
      if (!e.active || !e.lm.divides(m)) continue;
      if (!best || e.poly.size() < best->poly.size()) best = &e;
    }
    return best;
  }

  void top_reduce(IntPoly& p) const {
    std::size_t steps = 0;
    while (!p.empty()) {
      const Entry* r = find_reducer(p.front().mono);
      if (!r) return;
      engine_.reduce_step(p, 0, r->poly);
      if (++steps % 16 == 0) Engine::make_primitive(p);
    }
  }

  // Reduces every non-leading term; the leading monomial is unchanged.
  void tail_reduce(IntPoly& p, std::size_t self) const {
    std::size_t pos = 1;
    while (pos < p.size()) {
      const Entry* r = nullptr;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        const auto& e = basis_[k];
        if (k == self || !e.active || !e.lm.divides(p[pos].mono)) continue;
        if (!r || e.poly.size() < r->poly.size()) r = &e;
      }
      if (!r) {
        ++pos;
        continue;
      }
      engine_.reduce_step(p, pos, r->poly);
    }
    Engine::make_primitive(p);
  }

  IntPoly spoly(const Pair& pair) const {
    const IntPoly& f = basis_[pair.i].poly;
    const IntPoly& g = basis_[pair.j].poly;
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    const Integer fs = g.front().coeff / gcd;
    const Integer gs = f.front().coeff / gcd;
    IntPoly lifted = engine_.combine({}, 0, f, -fs, pair.lcm / basis_[pair.i].lm);
    return engine_.combine(lifted, 1, g, gs, pair.lcm / basis_[pair.j].lm);
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && engine_.order().compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    const RingContext& ring = engine_.ring();
    return std::max(basis_[i].sugar + weighted_degree(lcm / basis_[i].lm, ring),
                    basis_[j].sugar + weighted_degree(lcm / basis_[j].lm, ring));
  }

  // Gebauer-Moeller update with the new element h.
  void insert(IntPoly poly, int sugar) {
    const std::size_t h = basis_.size();
    Entry entry;
    entry.lm = poly.front().mono;
    entry.poly = std::move(poly);
    entry.sugar = sugar;
    basis_.push_back(std::move(entry));
    const Monomial& lm_h = basis_[h].lm;

    std::vector<std::pair<std::size_t, Monomial>> candidates;
    for (std::size_t g = 0; g < h; ++g)
      if (basis_[g].active) candidates.emplace_back(g, lm_h.lcm(basis_[g].lm));

    std::vector<std::pair<std::size_t, Monomial>> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto& [g1, l1] = candidates[k];
      bool keep = lm_h.coprime(basis_[g1].lm);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < candidates.size() && keep; ++q)
          if (candidates[q].second.divides(l1)) keep = false;
        for (std::size_t q = 0; q < kept.size() && keep; ++q)
          if (kept[q].second.divides(l1)) keep = false;
      }
      if (keep) kept.push_back(candidates[k]);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      const bool drop = lm_h.divides(p.lcm) && !(basis_[p.i].lm.lcm(lm_h) == p.lcm) &&
                        !(basis_[p.j].lm.lcm(lm_h) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& [g, l] : kept) {
      if (lm_h.coprime(basis_[g].lm)) continue;
      next.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (basis_[g].active && lm_h.divides(basis_[g].lm)) basis_[g].active = false;
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].active) live.push_back(k);
    for (auto k : live) {
      IntPoly p = basis_[k].poly;
      tail_reduce(p, k);
      basis_[k].poly = std::move(p);
    }
    std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
      return engine_.order().compare(basis_[a].lm, basis_[b].lm) < 0;
    });
    std::vector<Polynomial> out;
    for (auto k : live) out.push_back(engine_.to_monic(basis_[k].poly));
    return out;
  }

  Engine engine_;
  Budget budget_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
};

std::vector<Term> sort_by(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Term> terms = p.terms();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return terms;
}

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw UsageError("leading_monomial of the zero polynomial");
  Monomial best = p.terms().front().mono;
  for (const auto& t : p.terms())
    if (order.compare(t.mono, best) > 0) best = t.mono;
  return best;
}

GroebnerBasis::GroebnerBasis(RingContext ring, MonomialOrder order, std::vector<Polynomial> generators)
    : ring_(ring), order_(order) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw ContextMismatchError("GroebnerBasis: generator ring mismatch");
    if (g.is_zero()) continue;
    const Monomial lm = leading_monomial(g, order_);
    Polynomial monic = g.scale(1 / g.coefficient(lm));
    leading_.push_back(lm);
    sorted_.push_back(sort_by(monic, order_));
    generators_.push_back(std::move(monic));
  }
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!(p.ring() == ring_)) throw ContextMismatchError("normal_form: ring mismatch");
  std::vector<Term> work = sort_by(p, order_);
  std::vector<Term> remainder;
  while (!work.empty()) {
    const Term lead = work.front();
    std::size_t r = 0;
    while (r < leading_.size() && !leading_[r].divides(lead.mono)) ++r;
    if (r == leading_.size()) {
      remainder.push_back(lead);
      work.erase(work.begin());
      continue;
    }
    const Monomial mult = lead.mono / leading_[r];
    const auto& g = sorted_[r];
    std::vector<Term> next;
    next.reserve(work.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < work.size() || j < g.size()) {
      Monomial gm;
      if (j < g.size()) gm = g[j].mono * mult;
      int c = i == work.size() ? -1 : j == g.size() ? 1 : order_.compare(work[i].mono, gm);
      if (c > 0) {
        next.push_back(work[i++]);
      } else if (c < 0) {
        next.push_back({gm, -lead.coeff * g[j].coeff});
        ++j;
      } else {
        Rational v = work[i].coeff - lead.coeff * g[j].coeff;
        if (v != 0) next.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    work = std::move(next);
  }
  return Polynomial::from_terms(ring_, std::move(remainder));
}

bool GroebnerBasis::self_check(std::size_t sample_pairs) const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    if (generators_[a].coefficient(leading_[a]) != 1) return false;
    for (std::size_t b = 0; b < generators_.size(); ++b)
      if (a != b && leading_[a].divides(leading_[b])) return false;
  }
  std::size_t checked = 0;
  for (std::size_t a = 0; a < generators_.size() && checked < sample_pairs; ++a) {
    for (std::size_t b = a + 1; b < generators_.size() && checked < sample_pairs; ++b) {
      if (leading_[a].coprime(leading_[b])) continue;
      const Monomial l = leading_[a].lcm(leading_[b]);
      Polynomial s = generators_[a].mul_monomial(l / leading_[a]) - generators_[b].mul_monomial(l / leading_[b]);
      if (!normal_form(s).is_zero()) return false;
      ++checked;
    }
  }
  return true;
}

std::string GroebnerBasis::serialize() const {
  std::ostringstream out;
  out << "ring " << ring_.descriptor() << "\norder " << order_.descriptor() << "\n";
  for (const auto& g : generators_) out << g.to_string() << "\n";
  return out.str();
}

GroebnerBasis GroebnerBasis::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto expect = [&](const std::string& prefix) {
    if (!std::getline(in, line) || line.rfind(prefix, 0) != 0)
      throw UsageError("Groebner basis text: expected '" + prefix + "' header");
    return line.substr(prefix.size());
  };
  std::istringstream ring_spec(expect("ring "));
  std::string kind;
  int n = 0;
  ring_spec >> kind >> n;
  RingContext ring = kind == "doubled"     ? RingContext::doubled(n)
                     : kind == "single"    ? RingContext::single(n)
                     : kind == "auxiliary" ? RingContext::auxiliary(n)
                                           : throw UsageError("unknown ring kind '" + kind + "'");
  MonomialOrder order = MonomialOrder::parse(expect("order "));
  std::vector<Polynomial> gens;
  while (std::getline(in, line))
    if (!line.empty()) gens.push_back(Polynomial::parse(ring, line));
  return GroebnerBasis(ring, order, std::move(gens));
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  return ring_ == other.ring_ && order_ == other.order_ && generators_ == other.generators_;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const Budget& budget) {
  if (generators.empty()) throw UsageError("buchberger: no generators");
  const RingContext ring = generators.front().ring();
  Buchberger engine(ring, order, budget);
  return GroebnerBasis(ring, order, engine.run(generators));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

GroebnerBasis intersect(const GroebnerBasis& I, const GroebnerBasis& J, const Budget& budget) {
  if (!(I.ring() == J.ring())) throw ContextMismatchError("intersect: ring mismatch");
  if (I.ring().kind() != RingContext::Kind::kSingle)
    throw UsageError("intersect: only single rings are supported");
  const int n = I.ring().n();
  const RingContext aux = RingContext::auxiliary(n);
  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Monomial m;
      for (int v = 0; v < n; ++v) m.set(v + 1, t.mono[v]);
      terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(aux, std::move(terms));
  };
  const Polynomial t = Polynomial::variable(aux, 0);
  const Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * lift(f));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift(g));
  const GroebnerBasis elim = buchberger(gens, MonomialOrder::block(1), budget);

  std::vector<Polynomial> kept;
  for (const auto& g : elim.generators()) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.mono[0] > 0;
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial m;
      for (int v = 0; v < n; ++v) m.set(v, term.mono[v + 1]);
      terms.push_back({m, term.coeff});
    }
    kept.push_back(Polynomial::from_terms(I.ring(), std::move(terms)));
  }
  if (kept.empty()) kept.push_back(Polynomial(I.ring()));
  return buchberger(kept, MonomialOrder::grevlex(), budget);
}

GroebnerBasis change_order(const GroebnerBasis& gb, const MonomialOrder& order, const Budget& budget) {
  return buchberger(gb.generators(), order, budget);
}

std::size_t QuotientRing::dimension() const {
  std::size_t s = 0;
  for (auto h : hilbert) s += h;
  return s;
}

QuotientRing quotient(const GroebnerBasis& gb, std::optional<int> degree_cap) {
  const int nv = gb.ring().num_vars();
  if (!degree_cap) {
    for (int v = 0; v < nv; ++v) {
      bool pure = false;
      for (const auto& lm : gb.leading_monomials()) pure = pure || (lm[v] > 0 && lm[v] == lm.degree());
      if (!pure) throw DimensionError("quotient is not finite-dimensional (no pure power of " +
                                      gb.ring().var_name(v) + " among leading monomials)");
    }
  }
  QuotientRing q{gb, {}, {}};
  for (int d = 0; !degree_cap || d <= *degree_cap; ++d) {
    std::vector<Monomial> standard;
    for (const auto& m : monomials_of_degree(0, nv, d)) {
      bool divisible = false;
      for (const auto& lm : gb.leading_monomials())
        if (lm.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) standard.push_back(m);
    }
    if (standard.empty()) break;
    q.hilbert.push_back(standard.size());
    q.staircase.push_back(std::move(standard));
  }
  return q;
}

std::vector<Rational> staircase_coordinates(const QuotientRing& q, const Polynomial& p, int degree) {
  const Polynomial nf = q.basis.normal_form(p);
  const auto& stairs = q.staircase;
  std::vector<Rational> out;
  if (degree < 0 || degree >= static_cast<int>(stairs.size())) {
    for (const auto& t : nf.terms())
      if (t.mono.degree() == degree) throw std::logic_error("normal form outside the staircase");
    return out;
  }
  const auto& level = stairs[static_cast<std::size_t>(degree)];
  out.assign(level.size(), 0);
  for (const auto& t : nf.terms()) {
    if (t.mono.degree() != degree) continue;
    auto it = std::find(level.begin(), level.end(), t.mono);
    out[static_cast<std::size_t>(it - level.begin())] = t.coeff;
  }
  return out;
}

std::vector<std::size_t> socle(const QuotientRing& q) {
  const RingContext& ring = q.basis.ring();
  const int nv = ring.num_vars();
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < q.staircase.size(); ++d) {
    const auto& level = q.staircase[d];
    if (d + 1 == q.staircase.size()) {
      out.push_back(level.size());
      continue;
    }
    const std::size_t next = q.staircase[d + 1].size();
    linalg::RationalMatrix m;
    for (const auto& mono : level) {
      std::vector<Rational> row;
      row.reserve(next * static_cast<std::size_t>(nv));
      for (int v = 0; v < nv; ++v) {
        auto coords = staircase_coordinates(q, Polynomial::monomial(ring, mono * Monomial::variable(v)),
                                            static_cast<int>(d + 1));
        row.insert(row.end(), coords.begin(), coords.end());
      }
      m.push_back(std::move(row));
    }
    out.push_back(level.size() - linalg::rank(m));
  }
  return out;
}

}  // namespace springcoh

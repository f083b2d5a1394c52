#include "springcoh/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "springcoh/errors.hpp"

namespace springcoh {

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& p : all_partitions(n)) values_.emplace(p, 0);
}

const Rational& ClassFunction::at(const Partition& cls) const {
  auto it = values_.find(cls);
  if (it == values_.end()) throw UsageError("class " + cls.to_string() + " is not a class of S_" + std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const Partition& cls, const Rational& value) {
  auto it = values_.find(cls);
  if (it == values_.end()) throw UsageError("class " + cls.to_string() + " is not a class of S_" + std::to_string(n_));
  it->second = value;
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
  if (other.n_ != n_) throw UsageError("class function size mismatch");
  ClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v += other.values_.at(cls);
  return r;
}

ClassFunction ClassFunction::scale(const Rational& c) const {
  ClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v *= c;
  return r;
}

std::string ClassFunction::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [cls, v] : values_) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << ')';
  return out.str();
}

Integer class_size(const Partition& cycle_type) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : cycle_type.parts()) ++mult[p];
  for (auto [len, m] : mult) {
    for (int k = 0; k < m; ++k) z *= len;
    for (int k = 2; k <= m; ++k) z *= k;
  }
  Integer nf = 1;
  for (int k = 2; k <= cycle_type.n(); ++k) nf *= k;
  return nf / z;
}

namespace {

// Beta-set encoding: a shape of length <= L is the strictly decreasing
// sequence shape[k] + (L - 1 - k). Removing a border strip of length r
// moves one bead from b to b - r.
class MurnaghanNakayama {
 public:
  MurnaghanNakayama(const Partition& shape, const Partition& cycles) : cycles_(cycles.parts()) {
    const int len = shape.length();
    for (int k = 0; k < len; ++k) beads_.push_back(shape[k] + (len - 1 - k));
  }

  Integer run() { return eval(beads_, 0); }

 private:
  Integer eval(const std::vector<int>& beads, std::size_t next) {
    if (next == cycles_.size()) return 1;
    auto key = std::make_pair(beads, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r = cycles_[next];
    Integer total = 0;
    for (std::size_t k = 0; k < beads.size(); ++k) {
      const int target = beads[k] - r;
      if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
      int between = 0;
      for (int b : beads)
        if (b > target && b < beads[k]) ++between;
      std::vector<int> moved = beads;
      moved[k] = target;
      std::sort(moved.rbegin(), moved.rend());
      Integer sub = eval(moved, next + 1);
      if (between % 2) total -= sub;
      else total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> cycles_;
  std::vector<int> beads_;
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

CharacterTable build_table(int n) {
  CharacterTable table;
  table.n = n;
  table.labels = all_partitions(n);
  for (const auto& cls : table.labels) table.class_sizes.emplace(cls, class_size(cls));
  for (const auto& shape : table.labels) {
    ClassFunction row(n);
    for (const auto& cls : table.labels) row.set(cls, Rational(MurnaghanNakayama(shape, cls).run()));
    table.rows.emplace(shape, std::move(row));
  }
  Integer dims = 0;
  for (const auto& shape : table.labels) {
    const Integer d = table.rows.at(shape).at(table.labels.back()).get_num();
    dims += d * d;
    for (const auto& other : table.labels) {
      Rational ip = inner_product(table.rows.at(shape), table.rows.at(other));
      if (ip != (shape == other ? 1 : 0))
        throw std::logic_error("character table of S_" + std::to_string(n) + " is not orthonormal");
    }
  }
  if (dims != Integer(factorial(n))) throw std::logic_error("sum of squared dimensions is not n!");
  return table;
}

}  // namespace

Integer murnaghan_nakayama(const Partition& shape, const Partition& cycle_type) {
  if (shape.n() != cycle_type.n()) throw UsageError("shape and cycle type sizes differ");
  return MurnaghanNakayama(shape, cycle_type).run();
}

const CharacterTable& character_table(int n) {
  if (n < 1 || n > 8) throw UsageError("character_table: n must lie in [1, 8]");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CharacterTable>(build_table(n));
  return *slot;
}

Rational inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.n() != psi.n()) throw UsageError("inner_product: size mismatch");
  Rational total = 0;
  for (const auto& [cls, v] : phi.values()) total += Rational(class_size(cls)) * v * psi.at(cls);
  return total / Rational(Integer(factorial(phi.n())));
}

Decomposition decompose(const ClassFunction& phi) {
  Decomposition out;
  const auto& table = character_table(phi.n());
  for (const auto& shape : table.labels) {
    Rational m = inner_product(phi, table.rows.at(shape));
    if (m == 0) continue;
    if (m < 0 || m.get_den() != 1) out.genuine = false;
    out.multiplicities.emplace(shape, m);
  }
  return out;
}

ClassFunction trivial_character(int n) {
  ClassFunction f(n);
  for (const auto& p : all_partitions(n)) f.set(p, 1);
  return f;
}

ClassFunction sign_character(int n) {
  ClassFunction f(n);
  for (const auto& p : all_partitions(n)) f.set(p, (p.n() - p.length()) % 2 == 0 ? 1 : -1);
  return f;
}

ClassFunction regular_character(int n) {
  ClassFunction f(n);
  f.set(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Rational(Integer(factorial(n))));
  return f;
}

}  // namespace springcoh

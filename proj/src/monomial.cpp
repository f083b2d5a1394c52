#include "springcoh/monomial.hpp"

#include <algorithm>
#include <vector>

#include "springcoh/errors.hpp"

namespace springcoh {

RingContext RingContext::doubled(int n) {
  if (n < 1 || 2 * n > kMaxVariables) throw UsageError("doubled ring needs 1 <= n <= 8");
  return RingContext(Kind::kDoubled, n);
}

RingContext RingContext::single(int n) {
  if (n < 1 || n > kMaxVariables) throw UsageError("single ring needs 1 <= n <= 16");
  return RingContext(Kind::kSingle, n);
}

RingContext RingContext::auxiliary(int n) {
  if (n < 1 || n + 1 > kMaxVariables) throw UsageError("auxiliary ring needs 1 <= n <= 15");
  return RingContext(Kind::kAuxiliary, n);
}

int RingContext::num_vars() const {
  switch (kind_) {
    case Kind::kDoubled: return 2 * n_;
    case Kind::kSingle: return n_;
    case Kind::kAuxiliary: return n_ + 1;
  }
  return 0;
}

std::string RingContext::var_name(int index) const {
  switch (kind_) {
    case Kind::kDoubled:
      return index < n_ ? "X" + std::to_string(index + 1) : "Y" + std::to_string(index - n_ + 1);
    case Kind::kSingle: return "z" + std::to_string(index + 1);
    case Kind::kAuxiliary: return index == 0 ? "t" : "z" + std::to_string(index);
  }
  return {};
}

int RingContext::var_index(const std::string& name) const {
  for (int v = 0; v < num_vars(); ++v)
    if (var_name(v) == name) return v;
  return -1;
}

std::string RingContext::descriptor() const {
  switch (kind_) {
    case Kind::kDoubled: return "doubled " + std::to_string(n_);
    case Kind::kSingle: return "single " + std::to_string(n_);
    case Kind::kAuxiliary: return "auxiliary " + std::to_string(n_);
  }
  return {};
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int index, int value) {
  if (index < 0 || index >= kMaxVariables) throw UsageError("variable index out of range");
  if (value < 0 || value > 255) throw ResourceLimitError("exponent exceeds 255");
  auto& slot = exps_[static_cast<std::size_t>(index)];
  degree_ = static_cast<std::uint16_t>(degree_ - slot + value);
  slot = static_cast<std::uint8_t>(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    int e = exps_[k] + other.exps_[k];
    if (e > 255) throw ResourceLimitError("exponent exceeds 255");
    r.exps_[k] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = static_cast<std::uint8_t>(exps_[k] - divisor.exps_[k]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int deg = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    r.exps_[k] = std::max(exps_[k], other.exps_[k]);
    deg += r.exps_[k];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] && other.exps_[k]) return false;
  return true;
}

int Monomial::partial_degree(int begin, int end) const {
  int s = 0;
  for (int k = begin; k < end; ++k) s += exps_[static_cast<std::size_t>(k)];
  return s;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(int offset, int count, int degree) {
  std::vector<Monomial> out;
  Monomial current;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == count - 1) {
      current.set(offset + var, remaining);
      out.push_back(current);
      current.set(offset + var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current.set(offset + var, e);
      self(self, var + 1, remaining - e);
    }
    current.set(offset + var, 0);
  };
  if (count > 0 && degree >= 0) rec(rec, 0, degree);
  return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = kMaxVariables - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  }
  return 0;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int begin, int end) {
  int da = a.partial_degree(begin, end);
  int db = b.partial_degree(begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (int k = end - 1; k >= begin; --k)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kGrevlex: return grevlex_compare(a, b);
    case Kind::kLex:
      for (int k = 0; k < kMaxVariables; ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      return 0;
    case Kind::kBlock: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVariables);
    }
  }
  return 0;
}

std::string MonomialOrder::descriptor() const {
  switch (kind_) {
    case Kind::kGrevlex: return "grevlex";
    case Kind::kLex: return "lex";
    case Kind::kBlock: return "block " + std::to_string(block_);
  }
  return {};
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.rfind("block ", 0) == 0) return block(std::stoi(text.substr(6)));
  throw UsageError("unknown monomial order '" + text + "'");
}

}  // namespace springcoh

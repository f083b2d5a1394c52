#include "springcoh/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "springcoh/errors.hpp"

namespace springcoh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("partition must be nonempty");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw UsageError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw UsageError("partition parts must be weakly decreasing");
    n_ += parts_[k];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw UsageError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::dual() const {
  std::vector<int> d(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int s = 0; s < p; ++s) ++d[static_cast<std::size_t>(s)];
  return Partition(std::move(d));
}

std::vector<Cell> Partition::diagram() const {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < length(); ++j)
    for (int i = 0; i < (*this)[j]; ++i) cells.push_back({i, j});
  return cells;
}

DegreePair Partition::degrees() const {
  DegreePair d;
  for (const Cell& c : diagram()) {
    d.d1 += c.i;
    d.d2 += c.j;
  }
  return d;
}

int Partition::d2_from_dual() const {
  int total = 0;
  const Partition conjugate = dual();
  for (int c : conjugate.parts()) total += c * (c - 1) / 2;
  return total;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out << ',';
    out << parts_[k];
  }
  return out.str();
}

bool Partition::operator<(const Partition& other) const {
  return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(),
                                      parts_.begin(), parts_.end());
}

std::vector<Partition> all_partitions(int n) {
  if (n < 1 || n > 12) throw UsageError("n must lie in [1, 12]");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace springcoh

#include "springcoh/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "springcoh/errors.hpp"

namespace springcoh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw UsageError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::class_representative(const Partition& cycle_type) {
  std::vector<int> img(static_cast<std::size_t>(cycle_type.n()));
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int k = 0; k < len; ++k)
      img[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw UsageError("permutation size mismatch");
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int Permutation::sign() const {
  const Partition type = cycle_type();
  int parity = 0;
  for (int len : type.parts()) parity += len - 1;
  return parity % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < size(); ++i) out << (i ? " " : "") << (*this)(i) + 1;
  out << ']';
  return out.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace springcoh

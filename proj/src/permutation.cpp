#include "hp/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hp {

Permutation::Permutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images0) : img_(std::move(images0)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) {
      throw Error("not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error("bad transposition");
  Permutation s(n);
  std::swap(s.img_[i - 1], s.img_[j - 1]);
  return s;
}

Permutation Permutation::cycle(int n, const std::vector<int>& elems) {
  Permutation s(n);
  if (elems.size() < 2) return s;
  for (size_t k = 0; k < elems.size(); ++k) {
    int from = elems[k] - 1;
    int to = elems[(k + 1) % elems.size()] - 1;
    if (from < 0 || from >= n || to < 0 || to >= n) throw Error("bad cycle");
    s.img_[from] = to;
  }
  return s;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw Error("permutation size mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < n(); ++i) r[i] = img_[o.img_[i]];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < n(); ++i) r[img_[i]] = i;
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

int Permutation::parity() const {
  std::vector<bool> seen(img_.size(), false);
  int sign = 1;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> Permutation::apply(const std::vector<int>& gamma) const {
  if (static_cast<int>(gamma.size()) != n()) throw Error("exponent size mismatch");
  std::vector<int> out(gamma.size());
  for (int i = 0; i < n(); ++i) out[img_[i]] = gamma[i];
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return sort_to_partition(lens);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) out.push_back(Permutation::transposition(n, i, i + 1));
  return out;
}

std::vector<Permutation> young_subgroup(const std::vector<int>& block_sizes) {
  int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<Permutation> out{Permutation(n)};
  int offset = 0;
  for (int b : block_sizes) {
    std::vector<int> idx(b);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Permutation> next;
    do {
      for (const Permutation& base : out) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = base.map0(i);
        for (int i = 0; i < b; ++i) img[offset + i] = offset + idx[i];
        next.push_back(Permutation(std::move(img)));
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    out = std::move(next);
    offset += b;
  }
  return out;
}

Permutation class_representative(const Partition& cycle_type, int n) {
  if (cycle_type.size() != n) throw Error("cycle type must sum to n");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  int pos = 0;
  for (int len : cycle_type.parts()) {
    for (int i = 0; i < len; ++i) img[pos + i] = pos + (i + 1) % len;
    pos += len;
  }
  return Permutation(std::move(img));
}

}  // namespace hp

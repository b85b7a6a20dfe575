#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace tricover::detail {

/// Disjoint sets where every element carries a parity relative to its root. `unite` returns
/// false when the requested relation contradicts the existing one.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  /// Returns (root, parity of x relative to root).
  std::pair<std::size_t, int> find(std::size_t x) {
    int acc = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      acc ^= parity_[r];
      r = parent_[r];
    }
    // path compression
    int run = acc;
    while (parent_[x] != x) {
      std::size_t next = parent_[x];
      int p = parity_[x];
      parent_[x] = r;
      parity_[x] = run;
      run ^= p;
      x = next;
    }
    return {r, acc};
  }

  /// Requests parity(a) xor parity(b) == rel.
  bool unite(std::size_t a, std::size_t b, int rel = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  std::size_t root(std::size_t x) { return find(x).first; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

}  // namespace tricover::detail

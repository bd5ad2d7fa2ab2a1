#pragma once

#include <utility>
#include <vector>

namespace codforge {

/// Union-find over nodes carrying a bit, with constraints bit(a) ^ bit(b) = parity.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int size) : parent_(static_cast<std::size_t>(size)), rank_(parent_.size(), 0),
                                       parity_(parent_.size(), 0) {
    for (int i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  /// Root of x and the parity of x relative to it.
  std::pair<int, int> find(int x) {
    int acc = 0;
    int root = x;
    while (parent_[idx(root)] != root) {
      acc ^= parity_[idx(root)];
      root = parent_[idx(root)];
    }
    // path compression, keeping parities relative to the root
    int cur = x;
    int cur_parity = acc;
    while (parent_[idx(cur)] != root && cur != root) {
      const int next = parent_[idx(cur)];
      const int next_parity = cur_parity ^ parity_[idx(cur)];
      parent_[idx(cur)] = root;
      parity_[idx(cur)] = cur_parity;
      cur = next;
      cur_parity = next_parity;
    }
    return {root, acc};
  }

  /// Adds the constraint; returns false (and changes nothing) if it
  /// contradicts the constraints already present.
  bool unite(int a, int b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    if (rank_[idx(ra)] < rank_[idx(rb)]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[idx(rb)] = ra;
    parity_[idx(rb)] = pa ^ pb ^ parity;
    if (rank_[idx(ra)] == rank_[idx(rb)]) ++rank_[idx(ra)];
    return true;
  }

  /// Bit of x in the solution where every root has bit 0.
  int value(int x) { return find(x).second; }

 private:
  static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> parity_;
};

}  // namespace codforge

#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace stclab::detail {

// Union-find by size with rollback (no path compression, so undo works).
struct Dsu {
  std::vector<int> parent;
  std::vector<int> size;
  std::vector<std::pair<int, int>> history;  // (absorbed root, new root)

  explicit Dsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    history.emplace_back(b, a);
    return true;
  }

  void rollback() {
    auto [b, a] = history.back();
    history.pop_back();
    size[a] -= size[b];
    parent[b] = b;
  }

  void assign_from(const Dsu& other) {
    parent = other.parent;
    size = other.size;
    history.clear();
  }
};

}  // namespace stclab::detail

#include "stclab/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stclab {

OrderingWitness is_proper_interval_ordering(const Graph& g,
                                            const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries for " + std::to_string(n) + " vertices");
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (v < 0 || v >= n || pos[v] != -1)
      throw std::invalid_argument("order is not a permutation of the vertices");
    pos[v] = p;
  }

  OrderingWitness witness;
  for (const Edge& e : g.edges()) {
    int lo = e.u, hi = e.v;
    if (pos[lo] > pos[hi]) std::swap(lo, hi);
    for (int p = pos[lo] + 1; p < pos[hi]; ++p) {
      int mid = order[p];
      if (!g.has_edge(lo, mid) || !g.has_edge(mid, hi)) {
        witness.violation = {lo, mid, hi};
        return witness;
      }
    }
  }
  witness.valid = true;
  return witness;
}

std::optional<Claw> find_claw(const Graph& g) {
  for (int c = 0; c < g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (int l = j + 1; l < d; ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          return Claw{c, {nb[i], nb[j], nb[l]}};
        }
      }
  }
  return std::nullopt;
}

bool clique_cover_3(const Graph& g, const std::array<std::vector<int>, 3>& parts) {
  std::vector<char> seen(g.vertex_count(), 0);
  long long covered = 0;
  for (const auto& part : parts)
    for (int v : part) {
      if (!g.has_vertex(v))
        throw std::invalid_argument("part contains unknown vertex " + std::to_string(v));
      if (seen[v])
        throw std::invalid_argument("parts overlap at vertex " + std::to_string(v));
      seen[v] = 1;
      ++covered;
    }
  if (covered != g.vertex_count())
    throw std::invalid_argument("parts do not cover all vertices");

  for (const auto& part : parts)
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (!g.has_edge(part[i], part[j])) return false;
  return true;
}

}  // namespace stclab

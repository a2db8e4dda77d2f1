#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stclab/graph.hpp"

namespace stclab {

struct OrderingWitness {
  bool valid = false;
  // (u, v, w) with u before v before w in the order, {u,w} an edge, and
  // {u,v} or {v,w} missing.
  std::optional<std::array<int, 3>> violation;
};

// Checks the proper interval ordering condition: for every edge {u,w},
// each vertex between u and w must be adjacent to both. Scans edges in
// canonical order with early exit, so the first violation is
// deterministic. Rejects orders that are not permutations of V.
OrderingWitness is_proper_interval_ordering(const Graph& g,
                                            const std::vector<int>& order);

struct Claw {
  int center = 0;
  std::array<int, 3> leaves{};  // pairwise non-adjacent neighbors
};

// First induced K_{1,3} in canonical order, if any. Naive search over
// neighbor triples; fine at desk scale.
std::optional<Claw> find_claw(const Graph& g);

// True iff each part is a clique; the three parts must partition V.
// Witnesses independence number <= 3.
bool clique_cover_3(const Graph& g, const std::array<std::vector<int>, 3>& parts);

}  // namespace stclab

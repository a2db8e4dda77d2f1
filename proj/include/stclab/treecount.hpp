#pragma once

#include <gmpxx.h>

#include "stclab/graph.hpp"

namespace stclab {

// Exact number of spanning trees via the Kirchhoff minor determinant,
// evaluated with fraction-free (Bareiss) elimination over big integers.
// Returns 0 for a disconnected graph, 1 for a single vertex.
mpz_class count_spanning_trees(const Graph& g);

}  // namespace stclab

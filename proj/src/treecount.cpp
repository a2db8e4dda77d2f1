#include "stclab/treecount.hpp"

#include <vector>

namespace stclab {

// Bareiss fraction-free elimination on the first Kirchhoff minor. Every
// intermediate entry is a minor of the integer matrix, so the divisions
// are exact.
mpz_class count_spanning_trees(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (!g.is_connected()) return 0;

  const int d = n - 1;  // drop row/column of vertex 0
  std::vector<std::vector<mpz_class>> mat(d, std::vector<mpz_class>(d, 0));
  for (int v = 1; v < n; ++v) mat[v - 1][v - 1] = static_cast<long>(g.degree(v));
  for (const Edge& e : g.edges()) {
    if (e.u == 0) continue;
    mat[e.u - 1][e.v - 1] -= 1;
    mat[e.v - 1][e.u - 1] -= 1;
  }

  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (mat[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < d; ++i)
        if (mat[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(mat[k], mat[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        mpz_class num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return sign * mat[d - 1][d - 1];
}

}  // namespace stclab

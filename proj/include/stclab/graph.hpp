#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace stclab {

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1, immutable after build().
// Edge list is kept sorted lexicographically; neighbor lists ascending.
class Graph {
public:
  Graph() = default;

  // Collapses duplicate pairs. Rejects self-loops and out-of-range ids,
  // naming the offending pair.
  static Graph build(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  long long degree(int v) const;
  long long min_degree() const;
  long long max_degree() const;
  bool is_connected() const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<bool>> mat_;  // built only for small n
  std::vector<Edge> edges_;
};

// Number of host edges between two disjoint vertex sets, |E(A,B)|.
long long edge_cut_size(const Graph& g, const std::vector<int>& a,
                        const std::vector<int>& b);

// Spanning tree of a host graph: exactly n-1 host edges forming a tree on
// all vertices. The host must outlive the tree.
class SpanningTree {
public:
  SpanningTree(const Graph& host, std::vector<Edge> tree_edges);

  const Graph& host() const { return *host_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  long long degree(int v) const;

private:
  const Graph* host_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Fundamental cut size of tree edge e: host edges between the two
// components of T - e. Computed by traversing T - e and counting.
long long edge_congestion(const SpanningTree& t, Edge e);

// Same quantity via the identity  sum_{v in C} deg_G(v) - 2|E(G[C])|
// over the smaller component C. Kept separate so the two routes can be
// cross-checked.
long long edge_congestion_degree_sum(const SpanningTree& t, Edge e);

struct CongestionReport {
  // One entry per tree edge, in canonical (sorted) edge order.
  std::vector<std::pair<Edge, long long>> per_edge;
  long long max = 0;
  std::optional<Edge> argmax_edge;  // smallest edge among maximizers

  long long value_of(Edge e) const;
};

enum class CongestionStrategy {
  path_walk,           // root once, walk each host edge's tree path
  per_edge_traversal,  // independent traversal of T - e per edge
};

// Both strategies yield identical reports.
CongestionReport tree_congestion(
    const SpanningTree& t,
    CongestionStrategy strategy = CongestionStrategy::path_walk);

struct Subtree {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
};

// Unique minimal subtree of T whose vertex set contains S; every leaf of
// the result lies in S. Rejects empty S.
Subtree minimal_spanning_subtree(const SpanningTree& t,
                                 const std::vector<int>& s);

enum class TreeKind { path, star, spider, other };

struct TreeShape {
  TreeKind kind = TreeKind::other;
  std::optional<int> center;  // star center or spider branch vertex
  std::vector<int> leaves;
  std::vector<int> degree2_vertices;
};

// Star takes precedence over spider (and over path, for >= 3 vertices):
// a star with >= 3 leaves reports as star with the center doubling as the
// branch vertex. Rejects disconnected or cyclic input.
TreeShape classify_tree_shape(const Subtree& t);

struct Split {
  std::vector<int> first;   // smaller side; ties to the side holding the
  std::vector<int> second;  // smallest vertex id

  bool nontrivial() const { return first.size() >= 2; }
};

// S intersected with the two components of T - e.
Split split_of_edge(const SpanningTree& t, Edge e, const std::vector<int>& s);

}  // namespace stclab

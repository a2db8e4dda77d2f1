#include "stclab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "dsu.hpp"

namespace stclab {

namespace {

// Above this the O(n^2) adjacency matrix is skipped and has_edge falls
// back to binary search.
constexpr int kAdjacencyMatrixLimit = 8192;

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge " + pair_str(a, b) +
                                  ": vertex id out of range for n=" +
                                  std::to_string(n));
    if (a == b)
      throw std::invalid_argument("self-loop " + pair_str(a, b) + " rejected");
    es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(es);
  g.adj_.assign(n, {});
  // Lexicographic edge order keeps each neighbor list sorted as built.
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  if (n <= kAdjacencyMatrixLimit) {
    g.mat_.assign(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges_) {
      g.mat_[e.u][e.v] = true;
      g.mat_[e.v][e.u] = true;
    }
  }
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("unknown vertex in edge query " + pair_str(u, v));
  if (!mat_.empty()) return mat_[u][v];
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

long long Graph::degree(int v) const {
  return static_cast<long long>(neighbors(v).size());
}

long long Graph::min_degree() const {
  long long best = 0;
  for (int v = 0; v < n_; ++v) {
    long long d = static_cast<long long>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

long long Graph::max_degree() const {
  long long best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, static_cast<long long>(adj_[v].size()));
  return best;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

long long edge_cut_size(const Graph& g, const std::vector<int>& a,
                        const std::vector<int>& b) {
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (int v : a) {
    if (!g.has_vertex(v)) throw std::invalid_argument("A contains unknown vertex " + std::to_string(v));
    in_a[v] = 1;
  }
  for (int v : b) {
    if (!g.has_vertex(v)) throw std::invalid_argument("B contains unknown vertex " + std::to_string(v));
    if (in_a[v])
      throw std::invalid_argument("A and B overlap at vertex " + std::to_string(v));
    in_b[v] = 1;
  }
  long long count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!in_a[v]) continue;
    for (int w : g.neighbors(v))
      if (in_b[w]) ++count;
  }
  return count;
}

SpanningTree::SpanningTree(const Graph& host, std::vector<Edge> tree_edges)
    : host_(&host), edges_(std::move(tree_edges)) {
  int n = host.vertex_count();
  if (n < 1) throw std::invalid_argument("spanning tree needs a nonempty host");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate tree edge");
  if (static_cast<int>(edges_.size()) != n - 1)
    throw std::invalid_argument(
        "spanning tree must have exactly n-1 edges, got " +
        std::to_string(edges_.size()) + " for n=" + std::to_string(n));
  detail::Dsu dsu(n);
  for (const Edge& e : edges_) {
    if (!host.has_edge(e.u, e.v))
      throw std::invalid_argument("tree edge " + pair_str(e.u, e.v) +
                                  " is not a host edge");
    if (!dsu.unite(e.u, e.v))
      throw std::invalid_argument("tree edges contain a cycle through " +
                                  pair_str(e.u, e.v));
  }
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
}

bool SpanningTree::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

const std::vector<int>& SpanningTree::neighbors(int v) const {
  if (!host_->has_vertex(v))
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return adj_[v];
}

long long SpanningTree::degree(int v) const {
  return static_cast<long long>(neighbors(v).size());
}

namespace {

// Marks the component of `start` in T - removed.
void component_side(const SpanningTree& t, Edge removed, int start,
                    std::vector<char>& side) {
  side.assign(t.host().vertex_count(), 0);
  std::vector<int> stack = {start};
  side[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v)) {
      if (Edge(v, w) == removed) continue;
      if (!side[w]) {
        side[w] = 1;
        stack.push_back(w);
      }
    }
  }
}

void require_tree_edge(const SpanningTree& t, Edge e) {
  if (!t.has_edge(e.u, e.v))
    throw std::invalid_argument("edge " + pair_str(e.u, e.v) +
                                " is not a tree edge");
}

}  // namespace

long long edge_congestion(const SpanningTree& t, Edge e) {
  require_tree_edge(t, e);
  std::vector<char> side;
  component_side(t, e, e.u, side);
  long long count = 0;
  for (const Edge& he : t.host().edges())
    if (side[he.u] != side[he.v]) ++count;
  return count;
}

long long edge_congestion_degree_sum(const SpanningTree& t, Edge e) {
  require_tree_edge(t, e);
  const Graph& g = t.host();
  int n = g.vertex_count();
  std::vector<char> side;
  component_side(t, e, e.u, side);
  long long u_side = 0;
  for (int v = 0; v < n; ++v) u_side += side[v];
  bool use_u_side = 2 * u_side <= n;
  long long degsum = 0, inner_twice = 0;
  for (int v = 0; v < n; ++v) {
    if ((side[v] != 0) != use_u_side) continue;
    degsum += g.degree(v);
    for (int w : g.neighbors(v))
      if ((side[w] != 0) == use_u_side) ++inner_twice;
  }
  return degsum - inner_twice;
}

long long CongestionReport::value_of(Edge e) const {
  auto it = std::lower_bound(per_edge.begin(), per_edge.end(), e,
                             [](const auto& entry, Edge key) { return entry.first < key; });
  if (it == per_edge.end() || it->first != e)
    throw std::invalid_argument("edge " + pair_str(e.u, e.v) +
                                " has no congestion entry");
  return it->second;
}

CongestionReport tree_congestion(const SpanningTree& t,
                                 CongestionStrategy strategy) {
  const Graph& g = t.host();
  int n = g.vertex_count();
  CongestionReport rep;
  if (n <= 1) return rep;

  if (strategy == CongestionStrategy::per_edge_traversal) {
    rep.per_edge.reserve(t.edges().size());
    for (const Edge& e : t.edges())
      rep.per_edge.emplace_back(e, edge_congestion(t, e));
  } else {
    // Root once; each host edge adds one unit along its tree path.
    std::vector<int> parent(n, -1), depth(n, 0), order;
    order.reserve(n);
    order.push_back(0);
    parent[0] = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int w : t.neighbors(v)) {
        if (w == 0 || parent[w] != -1) continue;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        order.push_back(w);
      }
    }
    std::vector<long long> load(n, 0);  // load[v] = count of edge {v, parent[v]}
    for (const Edge& he : g.edges()) {
      int a = he.u, b = he.v;
      while (a != b) {
        if (depth[a] < depth[b]) std::swap(a, b);
        load[a] += 1;
        a = parent[a];
      }
    }
    rep.per_edge.reserve(t.edges().size());
    for (const Edge& e : t.edges()) {
      int child = parent[e.v] == e.u ? e.v : e.u;
      rep.per_edge.emplace_back(e, load[child]);
    }
  }

  for (const auto& [e, value] : rep.per_edge) {
    if (!rep.argmax_edge || value > rep.max) {
      rep.max = value;
      rep.argmax_edge = e;
    }
  }
  return rep;
}

Subtree minimal_spanning_subtree(const SpanningTree& t,
                                 const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  const Graph& g = t.host();
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : s) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("S contains unknown vertex " + std::to_string(v));
    in_s[v] = 1;
  }

  // Peel leaves that are not in S until only the minimal subtree remains.
  std::vector<long long> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1 && !in_s[v]) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (int w : t.neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] <= 1 && !in_s[w]) queue.push_back(w);
    }
  }

  Subtree sub;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) sub.vertices.push_back(v);
  for (const Edge& e : t.edges())
    if (!removed[e.u] && !removed[e.v]) sub.edges.push_back(e);
  return sub;
}

TreeShape classify_tree_shape(const Subtree& t) {
  const int nv = static_cast<int>(t.vertices.size());
  if (nv == 0) throw std::invalid_argument("empty subtree");
  std::vector<int> verts = t.vertices;
  std::sort(verts.begin(), verts.end());
  auto local = [&](int v) {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v)
      throw std::invalid_argument("subtree edge endpoint " + std::to_string(v) +
                                  " not among subtree vertices");
    return static_cast<int>(it - verts.begin());
  };

  if (static_cast<int>(t.edges.size()) != nv - 1)
    throw std::invalid_argument("not a tree: |E| != |V| - 1");
  std::vector<std::vector<int>> adj(nv);
  for (const Edge& e : t.edges) {
    int a = local(e.u), b = local(e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nv, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != nv)
    throw std::invalid_argument("not a tree: disconnected input");

  TreeShape shape;
  int branch = -1, branch_count = 0, star_center = -1;
  for (int i = 0; i < nv; ++i) {
    int d = static_cast<int>(adj[i].size());
    if (d <= 1) shape.leaves.push_back(verts[i]);
    if (d == 2) shape.degree2_vertices.push_back(verts[i]);
    if (d >= 3) {
      branch = verts[i];
      ++branch_count;
    }
    if (nv >= 3 && d == nv - 1) star_center = verts[i];
  }

  if (nv <= 2) {
    shape.kind = TreeKind::path;
  } else if (star_center >= 0) {
    shape.kind = TreeKind::star;
    shape.center = star_center;
  } else if (branch_count == 1) {
    shape.kind = TreeKind::spider;
    shape.center = branch;
  } else if (branch_count == 0) {
    shape.kind = TreeKind::path;
  } else {
    shape.kind = TreeKind::other;
  }
  return shape;
}

Split split_of_edge(const SpanningTree& t, Edge e, const std::vector<int>& s) {
  require_tree_edge(t, e);
  const Graph& g = t.host();
  std::vector<char> side;
  component_side(t, e, e.u, side);

  std::vector<int> s1, s2;
  std::vector<char> taken(g.vertex_count(), 0);
  for (int v : s) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("S contains unknown vertex " + std::to_string(v));
    if (taken[v]) continue;
    taken[v] = 1;
    (side[v] ? s1 : s2).push_back(v);
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());

  bool s1_first;
  if (s1.size() != s2.size()) {
    s1_first = s1.size() < s2.size();
  } else if (s1.empty()) {
    s1_first = true;
  } else {
    s1_first = s1.front() < s2.front();
  }
  Split split;
  split.first = s1_first ? std::move(s1) : std::move(s2);
  split.second = s1_first ? std::move(s2) : std::move(s1);
  return split;
}

}  // namespace stclab

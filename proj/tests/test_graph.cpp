#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "stclab/graph.hpp"
#include "test_util.hpp"

using namespace stclab;
using namespace testutil;

namespace {

// Independent cut oracle: scan every host edge against the two sets.
long long brute_cut(const Graph& g, const std::vector<int>& a,
                    const std::vector<int>& b) {
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  long long count = 0;
  for (const Edge& e : g.edges()) {
    if (in_a[e.u] && in_b[e.v]) ++count;
    if (in_a[e.v] && in_b[e.u]) ++count;
  }
  return count;
}

// Tree distance between two vertices, by BFS over tree adjacency.
long long tree_distance(const SpanningTree& t, int a, int b) {
  std::vector<long long> dist(t.host().vertex_count(), -1);
  std::vector<int> queue = {a};
  dist[a] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist[b];
}

// Vertices on the tree path between a and b, inclusive.
std::vector<int> tree_path(const SpanningTree& t, int a, int b) {
  std::vector<int> parent(t.host().vertex_count(), -1);
  std::vector<int> queue = {a};
  parent[a] = a;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : t.neighbors(v))
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path = {b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  return path;
}

}  // namespace

TEST_CASE("build_graph examples") {
  Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

  Graph dedup = Graph::build(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}});
  CHECK(dedup.edge_count() == 3);

  CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("edge list is sorted and deduplicated") {
  Graph g = Graph::build(4, {{3, 2}, {1, 0}, {2, 0}, {0, 2}});
  std::vector<Edge> want = {Edge(0, 1), Edge(0, 2), Edge(2, 3)};
  CHECK(g.edges() == want);
  CHECK(std::is_sorted(g.neighbors(2).begin(), g.neighbors(2).end()));
}

TEST_CASE("edge_cut_size examples") {
  CHECK(edge_cut_size(complete_graph(4), {0, 1}, {2, 3}) == 4);
  CHECK(edge_cut_size(path_graph(4), {0, 1}, {2, 3}) == 1);

  Graph k6 = complete_graph(6);
  std::vector<int> a = {0, 2, 4}, b = {1, 3, 5};
  CHECK(brute_cut(k6, a, b) == 9);  // 3*3 cross pairs, counted directly
  CHECK(edge_cut_size(k6, a, b) == 9);

  CHECK_THROWS_AS(edge_cut_size(k6, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("edge_cut_size matches the brute-force oracle on random sets") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    int n = 3 + static_cast<int>(uniform_below(rng, 6));
    Graph g = random_connected_graph(rng, n);
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) {
      long long pick = uniform_below(rng, 3);
      if (pick == 0) a.push_back(v);
      if (pick == 1) b.push_back(v);
    }
    CHECK(edge_cut_size(g, a, b) == brute_cut(g, a, b));
  }
}

TEST_CASE("edge_congestion examples") {
  Graph tree = path_graph(5);
  SpanningTree t(tree, tree.edges());
  for (const Edge& e : t.edges()) CHECK(edge_congestion(t, e) == 1);

  Graph k4 = complete_graph(4);
  SpanningTree star = star_tree(k4, 0);
  // Cutting (0,1) separates {1}; the crossing edges are exactly
  // {0,1}, {1,2}, {1,3}.
  CHECK(edge_congestion(star, Edge(0, 1)) == 3);
  CHECK(brute_cut(k4, {1}, {0, 2, 3}) == 3);

  Graph c5 = cycle_graph(5);
  SpanningTree c5_tree(c5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
  for (const Edge& e : c5_tree.edges()) CHECK(edge_congestion(c5_tree, e) == 2);

  CHECK_THROWS_AS(edge_congestion(star, Edge(1, 2)), std::invalid_argument);
}

TEST_CASE("tree_congestion examples and determinism") {
  Graph k4 = complete_graph(4);

  CongestionReport star_rep = tree_congestion(star_tree(k4, 0));
  CHECK(star_rep.max == 3);
  CHECK(star_rep.per_edge.size() == 3);
  // All three leaf edges tie at 3; the smallest edge wins.
  CHECK(star_rep.argmax_edge == Edge(0, 1));

  CongestionReport path_rep = tree_congestion(path_tree(k4));
  CHECK(path_rep.max == 4);
  CHECK(path_rep.value_of(Edge(1, 2)) == 4);

  Graph tree = path_graph(6);
  CHECK(tree_congestion(SpanningTree(tree, tree.edges())).max == 1);
}

TEST_CASE("both congestion strategies yield identical reports") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));
    Graph g = random_connected_graph(rng, n);
    SpanningTree t = bfs_tree(g, static_cast<int>(uniform_below(rng, n)));
    CongestionReport walk = tree_congestion(t, CongestionStrategy::path_walk);
    CongestionReport scan = tree_congestion(t, CongestionStrategy::per_edge_traversal);
    REQUIRE(walk.per_edge == scan.per_edge);
    CHECK(walk.max == scan.max);
    CHECK(walk.argmax_edge == scan.argmax_edge);
  }
}

TEST_CASE("leaf edge congestion equals the leaf's host degree") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));
    Graph g = random_connected_graph(rng, n);
    SpanningTree t = bfs_tree(g, 0);
    for (const Edge& e : t.edges()) {
      CHECK(edge_congestion(t, e) >= 1);
      if (t.degree(e.u) == 1) CHECK(edge_congestion(t, e) == g.degree(e.u));
      if (t.degree(e.v) == 1) CHECK(edge_congestion(t, e) == g.degree(e.v));
    }
  }
}

TEST_CASE("total congestion equals total tree path length") {
  std::mt19937_64 rng(44);
  for (int round = 0; round < 30; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));  // n <= 8
    Graph g = random_connected_graph(rng, n);
    SpanningTree t = bfs_tree(g, static_cast<int>(uniform_below(rng, n)));
    long long total = 0;
    for (const auto& [e, value] : tree_congestion(t).per_edge) total += value;
    long long paths = 0;
    for (const Edge& he : g.edges()) paths += tree_distance(t, he.u, he.v);
    CHECK(total == paths);
  }
}

TEST_CASE("traversal cut agrees with the degree-sum identity") {
  std::mt19937_64 rng(55);
  for (int round = 0; round < 30; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 9));
    Graph g = random_connected_graph(rng, n);
    SpanningTree t = bfs_tree(g, 0);
    for (const Edge& e : t.edges())
      CHECK(edge_congestion(t, e) == edge_congestion_degree_sum(t, e));
  }
}

TEST_CASE("minimal_spanning_subtree examples") {
  Graph host = path_graph(5);
  SpanningTree t(host, host.edges());

  Subtree single = minimal_spanning_subtree(t, {2});
  CHECK(single.vertices == std::vector<int>{2});
  CHECK(single.edges.empty());

  Subtree whole = minimal_spanning_subtree(t, {0, 4});
  CHECK(whole.vertices.size() == 5);
  CHECK(whole.edges.size() == 4);

  Graph star_host = star_graph(5);
  SpanningTree star(star_host, star_host.edges());
  Subtree two_legs = minimal_spanning_subtree(star, {1, 2});
  CHECK(two_legs.vertices == std::vector<int>{0, 1, 2});
  CHECK(two_legs.edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});

  CHECK_THROWS_AS(minimal_spanning_subtree(t, {}), std::invalid_argument);
}

TEST_CASE("minimal subtree is the union of pairwise paths, and monotone") {
  std::mt19937_64 rng(66);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 8));
    Graph g = Graph::build(n, random_tree_edges(rng, n));
    SpanningTree t(g, g.edges());

    std::vector<int> s, s_bigger;
    for (int v = 0; v < n; ++v) {
      if (uniform_below(rng, 2) == 0) s.push_back(v);
      if (uniform_below(rng, 2) == 0) s_bigger.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    for (int v : s) s_bigger.push_back(v);

    Subtree sub = minimal_spanning_subtree(t, s);
    std::vector<char> expect(n, 0);
    for (int a : s)
      for (int b : s)
        for (int v : tree_path(t, a, b)) expect[v] = 1;
    std::vector<int> expect_list;
    for (int v = 0; v < n; ++v)
      if (expect[v]) expect_list.push_back(v);
    CHECK(sub.vertices == expect_list);

    // Every leaf of the result is in S.
    std::vector<int> deg(n, 0);
    for (const Edge& e : sub.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (int v : sub.vertices)
      if (deg[v] <= 1)
        CHECK(std::find(s.begin(), s.end(), v) != s.end());

    Subtree sup = minimal_spanning_subtree(t, s_bigger);
    CHECK(std::includes(sup.edges.begin(), sup.edges.end(), sub.edges.begin(),
                        sub.edges.end()));

    // The whole vertex set recovers T itself.
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    CHECK(minimal_spanning_subtree(t, all).edges == t.edges());
  }
}

TEST_CASE("classify_tree_shape examples") {
  Graph p5 = path_graph(5);
  Subtree path{{0, 1, 2, 3, 4}, p5.edges()};
  CHECK(classify_tree_shape(path).kind == TreeKind::path);

  Graph s5 = star_graph(5);  // K_{1,4}
  Subtree star{{0, 1, 2, 3, 4}, s5.edges()};
  TreeShape star_shape = classify_tree_shape(star);
  CHECK(star_shape.kind == TreeKind::star);
  CHECK(star_shape.center == 0);
  CHECK(star_shape.leaves.size() == 4);

  // Spider with legs of lengths 2, 2, 1 hanging off vertex 0.
  Subtree spider{{0, 1, 2, 3, 4, 5},
                 {Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(3, 4), Edge(0, 5)}};
  TreeShape spider_shape = classify_tree_shape(spider);
  CHECK(spider_shape.kind == TreeKind::spider);
  CHECK(spider_shape.center == 0);
  CHECK(spider_shape.degree2_vertices == std::vector<int>{1, 3});

  // Two branch vertices.
  Subtree doubled{{0, 1, 2, 3, 4, 5, 6, 7},
                  {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(4, 5),
                   Edge(4, 6), Edge(4, 7)}};
  CHECK(classify_tree_shape(doubled).kind == TreeKind::other);

  Subtree cyclic{{0, 1, 2, 3}, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}};
  CHECK_THROWS_AS(classify_tree_shape(cyclic), std::invalid_argument);
  Subtree wrong_count{{0, 1, 2, 3}, {Edge(0, 1), Edge(2, 3)}};
  CHECK_THROWS_AS(classify_tree_shape(wrong_count), std::invalid_argument);
}

TEST_CASE("split_of_edge examples and partition property") {
  Graph p3 = path_graph(3);
  SpanningTree t3(p3, p3.edges());
  Split s1 = split_of_edge(t3, Edge(0, 1), {0, 1, 2});
  CHECK(s1.first == std::vector<int>{0});
  CHECK(s1.second == std::vector<int>{1, 2});
  CHECK_FALSE(s1.nontrivial());

  Graph p4 = path_graph(4);
  SpanningTree t4(p4, p4.edges());
  Split s2 = split_of_edge(t4, Edge(1, 2), {0, 1, 2, 3});
  CHECK(s2.first == std::vector<int>{0, 1});
  CHECK(s2.second == std::vector<int>{2, 3});
  CHECK(s2.nontrivial());

  Graph s5 = star_graph(5);
  SpanningTree ts(s5, s5.edges());
  Split s3 = split_of_edge(ts, Edge(0, 1), {1, 2, 3, 4});
  CHECK(s3.first == std::vector<int>{1});
  CHECK(s3.second == std::vector<int>{2, 3, 4});

  CHECK_THROWS_AS(split_of_edge(ts, Edge(1, 2), {1, 2}), std::invalid_argument);

  std::mt19937_64 rng(77);
  for (int round = 0; round < 20; ++round) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));
    Graph g = random_connected_graph(rng, n);
    SpanningTree t = bfs_tree(g, 0);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, 2) == 0) s.push_back(v);
    for (const Edge& e : t.edges()) {
      Split split = split_of_edge(t, e, s);
      CHECK(split.first.size() + split.second.size() == s.size());
      std::vector<int> merged = split.first;
      merged.insert(merged.end(), split.second.begin(), split.second.end());
      std::sort(merged.begin(), merged.end());
      CHECK(merged == s);
      CHECK(split.first.size() <= split.second.size());
    }
  }
}

TEST_CASE("spanning tree validation") {
  Graph k4 = complete_graph(4);
  CHECK_THROWS_AS(SpanningTree(k4, {Edge(0, 1), Edge(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTree(k4, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}),
                  std::invalid_argument);
  Graph p4 = path_graph(4);
  CHECK_THROWS_AS(SpanningTree(p4, {Edge(0, 1), Edge(1, 2), Edge(0, 3)}),
                  std::invalid_argument);
}

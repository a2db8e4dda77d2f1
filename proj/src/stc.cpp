#include "stclab/stc.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "dsu.hpp"
#include "stclab/treecount.hpp"

namespace stclab {

BudgetExceededError::BudgetExceededError(std::string tree_count, long long budget)
    : std::runtime_error("infeasible at desk scale: " + tree_count +
                         " spanning trees exceed the budget of " +
                         std::to_string(budget)),
      tree_count_(std::move(tree_count)) {}

namespace {

// Include-before-exclude recursion over the sorted edge list. A branch
// dies when the remaining edges cannot reconnect the forest (which forces
// bridges into every tree) or, with a cap installed, when some chosen
// edge's partially formed fundamental cut already exceeds the cap. Cut
// lower bounds only grow as the forest grows, and at the final include
// the merged component covers every chosen edge, so every visited tree
// has all its exact cuts <= the cap in force at completion.
struct Enumerator {
  const Graph& g;
  int n;
  const std::vector<Edge>& es;
  std::function<bool(const std::vector<Edge>&)> on_tree;
  std::function<long long()> cap_fn;  // nullable: no pruning

  detail::Dsu dsu;
  detail::Dsu scratch;
  std::vector<Edge> chosen;
  std::vector<std::vector<int>> fadj;
  long long visited = 0;
  bool stopped = false;

  // Timestamped membership marks so cut bounds need no clearing.
  std::vector<long long> mark_a, mark_b;
  long long stamp = 0;
  std::vector<int> list_a, list_b;

  explicit Enumerator(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        es(graph.edges()),
        dsu(n),
        scratch(n),
        fadj(n),
        mark_a(n, 0),
        mark_b(n, 0) {
    chosen.reserve(n > 0 ? n - 1 : 0);
  }

  void run() { recurse(0); }

  void collect(Edge removed, int start, std::vector<long long>& mark,
               std::vector<int>& out) {
    out.clear();
    out.push_back(start);
    mark[start] = stamp;
    for (size_t i = 0; i < out.size(); ++i) {
      int v = out[i];
      for (int w : fadj[v]) {
        if (Edge(v, w) == removed || mark[w] == stamp) continue;
        mark[w] = stamp;
        out.push_back(w);
      }
    }
  }

  long long cut_bound(Edge e) {
    ++stamp;
    collect(e, e.u, mark_a, list_a);
    collect(e, e.v, mark_b, list_b);
    long long count = 0;
    for (int v : list_a)
      for (int w : g.neighbors(v))
        if (mark_b[w] == stamp) ++count;
    return count;
  }

  bool bounds_ok(int merged_root, long long cap) {
    for (const Edge& e : chosen) {
      if (dsu.find(e.u) != merged_root) continue;
      if (cut_bound(e) > cap) return false;
    }
    return true;
  }

  bool exclude_keeps_connected(size_t idx) {
    scratch.assign_from(dsu);
    int comps = n - static_cast<int>(chosen.size());
    for (size_t j = idx + 1; j < es.size() && comps > 1; ++j)
      if (scratch.unite(es[j].u, es[j].v)) --comps;
    return comps == 1;
  }

  void recurse(size_t idx) {
    if (stopped) return;
    if (static_cast<int>(chosen.size()) == n - 1) {
      ++visited;
      if (!on_tree(chosen)) stopped = true;
      return;
    }
    if (idx == es.size()) return;
    if (chosen.size() + (es.size() - idx) < static_cast<size_t>(n - 1)) return;

    const Edge e = es[idx];
    if (dsu.find(e.u) != dsu.find(e.v)) {
      dsu.unite(e.u, e.v);
      fadj[e.u].push_back(e.v);
      fadj[e.v].push_back(e.u);
      chosen.push_back(e);
      bool keep = true;
      if (cap_fn) keep = bounds_ok(dsu.find(e.u), cap_fn());
      if (keep) recurse(idx + 1);
      chosen.pop_back();
      fadj[e.u].pop_back();
      fadj[e.v].pop_back();
      dsu.rollback();
      if (stopped) return;
    }
    if (exclude_keeps_connected(idx)) recurse(idx + 1);
  }
};

void require_connected(const Graph& g, const char* what) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument(std::string(what) + " requires a nonempty graph");
  if (!g.is_connected())
    throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

void check_budget(const Graph& g, long long budget) {
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  mpz_class total = count_spanning_trees(g);
  if (total > static_cast<long>(budget))
    throw BudgetExceededError(total.get_str(), budget);
}

}  // namespace

long long enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit) {
  require_connected(g, "enumerate_spanning_trees");
  Enumerator en(g);
  en.on_tree = visit;
  en.run();
  return en.visited;
}

StcResult stc_exact(const Graph& g, long long budget) {
  require_connected(g, "stc_exact");
  check_budget(g, budget);

  long long best = LLONG_MAX;
  std::vector<Edge> best_edges;
  Enumerator en(g);
  en.cap_fn = [&] { return best == LLONG_MAX ? LLONG_MAX : best - 1; };
  en.on_tree = [&](const std::vector<Edge>& tree_edges) {
    CongestionReport rep = tree_congestion(SpanningTree(g, tree_edges));
    if (rep.max < best) {
      best = rep.max;
      best_edges = tree_edges;
    }
    return true;
  };
  en.run();
  return StcResult{best, SpanningTree(g, best_edges), en.visited};
}

DecideResult stc_decide(const Graph& g, long long k, long long budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  require_connected(g, "stc_decide");
  check_budget(g, budget);

  DecideResult result;
  Enumerator en(g);
  en.cap_fn = [k] { return k; };
  en.on_tree = [&](const std::vector<Edge>& tree_edges) {
    SpanningTree t(g, tree_edges);
    if (tree_congestion(t).max <= k) {
      result.answer = true;
      result.witness = std::move(t);
      return false;  // first witness wins; stop
    }
    return true;
  };
  en.run();
  result.trees_examined = en.visited;
  return result;
}

SpiderVerdict check_spider_lemma(const Graph& g, const SpanningTree& t,
                                 const std::vector<int>& s_in, Rational rho1,
                                 Rational rho2, long long k) {
  std::vector<int> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (!g.has_vertex(v))
      throw std::invalid_argument("S contains unknown vertex " + std::to_string(v));

  SpiderVerdict verdict;
  const long long ssize = static_cast<long long>(s.size());
  verdict.premises.s_at_least_4 = ssize >= 4;
  verdict.premises.rho_product = rho1 * rho2 >= Rational(1, 2);
  verdict.premises.rho2_at_least_half = rho2 >= Rational(1, 2);
  verdict.premises.s_vs_rho1_k = Rational(ssize - 1) >= rho1 * Rational(k);

  if (!s.empty()) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    long long delta = -1;
    for (int v : s) {
      long long d = 0;
      for (int w : g.neighbors(v)) d += in_s[w];
      if (delta < 0 || d < delta) delta = d;
    }
    verdict.premises.min_degree_vs_rho2 =
        Rational(delta - 1) >= rho2 * Rational(ssize);
  }
  verdict.premises.congestion_at_most_k = tree_congestion(t).max <= k;
  verdict.premises_hold = verdict.premises.all();

  if (!s.empty()) {
    Subtree sub = minimal_spanning_subtree(t, s);
    verdict.shape = classify_tree_shape(sub);

    std::vector<long long> deg(g.vertex_count(), 0);
    for (const Edge& e : sub.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    if (verdict.shape.center) {
      verdict.branch_degree = deg[*verdict.shape.center];
    } else {
      for (int v : sub.vertices)
        verdict.branch_degree = std::max(verdict.branch_degree, deg[v]);
    }
    for (int v : verdict.shape.degree2_vertices) {
      if (std::binary_search(s.begin(), s.end(), v)) {
        verdict.offending_vertex = v;
        break;
      }
    }
    bool spider_or_star = verdict.shape.kind == TreeKind::star ||
                          verdict.shape.kind == TreeKind::spider;
    verdict.conclusion_holds = spider_or_star && !verdict.offending_vertex &&
                               verdict.branch_degree >= ssize - 1;
  }

  verdict.lemma_contradiction = verdict.premises_hold && !verdict.conclusion_holds;
  return verdict;
}

}  // namespace stclab

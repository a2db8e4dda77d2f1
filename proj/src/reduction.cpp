#include "stclab/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace stclab {

namespace {

using int128 = __int128;

// Desk-scale guards for generated graphs.
constexpr long long kMaxVertices = 500'000;
constexpr long long kMaxEdges = 50'000'000;

void require_normalized(const NormalizedInstance& ni) {
  ValidationResult check = validate_instance(ni.base.m, ni.base.B, ni.base.a);
  if (!check.ok())
    throw std::invalid_argument("instance is not valid (" +
                                check.violations.front().constraint + ")");
  if (!std::is_sorted(ni.base.a.begin(), ni.base.a.end()))
    throw std::invalid_argument("normalized instance must be sorted ascending");
  if (ni.base.a.front() < 8LL * ni.base.m)
    throw std::invalid_argument("normalized instance requires a_min >= 8m");
}

std::string role_name(Role r) {
  switch (r) {
    case Role::X: return "X";
    case Role::Y: return "Y";
    case Role::Z: return "Z";
  }
  return "?";
}

}  // namespace

GammaProfile gamma_profile(const NormalizedInstance& ni) {
  require_normalized(ni);
  const auto& a = ni.base.a;
  const long long a_max = a.back();
  GammaProfile profile;
  profile.gamma.resize(a_max);
  // Sorted values: gamma_i = count of a_j >= i drops as the two-pointer
  // walks past each value.
  size_t lo = 0;
  for (long long i = 1; i <= a_max; ++i) {
    while (lo < a.size() && a[lo] < i) ++lo;
    profile.gamma[i - 1] = static_cast<long long>(a.size() - lo);
  }
  return profile;
}

int ReductionArtifact::x_vertex(long long i) const {
  if (i < 1 || i > x_count()) throw std::invalid_argument("x index out of range");
  return xs[i - 1];
}

int ReductionArtifact::y_vertex(long long i) const {
  if (i < 1 || i > y_count()) throw std::invalid_argument("y index out of range");
  return ys[i - 1];
}

int ReductionArtifact::z_vertex(long long i) const {
  if (i < 1 || i > z_count()) throw std::invalid_argument("z index out of range");
  return zs[i - 1];
}

long long ReductionArtifact::y_z_threshold(long long i) const {
  if (i < 1 || i > y_count()) throw std::invalid_argument("y index out of range");
  const long long zc = z_count();
  if (i <= m()) return zc - B() - 12LL * m() + 15;
  return zc - gamma[i - 1];
}

ReductionArtifact build_reduction(const NormalizedInstance& ni) {
  require_normalized(ni);
  const int m = ni.base.m;
  const long long B = ni.base.B;
  const long long k = 3 * B;
  const auto& a = ni.base.a;
  const long long xc = 3LL * m;
  const long long yc = a.back();
  const long long zc = k - a.back() + 1;
  const long long n = xc + yc + zc;

  GammaProfile profile = gamma_profile(ni);

  int128 edge_total = static_cast<int128>(xc) * (xc - 1) / 2 +
                      static_cast<int128>(yc) * (yc - 1) / 2 +
                      static_cast<int128>(zc) * (zc - 1) / 2;
  for (long long v : a) edge_total += v;
  for (long long i = 1; i <= yc; ++i) {
    long long t = i <= m ? zc - B - 12LL * m + 15 : zc - profile.gamma[i - 1];
    edge_total += t;
  }
  if (n > kMaxVertices || edge_total > kMaxEdges)
    throw std::invalid_argument(
        "instance too large at desk scale: generated graph would have " +
        std::to_string(n) + " vertices");

  ReductionArtifact art;
  art.k = k;
  art.instance = ni;
  art.gamma = profile.gamma;
  art.roles.resize(n);
  art.canonical_order.resize(n);
  for (long long i = 0; i < n; ++i) art.canonical_order[i] = static_cast<int>(i);
  for (long long i = 1; i <= xc; ++i) {
    art.xs.push_back(static_cast<int>(i - 1));
    art.roles[i - 1] = {Role::X, i};
  }
  for (long long i = 1; i <= yc; ++i) {
    art.ys.push_back(static_cast<int>(xc + i - 1));
    art.roles[xc + i - 1] = {Role::Y, i};
  }
  for (long long i = 1; i <= zc; ++i) {
    art.zs.push_back(static_cast<int>(xc + yc + i - 1));
    art.roles[xc + yc + i - 1] = {Role::Z, i};
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(edge_total));
  auto clique = [&](const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
  };
  clique(art.xs);
  clique(art.ys);
  clique(art.zs);
  for (long long i = 1; i <= xc; ++i)
    for (long long j = 1; j <= a[i - 1]; ++j)
      pairs.emplace_back(art.xs[i - 1], art.ys[j - 1]);
  for (long long i = 1; i <= yc; ++i) {
    long long t = i <= m ? zc - B - 12LL * m + 15 : zc - profile.gamma[i - 1];
    for (long long j = 1; j <= t; ++j) pairs.emplace_back(art.ys[i - 1], art.zs[j - 1]);
  }
  art.graph = Graph::build(static_cast<int>(n), pairs);

  AuditReport audit = audit_construction(art);
  if (!audit.all_pass()) {
    std::string failing;
    for (const AuditItem& item : audit.items)
      if (!item.pass) failing += " " + item.name;
    throw std::logic_error("construction invariant failure:" + failing);
  }
  return art;
}

long long expected_degree(const ReductionArtifact& art, int v) {
  if (v < 0 || v >= static_cast<int>(art.roles.size()))
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  const VertexRole vr = art.roles[v];
  const long long m = art.m();
  switch (vr.role) {
    case Role::X:
      return art.instance.base.a[vr.index - 1] + 3 * m - 1;
    case Role::Y:
      return vr.index <= m ? art.k - art.B() - 9 * m + 15 : art.k;
    case Role::Z: {
      long long with_y = 0;
      for (long long i = 1; i <= art.y_count(); ++i)
        if (art.y_z_threshold(i) >= vr.index) ++with_y;
      return (art.z_count() - 1) + with_y;
    }
  }
  throw std::logic_error("unreachable");
}

bool AuditReport::all_pass() const {
  for (const AuditItem& item : items)
    if (!item.pass) return false;
  return true;
}

const AuditItem* AuditReport::find(const std::string& name) const {
  for (const AuditItem& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

AuditReport audit_construction(const ReductionArtifact& art) {
  AuditReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.items.push_back({std::move(name), pass, std::move(detail)});
  };
  const Graph& g = art.graph;
  const long long m = art.m();
  const long long B = art.B();
  const long long k = art.k;
  const auto& a = art.instance.base.a;

  add("role-counts",
      art.x_count() == 3 * m && art.y_count() == a.back() &&
          art.z_count() == k - a.back() + 1 &&
          static_cast<long long>(art.roles.size()) == g.vertex_count(),
      "|X|=" + std::to_string(art.x_count()) + " |Y|=" + std::to_string(art.y_count()) +
          " |Z|=" + std::to_string(art.z_count()));

  auto clique_check = [&](const char* name, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) {
          add(name, false,
              "missing edge (" + std::to_string(vs[i]) + "," + std::to_string(vs[j]) + ")");
          return;
        }
    add(name, true);
  };
  clique_check("clique-X", art.xs);
  clique_check("clique-Y", art.ys);
  clique_check("clique-Z", art.zs);

  {
    bool ok = true;
    std::string detail;
    for (int x : art.xs) {
      for (int w : g.neighbors(x))
        if (art.roles[w].role == Role::Z) {
          ok = false;
          detail = "edge (" + std::to_string(x) + "," + std::to_string(w) + ")";
          break;
        }
      if (!ok) break;
    }
    add("no-xz-edges", ok, detail);
  }

  {
    // x_i ~ y_j exactly when j <= a_i.
    bool ok = true;
    std::string detail;
    for (long long i = 1; ok && i <= art.x_count(); ++i)
      for (long long j = 1; j <= art.y_count(); ++j) {
        bool want = j <= a[i - 1];
        if (g.has_edge(art.x_vertex(i), art.y_vertex(j)) != want) {
          ok = false;
          detail = "x_" + std::to_string(i) + " / y_" + std::to_string(j);
          break;
        }
      }
    add("xy-pattern", ok, detail);
  }

  {
    // N(y_i) n Z must be exactly the prefix z_1..z_t(i).
    bool ok = true;
    std::string detail;
    for (long long i = 1; ok && i <= art.y_count(); ++i) {
      const long long t = art.y_z_threshold(i);
      long long count = 0;
      long long max_index = 0;
      for (int w : g.neighbors(art.y_vertex(i)))
        if (art.roles[w].role == Role::Z) {
          ++count;
          max_index = std::max(max_index, art.roles[w].index);
        }
      if (count != t || max_index != (t == 0 ? 0 : t)) {
        ok = false;
        detail = "y_" + std::to_string(i) + ": " + std::to_string(count) +
                 " z-neighbors up to index " + std::to_string(max_index) +
                 ", expected prefix of " + std::to_string(t);
      }
    }
    add("yz-prefix", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    long long checked = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      long long want = expected_degree(art, v);
      if (g.degree(v) != want) {
        ok = false;
        detail = role_name(art.roles[v].role) + "_" + std::to_string(art.roles[v].index) +
                 " has degree " + std::to_string(g.degree(v)) + ", expected " +
                 std::to_string(want);
        break;
      }
      ++checked;
    }
    add("degrees", ok, ok ? std::to_string(checked) + " vertices" : detail);
  }

  add("yz-size", static_cast<long long>(art.y_count()) + art.z_count() == k + 1,
      "|Y u Z| = " + std::to_string(art.y_count() + art.z_count()));

  {
    long long delta = -1;
    std::vector<char> in_yz(g.vertex_count(), 0);
    for (int v : art.ys) in_yz[v] = 1;
    for (int v : art.zs) in_yz[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in_yz[v]) continue;
      long long d = 0;
      for (int w : g.neighbors(v)) d += in_yz[w];
      if (delta < 0 || d < delta) delta = d;
    }
    const long long want = k - B - 12 * m + 15;
    add("yz-min-degree", delta == want,
        "delta(G[Y u Z]) = " + std::to_string(delta) + ", expected " + std::to_string(want));
    // delta >= (k+1)/2 + 1, cross-multiplied.
    add("yz-min-degree-bound", 2 * delta >= (k + 1) + 2,
        "2*" + std::to_string(delta) + " vs " + std::to_string(k + 3));
  }

  add("max-degree", g.max_degree() == k,
      "Delta(G) = " + std::to_string(g.max_degree()) + ", k = " + std::to_string(k));

  {
    // N(y_i) n Z nested upward in i.
    std::vector<std::vector<int>> z_nbrs(art.y_count());
    for (long long i = 1; i <= art.y_count(); ++i) {
      for (int w : g.neighbors(art.y_vertex(i)))
        if (art.roles[w].role == Role::Z) z_nbrs[i - 1].push_back(w);
      std::sort(z_nbrs[i - 1].begin(), z_nbrs[i - 1].end());
    }
    bool ok = true;
    std::string detail;
    for (long long i = 1; ok && i <= art.y_count(); ++i)
      for (long long j = i + 1; j <= art.y_count(); ++j)
        if (!std::includes(z_nbrs[j - 1].begin(), z_nbrs[j - 1].end(),
                           z_nbrs[i - 1].begin(), z_nbrs[i - 1].end())) {
          ok = false;
          detail = "N(y_" + std::to_string(i) + ") n Z not within N(y_" +
                   std::to_string(j) + ") n Z";
          break;
        }
    add("nesting", ok, detail);
  }

  return report;
}

namespace {

ReductionArtifact rebuild_with_edges(const ReductionArtifact& art,
                                     std::vector<std::pair<int, int>> pairs) {
  ReductionArtifact mutated = art;
  mutated.graph = Graph::build(art.graph.vertex_count(), std::move(pairs));
  return mutated;
}

}  // namespace

ReductionArtifact with_edge_removed(const ReductionArtifact& art, int u, int v) {
  if (!art.graph.has_edge(u, v))
    throw std::invalid_argument("no such edge to remove");
  const Edge target(u, v);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(art.graph.edges().size() - 1);
  for (const Edge& e : art.graph.edges())
    if (e != target) pairs.emplace_back(e.u, e.v);
  return rebuild_with_edges(art, std::move(pairs));
}

ReductionArtifact with_edge_added(const ReductionArtifact& art, int u, int v) {
  if (art.graph.has_edge(u, v)) throw std::invalid_argument("edge already present");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(art.graph.edges().size() + 1);
  for (const Edge& e : art.graph.edges()) pairs.emplace_back(e.u, e.v);
  pairs.emplace_back(u, v);
  return rebuild_with_edges(art, std::move(pairs));
}

ReductionArtifact assemble_artifact(Graph graph, long long k,
                                    std::vector<VertexRole> roles) {
  if (static_cast<long long>(roles.size()) != graph.vertex_count())
    throw std::invalid_argument("labels cover " + std::to_string(roles.size()) +
                                " vertices, graph has " +
                                std::to_string(graph.vertex_count()));
  ReductionArtifact art;
  art.k = k;

  long long counts[3] = {0, 0, 0};
  for (const VertexRole& vr : roles) ++counts[static_cast<int>(vr.role)];
  auto fill = [&](Role role, std::vector<int>& out) {
    out.assign(counts[static_cast<int>(role)], -1);
    for (size_t v = 0; v < roles.size(); ++v) {
      if (roles[v].role != role) continue;
      long long idx = roles[v].index;
      if (idx < 1 || idx > static_cast<long long>(out.size()) || out[idx - 1] != -1)
        throw std::invalid_argument("role indices for " + role_name(role) +
                                    " are not 1.." + std::to_string(out.size()));
      out[idx - 1] = static_cast<int>(v);
    }
  };
  fill(Role::X, art.xs);
  fill(Role::Y, art.ys);
  fill(Role::Z, art.zs);
  if (art.xs.empty() || art.xs.size() % 3 != 0)
    throw std::invalid_argument("|X| must be a positive multiple of 3");
  if (k % 3 != 0) throw std::invalid_argument("k must be divisible by 3");

  // The instance is implicit in the construction: a_i = deg(x_i) - 3m + 1.
  const long long m = static_cast<long long>(art.xs.size()) / 3;
  std::vector<long long> a;
  a.reserve(art.xs.size());
  for (int x : art.xs) a.push_back(graph.degree(x) - 3 * m + 1);
  ValidationResult check = validate_instance(static_cast<int>(m), k / 3, a);
  if (!check.ok())
    throw std::invalid_argument(
        "graph degrees do not spell a valid instance (" +
        check.violations.front().constraint + ")");
  if (!std::is_sorted(a.begin(), a.end()))
    throw std::invalid_argument("derived instance is not sorted ascending");
  if (a.front() < 8 * m)
    throw std::invalid_argument("derived instance violates a_min >= 8m");

  art.instance.base = *check.instance;
  art.instance.scale = 1;
  art.instance.perm.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) art.instance.perm[i] = static_cast<int>(i);
  art.gamma = gamma_profile(art.instance).gamma;
  art.roles = std::move(roles);
  art.graph = std::move(graph);

  art.canonical_order.clear();
  art.canonical_order.reserve(art.graph.vertex_count());
  for (int v : art.xs) art.canonical_order.push_back(v);
  for (int v : art.ys) art.canonical_order.push_back(v);
  for (int v : art.zs) art.canonical_order.push_back(v);
  return art;
}

SpanningTree build_witness_tree(const ReductionArtifact& art, const Partition& p) {
  PartitionCheck check = verify_partition(art.instance.base, p);
  if (!check) throw std::invalid_argument("invalid partition: " + check.reason);
  if (static_cast<long long>(p.groups.size()) != art.m())
    throw std::invalid_argument("partition must have exactly m groups");
  for (const auto& group : p.groups)
    if (group.size() != 3)
      throw std::invalid_argument("every group must have size 3");

  std::vector<Edge> edges;
  edges.reserve(art.graph.vertex_count() - 1);
  const int hub = art.z_vertex(1);
  for (int v : art.ys) edges.emplace_back(hub, v);
  for (int v : art.zs)
    if (v != hub) edges.emplace_back(hub, v);
  for (size_t gi = 0; gi < p.groups.size(); ++gi) {
    const int y = art.y_vertex(static_cast<long long>(gi) + 1);
    for (int idx : p.groups[gi])
      edges.emplace_back(y, art.x_vertex(idx + 1));
  }
  return SpanningTree(art.graph, std::move(edges));
}

Partition extract_partition(const ReductionArtifact& art, const SpanningTree& t) {
  const CongestionReport rep = tree_congestion(t);
  if (rep.max > art.k)
    throw HypothesisViolationError("tree congestion " + std::to_string(rep.max) +
                                   " exceeds k = " + std::to_string(art.k));

  std::vector<int> yz;
  yz.reserve(art.y_count() + art.z_count());
  for (int v : art.ys) yz.push_back(v);
  for (int v : art.zs) yz.push_back(v);

  const Subtree sub = minimal_spanning_subtree(t, yz);
  const TreeShape shape = classify_tree_shape(sub);
  if (shape.kind != TreeKind::star || !shape.center ||
      art.roles[*shape.center].role != Role::Z)
    throw LemmaContradictionError(
        "minimal subtree over Y u Z is not a star centered in Z");
  for (int v : sub.vertices)
    if (art.roles[v].role == Role::X)
      throw LemmaContradictionError("minimal subtree over Y u Z touches X");

  const int center = *shape.center;
  for (int z : art.zs)
    if (z != center && t.degree(z) != 1)
      throw LemmaContradictionError("z_" + std::to_string(art.roles[z].index) +
                                    " is not a leaf of T");
  const long long m = art.m();
  for (long long i = m + 1; i <= art.y_count(); ++i)
    if (t.degree(art.y_vertex(i)) != 1)
      throw LemmaContradictionError("y_" + std::to_string(i) + " is not a leaf of T");

  // Root at the star center; every x must descend from some y_i, i <= m.
  const int n = art.graph.vertex_count();
  std::vector<int> parent(n, -1), branch(n, -1), order;
  order.reserve(n);
  order.push_back(center);
  parent[center] = center;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.neighbors(v)) {
      if (w == center || parent[w] != -1) continue;
      parent[w] = v;
      branch[w] = v == center ? w : branch[v];
      order.push_back(w);
    }
  }

  Partition p;
  p.groups.assign(m, {});
  for (int x : art.xs) {
    const int b = branch[x];
    if (b < 0 || art.roles[b].role != Role::Y || art.roles[b].index > m)
      throw LemmaContradictionError(
          "x_" + std::to_string(art.roles[x].index) +
          " does not descend from y_1..y_m");
    p.groups[art.roles[b].index - 1].push_back(
        static_cast<int>(art.roles[x].index - 1));
  }
  for (auto& group : p.groups) std::sort(group.begin(), group.end());

  for (long long i = 0; i < m; ++i) {
    long long sum = 0;
    for (int idx : p.groups[i]) sum += art.instance.base.a[idx];
    if (sum != art.B())
      throw LemmaContradictionError("group of y_" + std::to_string(i + 1) +
                                    " sums to " + std::to_string(sum) +
                                    ", not B = " + std::to_string(art.B()));
  }
  return p;
}

StarFamilyReport star_family_congestion(
    const ReductionArtifact& art, const std::map<long long, long long>& assign) {
  std::vector<std::vector<long long>> members(art.y_count());
  for (const auto& [xi, yi] : assign) {
    if (xi < 1 || xi > art.x_count())
      throw std::invalid_argument("x index " + std::to_string(xi) + " out of range");
    if (yi < 1 || yi > art.y_count())
      throw std::invalid_argument("y index " + std::to_string(yi) + " out of range");
    if (!art.graph.has_edge(art.x_vertex(xi), art.y_vertex(yi)))
      throw std::invalid_argument("x_" + std::to_string(xi) + " is not adjacent to y_" +
                                  std::to_string(yi));
    members[yi - 1].push_back(xi);
  }

  StarFamilyReport report;
  const int hub = art.z_vertex(1);
  const long long m = art.m();
  for (long long i = 1; i <= art.y_count(); ++i) {
    StarFamilyEdge entry;
    entry.y_index = i;
    entry.tree_edge = Edge(hub, art.y_vertex(i));
    entry.x_members = members[i - 1];

    // Cut of {z_1, y_i}: the component below is the clique {y_i} u X_i.
    const long long s = static_cast<long long>(entry.x_members.size());
    long long value = expected_degree(art, art.y_vertex(i));
    for (long long xi : entry.x_members)
      value += expected_degree(art, art.x_vertex(xi));
    value -= (s + 1) * s;  // 2 * C(s+1, 2)
    entry.congestion = value;

    if (i <= m) {
      // Same quantity after substituting the degree formulas; both routes
      // must agree exactly.
      long long asum = 0;
      for (long long xi : entry.x_members) asum += art.instance.base.a[xi - 1];
      long long reduced = (art.k - art.B() - 9 * m + 15) + asum + s * ((3 * m - 2) - s);
      if (reduced != value)
        throw std::logic_error("closed-form mismatch on y_" + std::to_string(i));
    }

    report.max_y_congestion = std::max(report.max_y_congestion, value);
    report.per_y.push_back(std::move(entry));
  }

  if (static_cast<long long>(assign.size()) == art.x_count()) {
    std::vector<Edge> edges;
    edges.reserve(art.graph.vertex_count() - 1);
    for (int v : art.ys) edges.emplace_back(hub, v);
    for (int v : art.zs)
      if (v != hub) edges.emplace_back(hub, v);
    for (long long i = 1; i <= art.y_count(); ++i)
      for (long long xi : members[i - 1])
        edges.emplace_back(art.y_vertex(i), art.x_vertex(xi));
    report.tree = SpanningTree(art.graph, std::move(edges));
  }
  return report;
}

}  // namespace stclab

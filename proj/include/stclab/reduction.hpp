#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stclab/graph.hpp"
#include "stclab/threepart.hpp"

namespace stclab {

// gamma[i-1] = number of input values a_j >= i, for i in [a_max]. Controls
// the Y-X and Y-Z adjacency of the generated graph.
struct GammaProfile {
  std::vector<long long> gamma;
};

GammaProfile gamma_profile(const NormalizedInstance& ni);

enum class Role { X, Y, Z };

struct VertexRole {
  Role role = Role::X;
  long long index = 0;  // 1-based, matching the generator's naming
};

// Generated decision-instance graph plus everything needed to audit it:
// vertex roles, the congestion target k = 3B, the gamma profile, and the
// canonical vertex order x_1..x_3m, y_1..y_|Y|, z_1..z_|Z|.
//
// Construction, with a = sorted values and A = a_max:
//   |X| = 3m, |Y| = A, |Z| = k - A + 1; X, Y, Z are cliques;
//   x_i ~ y_j  iff  j <= a_i;
//   y_i ~ z_j  iff  j <= |Z| - B - 12m + 15          (i <= m)
//   y_i ~ z_j  iff  j <= |Z| - gamma_i               (i >  m)
//   no X-Z edges.
struct ReductionArtifact {
  Graph graph;
  long long k = 0;
  std::vector<VertexRole> roles;  // indexed by vertex id
  NormalizedInstance instance;
  std::vector<long long> gamma;
  std::vector<int> canonical_order;
  std::vector<int> xs, ys, zs;  // vertex ids, position = 1-based index - 1

  int m() const { return static_cast<int>(xs.size()) / 3; }
  long long B() const { return k / 3; }
  int x_count() const { return static_cast<int>(xs.size()); }
  int y_count() const { return static_cast<int>(ys.size()); }
  int z_count() const { return static_cast<int>(zs.size()); }
  int x_vertex(long long i) const;  // 1-based index
  int y_vertex(long long i) const;
  int z_vertex(long long i) const;
  // Largest z index adjacent to y_i.
  long long y_z_threshold(long long i) const;
};

// Builds the graph exactly per the construction rules and verifies every
// artifact invariant before returning (a failure is a construction bug).
// Refuses instances whose generated graph exceeds desk scale.
ReductionArtifact build_reduction(const NormalizedInstance& ni);

// Closed-form degree of v: x_i -> a_i + 3m - 1; y_i -> k - B - 9m + 15
// (i <= m) or k (i > m); z_j -> (|Z| - 1) + #{y_i : threshold_i >= j}.
long long expected_degree(const ReductionArtifact& art, int v);

struct AuditItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditItem> items;

  bool all_pass() const;
  const AuditItem* find(const std::string& name) const;
};

// Structural audit of an artifact (possibly mutated): role counts, cliques,
// no X-Z edges, exact X-Y / Y-Z adjacency patterns, every degree against
// its closed form, |Y u Z| = k + 1, the exact minimum degree of G[Y u Z]
// and its 2*delta >= (k+1) + 2 bound, max degree = k, and the neighborhood
// nesting N(y_i) n Z <= N(y_i') n Z for i < i'. Failures are report
// entries, never exceptions.
AuditReport audit_construction(const ReductionArtifact& art);

// Fault-injection hooks for mutation tests: same metadata, one edge
// toggled. The result intentionally violates artifact invariants.
ReductionArtifact with_edge_removed(const ReductionArtifact& art, int u, int v);
ReductionArtifact with_edge_added(const ReductionArtifact& art, int u, int v);

// Reassembles an artifact from externally loaded pieces. The instance is
// derived from the graph itself (a_i = deg(x_i) - 3m + 1, B = k/3) and
// validated; artifact invariants are NOT verified here, that is audit's
// job.
ReductionArtifact assemble_artifact(Graph graph, long long k,
                                    std::vector<VertexRole> roles);

// Witness tree of a solved instance: a star at z_1 over Y u Z, plus each
// x_j hung on the y_i owning its group. Requires a verified partition
// into m triples. Its congestion is exactly k.
SpanningTree build_witness_tree(const ReductionArtifact& art,
                                const Partition& p);

// The lemma hypothesis (tree congestion <= k) does not hold.
class HypothesisViolationError : public std::runtime_error {
public:
  explicit HypothesisViolationError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A structural claim failed although the congestion is <= k; the
// equivalence proof rules this out, so it can only be a bug.
class LemmaContradictionError : public std::logic_error {
public:
  explicit LemmaContradictionError(const std::string& msg)
      : std::logic_error(msg) {}
};

// Runs the stc->yes extraction procedure on a tree of congestion <= k:
// the minimal subtree over Y u Z must be a star centered at some z* in Z,
// every other z and every y_i with i > m must be a leaf of T, and the
// descendants of y_1..y_m (rooted at z*) then spell out a partition whose
// group sums are verified to be B.
Partition extract_partition(const ReductionArtifact& art,
                            const SpanningTree& t);

struct StarFamilyEdge {
  long long y_index = 0;            // 1-based
  Edge tree_edge;                   // {z_1, y_i}
  std::vector<long long> x_members; // 1-based x indices assigned here
  long long congestion = 0;         // closed form
};

struct StarFamilyReport {
  std::vector<StarFamilyEdge> per_y;    // one entry per y, ascending index
  std::optional<SpanningTree> tree;     // present when every x is assigned
  long long max_y_congestion = 0;
};

// Closed-form congestion of every {z_1, y_i} edge in the star-family tree
// induced by an assignment of x indices to y indices (z_1 star over
// Y u Z, each x_j hung on its assigned y_i):
//   deg(y_i) + sum_{x_j in X_i} deg(x_j) - 2*C(|X_i|+1, 2).
// Unassigned x's simply leave their y edges lighter; an empty group makes
// {z_1, y_i} a leaf edge of congestion deg(y_i). Rejects assignments to
// non-adjacent pairs. The induced tree is returned for cross-checking
// whenever the assignment is total.
StarFamilyReport star_family_congestion(
    const ReductionArtifact& art, const std::map<long long, long long>& assign);

}  // namespace stclab

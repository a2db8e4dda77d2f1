#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stclab/graph.hpp"
#include "stclab/rational.hpp"

namespace stclab {

// Called with the edge set of each completed spanning tree (sorted).
// Return false to stop the enumeration early.
using TreeVisitor = std::function<bool(const std::vector<Edge>&)>;

// Visits every spanning tree of a connected graph exactly once, in the
// deterministic order given by include-before-exclude recursion over the
// canonically sorted edge list (bridges are forced, disconnecting
// exclusions pruned). Returns the number of trees visited.
long long enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit);

inline constexpr long long kDefaultTreeBudget = 10'000'000;

// Raised when the exact spanning-tree count (matrix-tree determinant)
// exceeds the caller's budget; carries the count as a decimal string
// since it routinely exceeds 64 bits.
class BudgetExceededError : public std::runtime_error {
public:
  BudgetExceededError(std::string tree_count, long long budget);
  const std::string& tree_count() const { return tree_count_; }

private:
  std::string tree_count_;
};

struct StcResult {
  long long value = 0;
  SpanningTree witness;  // first tree attaining the value in enumeration order
  long long trees_examined = 0;
};

// Exact spanning tree congestion with a deterministic witness. Prunes a
// partial tree as soon as some already-formed fundamental cut rules out an
// improvement; pruning never changes the answer.
StcResult stc_exact(const Graph& g, long long budget = kDefaultTreeBudget);

struct DecideResult {
  bool answer = false;
  std::optional<SpanningTree> witness;
  long long trees_examined = 0;
};

// Is stc(G) <= k? Same enumeration, pruned at threshold k; stops at the
// first witness.
DecideResult stc_decide(const Graph& g, long long k,
                        long long budget = kDefaultTreeBudget);

struct SpiderPremises {
  bool s_at_least_4 = false;        // |S| >= 4
  bool s_vs_rho1_k = false;         // |S| >= rho1*k + 1
  bool min_degree_vs_rho2 = false;  // delta(G[S]) >= rho2*|S| + 1
  bool rho_product = false;         // rho1*rho2 >= 1/2
  bool rho2_at_least_half = false;  // rho2 >= 1/2
  bool congestion_at_most_k = false;

  bool all() const {
    return s_at_least_4 && s_vs_rho1_k && min_degree_vs_rho2 && rho_product &&
           rho2_at_least_half && congestion_at_most_k;
  }
};

struct SpiderVerdict {
  SpiderPremises premises;
  bool premises_hold = false;
  TreeShape shape;  // of the minimal subtree of T over S
  bool conclusion_holds = false;
  long long branch_degree = 0;
  // A degree-2 vertex of the subtree that lies inside S, if one exists.
  std::optional<int> offending_vertex;
  // Premises hold but the conclusion fails: by the lemma this can only be
  // an implementation bug, so callers should treat it as fatal.
  bool lemma_contradiction = false;
};

// Executable check of the branching-structure lemma: if T has congestion
// at most k and S is large and dense enough (all premises, evaluated in
// exact rational arithmetic), the minimal subtree of T over S must be a
// star/spider whose degree-2 vertices avoid S and whose branch vertex has
// degree >= |S| - 1. Premise failures are reported, not errors.
SpiderVerdict check_spider_lemma(const Graph& g, const SpanningTree& t,
                                 const std::vector<int>& s, Rational rho1,
                                 Rational rho2, long long k);

}  // namespace stclab

#pragma once

#include <utility>
#include <vector>

#include "rigaug/cost.hpp"
#include "rigaug/graph.hpp"
#include "rigaug/tree_rep.hpp"

namespace rigaug {

// Edge set with its total cost; an infeasible result carries kInfCost.
struct CostedEdges {
    EdgeSet edges;
    Cost cost = 0;
    bool feasible() const { return !is_inf(cost); }
};

// Cheapest edge set whose addition makes g rigid (exact: greedy over the
// rigidity matroid, scanning finite-cost complement pairs in ascending
// (cost, pair) order and keeping rank-increasing ones).
CostedEdges problem_a(const Graph& g, const CostFn& c);

// Cheapest 2-connected supergraph of a connected graph, within factor 2:
// condense to the block-cut tree, connect the pieces around every cut
// node greedily (deepest cuts first), then reverse-delete. Complete or
// already 2-connected inputs return the empty set.
CostedEdges biconnect_augment_2approx(const Graph& h, const CostFn& c);

// Cheapest F such that no u in U is a cut vertex of tree t + F, within
// factor 2: join every pair whose tree path is internally disjoint from
// U, then 2-connect that graph.
CostedEdges problem_b_2approx(const Graph& t, const VertexSet& U, const CostFn& c);

// Root-ward contiguous path of a rooted tree; top is an ancestor of
// bottom (top == bottom covers a single vertex).
struct VerticalPath {
    int top = -1, bottom = -1;
    Cost cost = 0;
};

// Exact minimum-cost subfamily of vertical paths whose vertices cover U,
// by the leaf-to-root dynamic program. Returns the total (kInfCost when
// some u is uncoverable) and the chosen path indices.
std::pair<Cost, std::vector<int>> problem_c_exact_arborescence(
    const Graph& t, int root, const VertexSet& U, const std::vector<VerticalPath>& paths);

// Cheapest F such that every u in U lies on a cycle of tree t + F, within
// factor 2: split each candidate pair at its apex into two vertical paths
// of full cost and solve the split instance exactly. Candidates are the
// finite-cost non-edges of t.
CostedEdges problem_c_2approx(const Graph& t, const VertexSet& U, const CostFn& c);

// Loop-capable cycle-cover variant on tree-node pairs: a candidate may be
// a loop (x == y, counts as covering that node), a tree edge (parallel
// copy), or a plain pair. Returns (cost, chosen candidate indices).
std::pair<Cost, std::vector<int>> problem_c_refs(
    const Graph& t, const VertexSet& U,
    const std::vector<std::pair<TreeEdgeRef, Cost>>& cands);

struct AugResult {
    EdgeSet added;
    Cost cost = 0;
    EdgeSet part_a, part_b, part_c;
    bool certified = false;
};

// 5-approximation for the cheapest globally rigid supergraph: make g
// rigid at minimum cost, take the totally loose closure, then repair its
// tree representation — Q nodes must not be cut vertices (problem B) and
// H nodes must lie on cycles (problem C) — lifting tree-level picks back
// to witness pairs. Any infinite stage yields the all-pairs completion
// flagged with kInfCost.
AugResult algorithm1(const Graph& g, const CostFn& c);

} // namespace rigaug

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rigaug/cost.hpp"
#include "rigaug/graph.hpp"

namespace rigaug {

// Node kinds of the tree representation: H = 3-connected block in which
// every single non-edge addition yields global rigidity, S = standard
// clique (>= 3 vertices), Q = 2-separator pair.
enum class RepKind { H = 0, S = 1, Q = 2 };

struct RepNode {
    RepKind kind;
    VertexSet vertices;
    friend bool operator==(const RepNode&, const RepNode&) = default;
    friend auto operator<=>(const RepNode& a, const RepNode& b) {
        return std::tie(a.kind, a.vertices) <=> std::tie(b.kind, b.vertices);
    }
};

struct TreeRep {
    Graph owner;
    std::vector<RepNode> nodes;   // sorted by (kind, vertices)
    EdgeSet tree_edges;           // node-id pairs
    std::vector<std::vector<int>> adj;

    Graph as_graph() const { return Graph(static_cast<int>(nodes.size()), tree_edges); }
    int degree_of(int id) const { return static_cast<int>(adj[id].size()); }
};

// Node pair hit by mapping a vertex pair into the tree; x == y is a loop.
struct TreeEdgeRef {
    int x, y;
    friend bool operator==(const TreeEdgeRef&, const TreeEdgeRef&) = default;
    friend auto operator<=>(const TreeEdgeRef& a, const TreeEdgeRef& b) {
        return std::tie(a.x, a.y) <=> std::tie(b.x, b.y);
    }
};

// Build the tree representation of a rigid totally loose graph (n >= 3).
// With validate set, the (expensive) totally-loose precondition is checked
// up front; structural violations raise NotTreeRepresentable either way.
TreeRep build_tree_rep(const Graph& g, bool validate = true);

// Drop S-leaves covered by their neighbor, to a fixpoint.
TreeRep reduce_tree_rep(const TreeRep& t);

// Endpoints of the unique shortest tree path connecting the nodes holding
// u and the nodes holding v; a loop when they share a node.
TreeEdgeRef map_edge(const TreeRep& t, int u, int v);

// Minimum original cost per realizable node pair, with a witness pair.
struct ProjectedCosts {
    std::map<TreeEdgeRef, std::pair<Cost, Edge>> table;
    Cost cost(TreeEdgeRef r) const {
        auto it = table.find(r);
        return it == table.end() ? kInfCost : it->second.first;
    }
};
ProjectedCosts project_costs(const TreeRep& t, const CostFn& c);

// Augmentation validity via the tree: adding E' makes the owner globally
// rigid iff every H node lies on a cycle of tree+mapped(E') (a loop at H
// counts) and no Q node is a cut vertex of it.
bool check_augmentation(const Graph& g, const TreeRep& t, const EdgeSet& added);

std::string tree_rep_listing(const TreeRep& t);
std::string tree_rep_dot(const TreeRep& t);

} // namespace rigaug

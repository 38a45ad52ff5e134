#pragma once

#include <vector>

#include "rigaug/graph.hpp"

namespace rigaug {

// Connected components, each sorted, listed by minimum element.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Local vertex connectivity. Non-adjacent pairs: minimum vertex cut
// (= max internally disjoint paths). Adjacent pairs: 1 + kappa of g-uv,
// which caps the value at n-1 on complete graphs.
int kappa(const Graph& g, int u, int v);

// Early-exit variant: true iff kappa(g,u,v) >= k.
bool kappa_at_least(const Graph& g, int u, int v, int k);

// n >= k+1 and kappa >= k for all pairs.
bool is_k_connected(const Graph& g, int k);

struct Separator2 {
    int a, b;
    std::vector<VertexSet> comps;  // components of g - {a,b}
};

// All 2-separators of a 2-connected graph, ordered by (a,b).
std::vector<Separator2> two_separators(const Graph& g);

// Block-cut tree of a connected graph. A block containing at most one
// cut vertex is an end-block; the tree itself is implicit (a cut vertex
// is adjacent to exactly the blocks containing it).
struct BlockCutTree {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    int n = 0;
    int t() const;       // number of end-blocks (1 for a 2-connected graph)
    int b(int v) const;  // number of components of g - v
};

BlockCutTree block_cut_tree(const Graph& g);

// The 3-block of a 2-connected graph containing the non-adjacent pair
// {u,v} with kappa(u,v) >= 3: repeatedly cleave at a 2-separator (a,b),
// keeping the side that contains u and v and adding the edge ab.
// Returns the resulting 3-connected graph with its original labels.
InducedGraph three_block(const Graph& g, int u, int v);

} // namespace rigaug

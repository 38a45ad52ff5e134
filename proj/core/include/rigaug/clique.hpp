#pragma once

#include <vector>

#include "rigaug/graph.hpp"

namespace rigaug {

bool is_clique(const Graph& g, const VertexSet& vs);

// Clique(G,X): delete each component of g - x and make the neighborhood
// of every deleted component a clique. Result lives on vertex set x.
InducedGraph clique_hull(const Graph& g, const VertexSet& x);

// Greedy inclusion-maximal clique containing e (always adds the smallest
// eligible vertex). Unique when g is 3-connected and totally loose; the
// caller asserts that context.
VertexSet maximal_clique_of_edge(const Graph& g, Edge e);

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted.
std::vector<VertexSet> maximal_cliques(const Graph& g);

} // namespace rigaug

#pragma once

#include <string>
#include <vector>

#include "rigaug/graph.hpp"
#include "rigaug/pebble.hpp"

namespace rigaug {

// Rank of the edge set in the 2-dimensional rigidity matroid.
int r2_rank(const Graph& g);

// A canonical maximal independent set: pebble game over sorted edges.
EdgeSet r2_base(const Graph& g);

// Rigid in the plane: rank 2n-3 for n >= 3; complete for n <= 2
// (single vertices count as rigid, the empty graph does not).
bool is_rigid2(const Graph& g);

// Edges whose removal drops the rank.
EdgeSet r2_bridges(const Graph& g);

// The unique circuit inside base + e, found by deleting base edges whose
// removal keeps e dependent. base must be independent, e dependent on it.
EdgeSet fundamental_circuit(const Graph& g, const EdgeSet& base, Edge e);

// Partition of E into rigidity-matroid connected components; bridges are
// exactly the singleton parts.
struct MatroidPartition {
    std::vector<EdgeSet> components;
    EdgeSet bridges;
};
MatroidPartition r2_components(const Graph& g);

// Adding uv leaves the rank unchanged.
bool is_linked2(const Graph& g, int u, int v);

bool is_redundantly_rigid2(const Graph& g);

bool is_globally_rigid2(const Graph& g);

// Same verdict plus which condition decided it; reason is one of
// complete / not-complete / min-degree-below-3 / too-few-edges /
// not-rigid / not-3-connected / not-redundantly-rigid / ok.
struct GlobalRigidity {
    bool globally_rigid;
    std::string reason;
};
GlobalRigidity global_rigidity_report(const Graph& g);

} // namespace rigaug

#pragma once

#include <string>

#include "rigaug/graph.hpp"

namespace rigaug {

// Verdict for a non-adjacent pair: weakly globally linked means the pair's
// distance is pinned down in at least one generic realization.
enum class Wgl {
    GloballyLoose,
    WeaklyGloballyLinked,
    GloballyLinkedTrivially,  // reserved for adjacent/globally-rigid callers
};

enum class WglReason {
    NotLinked,
    KappaAtMost2,
    TwoSeparatorRule,
    CliqueHullGloballyRigid,
    CliqueHullNotGloballyRigid,
};

struct WglVerdict {
    Wgl verdict;
    WglReason reason;
};

std::string to_string(Wgl v);
std::string to_string(WglReason r);

// Decision pipeline: linkedness, local connectivity >= 3, restriction to
// the common 2-connected block, the 2-separator rule, and finally the
// clique hull of the circuit through the pair inside its 3-block.
WglVerdict is_wgl2(const Graph& g, int u, int v);

// Totally loose closure: g plus every weakly globally linked non-edge,
// all verdicts taken against g itself (one pass reaches the fixpoint).
Graph tlc2(const Graph& g, int threads = 1);

bool is_totally_loose2(const Graph& g);

// Not globally rigid, but every single added edge makes it so.
bool is_sngr2(const Graph& g);

// Unique minimal vertex set containing z that induces a rigid subgraph.
// Requires g rigid and totally loose.
VertexSet sp(const Graph& g, const VertexSet& z);

// sp followed by one pass adding outside vertices with >= 3 neighbors
// inside; the result is a standard set.
VertexSet sp_star(const Graph& g, const VertexSet& z);

// g plus a complete graph on sp_star(g, z); equals tlc2(g + clique on z).
Graph tlc_plus_clique(const Graph& g, const VertexSet& z);

} // namespace rigaug

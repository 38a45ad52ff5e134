#pragma once

#include <array>
#include <vector>

#include "rigaug/graph.hpp"

namespace rigaug {

// (2,3)-pebble game. Every vertex holds out-degree + pebbles = 2, so the
// orientation needs at most two out-arcs per vertex. An edge is accepted
// iff 4 pebbles can be gathered on its endpoints; accepted edges always
// form a maximal independent set of the inserted ones, and the number of
// accepted edges is the rank of the inserted set.
class PebbleGame {
public:
    explicit PebbleGame(int n);

    // Insert in canonical sorted order for reproducible bases.
    bool try_insert(Edge e);
    void insert_all(const EdgeSet& es);

    // True iff e would be accepted now (independent of the accepted set).
    // Rearranges pebbles but never changes the accepted set.
    bool can_accept(Edge e);

    int rank() const { return static_cast<int>(accepted_.size()); }
    const EdgeSet& base() const { return accepted_; }
    int n() const { return static_cast<int>(peb_.size()); }

private:
    int gather(int u, int v);
    bool find_pebble(int root, int a, int b);

    std::vector<int> peb_;
    std::vector<std::array<int, 2>> out_;
    EdgeSet accepted_;
    std::vector<int> seen_, par_;
    int stamp_ = 0;
};

} // namespace rigaug

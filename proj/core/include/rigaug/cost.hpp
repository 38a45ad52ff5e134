#pragma once

#include <cstdint>
#include <limits>
#include <map>

#include "rigaug/graph.hpp"

namespace rigaug {

using Cost = std::uint64_t;
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

inline bool is_inf(Cost c) { return c == kInfCost; }

// Saturating addition: Infinity absorbs.
inline Cost add_cost(Cost a, Cost b) {
    if (is_inf(a) || is_inf(b)) return kInfCost;
    return a > kInfCost - b ? kInfCost : a + b;
}

// Cost on unordered vertex pairs. With the uniform flag every pair costs 1;
// otherwise unlisted pairs are Infinity.
struct CostFn {
    bool uniform = false;
    std::map<Edge, Cost> table;

    Cost operator()(Edge e) const {
        if (uniform) return 1;
        auto it = table.find(e);
        return it == table.end() ? kInfCost : it->second;
    }
    Cost operator()(int u, int v) const { return (*this)(Edge(u, v)); }

    static CostFn uniform_one() { return CostFn{true, {}}; }
};

} // namespace rigaug

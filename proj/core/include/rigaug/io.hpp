#pragma once

#include <iosfwd>
#include <string>

#include "rigaug/cost.hpp"
#include "rigaug/graph.hpp"

namespace rigaug {

// Text format, bit-exact: first line "n m"; then m lines "u v" with
// u < v, 0-indexed, ASCII decimal, LF-terminated.
Graph read_graph(std::istream& in);
Graph read_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

// Cost file: lines "u v c" with c a non-negative decimal or "inf".
// Blank lines are rejected; scale multiplies decimal costs (for inputs
// given with a fixed number of decimal places) and must yield integers.
CostFn read_costs(std::istream& in, int n, std::uint64_t scale = 1);
CostFn read_costs_file(const std::string& path, int n, std::uint64_t scale = 1);

} // namespace rigaug

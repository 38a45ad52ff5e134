#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "rigaug/errors.hpp"

namespace rigaug {

// Undirected edge, stored with u < v.
struct Edge {
    int u, v;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw InvalidPair("loop edge " + std::to_string(a));
        if (a < 0 || b < 0) throw InvalidPair("negative vertex id");
    }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) <=> std::tie(b.u, b.v);
    }
};

using VertexSet = std::vector<int>;  // kept sorted, unique
using EdgeSet = std::vector<Edge>;   // kept sorted, unique

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// "mutations" return new graphs. Adjacency is kept both as a sorted edge
// list and as bitset rows for O(n/64) neighborhood operations.
class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, EdgeSet edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return deg_[v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t row_words() const { return words_; }

    Graph add_edge(Edge e) const;
    Graph add_edges(const EdgeSet& es) const;
    Graph remove_edge(Edge e) const;
    // Subgraph induced by vs (relabels to 0..|vs|-1 in sorted vs order).
    Graph induced(const VertexSet& vs) const;

    bool is_complete() const { return m() == n_ * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    EdgeSet edges_;
    std::vector<int> deg_;
    std::vector<std::vector<int>> adj_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

// A graph together with the original labels of its vertices: vertex i of
// graph corresponds to vertices[i] in the parent graph.
struct InducedGraph {
    Graph graph;
    VertexSet vertices;  // sorted
};

void sort_unique(VertexSet& vs);
void sort_unique(EdgeSet& es);
bool contains(const VertexSet& vs, int v);
bool contains(const EdgeSet& es, Edge e);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);

// All pairs {u,v}, u < v, that are not edges of g.
EdgeSet complement_pairs(const Graph& g);

// Vertices of the edge set, sorted.
VertexSet vertices_of(const EdgeSet& es);

// Edges of g with both endpoints in vs (original labels).
EdgeSet edges_within(const Graph& g, const VertexSet& vs);

// Map edge labels through a sorted vertex list: {vs[e.u], vs[e.v]}.
EdgeSet relabel_out(const EdgeSet& es, const VertexSet& vs);

} // namespace rigaug

#include "rigaug/graph.hpp"

#include <unordered_map>

namespace rigaug {

Graph::Graph(int n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidPair("negative vertex count");
    sort_unique(edges_);
    for (const Edge& e : edges_)
        if (e.v >= n_)
            throw InvalidPair("edge endpoint " + std::to_string(e.v) +
                              " out of range for n=" + std::to_string(n_));
    deg_.assign(n_, 0);
    adj_.assign(n_, {});
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    auto set_bit = [&](int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    };
    for (const Edge& e : edges_) {
        ++deg_[e.u];
        ++deg_[e.v];
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        set_bit(e.u, e.v);
        set_bit(e.v, e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::add_edge(Edge e) const { return add_edges({e}); }

Graph Graph::add_edges(const EdgeSet& es) const {
    EdgeSet all = edges_;
    all.insert(all.end(), es.begin(), es.end());
    return Graph(n_, std::move(all));
}

Graph Graph::remove_edge(Edge e) const {
    EdgeSet rest;
    rest.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (!(f == e)) rest.push_back(f);
    return Graph(n_, std::move(rest));
}

Graph Graph::induced(const VertexSet& vs) const {
    std::unordered_map<int, int> idx;
    idx.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    EdgeSet es;
    for (const Edge& e : edges_) {
        auto iu = idx.find(e.u), iv = idx.find(e.v);
        if (iu != idx.end() && iv != idx.end()) es.emplace_back(iu->second, iv->second);
    }
    return Graph(static_cast<int>(vs.size()), std::move(es));
}

void sort_unique(VertexSet& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void sort_unique(EdgeSet& es) {
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
}

bool contains(const VertexSet& vs, int v) {
    return std::binary_search(vs.begin(), vs.end(), v);
}

bool contains(const EdgeSet& es, Edge e) {
    return std::binary_search(es.begin(), es.end(), e);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet complement_pairs(const Graph& g) {
    EdgeSet out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

VertexSet vertices_of(const EdgeSet& es) {
    VertexSet vs;
    vs.reserve(es.size() * 2);
    for (const Edge& e : es) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    sort_unique(vs);
    return vs;
}

EdgeSet edges_within(const Graph& g, const VertexSet& vs) {
    EdgeSet out;
    for (const Edge& e : g.edges())
        if (contains(vs, e.u) && contains(vs, e.v)) out.push_back(e);
    return out;
}

EdgeSet relabel_out(const EdgeSet& es, const VertexSet& vs) {
    EdgeSet out;
    out.reserve(es.size());
    for (const Edge& e : es) out.emplace_back(vs[e.u], vs[e.v]);
    sort_unique(out);
    return out;
}

} // namespace rigaug

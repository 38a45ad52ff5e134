#include "rigaug/clique.hpp"

#include <algorithm>
#include <bit>

namespace rigaug {

bool is_clique(const Graph& g, const VertexSet& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

InducedGraph clique_hull(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw EmptySet("clique_hull requires a nonempty vertex set");
    for (int v : x)
        if (v < 0 || v >= g.n()) throw InvalidPair("vertex out of range");
    VertexSet rest = set_minus([&] {
        VertexSet all(g.n());
        for (int i = 0; i < g.n(); ++i) all[i] = i;
        return all;
    }(), x);
    Graph sub = g.induced(x);  // x is sorted; local label i = x[i]
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(x.begin(), x.end(), v) - x.begin());
    };
    // Each component of g - x contributes a clique on its neighborhood in x.
    std::vector<char> alive(g.n(), 0), seen(g.n(), 0);
    for (int v : rest) alive[v] = 1;
    EdgeSet extra;
    for (int v : rest) {
        if (seen[v]) continue;
        VertexSet comp, frontier{v};
        seen[v] = 1;
        while (!frontier.empty()) {
            int y = frontier.back();
            frontier.pop_back();
            comp.push_back(y);
            for (int z : g.neighbors(y))
                if (alive[z] && !seen[z]) {
                    seen[z] = 1;
                    frontier.push_back(z);
                }
        }
        VertexSet nb;
        for (int y : comp)
            for (int z : g.neighbors(y))
                if (!alive[z]) nb.push_back(z);
        sort_unique(nb);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) extra.emplace_back(pos(nb[i]), pos(nb[j]));
    }
    return {sub.add_edges(extra), x};
}

VertexSet maximal_clique_of_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw InvalidPair("not an edge");
    std::size_t words = g.row_words();
    std::vector<std::uint64_t> cand(words);
    auto ru = g.row(e.u);
    auto rv = g.row(e.v);
    for (std::size_t i = 0; i < words; ++i) cand[i] = ru[i] & rv[i];
    VertexSet k{e.u, e.v};
    for (;;) {
        int w = -1;
        for (std::size_t i = 0; i < words && w < 0; ++i)
            if (cand[i]) w = static_cast<int>(i * 64 + std::countr_zero(cand[i]));
        if (w < 0) break;
        k.push_back(w);
        auto rw = g.row(w);
        for (std::size_t i = 0; i < words; ++i) cand[i] &= rw[i];
        cand[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
    }
    std::sort(k.begin(), k.end());
    return k;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<std::uint64_t>& r, std::vector<std::uint64_t> p,
                   std::vector<std::uint64_t> x, std::vector<VertexSet>& out) {
    std::size_t words = g.row_words();
    bool p_empty = true, x_empty = true;
    for (auto w : p)
        if (w) p_empty = false;
    for (auto w : x)
        if (w) x_empty = false;
    if (p_empty && x_empty) {
        VertexSet clique;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t bits = r[i];
            while (bits) {
                clique.push_back(static_cast<int>(i * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        out.push_back(std::move(clique));
        return;
    }
    // Pivot: vertex of P ∪ X with most neighbors in P.
    int pivot = -1, best = -1;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t bits = p[i] | x[i];
        while (bits) {
            int v = static_cast<int>(i * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            auto rv = g.row(v);
            int cnt = 0;
            for (std::size_t j = 0; j < words; ++j) cnt += std::popcount(p[j] & rv[j]);
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
    }
    auto rp = g.row(pivot);
    std::vector<int> verts;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t bits = p[i] & ~rp[i];
        while (bits) {
            verts.push_back(static_cast<int>(i * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    for (int v : verts) {
        auto rv = g.row(v);
        std::vector<std::uint64_t> np(words), nx(words);
        for (std::size_t i = 0; i < words; ++i) {
            np[i] = p[i] & rv[i];
            nx[i] = x[i] & rv[i];
        }
        r[v >> 6] |= std::uint64_t{1} << (v & 63);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        x[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    if (g.n() == 0) return {};
    std::size_t words = g.row_words();
    std::vector<std::uint64_t> r(words, 0), p(words, 0), x(words, 0);
    for (int v = 0; v < g.n(); ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<VertexSet> out;
    bron_kerbosch(g, r, std::move(p), std::move(x), out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rigaug

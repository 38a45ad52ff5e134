#include "rigaug/linkedness.hpp"

#include <atomic>
#include <thread>

#include "rigaug/clique.hpp"
#include "rigaug/connectivity.hpp"
#include "rigaug/rigidity.hpp"

namespace rigaug {

std::string to_string(Wgl v) {
    switch (v) {
        case Wgl::GloballyLoose: return "globally-loose";
        case Wgl::WeaklyGloballyLinked: return "weakly-globally-linked";
        case Wgl::GloballyLinkedTrivially: return "globally-linked-trivially";
    }
    return "?";
}

std::string to_string(WglReason r) {
    switch (r) {
        case WglReason::NotLinked: return "not-linked";
        case WglReason::KappaAtMost2: return "kappa-at-most-2";
        case WglReason::TwoSeparatorRule: return "two-separator-rule";
        case WglReason::CliqueHullGloballyRigid: return "clique-hull-globally-rigid";
        case WglReason::CliqueHullNotGloballyRigid: return "clique-hull-not-globally-rigid";
    }
    return "?";
}

WglVerdict is_wgl2(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw InvalidPair("is_wgl2 requires two distinct vertices");
    if (g.has_edge(u, v)) throw AlreadyEdge("pair is an edge");
    if (!is_linked2(g, u, v)) return {Wgl::GloballyLoose, WglReason::NotLinked};
    if (!kappa_at_least(g, u, v, 3)) return {Wgl::GloballyLoose, WglReason::KappaAtMost2};
    // kappa >= 3 puts u and v inside one 2-connected block, and the block is
    // induced, so the verdict can be decided there. The graph may have other
    // components, so restrict to the component of u before block hunting.
    VertexSet comp;
    for (const VertexSet& c : components(g))
        if (contains(c, u)) {
            comp = c;
            break;
        }
    Graph within = g.induced(comp);
    auto cpos = [&](int x) {
        return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), x) - comp.begin());
    };
    int wu = cpos(u), wv = cpos(v);
    const VertexSet* blk = nullptr;
    BlockCutTree tree = block_cut_tree(within);
    for (const VertexSet& b : tree.blocks)
        if (contains(b, wu) && contains(b, wv)) {
            blk = &b;
            break;
        }
    if (!blk) throw InternalError("no common block for a pair with kappa >= 3");
    Graph block = within.induced(*blk);
    auto pos = [&](int x) {
        return static_cast<int>(std::lower_bound(blk->begin(), blk->end(), x) - blk->begin());
    };
    int bu = pos(wu), bv = pos(wv);
    {
        VertexSet rest;
        for (int w = 0; w < block.n(); ++w)
            if (w != bu && w != bv) rest.push_back(w);
        Graph probe = block.induced(rest);
        if (components(probe).size() >= 2)
            return {Wgl::WeaklyGloballyLinked, WglReason::TwoSeparatorRule};
    }
    InducedGraph b3 = three_block(block, bu, bv);
    auto bpos = [&](int x) {
        return static_cast<int>(std::lower_bound(b3.vertices.begin(), b3.vertices.end(), x) -
                                b3.vertices.begin());
    };
    int cu = bpos(bu), cv = bpos(bv);
    EdgeSet base = r2_base(b3.graph);
    EdgeSet circuit = fundamental_circuit(b3.graph, base, Edge(cu, cv));
    VertexSet v0 = vertices_of(circuit);
    InducedGraph hull = clique_hull(b3.graph, v0);
    if (is_globally_rigid2(hull.graph))
        return {Wgl::WeaklyGloballyLinked, WglReason::CliqueHullGloballyRigid};
    return {Wgl::GloballyLoose, WglReason::CliqueHullNotGloballyRigid};
}

Graph tlc2(const Graph& g, int threads) {
    EdgeSet gaps = complement_pairs(g);
    if (gaps.empty()) return g;
    std::vector<char> take(gaps.size(), 0);
    auto work = [&](std::size_t i) {
        WglVerdict w = is_wgl2(g, gaps[i].u, gaps[i].v);
        take[i] = w.verdict == Wgl::WeaklyGloballyLinked;
    };
    if (threads <= 1 || gaps.size() < 2) {
        for (std::size_t i = 0; i < gaps.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&] {
            for (std::size_t i = next++; i < gaps.size(); i = next++) work(i);
        };
        std::vector<std::thread> pool;
        int k = std::min<int>(threads, static_cast<int>(gaps.size()));
        pool.reserve(k);
        for (int t = 0; t < k; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    EdgeSet add;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (take[i]) add.push_back(gaps[i]);
    return g.add_edges(add);
}

bool is_totally_loose2(const Graph& g) { return tlc2(g) == g; }

bool is_sngr2(const Graph& g) {
    if (is_globally_rigid2(g)) return false;
    for (const Edge& e : complement_pairs(g))
        if (!is_globally_rigid2(g.add_edge(e))) return false;
    return !complement_pairs(g).empty();
}

namespace {

constexpr int kSpExhaustiveLimit = 20;

// Minimal rigid superset by exhaustive ascending-size search; the minimal
// set is unique, so the first hit is the answer.
VertexSet sp_exhaustive(const Graph& g, const VertexSet& z) {
    VertexSet free;
    for (int v = 0; v < g.n(); ++v)
        if (!contains(z, v)) free.push_back(v);
    int f = static_cast<int>(free.size());
    if (f > kSpExhaustiveLimit) throw TooLarge("sp: residual search space too large");
    for (int k = 0; k <= f; ++k) {
        // Subsets of `free` of size k in lexicographic order.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            VertexSet cand = z;
            for (int i : idx) cand.push_back(free[i]);
            sort_unique(cand);
            if (is_rigid2(g.induced(cand))) return cand;
            int i = k - 1;
            while (i >= 0 && idx[i] == f - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw InternalError("sp: no rigid superset found (graph not rigid?)");
}

VertexSet sp_inner(const Graph& g, const VertexSet& z) {
    if (is_rigid2(g.induced(z))) return z;
    // Descend through 2-separators. Pieces are induced because in a rigid
    // totally loose graph every separating pair is adjacent.
    if (!is_k_connected(g, 3)) {
        for (const Separator2& s : two_separators(g)) {
            std::vector<VertexSet> holders;
            for (const VertexSet& c : s.comps) {
                VertexSet zc = set_intersect(z, c);
                if (!zc.empty()) holders.push_back(c);
            }
            if (holders.empty()) continue;  // z inside {a,b}: already handled (edge or point)
            if (holders.size() == 1) {
                VertexSet piece = holders[0];
                piece.push_back(s.a);
                piece.push_back(s.b);
                sort_unique(piece);
                if (!set_minus(z, piece).empty()) continue;
                VertexSet zl, local;
                Graph sub = g.induced(piece);
                for (int x : z)
                    zl.push_back(static_cast<int>(
                        std::lower_bound(piece.begin(), piece.end(), x) - piece.begin()));
                sort_unique(zl);
                VertexSet r = sp_inner(sub, zl);
                VertexSet out;
                for (int x : r) out.push_back(piece[x]);
                sort_unique(out);
                return out;
            }
            // z crosses the separator: any rigid superset must pick up both
            // separator vertices, and splits into per-piece subproblems.
            VertexSet out{s.a, s.b};
            for (const VertexSet& c : s.comps) {
                VertexSet zc = set_intersect(z, c);
                if (zc.empty()) continue;
                VertexSet piece = c;
                piece.push_back(s.a);
                piece.push_back(s.b);
                sort_unique(piece);
                Graph sub = g.induced(piece);
                VertexSet zl;
                zc.push_back(s.a);
                zc.push_back(s.b);
                sort_unique(zc);
                for (int x : zc)
                    zl.push_back(static_cast<int>(
                        std::lower_bound(piece.begin(), piece.end(), x) - piece.begin()));
                sort_unique(zl);
                VertexSet r = sp_inner(sub, zl);
                for (int x : r) out.push_back(piece[x]);
            }
            sort_unique(out);
            return out;
        }
    }
    // 3-connected: descend through a separating maximal clique when z fits
    // entirely inside one of its sides.
    for (const VertexSet& s : maximal_cliques(g)) {
        std::vector<char> alive(g.n(), 1);
        for (int x : s) alive[x] = 0;
        std::vector<char> seen(g.n(), 0);
        std::vector<VertexSet> comps;
        for (int x = 0; x < g.n(); ++x) {
            if (!alive[x] || seen[x]) continue;
            VertexSet comp, stack{x};
            seen[x] = 1;
            while (!stack.empty()) {
                int y = stack.back();
                stack.pop_back();
                comp.push_back(y);
                for (int w : g.neighbors(y))
                    if (alive[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            sort_unique(comp);
            comps.push_back(std::move(comp));
        }
        if (comps.size() < 2) continue;
        for (const VertexSet& c : comps) {
            VertexSet piece = set_union(c, s);
            if (!set_minus(z, piece).empty()) continue;
            Graph sub = g.induced(piece);
            VertexSet zl;
            for (int x : z)
                zl.push_back(static_cast<int>(
                    std::lower_bound(piece.begin(), piece.end(), x) - piece.begin()));
            sort_unique(zl);
            VertexSet r = sp_inner(sub, zl);
            VertexSet out;
            for (int x : r) out.push_back(piece[x]);
            sort_unique(out);
            return out;
        }
    }
    return sp_exhaustive(g, z);
}

} // namespace

VertexSet sp(const Graph& g, const VertexSet& z) {
    if (z.empty()) throw EmptySet("sp requires a nonempty vertex set");
    for (int v : z)
        if (v < 0 || v >= g.n()) throw InvalidPair("vertex out of range");
    if (!is_rigid2(g)) throw Precondition("sp requires a rigid graph");
    if (!is_totally_loose2(g)) throw Precondition("sp requires a totally loose graph");
    VertexSet zz = z;
    sort_unique(zz);
    return sp_inner(g, zz);
}

VertexSet sp_star(const Graph& g, const VertexSet& z) {
    VertexSet v0 = sp(g, z);
    VertexSet out = v0;
    for (int w = 0; w < g.n(); ++w) {
        if (contains(v0, w)) continue;
        int inside = 0;
        for (int y : g.neighbors(w))
            if (contains(v0, y)) ++inside;
        if (inside >= 3) out.push_back(w);
    }
    sort_unique(out);
    return out;
}

Graph tlc_plus_clique(const Graph& g, const VertexSet& z) {
    if (z.size() < 2) throw Precondition("tlc_plus_clique requires at least 2 vertices");
    VertexSet s = sp_star(g, z);
    EdgeSet add;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) add.emplace_back(s[i], s[j]);
    return g.add_edges(add);
}

} // namespace rigaug

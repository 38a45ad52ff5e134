#include "rigaug/augment.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "rigaug/connectivity.hpp"
#include "rigaug/errors.hpp"
#include "rigaug/linkedness.hpp"
#include "rigaug/pebble.hpp"
#include "rigaug/rigidity.hpp"

namespace rigaug {

namespace {

void require_tree(const Graph& t) {
    if (t.n() == 0 || t.m() != t.n() - 1 || !is_connected(t))
        throw Precondition("graph is not a tree");
}

void require_vertices(const Graph& g, const VertexSet& vs) {
    for (int v : vs)
        if (v < 0 || v >= g.n()) throw Precondition("vertex id out of range");
}

std::vector<int> bfs_parents(const Graph& g, int root) {
    std::vector<int> par(g.n(), -2);
    par[root] = -1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (par[w] == -2) {
                par[w] = v;
                q.push_back(w);
            }
    }
    return par;
}

struct PbsCand {
    Edge np;
    Cost cost;
};

// Component label per node of (t + extra) - x; label of x is -1.
std::vector<int> comps_without(const Graph& t, const EdgeSet& extra, int x) {
    std::vector<std::vector<int>> adj(t.n());
    for (int v = 0; v < t.n(); ++v)
        if (v != x)
            for (int w : t.neighbors(v))
                if (w != x) adj[v].push_back(w);
    for (const auto& e : extra)
        if (e.u != x && e.v != x) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    std::vector<int> comp(t.n(), -1);
    int next = 0;
    for (int s = 0; s < t.n(); ++s) {
        if (s == x || comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = next;
                    q.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool pbs_feasible(const Graph& t, const VertexSet& U, const EdgeSet& extra) {
    for (int u : U) {
        auto comp = comps_without(t, extra, u);
        int mx = -1;
        for (int v = 0; v < t.n(); ++v) mx = std::max(mx, comp[v]);
        if (mx > 0) return false;
    }
    return true;
}

// Greedy solver: every u in U must not be a cut vertex of t + F. Cuts are
// processed deepest first, each repaired by Kruskal-merging the components
// of (t+F)-u with the cheapest crossing candidates, then a reverse-delete
// prune. Returns indices into cands, or nothing when infeasible.
std::optional<std::pair<std::vector<int>, Cost>> pbs_solve(const Graph& t, const VertexSet& U,
                                                           const std::vector<PbsCand>& cands) {
    std::vector<int> order(cands.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::tie(cands[i].cost, cands[i].np) < std::tie(cands[j].cost, cands[j].np);
    });
    std::vector<int> depth(t.n(), 0);
    auto par = bfs_parents(t, 0);
    {
        std::deque<int> q{0};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : t.neighbors(v))
                if (par[w] == v) {
                    depth[w] = depth[v] + 1;
                    q.push_back(w);
                }
        }
    }
    VertexSet cuts = U;
    std::sort(cuts.begin(), cuts.end(),
              [&](int a, int b) { return std::tie(depth[b], a) < std::tie(depth[a], b); });
    std::vector<int> chosen;
    EdgeSet chosen_edges;
    for (int u : cuts) {
        auto comp = comps_without(t, chosen_edges, u);
        int ncomp = 0;
        for (int v = 0; v < t.n(); ++v) ncomp = std::max(ncomp, comp[v] + 1);
        if (ncomp <= 1) continue;
        std::vector<int> uf(ncomp);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int a) {
            while (uf[a] != a) a = uf[a] = uf[uf[a]];
            return a;
        };
        int groups = ncomp;
        for (int i : order) {
            if (groups == 1) break;
            auto [a, b] = cands[i].np;
            if (a == u || b == u) continue;
            int ca = find(comp[a]), cb = find(comp[b]);
            if (ca == cb) continue;
            uf[ca] = cb;
            --groups;
            chosen.push_back(i);
            chosen_edges.push_back(cands[i].np);
        }
        if (groups > 1) return std::nullopt;
    }
    // Reverse-delete: drop expensive picks that later picks made redundant.
    std::vector<int> prune = chosen;
    std::sort(prune.begin(), prune.end(), [&](int i, int j) {
        return std::tie(cands[j].cost, cands[j].np) < std::tie(cands[i].cost, cands[i].np);
    });
    std::vector<char> kept(cands.size(), 0);
    for (int i : chosen) kept[i] = 1;
    for (int i : prune) {
        kept[i] = 0;
        EdgeSet rest;
        for (int j : chosen)
            if (kept[j]) rest.push_back(cands[j].np);
        if (!pbs_feasible(t, U, rest)) kept[i] = 1;
    }
    std::vector<int> final_idx;
    Cost total = 0;
    for (int i : chosen)
        if (kept[i]) {
            final_idx.push_back(i);
            total = add_cost(total, cands[i].cost);
        }
    std::sort(final_idx.begin(), final_idx.end());
    return {{std::move(final_idx), total}};
}

} // namespace

CostedEdges problem_a(const Graph& g, const CostFn& c) {
    const int n = g.n();
    const int target = n <= 1 ? 0 : 2 * n - 3;
    PebbleGame pg(n);
    pg.insert_all(g.edges());
    std::vector<std::pair<Cost, Edge>> cands;
    for (const auto& e : complement_pairs(g)) {
        Cost cv = c(e);
        if (!is_inf(cv)) cands.emplace_back(cv, e);
    }
    std::sort(cands.begin(), cands.end());
    CostedEdges out;
    for (const auto& [cv, e] : cands) {
        if (pg.rank() >= target) break;
        if (pg.try_insert(e)) {
            out.edges.push_back(e);
            out.cost = add_cost(out.cost, cv);
        }
    }
    if (pg.rank() < target) return {{}, kInfCost};
    return out;
}

CostedEdges biconnect_augment_2approx(const Graph& h, const CostFn& c) {
    if (h.is_complete() || is_k_connected(h, 2)) return {{}, 0};
    if (!is_connected(h)) throw Precondition("graph is not connected");
    auto bct = block_cut_tree(h);
    const int nb = static_cast<int>(bct.blocks.size());
    const int nc = static_cast<int>(bct.cut_vertices.size());
    std::vector<int> node_of(h.n(), -1);
    EdgeSet tedges;
    for (int bi = 0; bi < nb; ++bi)
        for (int v : bct.blocks[bi]) {
            if (contains(bct.cut_vertices, v)) {
                int ci = static_cast<int>(std::lower_bound(bct.cut_vertices.begin(),
                                                           bct.cut_vertices.end(), v) -
                                          bct.cut_vertices.begin());
                tedges.push_back(Edge(bi, nb + ci));
                node_of[v] = nb + ci;
            } else {
                node_of[v] = bi;
            }
        }
    sort_unique(tedges);
    Graph ts(nb + nc, tedges);
    VertexSet cut_nodes(nc);
    std::iota(cut_nodes.begin(), cut_nodes.end(), nb);
    std::map<Edge, std::pair<Cost, Edge>> best; // node pair -> (cost, witness)
    for (const auto& e : complement_pairs(h)) {
        Cost cv = c(e);
        if (is_inf(cv)) continue;
        int x = node_of[e.u], y = node_of[e.v];
        if (x == y) continue; // same block: never repairs a cut vertex
        Edge np(x, y);
        auto it = best.find(np);
        if (it == best.end() || cv < it->second.first) best[np] = {cv, e};
    }
    std::vector<PbsCand> cands;
    std::vector<Edge> witness;
    for (const auto& [np, val] : best) {
        cands.push_back({np, val.first});
        witness.push_back(val.second);
    }
    auto sol = pbs_solve(ts, cut_nodes, cands);
    if (!sol) return {{}, kInfCost};
    CostedEdges out;
    for (int i : sol->first) {
        out.edges.push_back(witness[i]);
        out.cost = add_cost(out.cost, cands[i].cost);
    }
    sort_unique(out.edges);
    return out;
}

CostedEdges problem_b_2approx(const Graph& t, const VertexSet& U, const CostFn& c) {
    require_tree(t);
    require_vertices(t, U);
    std::vector<char> in_u(t.n(), 0);
    for (int u : U) in_u[u] = 1;
    EdgeSet bar;
    for (int u = 0; u < t.n(); ++u) {
        auto par = bfs_parents(t, u);
        for (int v = u + 1; v < t.n(); ++v) {
            bool ok = true;
            for (int x = par[v]; x != u && ok; x = par[x]) ok = !in_u[x];
            if (ok) bar.push_back(Edge(u, v));
        }
    }
    return biconnect_augment_2approx(Graph(t.n(), std::move(bar)), c);
}

std::pair<Cost, std::vector<int>> problem_c_exact_arborescence(
    const Graph& t, int root, const VertexSet& U, const std::vector<VerticalPath>& paths) {
    require_tree(t);
    if (root < 0 || root >= t.n()) throw Precondition("root out of range");
    require_vertices(t, U);
    const int n = t.n();
    auto par = bfs_parents(t, root);
    std::vector<std::vector<int>> children(n);
    std::vector<int> bfs_order;
    {
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            bfs_order.push_back(v);
            for (int w : t.neighbors(v))
                if (par[w] == v) {
                    children[v].push_back(w);
                    q.push_back(w);
                }
        }
    }
    // chains bottom -> top, validated vertical
    std::vector<std::vector<int>> chain(paths.size());
    std::vector<std::vector<int>> paths_at(n);
    for (size_t i = 0; i < paths.size(); ++i) {
        int top = paths[i].top, bottom = paths[i].bottom;
        if (top < 0 || top >= n || bottom < 0 || bottom >= n)
            throw Precondition("path endpoint out of range");
        int x = bottom;
        while (true) {
            chain[i].push_back(x);
            if (x == top) break;
            x = par[x];
            if (x < 0) throw Precondition("path is not root-ward contiguous");
        }
        for (int v : chain[i]) paths_at[v].push_back(static_cast<int>(i));
    }
    std::vector<char> in_u(n, 0);
    for (int u : U) in_u[u] = 1;
    std::vector<Cost> opt(n, 0);
    std::vector<int> best_path(n, -1);
    std::vector<int> stamp(n, -1);
    int tick = 0;
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
        int v = *it;
        if (!in_u[v]) {
            Cost s = 0;
            for (int r : children[v]) s = add_cost(s, opt[r]);
            opt[v] = s;
            continue;
        }
        Cost best = kInfCost;
        for (int pi : paths_at[v]) {
            ++tick;
            for (int x : chain[pi]) stamp[x] = tick;
            Cost s = paths[pi].cost;
            for (int x : chain[pi]) {
                for (int r : children[x])
                    if (stamp[r] != tick) s = add_cost(s, opt[r]);
                if (x == v) break;
            }
            if (s < best) {
                best = s;
                best_path[v] = pi;
            }
        }
        opt[v] = best;
    }
    if (is_inf(opt[root])) return {kInfCost, {}};
    std::vector<int> chosen;
    std::deque<int> solve{root};
    while (!solve.empty()) {
        int v = solve.front();
        solve.pop_front();
        if (!in_u[v]) {
            for (int r : children[v]) solve.push_back(r);
            continue;
        }
        int pi = best_path[v];
        if (pi < 0) throw InternalError("finite cover without a chosen path");
        chosen.push_back(pi);
        ++tick;
        for (int x : chain[pi]) stamp[x] = tick;
        for (int x : chain[pi]) {
            for (int r : children[x])
                if (stamp[r] != tick) solve.push_back(r);
            if (x == v) break;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return {opt[root], std::move(chosen)};
}

std::pair<Cost, std::vector<int>> problem_c_refs(
    const Graph& t, const VertexSet& U,
    const std::vector<std::pair<TreeEdgeRef, Cost>>& cands) {
    require_tree(t);
    require_vertices(t, U);
    const int root = 0;
    auto par = bfs_parents(t, root);
    std::vector<int> depth(t.n(), 0);
    {
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : t.neighbors(v))
                if (par[w] == v) {
                    depth[w] = depth[v] + 1;
                    q.push_back(w);
                }
        }
    }
    std::vector<VerticalPath> paths;
    std::vector<int> tag;
    for (size_t i = 0; i < cands.size(); ++i) {
        const auto& [ref, cost] = cands[i];
        if (is_inf(cost)) continue;
        if (ref.x == ref.y) {
            paths.push_back({ref.x, ref.x, cost});
            tag.push_back(static_cast<int>(i));
            continue;
        }
        int a = ref.x, b = ref.y;
        while (depth[a] > depth[b]) a = par[a];
        while (depth[b] > depth[a]) b = par[b];
        while (a != b) {
            a = par[a];
            b = par[b];
        }
        paths.push_back({a, ref.x, cost});
        tag.push_back(static_cast<int>(i));
        paths.push_back({a, ref.y, cost});
        tag.push_back(static_cast<int>(i));
    }
    auto [dp_cost, chosen] = problem_c_exact_arborescence(t, root, U, paths);
    if (is_inf(dp_cost)) return {kInfCost, {}};
    std::vector<int> tags;
    for (int pi : chosen) tags.push_back(tag[pi]);
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    Cost total = 0;
    for (int i : tags) total = add_cost(total, cands[i].second);
    return {total, std::move(tags)};
}

CostedEdges problem_c_2approx(const Graph& t, const VertexSet& U, const CostFn& c) {
    require_tree(t);
    require_vertices(t, U);
    std::vector<std::pair<TreeEdgeRef, Cost>> cands;
    EdgeSet pairs;
    for (const auto& e : complement_pairs(t)) {
        Cost cv = c(e);
        if (is_inf(cv)) continue;
        cands.push_back({{e.u, e.v}, cv});
        pairs.push_back(e);
    }
    auto [cost, tags] = problem_c_refs(t, U, cands);
    if (is_inf(cost)) return {{}, kInfCost};
    CostedEdges out;
    out.cost = cost;
    for (int i : tags) out.edges.push_back(pairs[i]);
    sort_unique(out.edges);
    return out;
}

namespace {

AugResult all_pairs_result(const Graph& g, const EdgeSet& part_a) {
    AugResult r;
    r.part_a = part_a;
    r.added = complement_pairs(g);
    r.cost = kInfCost;
    r.certified = is_globally_rigid2(g.add_edges(r.added));
    return r;
}

} // namespace

AugResult algorithm1(const Graph& g, const CostFn& c) {
    auto ea = problem_a(g, c);
    if (!ea.feasible()) return all_pairs_result(g, {});
    AugResult r;
    r.part_a = ea.edges;
    Graph closure = tlc2(g.add_edges(ea.edges));
    if (!closure.is_complete()) {
        TreeRep t = build_tree_rep(closure, false);
        auto proj = project_costs(t, c);
        VertexSet uq, uh;
        for (size_t i = 0; i < t.nodes.size(); ++i) {
            if (t.nodes[i].kind == RepKind::Q) uq.push_back(static_cast<int>(i));
            if (t.nodes[i].kind == RepKind::H) uh.push_back(static_cast<int>(i));
        }
        CostFn cnode;
        for (const auto& [ref, val] : proj.table)
            if (ref.x != ref.y) cnode.table[Edge(ref.x, ref.y)] = val.first;
        auto fb = problem_b_2approx(t.as_graph(), uq, cnode);
        if (!fb.feasible()) return all_pairs_result(g, r.part_a);
        for (const auto& np : fb.edges)
            r.part_b.push_back(proj.table.at({np.u, np.v}).second);
        sort_unique(r.part_b);
        std::vector<std::pair<TreeEdgeRef, Cost>> cands;
        cands.reserve(proj.table.size());
        for (const auto& [ref, val] : proj.table) cands.emplace_back(ref, val.first);
        auto [fc_cost, fc_tags] = problem_c_refs(t.as_graph(), uh, cands);
        if (is_inf(fc_cost)) return all_pairs_result(g, r.part_a);
        for (int i : fc_tags) r.part_c.push_back(proj.table.at(cands[i].first).second);
        sort_unique(r.part_c);
    }
    r.added = r.part_a;
    r.added.insert(r.added.end(), r.part_b.begin(), r.part_b.end());
    r.added.insert(r.added.end(), r.part_c.begin(), r.part_c.end());
    sort_unique(r.added);
    r.cost = 0;
    for (const auto& e : r.added) r.cost = add_cost(r.cost, c(e));
    r.certified = is_globally_rigid2(g.add_edges(r.added));
    return r;
}

} // namespace rigaug

#include "rigaug/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace rigaug {

namespace {

// BFS over g restricted to vertices where alive[w] is true.
VertexSet reach(const Graph& g, int start, const std::vector<char>& alive) {
    VertexSet out;
    std::vector<char> vis(g.n(), 0);
    std::deque<int> q{start};
    vis[start] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        out.push_back(x);
        for (int y : g.neighbors(x))
            if (alive[y] && !vis[y]) {
                vis[y] = 1;
                q.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
    std::vector<char> alive(g.n(), 1);
    for (int v : removed) alive[v] = 0;
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexSet> out;
    for (int v = 0; v < g.n(); ++v) {
        if (!alive[v] || seen[v]) continue;
        VertexSet c = reach(g, v, alive);
        for (int x : c) seen[x] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

// Unit-vertex-capacity max flow between non-adjacent u,v by vertex
// splitting; stops once the flow reaches `cap`.
int disjoint_paths(const Graph& g, int u, int v, int cap) {
    int n = g.n();
    // Node 2w = w_in, 2w+1 = w_out.
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add = [&](int a, int b, int c) {
        net[a].push_back({b, c, static_cast<int>(net[b].size())});
        net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
    };
    int big = n + 1;
    for (int w = 0; w < n; ++w) add(2 * w, 2 * w + 1, (w == u || w == v) ? big : 1);
    for (const Edge& e : g.edges()) {
        add(2 * e.u + 1, 2 * e.v, big);
        add(2 * e.v + 1, 2 * e.u, big);
    }
    int s = 2 * u + 1, t = 2 * v;
    int flow = 0;
    std::vector<int> par_node(2 * n), par_arc(2 * n);
    while (flow < cap) {
        std::fill(par_node.begin(), par_node.end(), -1);
        std::deque<int> q{s};
        par_node[s] = s;
        while (!q.empty() && par_node[t] < 0) {
            int x = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < net[x].size(); ++i) {
                const Arc& a = net[x][i];
                if (a.cap > 0 && par_node[a.to] < 0) {
                    par_node[a.to] = x;
                    par_arc[a.to] = static_cast<int>(i);
                    q.push_back(a.to);
                }
            }
        }
        if (par_node[t] < 0) break;
        for (int x = t; x != s; x = par_node[x]) {
            Arc& a = net[par_node[x]][par_arc[x]];
            --a.cap;
            ++net[x][a.rev].cap;
        }
        ++flow;
    }
    return flow;
}

} // namespace

std::vector<VertexSet> components(const Graph& g) { return components_avoiding(g, {}); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

int kappa(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw InvalidPair("kappa requires two distinct vertices");
    if (g.has_edge(u, v)) return 1 + kappa(g.remove_edge(Edge(u, v)), u, v);
    return disjoint_paths(g, u, v, g.n());
}

bool kappa_at_least(const Graph& g, int u, int v, int k) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw InvalidPair("kappa requires two distinct vertices");
    if (k <= 0) return true;
    if (g.has_edge(u, v)) return kappa_at_least(g.remove_edge(Edge(u, v)), u, v, k - 1);
    return disjoint_paths(g, u, v, k) >= k;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return g.n() >= 1;
    if (g.n() < k + 1) return false;
    // A cut of size < k misses one of the first k vertices, and that vertex
    // is non-adjacent to everything on the far side, so scanning pairs that
    // involve the first k vertices is enough.
    int rows = std::min(k, g.n());
    for (int u = 0; u < rows; ++u)
        for (int v = 0; v < g.n(); ++v)
            if (v != u && !g.has_edge(u, v) && !kappa_at_least(g, u, v, k)) return false;
    return true;
}

std::vector<Separator2> two_separators(const Graph& g) {
    if (!is_k_connected(g, 2)) throw NotBiconnected("two_separators requires a 2-connected graph");
    std::vector<Separator2> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            auto comps = components_avoiding(g, {a, b});
            if (comps.size() >= 2) out.push_back({a, b, std::move(comps)});
        }
    return out;
}

int BlockCutTree::t() const {
    if (blocks.size() <= 1) return 1;
    int leaves = 0;
    for (const VertexSet& blk : blocks) {
        int cuts_in = 0;
        for (int v : blk)
            if (contains(cut_vertices, v)) ++cuts_in;
        if (cuts_in <= 1) ++leaves;
    }
    return leaves;
}

int BlockCutTree::b(int v) const {
    if (n == 1) return 0;
    if (!contains(cut_vertices, v)) return 1;
    int cnt = 0;
    for (const VertexSet& blk : blocks)
        if (contains(blk, v)) ++cnt;
    return cnt;
}

BlockCutTree block_cut_tree(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw NotConnected("block_cut_tree requires a connected graph");
    BlockCutTree bct;
    bct.n = g.n();
    if (g.n() == 1) {
        bct.blocks.push_back({0});
        return bct;
    }
    int n = g.n();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stk;
    VertexSet cuts;
    std::vector<VertexSet> blocks;
    int timer = 0;
    // Iterative DFS (explicit stack) to keep deep graphs safe.
    struct Frame {
        int v, parent;
        std::size_t i;
    };
    std::vector<Frame> call;
    call.push_back({0, -1, 0});
    num[0] = low[0] = timer++;
    int root_children = 0;
    while (!call.empty()) {
        Frame& f = call.back();
        const auto& nb = g.neighbors(f.v);
        if (f.i < nb.size()) {
            int w = nb[f.i++];
            if (w == f.parent) continue;
            if (num[w] == -1) {
                stk.emplace_back(f.v, w);
                num[w] = low[w] = timer++;
                if (f.v == 0) ++root_children;
                call.push_back({w, f.v, 0});
            } else if (num[w] < num[f.v]) {
                stk.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], num[w]);
            }
        } else {
            int v = f.v, parent = f.parent;
            call.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= num[parent]) {
                    // parent closes a block
                    VertexSet blk;
                    while (!stk.empty()) {
                        auto [x, y] = stk.back();
                        if (num[x] < num[v] && !(x == parent && y == v)) break;
                        stk.pop_back();
                        blk.push_back(x);
                        blk.push_back(y);
                        if (x == parent && y == v) break;
                    }
                    sort_unique(blk);
                    blocks.push_back(std::move(blk));
                    if (parent != 0) cuts.push_back(parent);
                }
            }
        }
    }
    if (root_children >= 2) cuts.push_back(0);
    sort_unique(cuts);
    std::sort(blocks.begin(), blocks.end());
    bct.blocks = std::move(blocks);
    bct.cut_vertices = std::move(cuts);
    return bct;
}

InducedGraph three_block(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw CleavingPrecondition("need two distinct vertices");
    if (g.has_edge(u, v)) throw CleavingPrecondition("pair is an edge");
    if (!is_k_connected(g, 2)) throw CleavingPrecondition("graph is not 2-connected");
    if (!kappa_at_least(g, u, v, 3)) throw CleavingPrecondition("pair has connectivity below 3");
    if (components_avoiding(g, {std::min(u, v), std::max(u, v)}).size() >= 2)
        throw CleavingPrecondition("pair is itself a 2-separator");

    Graph cur = g;
    VertexSet labels(g.n());
    for (int i = 0; i < g.n(); ++i) labels[i] = i;
    int lu = u, lv = v;
    for (;;) {
        // Smallest 2-separator by original labels, skipping {u,v} itself.
        auto seps = two_separators(cur);
        const Separator2* pick = nullptr;
        bool uv_is_sep = false;
        for (const auto& s : seps) {
            if ((s.a == lu && s.b == lv) || (s.a == lv && s.b == lu)) {
                uv_is_sep = true;
                continue;
            }
            if (!pick) pick = &s;
        }
        if (!pick) {
            if (uv_is_sep)
                throw CleavingPrecondition("pair became the only 2-separator while cleaving");
            break;
        }
        int a = pick->a, b = pick->b;
        const VertexSet* keep = nullptr;
        for (const VertexSet& c : pick->comps) {
            bool hu = (lu == a || lu == b) || contains(c, lu);
            bool hv = (lv == a || lv == b) || contains(c, lv);
            if (hu && hv) {
                keep = &c;
                break;
            }
        }
        if (!keep) throw InternalError("cleaving separated the pair");
        VertexSet piece = *keep;
        piece.push_back(a);
        piece.push_back(b);
        sort_unique(piece);
        Graph sub = cur.induced(piece);
        // Relabel a, b, u, v into the piece.
        auto pos = [&](int x) {
            return static_cast<int>(std::lower_bound(piece.begin(), piece.end(), x) -
                                    piece.begin());
        };
        int pa = pos(a), pb = pos(b);
        if (!sub.has_edge(pa, pb)) sub = sub.add_edge(Edge(pa, pb));
        lu = pos(lu);
        lv = pos(lv);
        VertexSet new_labels(piece.size());
        for (std::size_t i = 0; i < piece.size(); ++i) new_labels[i] = labels[piece[i]];
        labels = std::move(new_labels);
        cur = std::move(sub);
    }
    return {std::move(cur), std::move(labels)};
}

} // namespace rigaug

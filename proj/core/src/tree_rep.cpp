#include "rigaug/tree_rep.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "rigaug/clique.hpp"
#include "rigaug/connectivity.hpp"
#include "rigaug/errors.hpp"
#include "rigaug/linkedness.hpp"
#include "rigaug/rigidity.hpp"

namespace rigaug {

namespace {

using NodeList = std::vector<RepNode>;
using LinkList = std::vector<std::pair<RepNode, RepNode>>;

// Connected components among vertices with alive[v] set, in local labels,
// each sorted, ordered by smallest member.
std::vector<VertexSet> comps_alive(const Graph& g, const std::vector<char>& alive) {
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (!alive[s] || seen[s]) continue;
        VertexSet comp;
        std::deque<int> bfs{s};
        seen[s] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    bfs.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet relabel(const VertexSet& local, const VertexSet& labels) {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(labels[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// The unique smallest node among `piece` that covers {a, b} with at least
// three vertices; this is where a separator-pair node hangs off a subtree.
const RepNode& attach_node(const NodeList& piece, int a, int b) {
    const RepNode* best = nullptr;
    for (const auto& nd : piece) {
        if (nd.vertices.size() < 3) continue;
        if (!contains(nd.vertices, a) || !contains(nd.vertices, b)) continue;
        if (!best || nd.vertices.size() < best->vertices.size()) best = &nd;
    }
    if (!best) throw NotTreeRepresentable("no tree node covers a separator pair");
    for (const auto& nd : piece) {
        if (&nd == best || nd.vertices.size() < 3) continue;
        if (!contains(nd.vertices, a) || !contains(nd.vertices, b)) continue;
        if (!std::includes(nd.vertices.begin(), nd.vertices.end(),
                           best->vertices.begin(), best->vertices.end()))
            throw NotTreeRepresentable("separator pair has no unique minimal cover");
    }
    return *best;
}

void build_rec(const Graph& g, const VertexSet& labels, bool validate,
               NodeList& nodes, LinkList& links) {
    const int n = g.n();
    if (g.is_complete()) {
        nodes.push_back({RepKind::S, labels});
        return;
    }
    if (!is_k_connected(g, 3)) {
        auto seps = two_separators(g);
        if (seps.empty()) throw InternalError("non-3-connected graph without 2-separator");
        const auto& sep = seps.front();
        const int a = sep.a, b = sep.b;
        if (!g.has_edge(a, b))
            throw NotTreeRepresentable("2-separator pair is not an edge");
        RepNode qnode{RepKind::Q, {labels[a], labels[b]}};
        std::sort(qnode.vertices.begin(), qnode.vertices.end());
        nodes.push_back(qnode);
        for (const auto& comp : sep.comps) {
            VertexSet pv = comp;
            pv.push_back(a);
            pv.push_back(b);
            std::sort(pv.begin(), pv.end());
            NodeList pnodes;
            LinkList plinks;
            build_rec(g.induced(pv), relabel(pv, labels), validate, pnodes, plinks);
            links.emplace_back(qnode, attach_node(pnodes, labels[a], labels[b]));
            nodes.insert(nodes.end(), pnodes.begin(), pnodes.end());
            links.insert(links.end(), plinks.begin(), plinks.end());
        }
        return;
    }
    // 3-connected: split along a separating maximal clique if one exists.
    for (const auto& cl : maximal_cliques(g)) {
        std::vector<char> alive(n, 1);
        for (int v : cl) alive[v] = 0;
        auto comps = comps_alive(g, alive);
        if (comps.size() < 2) continue;
        for (const auto& comp : comps) {
            VertexSet pv = set_union(comp, cl);
            build_rec(g.induced(pv), relabel(pv, labels), validate, nodes, links);
        }
        return; // pieces all share the clique node; dedupe merges them
    }
    // 3-connected, no clique separator: one block node plus its cliques.
    if (validate && !is_sngr2(g))
        throw NotTreeRepresentable("3-connected part is not an almost-globally-rigid block");
    RepNode hnode{RepKind::H, labels};
    nodes.push_back(hnode);
    for (const auto& cl : maximal_cliques(g)) {
        if (cl.size() < 3) continue;
        RepNode snode{RepKind::S, relabel(cl, labels)};
        links.emplace_back(snode, hnode);
        nodes.push_back(std::move(snode));
    }
}

TreeRep finalize(const Graph& g, NodeList nodes, const LinkList& links) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto id_of = [&](const RepNode& nd) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), nd);
        if (it == nodes.end() || !(*it == nd)) throw InternalError("tree node lookup failed");
        return static_cast<int>(it - nodes.begin());
    };
    EdgeSet te;
    for (const auto& [p, q] : links) {
        int i = id_of(p), j = id_of(q);
        if (i == j) throw InternalError("tree representation self-link");
        te.push_back(Edge(i, j));
    }
    sort_unique(te);
    TreeRep t{g, std::move(nodes), std::move(te), {}};
    t.adj.assign(t.nodes.size(), {});
    for (const auto& e : t.tree_edges) {
        t.adj[e.u].push_back(e.v);
        t.adj[e.v].push_back(e.u);
    }
    if (t.tree_edges.size() + 1 != t.nodes.size())
        throw NotTreeRepresentable("representation is not a tree");
    std::vector<char> seen(t.nodes.size(), 0);
    std::deque<int> bfs{0};
    seen[0] = 1;
    size_t cnt = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        ++cnt;
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                bfs.push_back(w);
            }
    }
    if (cnt != t.nodes.size()) throw NotTreeRepresentable("representation is not a tree");
    return t;
}

char kind_char(RepKind k) {
    switch (k) {
        case RepKind::H: return 'H';
        case RepKind::S: return 'S';
        default: return 'Q';
    }
}

} // namespace

TreeRep build_tree_rep(const Graph& g, bool validate) {
    if (g.n() < 3) throw NotTreeRepresentable("graph has fewer than 3 vertices");
    if (!is_rigid2(g)) throw NotTreeRepresentable("graph is not rigid");
    if (validate && !is_totally_loose2(g))
        throw NotTreeRepresentable("graph is not totally loose");
    VertexSet labels(g.n());
    for (int v = 0; v < g.n(); ++v) labels[v] = v;
    NodeList nodes;
    LinkList links;
    build_rec(g, labels, validate, nodes, links);
    return finalize(g, std::move(nodes), links);
}

TreeRep reduce_tree_rep(const TreeRep& t) {
    const int k = static_cast<int>(t.nodes.size());
    std::vector<char> alive(k, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < k; ++i) {
            if (!alive[i] || t.nodes[i].kind != RepKind::S) continue;
            int nb = -1, deg = 0;
            for (int j : t.adj[i])
                if (alive[j]) {
                    nb = j;
                    ++deg;
                }
            if (deg != 1) continue;
            const auto& sv = t.nodes[i].vertices;
            const auto& nv = t.nodes[nb].vertices;
            if (std::includes(nv.begin(), nv.end(), sv.begin(), sv.end())) {
                alive[i] = 0;
                changed = true;
            }
        }
    }
    std::vector<int> remap(k, -1);
    TreeRep r;
    r.owner = t.owner;
    for (int i = 0; i < k; ++i)
        if (alive[i]) {
            remap[i] = static_cast<int>(r.nodes.size());
            r.nodes.push_back(t.nodes[i]);
        }
    for (const auto& e : t.tree_edges)
        if (alive[e.u] && alive[e.v]) r.tree_edges.push_back(Edge(remap[e.u], remap[e.v]));
    sort_unique(r.tree_edges);
    r.adj.assign(r.nodes.size(), {});
    for (const auto& e : r.tree_edges) {
        r.adj[e.u].push_back(e.v);
        r.adj[e.v].push_back(e.u);
    }
    return r;
}

TreeEdgeRef map_edge(const TreeRep& t, int u, int v) {
    const Graph& g = t.owner;
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
        throw InvalidPair("vertex pair out of range");
    if (g.has_edge(u, v)) throw AlreadyEdge("pair is already an edge");
    const int k = static_cast<int>(t.nodes.size());
    std::vector<char> in_u(k, 0), in_v(k, 0);
    int common = -1;
    bool have_u = false, have_v = false;
    for (int i = 0; i < k; ++i) {
        in_u[i] = contains(t.nodes[i].vertices, u);
        in_v[i] = contains(t.nodes[i].vertices, v);
        have_u |= in_u[i] != 0;
        have_v |= in_v[i] != 0;
        if (in_u[i] && in_v[i]) {
            if (common != -1) throw InternalError("pair shares two tree nodes");
            common = i;
        }
    }
    if (!have_u || !have_v) throw InternalError("vertex not covered by tree nodes");
    if (common != -1) return {common, common};
    std::vector<int> par(k, -2);
    std::deque<int> bfs;
    for (int i = 0; i < k; ++i)
        if (in_u[i]) {
            par[i] = -1;
            bfs.push_back(i);
        }
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop_front();
        if (in_v[x]) {
            int y = x;
            while (par[y] != -1) y = par[y];
            return {std::min(x, y), std::max(x, y)};
        }
        for (int w : t.adj[x])
            if (par[w] == -2) {
                par[w] = x;
                bfs.push_back(w);
            }
    }
    throw InternalError("tree nodes of a pair are disconnected");
}

ProjectedCosts project_costs(const TreeRep& t, const CostFn& c) {
    ProjectedCosts out;
    for (const auto& [u, v] : complement_pairs(t.owner)) {
        Cost cv = c(Edge(u, v));
        if (is_inf(cv)) continue;
        TreeEdgeRef ref = map_edge(t, u, v);
        auto it = out.table.find(ref);
        if (it == out.table.end() || cv < it->second.first)
            out.table[ref] = {cv, Edge(u, v)}; // ties keep the earlier pair
    }
    return out;
}

bool check_augmentation(const Graph& g, const TreeRep& t, const EdgeSet& added) {
    if (!(g == t.owner)) throw Precondition("graph does not match its tree representation");
    const int k = static_cast<int>(t.nodes.size());
    std::vector<std::array<int, 2>> medges;
    std::vector<int> loops_at(k, 0);
    for (const auto& e : t.tree_edges) medges.push_back({e.u, e.v});
    for (const auto& e : added) {
        if (g.has_edge(e.u, e.v)) throw AlreadyEdge("augmenting edge already present");
        TreeEdgeRef ref = map_edge(t, e.u, e.v);
        if (ref.x == ref.y)
            ++loops_at[ref.x];
        else
            medges.push_back({ref.x, ref.y});
    }
    std::vector<std::vector<std::pair<int, int>>> inc(k); // (other end, edge id)
    for (int i = 0; i < static_cast<int>(medges.size()); ++i) {
        inc[medges[i][0]].emplace_back(medges[i][1], i);
        inc[medges[i][1]].emplace_back(medges[i][0], i);
    }
    auto reaches = [&](int from, int to, int skip) {
        std::vector<char> seen(k, 0);
        std::deque<int> bfs{from};
        seen[from] = 1;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop_front();
            if (x == to) return true;
            for (auto [w, id] : inc[x]) {
                if (id == skip || seen[w]) continue;
                seen[w] = 1;
                bfs.push_back(w);
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        if (t.nodes[i].kind != RepKind::H) continue;
        if (loops_at[i] > 0) continue;
        bool on_cycle = false;
        for (auto [w, id] : inc[i])
            if (reaches(w, i, id)) {
                on_cycle = true;
                break;
            }
        if (!on_cycle) return false;
    }
    for (int q = 0; q < k; ++q) {
        if (t.nodes[q].kind != RepKind::Q) continue;
        int start = q == 0 ? 1 : 0;
        std::vector<char> seen(k, 0);
        std::deque<int> bfs{start};
        seen[start] = 1;
        int cnt = 0;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop_front();
            ++cnt;
            for (const auto& pr : inc[x]) {
                int w = pr.first;
                if (w == q || seen[w]) continue;
                seen[w] = 1;
                bfs.push_back(w);
            }
        }
        if (cnt != k - 1) return false;
    }
    return true;
}

std::string tree_rep_listing(const TreeRep& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        os << "node " << i << ' ' << kind_char(t.nodes[i].kind);
        for (int v : t.nodes[i].vertices) os << ' ' << v;
        os << '\n';
    }
    for (const auto& e : t.tree_edges) os << "edge " << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::string tree_rep_dot(const TreeRep& t) {
    std::ostringstream os;
    os << "graph treerep {\n";
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const char* shape = t.nodes[i].kind == RepKind::H   ? "box"
                            : t.nodes[i].kind == RepKind::S ? "ellipse"
                                                            : "diamond";
        os << "  n" << i << " [shape=" << shape << ", label=\"" << kind_char(t.nodes[i].kind);
        for (int v : t.nodes[i].vertices) os << ' ' << v;
        os << "\"];\n";
    }
    for (const auto& e : t.tree_edges) os << "  n" << e.u << " -- n" << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace rigaug

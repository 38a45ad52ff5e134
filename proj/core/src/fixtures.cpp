#include "rigaug/fixtures.hpp"

namespace rigaug {
namespace fixtures {

Graph complete(int n) {
    EdgeSet es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph cycle(int n) {
    EdgeSet es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path(int n) {
    EdgeSet es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph k4() { return complete(4); }

Graph k4e() { return complete(4).remove_edge(Edge(2, 3)); }

Graph c4() { return cycle(4); }

Graph p3() { return path(3); }

Graph w4() {
    return Graph(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(0, 4), Edge(1, 4),
                     Edge(2, 4), Edge(3, 4)});
}

Graph k5() { return complete(5); }

Graph k5e() { return complete(5).remove_edge(Edge(3, 4)); }

Graph twok4() {
    EdgeSet es;
    auto add_k4 = [&](std::initializer_list<int> vs) {
        std::vector<int> v(vs);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) es.emplace_back(v[i], v[j]);
    };
    add_k4({0, 1, 2, 3});
    add_k4({2, 3, 4, 5});
    return Graph(6, std::move(es));
}

Graph trik4() {
    EdgeSet es;
    auto add_k4 = [&](std::initializer_list<int> vs) {
        std::vector<int> v(vs);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) es.emplace_back(v[i], v[j]);
    };
    add_k4({0, 1, 2, 3});
    add_k4({0, 1, 4, 5});
    add_k4({0, 1, 6, 7});
    return Graph(8, std::move(es));
}

Graph prism() {
    return Graph(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5),
                     Edge(0, 3), Edge(1, 4), Edge(2, 5)});
}

} // namespace fixtures
} // namespace rigaug

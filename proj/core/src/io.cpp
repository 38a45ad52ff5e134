#include "rigaug/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rigaug {

namespace {

// Strict unsigned decimal: no sign, no leading '+', fits the target type.
bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty() || tok.size() > 20) return false;
    out = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
        if (out > (std::numeric_limits<std::uint64_t>::max() - d) / 10) return false;
        out = out * 10 + d;
    }
    return true;
}

bool parse_int(const std::string& tok, int& out) {
    std::uint64_t v;
    if (!parse_u64(tok, v) || v > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        return false;
    out = static_cast<int>(v);
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty input, expected \"n m\" header");
    auto head = split_ws(line);
    int n, m;
    if (head.size() != 2 || !parse_int(head[0], n) || !parse_int(head[1], m))
        throw ParseError("expected header \"n m\"", lineno);
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<Edge> seen;
    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("expected " + std::to_string(m) +
                                           " edge lines, got " + std::to_string(i), lineno);
        auto toks = split_ws(line);
        int u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError("expected edge line \"u v\"", lineno);
        if (u >= v) throw ParseError("edge endpoints must satisfy u < v", lineno);
        if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range (n=" +
                                     std::to_string(n) + ")", lineno);
        Edge e(u, v);
        if (!seen.insert(e).second)
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                             lineno);
        edges.push_back(e);
    }
    while (next_line()) {
        if (!split_ws(line).empty())
            throw ParseError("trailing content after " + std::to_string(m) + " edges", lineno);
    }
    return Graph(n, std::move(edges));
}

Graph read_graph_string(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return read_graph(f);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

CostFn read_costs(std::istream& in, int n, std::uint64_t scale) {
    CostFn c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 3) throw ParseError("expected cost line \"u v c\"", lineno);
        int u, v;
        if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError("expected cost line \"u v c\"", lineno);
        if (u == v) throw ParseError("cost on a loop pair", lineno);
        if (u >= n || v >= n)
            throw ParseError("vertex out of range (n=" + std::to_string(n) + ")", lineno);
        Cost cost;
        if (toks[2] == "inf") {
            cost = kInfCost;
        } else {
            std::uint64_t raw;
            std::string num = toks[2];
            auto dot = num.find('.');
            if (dot != std::string::npos) {
                // Decimal costs are accepted only when the scale makes them integral.
                std::string frac = num.substr(dot + 1);
                num.erase(dot);
                std::uint64_t pow10 = 1;
                for (char ch : frac) {
                    (void)ch;
                    pow10 *= 10;
                }
                std::uint64_t ip, fp;
                if (num.empty()) num = "0";
                if (!parse_u64(num, ip) || !parse_u64(frac, fp))
                    throw ParseError("bad cost value \"" + toks[2] + "\"", lineno);
                if (scale % pow10 != 0)
                    throw ParseError("cost \"" + toks[2] +
                                     "\" is not integral at scale " + std::to_string(scale),
                                     lineno);
                raw = ip * scale + fp * (scale / pow10);
            } else {
                if (!parse_u64(num, raw))
                    throw ParseError("bad cost value \"" + toks[2] + "\"", lineno);
                raw *= scale;
            }
            if (raw == kInfCost) throw ParseError("cost too large", lineno);
            cost = raw;
        }
        Edge e(u, v);
        auto [it, fresh] = c.table.emplace(e, cost);
        if (!fresh && it->second != cost)
            throw ParseError("conflicting costs for pair " + std::to_string(e.u) + " " +
                             std::to_string(e.v), lineno);
    }
    return c;
}

CostFn read_costs_file(const std::string& path, int n, std::uint64_t scale) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return read_costs(f, n, scale);
}

} // namespace rigaug

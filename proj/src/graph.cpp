#include "llcert/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace llcert {

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t m = bits_;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(std::max(n, 0)) {
    if (n < 1 || n > kMaxVertices)
        throw Error("vertex count must lie in [1, " + std::to_string(kMaxVertices) + "], got " +
                    std::to_string(n));
    for (const auto& [i, j] : edges) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw Error("self-loop at vertex " + std::to_string(i + 1));
        adj_[i] = adj_[i].with(j);
        adj_[j] = adj_[j].with(i);
    }
}

void Graph::check_vertex(int i) const {
    if (i < 0 || i >= n_)
        throw Error("vertex " + std::to_string(i + 1) + " out of range [1, " + std::to_string(n_) +
                    "]");
}

VertexSet Graph::neighbors(int i) const {
    check_vertex(i);
    return adj_[i];
}

VertexSet Graph::closed_neighborhood(int i) const {
    check_vertex(i);
    return adj_[i].with(i);
}

int Graph::degree(int i) const {
    check_vertex(i);
    return adj_[i].size();
}

int Graph::max_degree() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d = std::max(d, adj_[i].size());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j : adj_[i].elements())
            if (i < j) out.emplace_back(i, j);
    return out;
}

bool Graph::is_independent(VertexSet s) const {
    std::uint64_t m = s.bits();
    while (m) {
        const int i = std::countr_zero(m);
        if (adj_[i].intersects(s)) return false;
        m &= m - 1;
    }
    return true;
}

std::vector<VertexSet> Graph::independent_subsets(VertexSet s) const {
    std::vector<VertexSet> out;
    for_each_subset(s, [&](VertexSet sub) {
        if (is_independent(sub)) out.push_back(sub);
    });
    return out;
}

std::vector<VertexSet> Graph::induced_components(VertexSet s) const {
    std::vector<VertexSet> parts;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.lowest());
        while (true) {
            VertexSet grown = comp;
            for (int v : comp.elements()) grown = grown | (adj_[v] & s);
            if (grown == comp) break;
            comp = grown;
        }
        parts.push_back(comp);
        left = left - comp;
    }
    return parts;
}

namespace {

using nlohmann::json;

int take_vertex(const json& v, int n, const std::string& where) {
    if (!v.is_number_integer())
        throw Error(where + ": vertex id must be an integer");
    const long long x = v.get<long long>();
    if (x < 1 || x > n)
        throw Error(where + ": vertex " + std::to_string(x) + " out of range [1, " +
                    std::to_string(n) + "]");
    return static_cast<int>(x - 1);
}

Graph parse_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error("graph JSON needs an integer field \"n\"");
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxVertices)
        throw Error("graph JSON: n must lie in [1, " + std::to_string(kMaxVertices) + "], got " +
                    std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw Error("graph JSON: \"edges\" must be an array");
        int k = 0;
        for (const auto& e : doc["edges"]) {
            const std::string where = "edges[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 2)
                throw Error(where + ": expected a pair [i, j]");
            const int i = take_vertex(e[0], static_cast<int>(n), where);
            const int j = take_vertex(e[1], static_cast<int>(n), where);
            if (i == j) throw Error(where + ": self-loop at vertex " + std::to_string(i + 1));
            edges.emplace_back(i, j);
            ++k;
        }
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank or comment-only line
        const std::string where = "line " + std::to_string(lineno);
        if (n < 0) {
            long long count = 0;
            if (first != "n" || !(ls >> count))
                throw Error(where + ": expected header \"n <count>\"");
            if (count < 1 || count > kMaxVertices)
                throw Error(where + ": n must lie in [1, " + std::to_string(kMaxVertices) +
                            "], got " + std::to_string(count));
            std::string extra;
            if (ls >> extra) throw Error(where + ": trailing tokens after header");
            n = static_cast<int>(count);
            continue;
        }
        long long i = 0, j = 0;
        try {
            i = std::stoll(first);
        } catch (...) {
            throw Error(where + ": expected two vertex ids");
        }
        if (!(ls >> j)) throw Error(where + ": expected two vertex ids");
        std::string extra;
        if (ls >> extra) throw Error(where + ": trailing tokens after edge");
        for (long long v : {i, j})
            if (v < 1 || v > n)
                throw Error(where + ": vertex " + std::to_string(v) + " out of range [1, " +
                            std::to_string(n) + "]");
        if (i == j) throw Error(where + ": self-loop at vertex " + std::to_string(i));
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    if (n < 0) throw Error("empty graph document");
    return Graph(n, edges);
}

} // namespace

Graph parse_graph(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_graph_edgelist(text);
}

std::string set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

std::vector<int> to_one_based(VertexSet s) {
    std::vector<int> out;
    for (int v : s.elements()) out.push_back(v + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
    return os << set_str(s);
}

} // namespace llcert

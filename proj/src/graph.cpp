#include "probedf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace probedf {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), m_((int)edges.size()) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        ++deg[u];
        ++deg[v];
    }
    adj_ptr_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) adj_ptr_[v + 1] = adj_ptr_[v] + deg[v];
    adj_.resize(2 * (size_t)m_);
    std::vector<int> fill(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (auto [u, v] : edges) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto b = adj_.begin() + adj_ptr_[v], e = adj_.begin() + adj_ptr_[v + 1];
        std::sort(b, e);
        if (std::adjacent_find(b, e) != e) throw std::invalid_argument("duplicate edge");
    }
}

bool Graph::adjacent(int u, int v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
    auto es = edges();
    for (auto [u, v] : extra) es.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(n_, es);
}

namespace {

// Strips '#' comments; returns false for blank lines.
bool significant_line(std::string& line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;

    auto next = [&](bool dimacs) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (dimacs) {
                if (!line.empty() && line[0] == 'c') continue;
                if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                return true;
            }
            if (significant_line(line)) return true;
        }
        return false;
    };

    if (format == GraphFormat::edgelist) {
        if (!next(false)) throw ParseError(lineno, "missing header");
        std::istringstream hs(line);
        std::string rest;
        if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> rest))
            throw ParseError(lineno, "malformed header, expected \"n m\"");
        for (long i = 0; i < m; ++i) {
            if (!next(false)) throw ParseError(lineno, "unexpected end of input, expected edge");
            std::istringstream es(line);
            long u, v;
            if (!(es >> u >> v) || (es >> rest)) throw ParseError(lineno, "malformed edge line");
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back((int)u, (int)v);
        }
    } else {
        if (!next(true)) throw ParseError(lineno, "missing problem line");
        std::istringstream hs(line);
        std::string p, kind;
        if (!(hs >> p >> kind >> n >> m) || p != "p" || kind != "edge" || n < 0 || m < 0)
            throw ParseError(lineno, "malformed problem line, expected \"p edge n m\"");
        for (long i = 0; i < m; ++i) {
            if (!next(true)) throw ParseError(lineno, "unexpected end of input, expected edge");
            std::istringstream es(line);
            std::string e;
            long u, v;
            if (!(es >> e >> u >> v) || e != "e") throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back((int)u - 1, (int)v - 1);
        }
    }

    // Duplicate detection happens in the constructor; rewrap as a parse error.
    try {
        return Graph((int)n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<NeighborhoodComponent> neighborhood_components(const Graph& g, int v) {
    auto nv = g.neighbors(v);
    int k = (int)nv.size();
    std::vector<int> pos(k > 0 ? g.vertex_count() : 0, -1);
    for (int i = 0; i < k; ++i) pos[nv[i]] = i;

    // Local adjacency over positions; cost sum_{u in N(v)} d(u).
    std::vector<std::vector<int>> local(k);
    for (int i = 0; i < k; ++i)
        for (int w : g.neighbors(nv[i]))
            if (w != v && pos[w] >= 0) local[i].push_back(pos[w]);

    std::vector<NeighborhoodComponent> comps;
    std::vector<int> comp_of(k, -1), stack;
    for (int i = 0; i < k; ++i) {
        if (comp_of[i] >= 0) continue;
        NeighborhoodComponent c;
        c.anchor = v;
        comp_of[i] = (int)comps.size();
        stack.push_back(i);
        std::vector<int> members;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y : local[x])
                if (comp_of[y] < 0) {
                    comp_of[y] = comp_of[i];
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        for (int x : members) {
            c.vertices.push_back(nv[x]);
            c.local_degree.push_back((int)local[x].size());
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

std::vector<PositionPair> induced_ordered(const Graph& g, std::span<const int> seq) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : seq) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        if (seen[v]) throw std::invalid_argument("duplicate vertex in sequence");
        seen[v] = 1;
    }
    std::vector<PositionPair> out;
    for (int i = 0; i < (int)seq.size(); ++i)
        for (int j = i + 1; j < (int)seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j])) out.emplace_back(i + 1, j + 1);
    return out;
}

std::optional<std::array<int, 4>> find_diamond(const Graph& g) {
    VertexMarks marks;
    marks.resize(g.vertex_count());
    std::vector<int> common;
    for (int u = 0; u < g.vertex_count(); ++u) {
        marks.clear();
        for (int w : g.neighbors(u)) marks.set(w);
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            common.clear();
            for (int w : g.neighbors(v))
                if (marks.test(w)) common.push_back(w);
            // Common neighborhood of edge uv must be a clique.
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]))
                        return std::array<int, 4>{common[i], u, v, common[j]};
        }
    }
    return std::nullopt;
}

}  // namespace probedf

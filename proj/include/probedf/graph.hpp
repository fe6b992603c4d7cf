#pragma once

#include <array>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace probedf {

using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Compact undirected simple graph with sorted adjacency and O(1) degree access.
/// Immutable after construction; safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return adj_ptr_[v + 1] - adj_ptr_[v]; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + adj_ptr_[v], adj_.data() + adj_ptr_[v + 1]};
    }

    bool adjacent(int u, int v) const;

    /// All edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;

    /// Copy of this graph with extra edges added (used for completions).
    Graph with_edges(const std::vector<Edge>& extra) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> adj_ptr_{0};
    std::vector<int> adj_;
};

enum class GraphFormat { edgelist, dimacs };

/// Edgelist: header "n m", then m lines "u v" (0-indexed, '#' comments).
/// DIMACS: "p edge n m" plus "e u v" lines (1-indexed, 'c' comments).
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

std::string to_edgelist(const Graph& g);

/// Reusable O(1)-membership scratch over vertex ids, version-stamped so that
/// clearing between scans is free.
class VertexMarks {
public:
    void resize(int n) {
        if ((int)stamp_.size() < n) stamp_.resize(n, 0);
    }
    void clear() { ++epoch_; }
    void set(int v) { stamp_[v] = epoch_; }
    bool test(int v) const { return stamp_[v] == epoch_; }

private:
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 1;
};

/// One connected component of G[N(anchor)], vertices ascending.
/// local_degree[i] = degree of vertices[i] inside the component.
struct NeighborhoodComponent {
    int anchor = -1;
    std::vector<int> vertices;
    std::vector<int> local_degree;
};

/// Connected components of G[N(v)], ascending by minimum vertex.
std::vector<NeighborhoodComponent> neighborhood_components(const Graph& g, int v);

/// Position pair {i, j}, 1-based, i < j.
using PositionPair = std::pair<int, int>;

/// Edge set of G[seq] expressed over positions 1..|seq|. Throws on duplicate
/// or out-of-range vertices.
std::vector<PositionPair> induced_ordered(const Graph& g, std::span<const int> seq);

/// nullopt when diamond-free; otherwise [tip, nontip, nontip, tip] with the
/// missing edge between positions 1 and 4. Uses the edge-common-neighborhood
/// criterion: G is diamond-free iff every edge's common neighborhood is a clique.
std::optional<std::array<int, 4>> find_diamond(const Graph& g);

inline bool is_diamond_free(const Graph& g) { return !find_diamond(g).has_value(); }

}  // namespace probedf

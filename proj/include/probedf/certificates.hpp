#pragma once

#include "probedf/graph.hpp"

namespace probedf {

/// Canonical ordered edge set of one forbidden subgraph, over positions 1..order.
struct ObstructionTemplate {
    int indicator;
    const char* name;
    int order;
    std::vector<PositionPair> edges;  // sorted, i < j
};

/// Indicators 1..17: gem, W4, P3+2K1-complement, S1, S4, S2, T1..T10, S3.
const std::vector<ObstructionTemplate>& obstruction_templates();
const ObstructionTemplate& obstruction_template(int indicator);  // throws std::out_of_range

/// Graph on vertices 0..order-1 realizing the template (position p -> p-1).
Graph template_graph(int indicator);

/// True iff the sequence has the template's length, contains distinct valid
/// vertices, and induces exactly the template's edge set position for
/// position (order-sensitive).
bool verify_negative(const Graph& g, int indicator, std::span<const int> vertices);

/// True iff probes and nonprobes partition V, nonprobes are independent,
/// completion pairs are distinct non-edges inside the nonprobe set, and the
/// graph plus the completion has no induced diamond.
bool verify_positive(const Graph& g, std::span<const int> probes, std::span<const int> nonprobes,
                     std::span<const Edge> completion);

}  // namespace probedf

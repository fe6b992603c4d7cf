#pragma once

namespace probedf {

/// Operation counters used to validate the O(nm) budget empirically.
struct Instrumentation {
    long long neighborhood_scans = 0;  // adjacency entries touched while decomposing neighborhoods
    long long aux_edges_touched = 0;   // bipartite-graph edge traversals
    long long bfs_dequeues = 0;        // queue pops across all cycle-search BFS runs

    long long total() const { return neighborhood_scans + aux_edges_touched + bfs_dequeues; }
};

}  // namespace probedf

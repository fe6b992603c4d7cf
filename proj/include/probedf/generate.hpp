#pragma once

#include <cstdint>

#include "probedf/graph.hpp"

namespace probedf {

/// Uniform random graph: each pair independently with probability p.
Graph gnp(int n, double p, std::uint64_t seed);

/// Guaranteed member: build a diamond-free graph (delete a random edge of
/// every surviving diamond), pick a random vertex subset, and delete the
/// edges inside it — restoring them is a valid completion.
Graph planted_yes(int n, double p, std::uint64_t seed);

/// Guaranteed non-member: a planted_yes instance with one forbidden-subgraph
/// template spliced over k random vertices (their other incident edges
/// cleared, so the copy is induced). indicator 0 picks one at random.
Graph planted_no(int n, double p, std::uint64_t seed, int indicator = 0);

}  // namespace probedf

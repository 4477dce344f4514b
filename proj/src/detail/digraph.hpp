#pragma once

// Small dense-digraph helpers: Tarjan SCCs and cycle detection.

#include <cstddef>
#include <vector>

namespace clusterau::detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Strongly connected components in reverse topological order of the
/// condensation (sinks first), as produced by Tarjan's algorithm.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph);

bool has_directed_cycle(const Adjacency& graph);

}  // namespace clusterau::detail

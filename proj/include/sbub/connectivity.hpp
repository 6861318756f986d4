#pragma once

#include <cstdint>
#include <vector>

#include "sbub/digraph.hpp"

namespace sbub {

/// Assignment of every vertex to one of `count()` components, ids dense.
struct ComponentPartition {
  std::vector<std::uint32_t> component;  // per vertex
  std::vector<std::uint32_t> sizes;      // per component

  std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(sizes.size()); }
};

/// Components of the underlying undirected graph. Component ids follow the
/// smallest vertex id they contain.
ComponentPartition weakly_connected_components(const Digraph& g);

/// Strongly connected components (iterative Tarjan). Component ids are
/// assigned in completion order, i.e. a reverse topological order of the
/// condensation: every arc u->v between components has
/// component[u] > component[v].
ComponentPartition strongly_connected_components(const Digraph& g);

/// Number of components with at least two vertices.
std::uint32_t nontrivial_scc_count(const ComponentPartition& p);

}  // namespace sbub

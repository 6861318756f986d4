#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbub/digraph.hpp"

namespace sbub {

/// Entrance/exit pair together with the size of the induced subgraph it spans.
struct Superbubble {
  VertexId entrance = 0;
  VertexId exit = 0;
  std::uint64_t vertex_count = 0;  // |V(S)|, entrance and exit included
  std::uint64_t edge_count = 0;    // arcs of the induced subgraph

  bool trivial() const noexcept { return vertex_count == 2; }
  friend bool operator==(const Superbubble&, const Superbubble&) = default;
};

/// Marker attached to a vertex of the postorder sequence. An exit opens a
/// superbubble, its entrance closes it.
enum class Marker : std::uint8_t { none, open, close, both };

/// DFS postorder with superbubble markers. Vertices that had to be split into
/// an in-copy and an out-copy appear twice.
struct ParenSequence {
  std::vector<VertexId> order;
  std::vector<Marker> markers;

  std::size_t size() const noexcept { return order.size(); }

  /// Space separated tokens "v", "(v", "v)" or "(v)" using external labels.
  std::string to_string(const Digraph& g) const;
};

/// Position range [exit_pos, entrance_pos] of a superbubble in the sequence.
struct PostorderInterval {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
};

/// Result of `detect`: all superbubbles ordered by the position of their
/// exit, plus the annotated postorder they were read from.
struct Detection {
  std::vector<Superbubble> superbubbles;
  std::vector<PostorderInterval> intervals;  // parallel to superbubbles
  ParenSequence parens;
  // Position of each original vertex; the two differ for split vertices,
  // where in_position belongs to the copy holding the in-arcs.
  std::vector<std::uint32_t> in_position;
  std::vector<std::uint32_t> out_position;

  std::size_t size() const noexcept { return superbubbles.size(); }

  /// Interior vertices of superbubble k in postorder.
  std::vector<VertexId> interior(std::size_t k) const;
  /// Exit, interior vertices, entrance, in postorder.
  std::vector<VertexId> vertices(std::size_t k) const;
  /// Whether original vertex v belongs to superbubble k.
  bool contains(std::size_t k, VertexId v) const;
};

/// DFS start vertices of one weakly connected region.
struct RootRegion {
  std::vector<VertexId> roots;
  bool needs_split = false;  // no vertex of the region is known to be a safe root
};

struct RootSet {
  std::vector<RootRegion> regions;  // ordered by smallest vertex of the region
};

/// Picks DFS roots that can never be an exit or an interior vertex: vertices
/// without in-arcs other than a self-loop. Regions without such a vertex are
/// flagged for exit splitting.
RootSet select_roots(const Digraph& g);

/// Auxiliary graph with vertex t split in two: t keeps its in-arcs and the
/// new vertex n (labelled like t) takes over its out-arcs.
Digraph split_exit(const Digraph& g, VertexId t);

/// Splits every listed vertex the same way; the out-copy of split[k] is
/// vertex n + k.
Digraph split_vertices(const Digraph& g, std::span<const VertexId> split);

/// `scc` must be a strongly connected vertex set (sorted, size >= 2) that no
/// arc enters from outside. Returns a member that is not an interior vertex
/// of any superbubble, so splitting it yields a safe DFS root. Exits of
/// outermost superbubbles qualify; when no superbubble surrounds the
/// smallest member, that member is returned.
VertexId safe_split_vertex(const Digraph& g, std::span<const VertexId> scc);

/// Enumerates all superbubbles of g. One DFS covers the graph, rooted at the
/// sources and, for every strongly connected part without an entry, at the
/// out-copy of a vertex chosen by safe_split_vertex.
Detection detect(const Digraph& g);

}  // namespace sbub

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sbub/digraph.hpp"
#include "sbub/rng.hpp"

namespace sbub::testing {

inline Digraph graph(VertexId n, std::vector<Arc> arcs) { return Digraph::from_arcs(n, std::move(arcs)); }

// Arcs given with external labels; ids follow first appearance like the loader.
inline Digraph labelled(const std::vector<std::pair<Label, Label>>& arcs) {
  std::string text;
  for (auto [u, v] : arcs) text += std::to_string(u) + " " + std::to_string(v) + "\n";
  std::istringstream in(text);
  return load_edge_list(in);
}

inline Digraph random_digraph(SplitMix64& rng, VertexId n, double density, bool loops = false) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if ((u != v || loops) && rng.uniform() < density) arcs.emplace_back(u, v);
  return graph(n, std::move(arcs));
}

// Arcs only from lower to higher id under a random relabelling.
inline Digraph random_dag(SplitMix64& rng, VertexId n, double density) {
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v;
  for (VertexId v = n; v > 1; --v) std::swap(perm[v - 1], perm[rng.below(v)]);
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < density) arcs.emplace_back(perm[u], perm[v]);
  return graph(n, std::move(arcs));
}

inline Digraph random_symmetric(SplitMix64& rng, VertexId n, double density) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < density) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
      }
  return graph(n, std::move(arcs));
}

// Sparse graphs with long chains and nested diamonds are where superbubbles
// actually occur; dense random graphs rarely have any.
inline Digraph random_bubbly(SplitMix64& rng, VertexId n, double back_arcs) {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < n; ++v) {
    arcs.emplace_back(static_cast<VertexId>(rng.below(v)), v);
    if (rng.uniform() < 0.4) arcs.emplace_back(static_cast<VertexId>(rng.below(v)), v);
  }
  for (VertexId v = 0; v < n; ++v)
    if (rng.uniform() < back_arcs) arcs.emplace_back(v, static_cast<VertexId>(rng.below(n)));
  return graph(n, std::move(arcs));
}

// Bubbly DAG on 0..n-1 whose sinks feed back into 0: no sources, and most
// vertices sit on a cycle while many superbubbles survive.
inline Digraph bubble_ring(SplitMix64& rng, VertexId n, double chords) {
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> has_out(n, 0);
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(v - 1 - rng.below(std::min<VertexId>(v, 3)));
    arcs.emplace_back(u, v);
    has_out[u] = 1;
    if (rng.uniform() < 0.35) {
      const auto w = static_cast<VertexId>(rng.below(v));
      arcs.emplace_back(w, v);
      has_out[w] = 1;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!has_out[v]) arcs.emplace_back(v, 0);
    if (rng.uniform() < chords) arcs.emplace_back(v, static_cast<VertexId>(rng.below(n)));
  }
  // rotate ids so the smallest vertex is not always the natural root
  const auto shift = static_cast<VertexId>(rng.below(n));
  for (auto& [u, v] : arcs) {
    u = (u + shift) % n;
    v = (v + shift) % n;
  }
  return graph(n, std::move(arcs));
}

}  // namespace sbub::testing

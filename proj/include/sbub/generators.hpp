#pragma once

#include <cstdint>
#include <string>

#include "sbub/digraph.hpp"

namespace sbub {

enum class Family { er, ba, ws };

struct GeneratorSpec {
  Family family = Family::er;
  VertexId n = 0;
  double p = 0.0;      // er: arc probability
  std::uint32_t k = 2; // ws: out-arcs per vertex in the ring lattice
  double beta = 0.0;   // ws: rewiring probability
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// One-line description used in generated file headers.
  std::string describe() const;
};

/// Directed Erdos-Renyi: each ordered pair u != v is an arc with probability
/// p. Geometric skipping keeps the cost proportional to the arcs drawn.
Digraph gen_er(VertexId n, double p, std::uint64_t seed);

/// Preferential attachment: vertex v = 1..n-1 adds one arc to an older vertex
/// chosen with probability proportional to its total degree (the lone first
/// vertex counts as degree 1). The result is an in-tree with n - 1 arcs.
Digraph gen_ba(VertexId n, std::uint64_t seed);

/// Directed Watts-Strogatz: vertex i points to its k clockwise successors,
/// and each arc is rewired with probability beta to a uniformly chosen vertex
/// that is neither i nor already a successor of i.
Digraph gen_ws(VertexId n, std::uint32_t k, double beta, std::uint64_t seed);

Digraph generate(const GeneratorSpec& spec);

}  // namespace sbub

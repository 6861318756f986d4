#pragma once

#include <compare>
#include <optional>
#include <tuple>
#include <vector>

#include "sbub/digraph.hpp"
#include "sbub/superbubble.hpp"

namespace sbub {

/// Superbubble with its interior spelled out (sorted by vertex id).
struct ExplicitSuperbubble {
  Superbubble bubble;
  std::vector<VertexId> interior;

  friend bool operator==(const ExplicitSuperbubble&, const ExplicitSuperbubble&) = default;
  friend auto operator<=>(const ExplicitSuperbubble& a, const ExplicitSuperbubble& b) {
    return std::tie(a.bubble.entrance, a.bubble.exit, a.interior) <=>
           std::tie(b.bubble.entrance, b.bubble.exit, b.interior);
  }
};

/// Checks the superbubble conditions for the pair (s, t) directly: the set of
/// vertices reachable from s without passing through t must equal the set of
/// vertices reaching t without passing through s, the induced subgraph must be
/// acyclic, and no interior vertex may serve as an alternative exit for s or
/// an alternative entrance for t.
std::optional<ExplicitSuperbubble> is_superbubble_candidate(const Digraph& g, VertexId s, VertexId t);

inline constexpr VertexId kDefaultOracleLimit = 2000;

/// Tests every ordered pair; O(n^2 (n + m)). Throws std::length_error when the
/// graph has more than `limit` vertices. Result sorted by (entrance, exit).
std::vector<ExplicitSuperbubble> enumerate_brute(const Digraph& g, VertexId limit = kDefaultOracleLimit);

/// Materializes the output of `detect` in the same shape, for comparison.
std::vector<ExplicitSuperbubble> materialize(const Detection& d);

}  // namespace sbub

#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbub/digraph.hpp"
#include "sbub/hierarchy.hpp"
#include "sbub/superbubble.hpp"

namespace sbub {

using BigCount = boost::multiprecision::cpp_int;

/// Number of distinct entrance-to-exit paths and the length (in arcs) of the
/// longest one.
struct PathStats {
  BigCount path_count = 0;
  std::uint64_t longest = 0;
};

/// Dynamic program over the postorder interval of superbubble k. The exit
/// starts with one path of length zero; every other vertex sums the counts of
/// its successors and extends their longest path by one arc.
PathStats count_paths_longest(const Digraph& g, const Detection& d, std::size_t k);

/// Same quantities for every superbubble in one linear pass. Nested
/// superbubbles are evaluated first and then collapsed into a single step of
/// their parent, so each vertex is visited once per level it is directly in.
std::vector<PathStats> all_path_stats(const Digraph& g, const Detection& d, const HierarchyForest& f);

/// 2|E(S)| / (|V(S)| (|V(S)| - 1)).
double density(const Superbubble& sb);

/// The fourteen superbubble descriptors of one graph.
struct SuperbubbleReport {
  std::uint64_t S = 0;    // superbubbles
  double VS = 0;          // vertices covered by some superbubble, / N
  double ES = 0;          // arcs inside some superbubble, / N
  std::uint64_t MS = 0;   // trivial superbubbles
  std::uint64_t mVS = 0;  // most vertices in one superbubble
  std::uint64_t mES = 0;  // most arcs in one superbubble
  std::uint64_t C = 0;    // hierarchies
  std::uint64_t CS = 0;   // most superbubbles in one hierarchy
  std::uint64_t depth = 0;
  BigCount P = 0;          // most paths in one superbubble
  std::uint64_t PL = 0;    // longest path in any superbubble
  double aP = 0;           // means over non-trivial superbubbles
  double aPL = 0;
  double SD = 0;
};

SuperbubbleReport superbubble_report(const Digraph& g, const Detection& d, const HierarchyForest& f);

/// Convenience: detection, forest and report in one call.
SuperbubbleReport superbubble_report(const Digraph& g);

/// Converts to double; +inf when the value exceeds the double range.
double to_double(const BigCount& value);

}  // namespace sbub

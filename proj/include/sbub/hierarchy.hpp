#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sbub/superbubble.hpp"

namespace sbub {

class UnbalancedSequence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nesting forest of superbubbles. Node k is the k-th matched parenthesis
/// pair in order of its opening (exit) position, which is also the k-th
/// superbubble of the Detection the sequence came from.
struct HierarchyForest {
  static constexpr std::uint32_t kNoParent = UINT32_MAX;

  struct Node {
    std::uint32_t parent = kNoParent;
    std::uint32_t exit_position = 0;
    std::uint32_t entrance_position = 0;
    std::uint32_t depth = 1;  // roots have depth 1
    std::vector<std::uint32_t> children;
  };

  std::vector<Node> nodes;
  std::vector<std::uint32_t> roots;
  std::vector<std::uint32_t> tree_of;  // root index per node

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Single left-to-right pass: an exit pushes a new node (child of the current
/// top), an entrance pops. A "both" marker pops before it pushes, so chained
/// superbubbles become siblings.
HierarchyForest build_forest(const ParenSequence& ps);

struct ComplexStats {
  std::uint64_t complexes = 0;       // C: number of trees
  std::uint64_t largest = 0;         // CS: most nodes in one tree
  std::uint64_t depth = 0;           // deepest node, 1 for a lone superbubble
};

ComplexStats complex_stats(const HierarchyForest& f);

}  // namespace sbub

#include "sbub/hierarchy.hpp"

#include <algorithm>
#include <string>

namespace sbub {

HierarchyForest build_forest(const ParenSequence& ps) {
  if (ps.markers.size() != ps.order.size()) throw std::invalid_argument("marker count does not match sequence");
  HierarchyForest f;
  std::vector<std::uint32_t> stack;
  for (std::size_t p = 0; p < ps.markers.size(); ++p) {
    const Marker m = ps.markers[p];
    if (m == Marker::close || m == Marker::both) {
      if (stack.empty()) throw UnbalancedSequence("entrance without open superbubble at position " + std::to_string(p));
      f.nodes[stack.back()].entrance_position = static_cast<std::uint32_t>(p);
      stack.pop_back();
    }
    if (m == Marker::open || m == Marker::both) {
      const auto id = static_cast<std::uint32_t>(f.nodes.size());
      HierarchyForest::Node node;
      node.exit_position = static_cast<std::uint32_t>(p);
      if (stack.empty()) {
        f.roots.push_back(id);
        f.tree_of.push_back(id);
      } else {
        const auto parent = stack.back();
        node.parent = parent;
        node.depth = f.nodes[parent].depth + 1;
        f.nodes[parent].children.push_back(id);
        f.tree_of.push_back(f.tree_of[parent]);
      }
      f.nodes.push_back(std::move(node));
      stack.push_back(id);
    }
  }
  if (!stack.empty()) throw UnbalancedSequence(std::to_string(stack.size()) + " superbubble(s) never closed");
  return f;
}

ComplexStats complex_stats(const HierarchyForest& f) {
  ComplexStats st;
  st.complexes = f.roots.size();
  std::vector<std::uint64_t> tree_size(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto count = ++tree_size[f.tree_of[k]];
    st.largest = std::max(st.largest, count);
    st.depth = std::max<std::uint64_t>(st.depth, f.nodes[k].depth);
  }
  return st;
}

}  // namespace sbub

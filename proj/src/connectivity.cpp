#include "sbub/connectivity.hpp"

#include <algorithm>
#include <limits>

namespace sbub {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

ComponentPartition weakly_connected_components(const Digraph& g) {
  const VertexId n = g.num_vertices();
  ComponentPartition p;
  p.component.assign(n, kUnset);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (p.component[root] != kUnset) continue;
    const auto id = p.count();
    std::uint32_t size = 0;
    p.component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (auto neighbors : {g.out_neighbors(v), g.in_neighbors(v)})
        for (VertexId w : neighbors)
          if (p.component[w] == kUnset) {
            p.component[w] = id;
            stack.push_back(w);
          }
    }
    p.sizes.push_back(size);
  }
  return p;
}

ComponentPartition strongly_connected_components(const Digraph& g) {
  const VertexId n = g.num_vertices();
  ComponentPartition p;
  p.component.assign(n, kUnset);

  std::vector<std::uint32_t> index(n, kUnset);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<VertexId> tarjan_stack;

  struct Frame {
    VertexId v;
    std::uint32_t next;  // position in out_neighbors(v)
  };
  std::vector<Frame> calls;
  std::uint32_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    index[root] = low[root] = counter++;
    tarjan_stack.push_back(root);
    calls.push_back({root, 0});

    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto succ = g.out_neighbors(f.v);
      if (f.next < succ.size()) {
        const VertexId w = succ[f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          tarjan_stack.push_back(w);
          calls.push_back({w, 0});
        } else if (p.component[w] == kUnset) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }

      const VertexId v = f.v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      if (low[v] != index[v]) continue;

      const auto id = p.count();
      std::uint32_t size = 0;
      VertexId w;
      do {
        w = tarjan_stack.back();
        tarjan_stack.pop_back();
        p.component[w] = id;
        ++size;
      } while (w != v);
      p.sizes.push_back(size);
    }
  }
  return p;
}

std::uint32_t nontrivial_scc_count(const ComponentPartition& p) {
  return static_cast<std::uint32_t>(std::count_if(p.sizes.begin(), p.sizes.end(), [](auto s) { return s >= 2; }));
}

}  // namespace sbub

#include <doctest.h>

#include <set>

#include "sbub/connectivity.hpp"
#include "support.hpp"

using namespace sbub;
using sbub::testing::graph;

namespace {

// Mutual reachability by repeated search; quadratic but independent.
std::vector<std::vector<bool>> reach(const Digraph& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> todo{s};
    r[s][s] = true;
    while (!todo.empty()) {
      const auto v = todo.back();
      todo.pop_back();
      for (VertexId w : g.out_neighbors(v))
        if (!r[s][w]) {
          r[s][w] = true;
          todo.push_back(w);
        }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("components of a small graph") {
  // 0 <-> 1 -> 2, 3 -> 4 -> 3, isolated 5
  const auto g = graph(6, {{0, 1}, {1, 0}, {1, 2}, {3, 4}, {4, 3}});
  const auto w = weakly_connected_components(g);
  CHECK(w.count() == 3);
  CHECK(w.component[0] == w.component[2]);
  CHECK(w.component[3] != w.component[0]);
  const auto s = strongly_connected_components(g);
  CHECK(s.count() == 4);
  CHECK(nontrivial_scc_count(s) == 2);
}

TEST_CASE("self-loop alone is not a non-trivial component") {
  const auto s = strongly_connected_components(graph(2, {{0, 0}, {0, 1}}));
  CHECK(s.count() == 2);
  CHECK(nontrivial_scc_count(s) == 0);
}

TEST_CASE("long path and long cycle do not overflow the stack") {
  const VertexId n = 200000;
  std::vector<Arc> arcs;
  for (VertexId v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
  CHECK(strongly_connected_components(graph(n, arcs)).count() == n);
  arcs.emplace_back(n - 1, 0);
  const auto s = strongly_connected_components(graph(n, arcs));
  CHECK(s.count() == 1);
  CHECK(weakly_connected_components(graph(n, arcs)).count() == 1);
}

TEST_CASE("property: SCCs agree with mutual reachability") {
  SplitMix64 rng(21);
  for (int round = 0; round < 150; ++round) {
    const auto g = testing::random_digraph(rng, static_cast<VertexId>(1 + rng.below(25)), 0.02 + 0.2 * rng.uniform());
    const auto s = strongly_connected_components(g);
    const auto r = reach(g);
    std::vector<std::uint32_t> sizes(s.count(), 0);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      ++sizes[s.component[u]];
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        CHECK((s.component[u] == s.component[v]) == (r[u][v] && r[v][u]));
    }
    CHECK(sizes == s.sizes);
    // an undirected view has the same weak components as its closure's SCCs
    const auto w = weakly_connected_components(g);
    CHECK(w.count() == strongly_connected_components(symmetric_closure(g)).count());
  }
}

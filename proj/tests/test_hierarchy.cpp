#include <doctest.h>

#include <algorithm>

#include "sbub/hierarchy.hpp"
#include "sbub/oracle.hpp"
#include "sbub/superbubble.hpp"
#include "support.hpp"

using namespace sbub;

namespace {

// Nested example: <1,10> holds <2,9>, which holds the chained pair <3,6>,
// <6,8>; <12,15> sits beside <2,9> inside <1,10>.
Digraph nested_example() {
  return testing::labelled({{1, 2},  {1, 12}, {12, 13}, {12, 14}, {13, 15}, {14, 15}, {15, 10},
                            {9, 10}, {2, 3},  {2, 11},  {11, 9},  {8, 9},   {3, 4},   {3, 5},
                            {4, 6},  {5, 6},  {6, 7},   {6, 8},   {7, 8}});
}

std::size_t find(const Detection& d, const Digraph& g, Label s, Label t) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (g.label(d.superbubbles[k].entrance) == s && g.label(d.superbubbles[k].exit) == t) return k;
  return d.size();
}

// Parent by explicit vertex-set inclusion: the smallest strictly larger
// superbubble containing all vertices.
std::vector<std::size_t> parents_by_inclusion(const Detection& d) {
  std::vector<std::vector<VertexId>> sets;
  for (std::size_t k = 0; k < d.size(); ++k) {
    auto v = d.vertices(k);
    std::sort(v.begin(), v.end());
    sets.push_back(v);
  }
  std::vector<std::size_t> parent(d.size(), HierarchyForest::kNoParent);
  for (std::size_t a = 0; a < d.size(); ++a) {
    std::size_t best = HierarchyForest::kNoParent;
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (a == b || sets[b].size() <= sets[a].size()) continue;
      if (!std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end())) continue;
      if (best == HierarchyForest::kNoParent || sets[b].size() < sets[best].size()) best = b;
    }
    parent[a] = best;
  }
  return parent;
}

}  // namespace

TEST_CASE("nested example forms one tree of depth three") {
  const auto g = nested_example();
  const auto d = detect(g);
  REQUIRE(materialize(d) == enumerate_brute(g));
  CHECK(d.size() == 5);

  const auto f = build_forest(d.parens);
  REQUIRE(f.size() == 5);
  CHECK(f.roots.size() == 1);
  const auto outer = find(d, g, 1, 10), middle = find(d, g, 2, 9);
  const auto left = find(d, g, 3, 6), right = find(d, g, 6, 8), side = find(d, g, 12, 15);
  REQUIRE(outer < d.size());
  CHECK(f.nodes[outer].parent == HierarchyForest::kNoParent);
  CHECK(f.nodes[middle].parent == outer);
  CHECK(f.nodes[side].parent == outer);
  CHECK(f.nodes[left].parent == middle);
  CHECK(f.nodes[right].parent == middle);
  CHECK(f.nodes[left].depth == 3);

  const auto cs = complex_stats(f);
  CHECK(cs.complexes == 1);
  CHECK(cs.largest == 5);
  CHECK(cs.depth == 3);

  const auto text = d.parens.to_string(g);
  CHECK(text.find("(6)") != std::string::npos);
  CHECK(text.find("1)") != std::string::npos);
}

TEST_CASE("chained superbubbles are siblings") {
  const auto g = testing::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto f = build_forest(detect(g).parens);
  CHECK(f.roots.size() == 3);
  const auto cs = complex_stats(f);
  CHECK(cs.complexes == 3);
  CHECK(cs.largest == 1);
  CHECK(cs.depth == 1);
}

TEST_CASE("empty forest") {
  const auto f = build_forest(ParenSequence{});
  CHECK(f.size() == 0);
  const auto cs = complex_stats(f);
  CHECK(cs.complexes == 0);
  CHECK(cs.depth == 0);
}

TEST_CASE("unbalanced markers are rejected") {
  ParenSequence ps;
  ps.order = {0, 1};
  ps.markers = {Marker::open, Marker::none};
  CHECK_THROWS_AS(build_forest(ps), UnbalancedSequence);
  ps.markers = {Marker::close, Marker::open};
  CHECK_THROWS_AS(build_forest(ps), UnbalancedSequence);
}

TEST_CASE("property: forest parents equal smallest enclosing superbubble") {
  SplitMix64 rng(4);
  for (int round = 0; round < 300; ++round) {
    const auto g = round % 2 ? testing::random_bubbly(rng, 40, 0.03) : testing::bubble_ring(rng, 30, 0.02);
    const auto d = detect(g);
    const auto f = build_forest(d.parens);
    const auto expected = parents_by_inclusion(d);
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(f.nodes[k].parent == expected[k]);
    std::uint64_t roots = 0;
    for (const auto& node : f.nodes) roots += node.parent == HierarchyForest::kNoParent;
    CHECK(roots == f.roots.size());
  }
}

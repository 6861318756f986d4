#include "sbub/oracle.hpp"

#include <algorithm>
#include <string>

namespace sbub {

namespace {

// Vertices reachable from `from` along `next` without expanding `blocked`.
template <class Next>
std::vector<std::uint8_t> reach(const Digraph& g, VertexId from, VertexId blocked, Next next) {
  std::vector<std::uint8_t> mark(g.num_vertices(), 0);
  std::vector<VertexId> stack{from};
  mark[from] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == blocked) continue;
    for (VertexId w : next(v))
      if (!mark[w]) {
        mark[w] = 1;
        stack.push_back(w);
      }
  }
  return mark;
}

bool induced_acyclic(const Digraph& g, const std::vector<std::uint8_t>& member) {
  const VertexId n = g.num_vertices();
  std::vector<std::uint32_t> indeg(n, 0);
  std::size_t members = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!member[v]) continue;
    ++members;
    for (VertexId w : g.out_neighbors(v))
      if (member[w]) ++indeg[w];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if (member[v] && indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : g.out_neighbors(v))
      if (member[w] && --indeg[w] == 0) ready.push_back(w);
  }
  return removed == members;
}

// Conditions (i)-(iii) plus acyclicity, without minimality. Returns the
// membership mask on success.
std::optional<std::vector<std::uint8_t>> enclosed(const Digraph& g, VertexId s, VertexId t) {
  if (s == t) return std::nullopt;
  auto forward = reach(g, s, t, [&](VertexId v) { return g.out_neighbors(v); });
  if (!forward[t]) return std::nullopt;
  auto backward = reach(g, t, s, [&](VertexId v) { return g.in_neighbors(v); });
  if (forward != backward) return std::nullopt;
  if (!induced_acyclic(g, forward)) return std::nullopt;
  return forward;
}

}  // namespace

std::optional<ExplicitSuperbubble> is_superbubble_candidate(const Digraph& g, VertexId s, VertexId t) {
  if (s >= g.num_vertices() || t >= g.num_vertices()) throw std::out_of_range("vertex out of range");
  auto member = enclosed(g, s, t);
  if (!member) return std::nullopt;

  ExplicitSuperbubble out;
  out.bubble.entrance = s;
  out.bubble.exit = t;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!(*member)[v]) continue;
    ++out.bubble.vertex_count;
    for (VertexId w : g.out_neighbors(v))
      if ((*member)[w]) ++out.bubble.edge_count;
    if (v != s && v != t) out.interior.push_back(v);
  }
  for (VertexId v : out.interior)
    if (enclosed(g, s, v) || enclosed(g, v, t)) return std::nullopt;
  return out;
}

std::vector<ExplicitSuperbubble> enumerate_brute(const Digraph& g, VertexId limit) {
  const VertexId n = g.num_vertices();
  if (n > limit)
    throw std::length_error("oracle limit exceeded: " + std::to_string(n) + " > " + std::to_string(limit) +
                            " vertices");
  std::vector<ExplicitSuperbubble> out;
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = 0; t < n; ++t)
      if (s != t)
        if (auto sb = is_superbubble_candidate(g, s, t)) out.push_back(std::move(*sb));
  return out;
}

std::vector<ExplicitSuperbubble> materialize(const Detection& d) {
  std::vector<ExplicitSuperbubble> out;
  out.reserve(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    ExplicitSuperbubble e{d.superbubbles[k], d.interior(k)};
    std::sort(e.interior.begin(), e.interior.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sbub

#include "sbub/superbubble.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "sbub/connectivity.hpp"
#include "sbub/rng.hpp"

namespace sbub {

std::string ParenSequence::to_string(const Digraph& g) const {
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += ' ';
    const Marker m = markers[k];
    if (m == Marker::open || m == Marker::both) out += '(';
    out += std::to_string(g.label(order[k]));
    if (m == Marker::close || m == Marker::both) out += ')';
  }
  return out;
}

std::vector<VertexId> Detection::interior(std::size_t k) const {
  const auto& iv = intervals.at(k);
  return {parens.order.begin() + iv.first + 1, parens.order.begin() + iv.last};
}

std::vector<VertexId> Detection::vertices(std::size_t k) const {
  const auto& iv = intervals.at(k);
  return {parens.order.begin() + iv.first, parens.order.begin() + iv.last + 1};
}

bool Detection::contains(std::size_t k, VertexId v) const {
  const auto& sb = superbubbles.at(k);
  if (v == sb.entrance || v == sb.exit) return true;
  const auto& iv = intervals[k];
  const auto p = in_position.at(v);
  return p == out_position[v] && iv.first < p && p < iv.last;
}

RootSet select_roots(const Digraph& g) {
  const auto wcc = weakly_connected_components(g);
  RootSet rs;
  rs.regions.resize(wcc.count());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto in = g.in_neighbors(v);
    const bool source = in.empty() || (in.size() == 1 && in[0] == v);
    if (source) rs.regions[wcc.component[v]].roots.push_back(v);
  }
  for (auto& r : rs.regions) r.needs_split = r.roots.empty();
  return rs;
}

Digraph split_vertices(const Digraph& g, std::span<const VertexId> split) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> out_copy(n);
  for (VertexId v = 0; v < n; ++v) out_copy[v] = v;
  for (std::size_t k = 0; k < split.size(); ++k) {
    if (split[k] >= n) throw std::out_of_range("split vertex out of range");
    out_copy[split[k]] = static_cast<VertexId>(n + k);
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.num_arcs());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) arcs.emplace_back(out_copy[u], v);
  std::vector<Label> labels;
  labels.reserve(n + split.size());
  for (VertexId v = 0; v < n; ++v) labels.push_back(g.label(v));
  for (VertexId v : split) labels.push_back(g.label(v));
  return Digraph::from_arcs(static_cast<VertexId>(n + split.size()), std::move(arcs), std::move(labels),
                            g.raw_arc_count());
}

Digraph split_exit(const Digraph& g, VertexId t) {
  const VertexId one[] = {t};
  return split_vertices(g, one);
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// g with the listed vertices cut in two: the in-copy keeps the vertex id and
// its in-arcs, the out-copy (id n + k) takes the out-arcs. Adjacency is
// served from g.
class SplitView {
 public:
  SplitView(const Digraph& g, std::vector<VertexId> split) : g_(g), n_(g.num_vertices()), split_(std::move(split)) {
    out_copy_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) out_copy_[v] = v;
    for (std::size_t k = 0; k < split_.size(); ++k) out_copy_[split_[k]] = static_cast<VertexId>(n_ + k);
  }

  std::size_t size() const noexcept { return std::size_t{n_} + split_.size(); }
  VertexId original(std::size_t x) const noexcept { return x < n_ ? static_cast<VertexId>(x) : split_[x - n_]; }
  VertexId out_copy(VertexId v) const noexcept { return out_copy_[v]; }

  // Children are in-copies, i.e. original ids.
  std::span<const VertexId> children(std::size_t x) const {
    if (split_.empty()) return g_.out_neighbors(static_cast<VertexId>(x));
    if (x >= n_) return g_.out_neighbors(split_[x - n_]);
    const auto v = static_cast<VertexId>(x);
    if (out_copy_[v] != v) return {};
    return g_.out_neighbors(v);
  }
  // Parents as original ids; map them through out_copy().
  std::span<const VertexId> parents(std::size_t x) const {
    if (x >= n_) return {};
    return g_.in_neighbors(static_cast<VertexId>(x));
  }

 private:
  const Digraph& g_;
  VertexId n_;
  std::vector<VertexId> split_;
  std::vector<VertexId> out_copy_;
};

// Iterative DFS over a split view. Everything the interval scan needs about a
// vertex's neighbourhood is gathered when the vertex finishes, while its
// adjacency is still hot: the smallest child position, the largest parent
// position (scattered to the children) and the arc count.
class Traversal {
 public:
  static constexpr std::uint32_t kOpen = kNone - 1;  // on the DFS stack
  static constexpr std::uint32_t kBlocked = kNone;   // has an upward in-arc

  explicit Traversal(std::size_t size) { grow(size); }

  void grow(std::size_t size) { slots_.resize(size); }

  void visit(const SplitView& view, std::uint32_t root) {
    if (slots_[root].pos != kNone) return;
    slots_[root].pos = kOpen;
    enter(view, root);
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const auto succ = view.children(f.x);
      if (f.next < succ.size()) {
        const VertexId y = succ[f.next++];
        if (slots_[y].pos == kNone) {
          slots_[y].pos = kOpen;
          enter(view, y);
        }
        continue;
      }
      finish(f.x, succ);
      stack_.pop_back();
    }
  }

  bool visited(std::size_t x) const { return slots_[x].pos != kNone; }
  std::size_t finished() const { return order_.size(); }

  // Both fields are touched together for every arc, so they share a slot.
  struct Slot {
    std::uint32_t pos = kNone;
    // 0: no parent yet, kBlocked: some parent does not come later in the
    // order, otherwise 1 + the largest parent position
    std::uint32_t top_parent = 0;
  };
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> low_child_;  // kNone: no child, or an upward arc
  std::vector<std::uint64_t> arcs_before_{0};

 private:
  struct Frame {
    std::uint32_t x;
    std::uint32_t next;
  };

  // On large graphs the traversal is bound by cache misses on the children's
  // slots; requesting them all up front lets those misses overlap.
  void enter(const SplitView& view, std::uint32_t x) {
    for (VertexId y : view.children(x)) __builtin_prefetch(&slots_[y]);
    stack_.push_back({x, 0});
  }

  void finish(std::uint32_t x, std::span<const VertexId> succ) {
    // the subtree explored since enter() has usually evicted these again
    for (VertexId y : succ) __builtin_prefetch(&slots_[y]);
    const auto k = static_cast<std::uint32_t>(order_.size());
    std::uint32_t low = succ.empty() ? kNone : k;
    for (VertexId y : succ) {
      auto& [pos, top] = slots_[y];
      if (pos == kOpen) {  // back edge or self-loop
        low = kNone;
        top = kBlocked;
      } else {
        if (low != kNone) low = std::min(low, pos);
        if (top != kBlocked) top = std::max(top, k + 1);
      }
    }
    slots_[x].pos = k;
    order_.push_back(x);
    low_child_.push_back(low);
    arcs_before_.push_back(arcs_before_.back() + succ.size());
  }

  std::vector<Frame> stack_;
};

// Interval scan over a postorder in which every superbubble occupies
// [pos(exit), pos(entrance)]. Arcs pointing upwards in the order (back edges
// and self-loops) disqualify their tail from being an entrance or interior
// vertex and their head from being an exit or interior vertex.
Detection scan(const Digraph& g, const SplitView& view, const Traversal& t) {
  const std::size_t size = view.size();
  if (t.finished() != size) throw std::logic_error("DFS did not reach every vertex");
  const auto length = static_cast<std::uint32_t>(size);
  const auto& order = t.order_;

  // entrance_for[i]: nearest j > i such that every position in [i, j) has all
  // its parents in (position, j]; length when there is none.
  std::vector<std::uint32_t> entrance_for(size);
  {
    struct Block {
      std::uint32_t start, reach;
    };
    std::vector<Block> blocks;
    constexpr std::uint32_t kAhead = 16;
    for (auto i = length; i-- > 0;) {
      if (i >= kAhead) __builtin_prefetch(&t.slots_[order[i - kAhead]]);
      const auto top = t.slots_[order[i]].top_parent;
      std::uint32_t reach = top == 0 || top == Traversal::kBlocked ? length : top - 1;
      while (!blocks.empty() && blocks.back().start < reach) {
        reach = std::max(reach, blocks.back().reach);
        blocks.pop_back();
      }
      blocks.push_back({i, reach});
      entrance_for[i] = reach;
    }
  }
  // exit_for[j]: nearest i < j such that every position in (i, j] has all its
  // children in [i, position); kNone when there is none.
  std::vector<std::uint32_t> exit_for(size);
  {
    struct Block {
      std::uint32_t end, low;  // low + 1, so that 0 stands for "none"
    };
    std::vector<Block> blocks;
    for (std::uint32_t j = 0; j < length; ++j) {
      std::uint32_t low = t.low_child_[j] + 1;  // kNone wraps to 0
      while (!blocks.empty() && blocks.back().end > low) {
        low = std::min(low, blocks.back().low);
        blocks.pop_back();
      }
      blocks.push_back({j + 1, low});
      exit_for[j] = low - 1;
    }
  }

  Detection d;
  d.parens.order.resize(size);
  d.parens.markers.assign(size, Marker::none);
  for (std::size_t k = 0; k < size; ++k) d.parens.order[k] = view.original(order[k]);

  for (std::uint32_t i = 0; i < length; ++i) {
    const std::uint32_t j = entrance_for[i];
    if (j >= length || exit_for[j] != i) continue;
    const VertexId tv = view.original(order[i]);
    const VertexId s = view.original(order[j]);
    // split copies hide the arcs that would close a cycle through both ends
    if (s == tv || g.has_self_loop(s) || g.has_self_loop(tv) || g.has_arc(tv, s)) continue;

    Superbubble sb;
    sb.entrance = s;
    sb.exit = tv;
    sb.vertex_count = j - i + 1;
    sb.edge_count = t.arcs_before_[j + 1] - t.arcs_before_[i + 1];
    d.superbubbles.push_back(sb);
    d.intervals.push_back({i, j});

    auto& open = d.parens.markers[i];
    open = open == Marker::close ? Marker::both : Marker::open;
    auto& close = d.parens.markers[j];
    close = close == Marker::open ? Marker::both : Marker::close;
  }

  d.in_position.resize(g.num_vertices());
  d.out_position.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    d.in_position[v] = t.slots_[v].pos;
    d.out_position[v] = t.slots_[view.out_copy(v)].pos;
  }
  return d;
}

// Immediate dominators from `root` (Cooper, Harvey and Kennedy's iteration
// over reverse postorder). Unreachable vertices keep kNone.
std::vector<VertexId> dominators(const Digraph& h, VertexId root, std::vector<VertexId>& rpo) {
  const VertexId n = h.num_vertices();
  std::vector<std::uint32_t> po(n, kNone);
  rpo.clear();
  {
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::pair<VertexId, std::uint32_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto succ = h.out_neighbors(v);
      if (next < succ.size()) {
        const VertexId w = succ[next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
        continue;
      }
      po[v] = static_cast<std::uint32_t>(rpo.size());
      rpo.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(rpo.begin(), rpo.end());

  std::vector<VertexId> idom(n, kNone);
  idom[root] = root;
  auto intersect = [&](VertexId a, VertexId b) {
    while (a != b) {
      while (po[a] < po[b]) a = idom[a];
      while (po[b] < po[a]) b = idom[b];
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 1; k < rpo.size(); ++k) {
      const VertexId v = rpo[k];
      VertexId best = kNone;
      for (VertexId p : h.in_neighbors(v)) {
        if (idom[p] == kNone) continue;
        best = best == kNone ? p : intersect(p, best);
      }
      if (best != idom[v]) {
        idom[v] = best;
        changed = true;
      }
    }
  }
  return idom;
}

}  // namespace

VertexId safe_split_vertex(const Digraph& g, std::span<const VertexId> scc) {
  if (scc.size() < 2) throw std::invalid_argument("strongly connected set needs two vertices");
  // A vertex on a self-loop or a 2-cycle can never be interior.
  for (VertexId v : scc)
    for (VertexId w : g.out_neighbors(v))
      if (w == v || g.has_arc(w, v)) return v;

  // Local graph h: members 0..c-1 (the in-copy of r keeps its index), the
  // out-copy of r as c, and one sink c+1 standing for everything outside.
  const VertexId r = scc.front();
  const auto c = static_cast<VertexId>(scc.size());
  const VertexId r_in = 0, r_out = c, outside = c + 1;
  auto local = [&](VertexId v) -> VertexId {
    const auto it = std::lower_bound(scc.begin(), scc.end(), v);
    return it != scc.end() && *it == v ? static_cast<VertexId>(it - scc.begin()) : outside;
  };
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> leaves(c + 2, 0);
  for (VertexId k = 0; k < c; ++k) {
    const VertexId from = k == r_in ? r_out : k;
    for (VertexId w : g.out_neighbors(scc[k])) {
      const VertexId to = local(w);
      arcs.emplace_back(from, to);
      if (to == outside) leaves[from] = 1;
    }
  }
  const auto h = Digraph::from_arcs(c + 2, std::move(arcs));

  std::vector<VertexId> rpo;
  const auto idom = dominators(h, r_out, rpo);
  std::vector<VertexId> chain;  // r_out, c_1, ..., c_k, r_in
  for (VertexId v = r_in; v != r_out; v = idom[v]) chain.push_back(v);
  chain.push_back(r_out);
  std::reverse(chain.begin(), chain.end());
  const auto k = static_cast<std::uint32_t>(chain.size() - 2);
  if (k == 0) return r;

  // Key 2a for chain element a, 2a+1 for the vertices between a and a+1.
  std::vector<std::int64_t> key(c + 2, -1);
  for (std::uint32_t a = 0; a < chain.size(); ++a) key[chain[a]] = 2 * std::int64_t{a};
  for (VertexId v : rpo) {
    if (v == outside || key[v] >= 0) continue;
    const auto up = key[idom[v]];
    key[v] = up % 2 == 0 ? up + 1 : up;
  }

  // A window through r with exit c_i and entrance c_j (i < j) keeps the
  // vertices with keys in [0, 2i] and [2j, 2k+2]. It is closed and acyclic
  // iff every upward-keyed arc covers both or neither of 2i and 2j, the
  // parts below 2i and above 2j are acyclic, no arc leaves from inside, and
  // c_i has no arc to c_j.
  auto acyclic_where = [&](auto&& keep) {
    std::vector<std::uint32_t> indeg(c + 2, 0);
    std::vector<VertexId> ready;
    std::size_t kept = 0;
    for (VertexId v = 0; v <= r_out; ++v) {
      if (key[v] < 0 || !keep(key[v])) continue;
      ++kept;
      for (VertexId w : h.out_neighbors(v))
        if (w != outside && key[w] >= 0 && keep(key[w])) ++indeg[w];
    }
    for (VertexId v = 0; v <= r_out; ++v)
      if (key[v] >= 0 && keep(key[v]) && indeg[v] == 0) ready.push_back(v);
    std::size_t done = 0;
    while (!ready.empty()) {
      const VertexId v = ready.back();
      ready.pop_back();
      ++done;
      for (VertexId w : h.out_neighbors(v))
        if (w != outside && key[w] >= 0 && keep(key[w]) && --indeg[w] == 0) ready.push_back(w);
    }
    return done == kept;
  };
  // largest i whose keys below 2i are acyclic, smallest j for above 2j
  std::int64_t i_max = 0, j_min = k + 1;
  for (std::int64_t lo = 1, hi = k; lo <= hi;) {
    const auto mid = (lo + hi) / 2;
    if (acyclic_where([&](std::int64_t x) { return x < 2 * mid; })) {
      i_max = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  for (std::int64_t lo = 1, hi = k; lo <= hi;) {
    const auto mid = (lo + hi) / 2;
    if (acyclic_where([&](std::int64_t x) { return x > 2 * mid; })) {
      j_min = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  for (VertexId v = 0; v <= r_out; ++v)
    if (key[v] >= 0 && leaves[v]) {
      i_max = std::min(i_max, key[v] / 2);
      j_min = std::max(j_min, key[v] / 2 + 1);
    }
  if (i_max < 1 || j_min > k) return r;

  // Equal class value <=> i and j are covered by the same set of arc spans.
  std::vector<std::uint64_t> cls(k + 2, 0);
  SplitMix64 rng(0x9e3779b97f4a7c15ULL);
  for (VertexId u = 0; u <= r_out; ++u)
    for (VertexId v : h.out_neighbors(u)) {
      if (v == outside || key[u] < 0 || key[v] > key[u]) continue;
      const auto p = std::max<std::int64_t>((key[v] + 1) / 2, 1);
      const auto q = std::min<std::int64_t>(key[u] / 2, k);
      if (p > q) continue;
      const auto w = rng.next();
      cls[p] ^= w;
      cls[q + 1] ^= w;
    }
  for (std::uint32_t a = 1; a <= k + 1; ++a) cls[a] ^= cls[a - 1];

  auto window_ok = [&](std::int64_t i, std::int64_t j) {
    if (i > i_max || j < j_min) return false;
    const auto ti = 2 * i, sj = 2 * j;
    if (h.has_arc(chain[i], chain[j])) return false;
    for (VertexId v = 0; v <= r_out; ++v) {
      if (key[v] < 0) continue;
      if (leaves[v] && (key[v] < ti || key[v] >= sj)) return false;
      for (VertexId w : h.out_neighbors(v)) {
        if (w == outside || key[w] > key[v]) continue;
        if ((key[w] <= ti && ti <= key[v]) != (key[w] <= sj && sj <= key[v])) return false;
      }
    }
    return true;
  };

  // The superbubble entered at c_j surrounds r iff no superbubble of h with
  // entrance c_j exists (those never contain r) and some window (j, i) is
  // closed; its exit is then the nearest such c_i.
  const auto inner = detect(h);
  std::vector<std::uint8_t> has_entrance(c + 2, 0);
  for (const auto& sb : inner.superbubbles) has_entrance[sb.entrance] = 1;

  std::unordered_map<std::uint64_t, std::uint32_t> first;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> found;  // (i, j)
  for (std::uint32_t j = 1; j <= k; ++j) {
    const std::uint32_t i = j - 1;
    if (i >= 1 && i <= i_max) first.emplace(cls[i], i);
    if (j < j_min || has_entrance[chain[j]]) continue;
    const auto it = first.find(cls[j]);
    if (it == first.end()) continue;
    if (it->second == i && h.has_arc(chain[i], chain[j])) continue;
    found.emplace_back(it->second, j);
  }
  std::sort(found.begin(), found.end(), std::greater<>());
  for (const auto& [i, j] : found)
    if (window_ok(i, j)) return scc[chain[i]];
  return r;
}

Detection detect(const Digraph& g) {
  const VertexId n = g.num_vertices();
  if (std::size_t{n} * 2 >= Traversal::kOpen) throw std::length_error("graph too large");

  // Sources come first. Whatever they do not reach is closed under
  // predecessors, so its strongly connected parts without entering arcs are
  // found on that remainder alone.
  Traversal t(n);
  {
    const SplitView plain(g, {});
    for (VertexId v = 0; v < n; ++v) {
      const auto in = g.in_neighbors(v);
      if (in.empty() || (in.size() == 1 && in[0] == v)) t.visit(plain, v);
    }
  }

  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (!t.visited(v)) rest.push_back(v);

  std::vector<VertexId> split;
  if (!rest.empty()) {
    const auto h = induced_subgraph(g, rest);
    const auto scc = strongly_connected_components(h);
    const std::uint32_t count = scc.count();
    std::vector<std::uint8_t> entered(count, 0);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      for (VertexId u : h.in_neighbors(v))
        if (scc.component[u] != scc.component[v]) entered[scc.component[v]] = 1;

    std::vector<std::vector<VertexId>> members(count);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      if (!entered[scc.component[v]]) members[scc.component[v]].push_back(rest[v]);

    for (const auto& m : members)
      if (m.size() >= 2) split.push_back(safe_split_vertex(g, m));
    std::sort(split.begin(), split.end());
  }

  const SplitView view(g, std::move(split));
  t.grow(view.size());
  for (std::size_t x = n; x < view.size(); ++x) t.visit(view, static_cast<std::uint32_t>(x));
  return scan(g, view, t);
}

}  // namespace sbub

#include "sbub/sb_descriptors.hpp"

#include <algorithm>
#include <limits>

namespace sbub {

namespace {

// Position of a successor y of a vertex inside superbubble k. Only the exit
// can be a split vertex here; interior vertices occur once.
std::uint32_t successor_position(const Detection& d, std::size_t k, VertexId y) {
  const auto& sb = d.superbubbles[k];
  if (y == sb.exit) return d.intervals[k].first;
  return d.in_position[y];
}

}  // namespace

double to_double(const BigCount& value) {
  if (value.is_zero()) return 0.0;
  if (boost::multiprecision::msb(value) >= 1024) return std::numeric_limits<double>::infinity();
  return value.convert_to<double>();
}

PathStats count_paths_longest(const Digraph& g, const Detection& d, std::size_t k) {
  const auto [first, last] = d.intervals.at(k);
  const std::size_t len = last - first + 1;
  std::vector<PathStats> val(len);
  val[0].path_count = 1;
  for (std::size_t p = first + 1; p <= last; ++p) {
    auto& cur = val[p - first];
    for (VertexId y : g.out_neighbors(d.parens.order[p])) {
      const auto q = successor_position(d, k, y);
      if (q < first || q >= p) throw std::logic_error("successor outside superbubble interval");
      const auto& next = val[q - first];
      cur.path_count += next.path_count;
      cur.longest = std::max(cur.longest, next.longest + 1);
    }
  }
  return val[len - 1];
}

std::vector<PathStats> all_path_stats(const Digraph& g, const Detection& d, const HierarchyForest& f) {
  const std::size_t count = d.size();
  if (f.size() != count) throw std::invalid_argument("forest does not match detection");
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> exit_at(d.parens.size(), kNone);
  for (std::size_t k = 0; k < count; ++k) exit_at[d.intervals[k].first] = static_cast<std::uint32_t>(k);

  // children finish before their parents when ordered by entrance position
  std::vector<std::uint32_t> schedule(count);
  for (std::size_t k = 0; k < count; ++k) schedule[k] = static_cast<std::uint32_t>(k);
  std::sort(schedule.begin(), schedule.end(),
            [&](auto a, auto b) { return d.intervals[a].last < d.intervals[b].last; });

  std::vector<PathStats> stats(count);
  std::vector<PathStats> val;
  for (const auto k : schedule) {
    const auto [first, last] = d.intervals[k];
    val.assign(last - first + 1, PathStats{});
    val[0].path_count = 1;
    std::size_t p = first;
    while (p < last) {
      // the entrance may also be the exit of a chained neighbour; stop first
      const auto nested = exit_at[p];
      if (nested != kNone && nested != k) {
        const auto skip_to = d.intervals[nested].last;
        const auto& inner = stats[nested];
        auto& at_entrance = val[skip_to - first];
        at_entrance.path_count = inner.path_count * val[p - first].path_count;
        at_entrance.longest = inner.longest + val[p - first].longest;
        p = skip_to;
        continue;
      }
      ++p;
      auto& cur = val[p - first];
      for (VertexId y : g.out_neighbors(d.parens.order[p])) {
        const auto& next = val[successor_position(d, k, y) - first];
        cur.path_count += next.path_count;
        cur.longest = std::max(cur.longest, next.longest + 1);
      }
    }
    stats[k] = std::move(val.back());
  }
  return stats;
}

double density(const Superbubble& sb) {
  const auto v = static_cast<double>(sb.vertex_count);
  return 2.0 * static_cast<double>(sb.edge_count) / (v * (v - 1.0));
}

SuperbubbleReport superbubble_report(const Digraph& g, const Detection& d, const HierarchyForest& f) {
  SuperbubbleReport r;
  r.S = d.size();
  if (r.S == 0) return r;

  const auto n = static_cast<double>(g.num_vertices());
  std::vector<std::uint8_t> covered(g.num_vertices(), 0);
  std::uint64_t covered_count = 0;
  std::uint64_t covered_arcs = 0;
  for (const auto root : f.roots) {
    // nested superbubbles lie inside their root, and roots share at most an
    // endpoint, never an arc
    covered_arcs += d.superbubbles[root].edge_count;
    for (VertexId v : d.vertices(root))
      if (!covered[v]) {
        covered[v] = 1;
        ++covered_count;
      }
  }
  r.VS = static_cast<double>(covered_count) / n;
  r.ES = static_cast<double>(covered_arcs) / n;

  const auto cs = complex_stats(f);
  r.C = cs.complexes;
  r.CS = cs.largest;
  r.depth = cs.depth;

  const auto paths = all_path_stats(g, d, f);
  BigCount path_sum = 0;
  std::uint64_t length_sum = 0;
  double density_sum = 0;
  std::uint64_t nontrivial = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& sb = d.superbubbles[k];
    r.mVS = std::max(r.mVS, sb.vertex_count);
    r.mES = std::max(r.mES, sb.edge_count);
    if (paths[k].path_count > r.P) r.P = paths[k].path_count;
    r.PL = std::max(r.PL, paths[k].longest);
    if (sb.trivial()) {
      ++r.MS;
      continue;
    }
    ++nontrivial;
    path_sum += paths[k].path_count;
    length_sum += paths[k].longest;
    density_sum += density(sb);
  }
  if (nontrivial > 0) {
    const auto denom = static_cast<double>(nontrivial);
    BigCount quotient, remainder;
    boost::multiprecision::divide_qr(path_sum, BigCount(nontrivial), quotient, remainder);
    r.aP = to_double(quotient) + to_double(remainder) / denom;
    r.aPL = static_cast<double>(length_sum) / denom;
    r.SD = density_sum / denom;
  }
  return r;
}

SuperbubbleReport superbubble_report(const Digraph& g) {
  const auto d = detect(g);
  const auto f = build_forest(d.parens);
  return superbubble_report(g, d, f);
}

}  // namespace sbub

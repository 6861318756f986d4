#include "sbub/graph_descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sbub/connectivity.hpp"

namespace sbub {

namespace {

using Wide = unsigned __int128;
using SignedWide = __int128;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t degree(const Digraph& g, VertexId v, DegreeMode mode) {
  return mode == DegreeMode::in ? g.in_degree(v) : g.out_degree(v);
}

std::uint64_t total_degree(const Digraph& g, VertexId v) { return std::uint64_t{g.in_degree(v)} + g.out_degree(v); }

}  // namespace

double directed_assortativity(const Digraph& g, DegreeMode source, DegreeMode target) {
  const auto m = g.num_arcs();
  if (m < 2) return kNaN;
  // exact integer moments; a zero variance is then detected exactly
  Wide sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const Wide x = degree(g, u, source);
    for (VertexId v : g.out_neighbors(u)) {
      const Wide y = degree(g, v, target);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
  }
  const SignedWide cov = static_cast<SignedWide>(m * sxy) - static_cast<SignedWide>(sx * sy);
  const Wide var_x = m * sxx - sx * sx;
  const Wide var_y = m * syy - sy * sy;
  if (var_x == 0 || var_y == 0) return kNaN;
  const long double denom = std::sqrt(static_cast<long double>(var_x)) * std::sqrt(static_cast<long double>(var_y));
  return static_cast<double>(static_cast<long double>(cov) / denom);
}

double heterogeneity(const Digraph& g) {
  const auto n = static_cast<long double>(g.num_vertices());
  if (g.num_vertices() == 0) return kNaN;
  const long double norm = n - 2.0L * std::sqrt(n - 1.0L);
  if (!(norm > 0)) return kNaN;
  long double sum = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const long double a = 1.0L / std::sqrt(static_cast<long double>(g.out_degree(u)));
    for (VertexId v : g.out_neighbors(u)) {
      const long double diff = a - 1.0L / std::sqrt(static_cast<long double>(g.in_degree(v)));
      sum += diff * diff;
    }
  }
  return static_cast<double>(sum / norm);
}

double self_similarity(const Digraph& g) {
  if (g.num_arcs() == 0) return kNaN;
  Wide products = 0, cubes = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const Wide du = total_degree(g, u);
    cubes += du * du * du;
    for (VertexId v : g.out_neighbors(u)) products += du * total_degree(g, v);
  }
  return static_cast<double>(static_cast<long double>(2 * products) / static_cast<long double>(cubes));
}

double bidirectional_fraction(const Digraph& g) {
  if (g.num_arcs() == 0) return kNaN;
  std::uint64_t mutual = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.out_neighbors(u))
      if (g.has_arc(v, u)) ++mutual;
  return static_cast<double>(mutual) / static_cast<double>(g.num_arcs());
}

UndirectedReport undirected_report(const Digraph& g) {
  UndirectedReport r;
  r.N = g.num_vertices();
  r.M = g.num_arcs();
  r.ME = g.raw_arc_count() == 0
             ? 0.0
             : static_cast<double>(g.raw_arc_count() - g.num_arcs()) / static_cast<double>(g.raw_arc_count());
  for (VertexId v = 0; v < g.num_vertices(); ++v) r.deg = std::max(r.deg, total_degree(g, v));
  r.GD = r.N <= 1 ? kNaN : static_cast<double>(r.M) / (static_cast<double>(r.N) * static_cast<double>(r.N - 1));
  r.CC = weakly_connected_components(g).count();
  r.R = directed_assortativity(g, DegreeMode::out, DegreeMode::in);
  r.SS = self_similarity(g);
  return r;
}

DirectedReport directed_report(const Digraph& g) {
  DirectedReport r;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    r.max_in = std::max<std::uint64_t>(r.max_in, g.in_degree(v));
    r.max_out = std::max<std::uint64_t>(r.max_out, g.out_degree(v));
  }
  r.SCC = nontrivial_scc_count(strongly_connected_components(g));
  r.BE = bidirectional_fraction(g);
  r.R_ii = directed_assortativity(g, DegreeMode::in, DegreeMode::in);
  r.R_io = directed_assortativity(g, DegreeMode::in, DegreeMode::out);
  r.R_oi = directed_assortativity(g, DegreeMode::out, DegreeMode::in);
  r.R_oo = directed_assortativity(g, DegreeMode::out, DegreeMode::out);
  r.H = heterogeneity(g);
  return r;
}

}  // namespace sbub

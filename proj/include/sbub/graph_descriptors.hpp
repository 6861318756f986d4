#pragma once

#include <cstdint>

#include "sbub/digraph.hpp"

namespace sbub {

/// Descriptors that ignore arc direction (except R, see below). Statistics
/// that are undefined for the input are quiet NaN.
struct UndirectedReport {
  std::uint64_t N = 0;
  std::uint64_t M = 0;    // distinct arcs
  double ME = 0;          // fraction of input arcs that were duplicates
  std::uint64_t deg = 0;  // largest in + out degree
  double GD = 0;          // M / (N (N - 1))
  std::uint64_t CC = 0;   // weakly connected components
  double R = 0;           // out-degree of source vs in-degree of target
  double SS = 0;          // normalized s-metric
};

struct DirectedReport {
  std::uint64_t max_in = 0;
  std::uint64_t max_out = 0;
  std::uint64_t SCC = 0;  // strongly connected components with >= 2 vertices
  double BE = 0;          // fraction of arcs whose reverse arc exists
  double R_ii = 0;        // source in-degree vs target in-degree
  double R_io = 0;        // source in-degree vs target out-degree
  double R_oi = 0;
  double R_oo = 0;
  double H = 0;
};

enum class DegreeMode { in, out };

/// Pearson correlation over all arcs u->v between the `source`-degree of u
/// and the `target`-degree of v. NaN with fewer than two arcs or when either
/// side has zero variance.
double directed_assortativity(const Digraph& g, DegreeMode source, DegreeMode target);

/// Sum over arcs of (out(u)^-1/2 - in(v)^-1/2)^2, normalized by N - 2 sqrt(N - 1).
double heterogeneity(const Digraph& g);

/// Sum over arcs of d(u) d(v) divided by half the sum of d(v)^3, with d the
/// total degree. NaN without arcs.
double self_similarity(const Digraph& g);

/// NaN without arcs.
double bidirectional_fraction(const Digraph& g);

UndirectedReport undirected_report(const Digraph& g);
DirectedReport directed_report(const Digraph& g);

}  // namespace sbub

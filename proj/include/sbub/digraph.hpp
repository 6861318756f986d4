#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbub {

using VertexId = std::uint32_t;
using ArcIndex = std::uint64_t;
using Label = std::uint64_t;
using Arc = std::pair<VertexId, VertexId>;

/// Raised by the edge-list reader; carries the 1-based line number of the
/// offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable directed graph in compressed sparse form.
///
/// Both the forward and the reverse adjacency are stored; every list is
/// sorted and duplicate-free. Self-loops are kept as ordinary arcs. Each
/// vertex carries the external label it was loaded with, so results can be
/// reported in the caller's id space.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a graph over vertices 0..n-1. Duplicate arcs are collapsed;
  /// `raw_arc_count` records how many arcs the source had before that (0
  /// means "same as arcs.size()"). Empty `labels` means identity labels.
  static Digraph from_arcs(VertexId n, std::vector<Arc> arcs, std::vector<Label> labels = {},
                           std::uint64_t raw_arc_count = 0);

  VertexId num_vertices() const noexcept { return n_; }
  ArcIndex num_arcs() const noexcept { return out_targets_.size(); }
  std::uint64_t raw_arc_count() const noexcept { return raw_arc_count_; }
  std::uint64_t self_loop_count() const noexcept { return self_loops_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    check(v);
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    check(v);
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::uint32_t out_degree(VertexId v) const {
    check(v);
    return static_cast<std::uint32_t>(out_offsets_[v + 1] - out_offsets_[v]);
  }
  std::uint32_t in_degree(VertexId v) const {
    check(v);
    return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
  }

  bool has_arc(VertexId u, VertexId v) const;
  bool has_self_loop(VertexId v) const { return has_arc(v, v); }

  Label label(VertexId v) const {
    check(v);
    return labels_.empty() ? Label{v} : labels_[v];
  }

  /// All arcs in (source, target) order.
  std::vector<Arc> arcs() const;

 private:
  void check(VertexId v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  VertexId n_ = 0;
  std::uint64_t raw_arc_count_ = 0;
  std::uint64_t self_loops_ = 0;
  std::vector<ArcIndex> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<ArcIndex> in_offsets_{0};
  std::vector<VertexId> in_sources_;
  std::vector<Label> labels_;  // empty: identity
};

/// Reads a SNAP-style text edge list. Lines starting with '#' are comments,
/// each data line holds two non-negative integer labels (further tokens are
/// ignored). Vertex ids are assigned in order of first appearance. Paths
/// ending in ".gz" are decompressed on the fly.
Digraph load_edge_list(std::istream& in);
Digraph load_edge_list(const std::filesystem::path& path);

/// Writes one "u<TAB>v" line per arc using the vertices' external labels.
void write_edge_list(std::ostream& out, const Digraph& g);

/// Subgraph on `vertices` (any order, duplicates ignored) holding exactly the
/// arcs with both endpoints inside. New id i corresponds to the i-th distinct
/// entry of `vertices`; labels are carried over.
Digraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices);

/// Graph with the arc set of `g` plus every reversed arc.
Digraph symmetric_closure(const Digraph& g);

}  // namespace sbub

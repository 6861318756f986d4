#include "sbub/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <streambuf>
#include <unordered_map>

#include <zlib.h>

namespace sbub {

Digraph Digraph::from_arcs(VertexId n, std::vector<Arc> arcs, std::vector<Label> labels,
                           std::uint64_t raw_arc_count) {
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label table size does not match vertex count");
  Digraph g;
  g.n_ = n;
  g.raw_arc_count_ = raw_arc_count == 0 ? arcs.size() : raw_arc_count;
  g.labels_ = std::move(labels);

  for (const auto& [u, v] : arcs)
    if (u >= n || v >= n) throw std::out_of_range("arc endpoint out of range");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (g.raw_arc_count_ < arcs.size()) throw std::invalid_argument("raw arc count below distinct arc count");

  g.out_offsets_.assign(std::size_t{n} + 1, 0);
  g.in_offsets_.assign(std::size_t{n} + 1, 0);
  for (const auto& [u, v] : arcs) {
    ++g.out_offsets_[u + 1];
    ++g.in_offsets_[v + 1];
    if (u == v) ++g.self_loops_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }

  g.out_targets_.resize(arcs.size());
  g.in_sources_.resize(arcs.size());
  std::vector<ArcIndex> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // arcs are sorted by source, so both fills keep their lists sorted
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto [u, v] = arcs[k];
    g.out_targets_[k] = v;
    g.in_sources_[fill[v]++] = u;
  }
  return g;
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
  auto succ = out_neighbors(u);
  check(v);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

namespace {

// Maps external labels to dense ids in first-appearance order. Small labels
// (the common case for SNAP files) go through a direct table.
class LabelMap {
 public:
  VertexId intern(Label label) {
    if (label < kDirectLimit) {
      if (label >= direct_.size()) direct_.resize(std::max<std::size_t>(label + 1, direct_.size() * 2), kNone);
      auto& slot = direct_[label];
      if (slot == kNone) slot = next(label);
      return slot;
    }
    auto [it, inserted] = sparse_.try_emplace(label, 0);
    if (inserted) it->second = next(label);
    return it->second;
  }
  std::vector<Label> take_labels() { return std::move(labels_); }

 private:
  static constexpr Label kDirectLimit = Label{1} << 28;
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  VertexId next(Label label) {
    if (labels_.size() >= kNone) throw std::length_error("too many vertices for 32-bit ids");
    labels_.push_back(label);
    return static_cast<VertexId>(labels_.size() - 1);
  }

  std::vector<VertexId> direct_;
  std::unordered_map<Label, VertexId> sparse_;
  std::vector<Label> labels_;
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

Label parse_label(const char*& p, const char* end, std::size_t line_no) {
  while (p < end && is_blank(*p)) ++p;
  if (p == end) throw ParseError(line_no, "expected two vertex labels");
  Label value = 0;
  auto [ptr, ec] = std::from_chars(p, end, value);
  if (ec != std::errc{} || (ptr < end && !is_blank(*ptr)))
    throw ParseError(line_no, "malformed vertex label");
  p = ptr;
  return value;
}

}  // namespace

Digraph load_edge_list(std::istream& in) {
  LabelMap ids;
  std::vector<Arc> arcs;
  std::uint64_t raw = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end && is_blank(*p)) ++p;
    if (p == end || *p == '#') continue;
    const Label a = parse_label(p, end, line_no);
    const Label b = parse_label(p, end, line_no);
    const VertexId u = ids.intern(a);
    const VertexId v = ids.intern(b);
    arcs.emplace_back(u, v);
    ++raw;
  }
  if (in.bad()) throw std::runtime_error("read error");
  auto labels = ids.take_labels();
  const auto n = static_cast<VertexId>(labels.size());
  return Digraph::from_arcs(n, std::move(arcs), std::move(labels), raw);
}

namespace {

class GzipBuffer : public std::streambuf {
 public:
  explicit GzipBuffer(const std::filesystem::path& path) : file_(gzopen(path.c_str(), "rb")), buffer_(1 << 20) {
    if (!file_) throw std::runtime_error("cannot open " + path.string());
  }
  GzipBuffer(const GzipBuffer&) = delete;
  GzipBuffer& operator=(const GzipBuffer&) = delete;
  ~GzipBuffer() override { gzclose(file_); }

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    const int got = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
    if (got < 0) throw std::runtime_error("corrupt gzip stream");
    if (got == 0) return traits_type::eof();
    setg(buffer_.data(), buffer_.data(), buffer_.data() + got);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  std::vector<char> buffer_;
};

}  // namespace

Digraph load_edge_list(const std::filesystem::path& path) {
  if (path.extension() == ".gz") {
    GzipBuffer buffer(path);
    std::istream in(&buffer);
    return load_edge_list(in);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  static constexpr std::size_t kBuffer = 1 << 20;
  std::vector<char> buffer(kBuffer);
  in.rdbuf()->pubsetbuf(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.out_neighbors(u)) out << g.label(u) << '\t' << g.label(v) << '\n';
}

Digraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(g.num_vertices(), kAbsent);
  std::vector<VertexId> members;
  for (VertexId v : vertices) {
    if (v >= g.num_vertices()) throw std::out_of_range("vertex out of range");
    if (remap[v] != kAbsent) continue;
    remap[v] = static_cast<VertexId>(members.size());
    members.push_back(v);
  }
  std::vector<Arc> arcs;
  std::vector<Label> labels;
  labels.reserve(members.size());
  for (VertexId v : members) {
    labels.push_back(g.label(v));
    for (VertexId w : g.out_neighbors(v))
      if (remap[w] != kAbsent) arcs.emplace_back(remap[v], remap[w]);
  }
  return Digraph::from_arcs(static_cast<VertexId>(members.size()), std::move(arcs), std::move(labels));
}

Digraph symmetric_closure(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  const std::size_t m = arcs.size();
  arcs.reserve(2 * m);
  for (std::size_t k = 0; k < m; ++k) arcs.emplace_back(arcs[k].second, arcs[k].first);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<Label> labels;
  labels.reserve(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) labels.push_back(g.label(v));
  return Digraph::from_arcs(g.num_vertices(), std::move(arcs), std::move(labels));
}

}  // namespace sbub

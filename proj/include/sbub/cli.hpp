#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbub/digraph.hpp"
#include "sbub/graph_descriptors.hpp"
#include "sbub/oracle.hpp"
#include "sbub/report.hpp"
#include "sbub/sb_descriptors.hpp"

namespace sbub::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "snap";
  bool undirected = true;
  bool directed = true;
  bool superbubble = true;
  std::string out_dir;  // empty: write to stdout
  unsigned threads = 1;
  VertexId oracle_limit = kDefaultOracleLimit;
  BigIntMode bigint = BigIntMode::exact;
  bool latex = false;
  bool diff = false;
  bool paren = false;
};

struct AnalysisRow {
  std::string dataset;
  UndirectedReport undirected;
  DirectedReport directed;
  SuperbubbleReport superbubble;
};

/// File name without directory, ".gz" and the remaining extension.
std::string dataset_name(const std::filesystem::path& path);

/// Computes the selected reports; with threads > 1 the three tables are
/// computed concurrently.
AnalysisRow analyze_graph(const Digraph& g, const std::string& dataset, const RunConfig& config);

/// "entrance<TAB>exit<TAB>|V|<TAB>|E|" per superbubble in external labels,
/// sorted by (entrance, exit).
std::vector<std::string> enumerate_lines(const Digraph& g, const Detection& d);
std::vector<std::string> enumerate_lines(const Digraph& g, const std::vector<ExplicitSuperbubble>& sbs);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbub::cli
